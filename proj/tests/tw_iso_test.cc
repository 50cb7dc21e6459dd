// Copyright 2026 The cosetcanon Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cosetcanon/tw_iso.h"

#include <gtest/gtest.h>

#include "cosetcanon/canon_set.h"
#include "cosetcanon/generators.h"
#include "cosetcanon/oracle.h"

namespace cosetcanon {
namespace {

Graph Cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph Petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph Grid(int r, int c) {
  Graph g(r * c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      if (i + 1 < r) g.AddEdge(i * c + j, (i + 1) * c + j);
      if (j + 1 < c) g.AddEdge(i * c + j, i * c + j + 1);
    }
  }
  return g;
}

bool IsIso(const Graph& a, const Graph& b, const Perm& x) {
  for (const auto& [u, v] : a.Edges()) {
    if (!b.HasEdge(x[u], x[v])) return false;
  }
  return a.num_edges() == b.num_edges();
}

void ExpectSameSet(const Coset& c, const std::vector<Perm>& all) {
  ASSERT_EQ(c.size(), BigInt(all.size()));
  for (const Perm& x : all) EXPECT_TRUE(c.Contains(x));
}

TEST(StructureIsoTest, AgreesWithEnumeration) {
  Rng rng(17);
  for (int it = 0; it < 150; ++it) {
    const int n = UniformInt(rng, 1, 6);
    Structure a(n);
    for (auto& c : a.colors) c = UniformInt(rng, 0, 1);
    for (const auto& t : RandomTuples(rng, n, UniformInt(rng, 1, 3), UniformInt(rng, 0, 6))) {
      a.tuples.push_back({t, static_cast<uint32_t>(UniformInt(rng, 0, 1)),
                          UniformInt(rng, 0, 1) == 1});
    }
    const Perm phi = RandomPermutation(rng, n);
    Structure b(n);
    for (int v = 0; v < n; ++v) b.colors[phi[v]] = a.colors[v];
    for (const auto& t : a.tuples) {
      Structure::Tuple u = t;
      for (int& p : u.points) p = phi[p];
      b.tuples.push_back(u);
    }
    if (it % 3 == 0 && !b.tuples.empty()) b.tuples.pop_back();
    // Oracle: all bijections mapping tuples of a onto those of b.
    std::vector<Perm> expected;
    auto keys = [](const Structure& s, const Perm& x) {
      std::set<std::vector<int>> out;
      for (const auto& t : s.tuples) {
        std::vector<int> pts;
        for (int p : t.points) pts.push_back(x[p]);
        if (!t.ordered) std::sort(pts.begin(), pts.end());
        pts.insert(pts.begin(), {t.ordered ? 1 : 0, static_cast<int>(t.color)});
        out.insert(pts);
      }
      return out;
    };
    const auto kb = keys(b, Perm(n));
    for (const Perm& x : AllPermutations(n)) {
      bool ok = keys(a, x) == kb;
      for (int v = 0; v < n && ok; ++v) ok = a.colors[v] == b.colors[x[v]];
      if (ok) expected.push_back(x);
    }
    const Coset got = StructureIso(a, b, Coset::All(n));
    ExpectSameSet(got, expected);
  }
}

TEST(StructureIsoTest, RespectsWithin) {
  Graph c6 = Cycle(6);
  const Perm shift = Perm::FromCycles("(1 2 3 4 5 6)", 6);
  Coset within(PermGroup(6, {shift}), Perm(6));
  EXPECT_EQ(IsoCosetConstrained(c6, c6, within).size(), 6);
  EXPECT_EQ(IsoCosetConstrained(c6, c6, Coset::All(6)).size(), 12);
  EXPECT_TRUE(IsoCosetConstrained(c6, c6, Coset::Empty(6)).empty());
}

TEST(IsoBasicTest, KnownGroups) {
  EXPECT_EQ(IsoBasic(Cycle(5), Cycle(5)).size(), 10);
  EXPECT_EQ(IsoBasic(Petersen(), Petersen()).size(), 120);
  EXPECT_TRUE(IsoBasic(Cycle(5), Petersen()).empty());
  Graph k4 = Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(IsoBasic(k4, k4).size(), 24);
  EXPECT_THROW(IsoBasic(Graph::FromEdges(3, {{0, 1}, {1, 2}}), Cycle(3)), InputError);
}

TEST(IsoBasicTest, AgreesWithEnumeration) {
  Rng rng(19);
  int checked = 0;
  for (int it = 0; checked < 60 && it < 3000; ++it) {
    const int n = UniformInt(rng, 3, 8);
    Graph g = RandomConnectedGraph(rng, n, 0.55);
    if (HasCliqueSeparator(g)) continue;
    Graph h = UniformInt(rng, 0, 1) ? g.Relabel(RandomPermutation(rng, n))
                                    : SwapEdges(rng, g).Relabel(RandomPermutation(rng, n));
    if (HasCliqueSeparator(h)) continue;
    ExpectSameSet(IsoBasic(g, h), BruteForceGraphIso(g, h));
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(IsoBasicCliqueTest, MarkedEdge) {
  EXPECT_EQ(IsoBasicClique(Cycle(5), {{0, 1}}, Cycle(5), {{3, 4}}).size(), 2);
  EXPECT_EQ(IsoBasicClique(Cycle(5), {{0, 1}, {1, 2}}, Cycle(5), {{3, 4}, {2, 3}}).size(), 2);
  EXPECT_TRUE(IsoBasicClique(Cycle(5), {{0, 1}}, Cycle(5), {}).empty());
  EXPECT_THROW(IsoBasicClique(Cycle(5), {{0, 2}}, Cycle(5), {{0, 2}}), InputError);
}

TEST(IsoBasicCliqueTest, CoverContainsEveryClique) {
  Rng rng(23);
  for (int it = 0; it < 50; ++it) {
    const int n = UniformInt(rng, 2, 10);
    Graph g = RandomConnectedGraph(rng, n, 0.5);
    const auto alpha = CliqueCover(g);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) s.push_back(i);
      }
      if (!g.IsClique(s)) continue;
      bool covered = false;
      for (const auto& a : alpha) {
        covered = covered || std::includes(a.begin(), a.end(), s.begin(), s.end());
      }
      EXPECT_TRUE(covered);
    }
  }
}

TEST(IsoCosetHypergraphTest, AgreesWithEnumeration) {
  Rng rng(29);
  for (int it = 0; it < 80; ++it) {
    const int n = 4;
    CosetLabeledHypergraph h1{n, RandomEdges(rng, n, UniformInt(rng, 1, 4), false), {}};
    for (size_t i = 0; i < h1.edges.size(); ++i) {
      h1.labels.push_back(RandomLabelingCoset(rng, n));
    }
    const Perm phi = RandomPermutation(rng, n);
    CosetLabeledHypergraph h2{n, {}, {}};
    for (size_t i = 0; i < h1.edges.size(); ++i) {
      std::vector<int> e;
      for (int v : h1.edges[i]) e.push_back(phi[v]);
      h2.edges.push_back(e);
      h2.labels.push_back(phi.Inverse() * h1.labels[i]);
    }
    if (it % 2) h2.labels.back() = RandomLabelingCoset(rng, n);
    // The edge-preserving isomorphisms as the coset to search in.
    std::vector<Perm> edge_isos;
    std::vector<Perm> edge_auts;
    CosetLabeledHypergraph bare1{n, h1.edges, std::vector<Coset>(h1.edges.size(), Coset::All(n))};
    CosetLabeledHypergraph bare2{n, h2.edges, std::vector<Coset>(h2.edges.size(), Coset::All(n))};
    edge_auts = BruteForceHypergraphIso(bare1, bare1);
    edge_isos = BruteForceHypergraphIso(bare1, bare2);
    const Coset within(GroupFromElements(n, edge_auts), edge_isos[0]);
    ExpectSameSet(IsoCosetHypergraph(h1, h2, within), BruteForceHypergraphIso(h1, h2));
  }
}

TEST(IsoCosetHypergraphTest, RejectsForeignCoset) {
  CosetLabeledHypergraph h{3, {{0, 1}}, {Coset::All(3)}};
  const Coset bad(PermGroup(3, {Perm::FromCycles("(1 3)", 3)}), Perm(3));
  EXPECT_THROW(IsoCosetHypergraph(h, h, bad), InputError);
}

TEST(IsoTreewidthTest, SmallExamples) {
  Graph p3 = Graph::FromEdges(3, {{0, 1}, {1, 2}});
  Graph k12 = Graph::FromEdges(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(IsoTreewidth(p3, k12).size(), 2);
  Graph p4 = Graph::FromEdges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph k13 = Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(IsoTreewidth(p4, k13).empty());
  EXPECT_EQ(IsoTreewidth(Grid(3, 3), Grid(3, 3)).size(), 8);
  EXPECT_EQ(IsoTreewidth(Cycle(5), Cycle(5)).size(), 10);
  EXPECT_EQ(IsoTreewidth(k13, k13).size(), 6);
  EXPECT_THROW(IsoTreewidth(Graph::FromEdges(3, {{0, 1}}), p3), InputError);
}

TEST(IsoTreewidthTest, AgreesWithEnumeration) {
  Rng rng(31);
  for (int it = 0; it < 120; ++it) {
    const int n = UniformInt(rng, 2, 8);
    Graph g = it % 2 ? RandomConnectedGraph(rng, n, 0.35)
                     : RandomPartialKTree(rng, n, UniformInt(rng, 1, 3), 0.8);
    Graph h = UniformInt(rng, 0, 2) ? g.Relabel(RandomPermutation(rng, n))
                                    : SwapEdges(rng, g).Relabel(RandomPermutation(rng, n));
    ExpectSameSet(IsoTreewidth(g, h), BruteForceGraphIso(g, h));
  }
}

TEST(IsoTreewidthTest, PlantedAndPerturbed) {
  Rng rng(37);
  int perturbed = 0;
  for (int it = 0; it < 12; ++it) {
    const int n = UniformInt(rng, 10, 30);
    Graph g = RandomPartialKTree(rng, n, UniformInt(rng, 1, 3), 0.8);
    const Perm phi = RandomPermutation(rng, n);
    IsoTreeStats stats;
    const Coset iso = IsoTreewidth(g, g.Relabel(phi), &stats);
    ASSERT_FALSE(iso.empty());
    EXPECT_TRUE(iso.Contains(phi));
    EXPECT_TRUE(IsIso(g, g.Relabel(phi), iso.rep()));
    EXPECT_EQ(iso.size(), IsoTreewidth(g, g).size());
    Graph h = SwapEdges(rng, g);
    if (RefinementDistinguishes(g, h)) {
      EXPECT_TRUE(IsoTreewidth(g, h.Relabel(phi)).empty());
      ++perturbed;
    }
  }
  EXPECT_GT(perturbed, 0);
}

}  // namespace
}  // namespace cosetcanon
