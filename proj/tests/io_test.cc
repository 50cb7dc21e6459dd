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

#include "cosetcanon/io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "cosetcanon/canon_struct.h"
#include "cosetcanon/generators.h"
#include "cosetcanon/oracle.h"

namespace cosetcanon {
namespace {


Hypergraph Hyper(const std::string& text, std::vector<std::string>* w = nullptr) {
  std::istringstream in(text);
  return ParseHypergraph(in, w);
}

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(IoTest, HypergraphExamples) {
  Hypergraph h = Hyper("p hyper 3 1\ne 1 2\n");
  EXPECT_EQ(h.n, 3);
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_EQ(h.edges[0], (std::vector<int>{0, 1}));

  std::vector<std::string> warnings;
  h = Hyper("c comment\np hyper 4 3\ne 3 1\ne 1 3\n\ne\n", &warnings);
  EXPECT_EQ(h.edges.size(), 2u);  // {} and {1,3}
  EXPECT_FALSE(warnings.empty());

  EXPECT_NE(ErrorOf([] { Hyper("p hyper 3 1\ne 1 4\n"); }).find("line 2"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Hyper("p hyper 3 1\nx 1\n"); }), "");
  EXPECT_NE(ErrorOf([] { Hyper("p edge 3 1\n"); }), "");
  EXPECT_NE(ErrorOf([] { Hyper("p hyper 3 1\ne 1 z\n"); }).find("line 2"),
            std::string::npos);
}

TEST(IoTest, GraphExamples) {
  std::istringstream in("p edge 3 2\ne 1 2\ne 2 3\n");
  Graph g = ParseDimacsGraph(in, nullptr);
  EXPECT_EQ(g, Graph::FromEdges(3, {{0, 1}, {1, 2}}));
  std::istringstream bad("p edge 3 1\ne 1\n");
  try {
    ParseDimacsGraph(bad, nullptr);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(IoTest, RelationExamples) {
  std::vector<std::string> warnings;
  std::istringstream in("p rel 3 2\nt 1 2\nt 2 3\nt 1 2\n");
  Relation r = ParseRelation(in, &warnings);
  EXPECT_EQ(r.arity, 2);
  EXPECT_EQ(r.tuples.size(), 2u);
  EXPECT_EQ(warnings.size(), 1u);
  std::istringstream bad("p rel 3 2\nt 1 2 3\n");
  EXPECT_THROW(ParseRelation(bad, nullptr), InputError);
}

TEST(IoTest, CosetExamples) {
  std::istringstream in(
      "p cosets 3 2\ncoset 1\ng (1 2 3)\nrep 2 1 3\ncoset empty\n");
  CosetFamily f = ParseCosets(in);
  ASSERT_EQ(f.cosets.size(), 2u);
  EXPECT_EQ(f.cosets[0].size(), 3);
  EXPECT_TRUE(f.cosets[0].Contains(Perm({1, 0, 2})));
  EXPECT_TRUE(f.cosets[1].empty());
  std::istringstream bad_rep("p cosets 3 1\ncoset 0\nrep 1 1 2\n");
  EXPECT_THROW(ParseCosets(bad_rep), InputError);
  std::istringstream bad_count("p cosets 3 2\ncoset 0\nrep 1 2 3\n");
  EXPECT_THROW(ParseCosets(bad_count), InputError);
}

TEST(IoTest, RoundTrips) {
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    const int n = UniformInt(rng, 1, 7);

    Hypergraph h{n, RandomEdges(rng, n, UniformInt(rng, 0, 6), true)};
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    Hypergraph h2 = Hyper(FormatHypergraph(h));
    EXPECT_EQ(FormatHypergraph(h2), FormatHypergraph(h));
    EXPECT_EQ(h2.edges, Hyper(FormatHypergraph(h2)).edges);

    Relation r{n, 3, RandomTuples(rng, n, 3, UniformInt(rng, 0, 6))};
    std::istringstream rin(FormatRelation(r));
    Relation r2 = ParseRelation(rin, nullptr);
    std::istringstream rin2(FormatRelation(r2));
    EXPECT_EQ(ParseRelation(rin2, nullptr).tuples, r2.tuples);

    CosetFamily f{n, RandomCosetFamily(rng, n, UniformInt(rng, 1, 4))};
    if (it % 10 == 0) f.cosets.push_back(Coset::Empty(n));
    std::istringstream cin(FormatCosets(f));
    CosetFamily f2 = ParseCosets(cin);
    ASSERT_EQ(f2.cosets.size(), f.cosets.size());
    for (size_t i = 0; i < f.cosets.size(); ++i) {
      EXPECT_EQ(f2.cosets[i], f.cosets[i]);
    }

    ObjectInstance x{n, RandomObject(rng, n, 3)};
    std::istringstream oin(FormatObject(x));
    ObjectInstance x2 = ParseObject(oin);
    EXPECT_EQ(x2.n, n);
    EXPECT_EQ(x2.object, x.object) << x.object.ToString();
  }
}

TEST(IoTest, ObjectErrors) {
  EXPECT_THROW(ParseObjectText("(1, 2", 3), InputError);
  EXPECT_THROW(ParseObjectText("{1, 5}", 3), InputError);
  EXPECT_THROW(ParseObjectText("coset[; 1 1 2]", 3), InputError);
  EXPECT_THROW(ParseObjectText("1 2", 3), InputError);
  EXPECT_EQ(ParseObjectText("<(1, {2, 3})>", 3).ToString(), "<(1, {2, 3})>");
  EXPECT_TRUE(ParseObjectText("coset[empty]", 3).coset().empty());
}

TEST(IoTest, CanonResultIsRelabelingInvariant) {
  // Fano plane under two labelings.
  std::vector<std::vector<int>> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                        {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  Rng rng(3);
  const Perm phi = RandomPermutation(rng, 7);
  std::vector<std::vector<int>> moved;
  for (const auto& e : fano) {
    std::vector<int> m;
    for (int v : e) m.push_back(phi[v]);
    moved.push_back(m);
  }
  CanonResult a = ClHyper(HypergraphObject(fano), 7);
  CanonResult b = ClHyper(HypergraphObject(moved), 7);
  const std::string fa = FormatCanonResult(a, false);
  EXPECT_EQ(fa, FormatCanonResult(b, false));
  EXPECT_NE(fa.find("aut-order 168"), std::string::npos);
  EXPECT_NE(FormatCanonResult(a, true).find("labeling "), std::string::npos);
}

}  // namespace
}  // namespace cosetcanon
