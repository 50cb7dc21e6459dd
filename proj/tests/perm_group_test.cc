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

#include "cosetcanon/perm_group.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

namespace cosetcanon {
namespace {

Perm P(const char* cycles, int n) { return Perm::FromCycles(cycles, n); }

// Closure of the generators under multiplication.
std::set<Perm> EnumerateByClosure(int n, const std::vector<Perm>& gens) {
  std::set<Perm> all = {Perm(n)};
  std::vector<Perm> queue = {Perm(n)};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : gens) {
      Perm x = queue[i] * g;
      if (all.insert(x).second) queue.push_back(x);
    }
  }
  return all;
}

std::vector<Perm> RandomGenerators(std::mt19937& rng, int n, int count) {
  std::vector<Perm> gens;
  for (int i = 0; i < count; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    // Mostly sparse permutations so that proper subgroups come up often.
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<int> pts = img;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(k);
    for (int j = 0; j < k; ++j) img[pts[j]] = pts[(j + 1) % k];
    gens.emplace_back(img);
  }
  return gens;
}

TEST(PermTest, CycleRoundTrip) {
  Perm p = P("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.ToCycles(), "(1 2 3)(4 5)");
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(Perm(4).ToCycles(), "()");
  EXPECT_TRUE((p * p.Inverse()).IsIdentity());
}

TEST(PermTest, CompositionAppliesLeftFirst) {
  Perm f = P("(1 2)", 3);
  Perm g = P("(2 3)", 3);
  // f maps 1 to 2, then g maps 2 to 3.
  EXPECT_EQ((f * g)[0], 2);
}

TEST(BuildGroupTest, Examples) {
  EXPECT_EQ(BuildGroup(3, {P("(1 2)", 3), P("(2 3)", 3)}).order(), 6);
  EXPECT_EQ(BuildGroup(3, {}).order(), 1);
  EXPECT_EQ(BuildGroup(5, {P("(1 2 3 4 5)", 5), P("(1 2)", 5)}).order(), 120);
  EXPECT_THROW(BuildGroup(4, {P("(1 2)", 3)}), InputError);
}

TEST(BuildGroupTest, OrderAndMembershipMatchClosure) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    auto gens = RandomGenerators(rng, n, 1 + trial % 3);
    PermGroup g(n, gens);
    auto all = EnumerateByClosure(n, gens);
    ASSERT_EQ(g.order(), BigInt(all.size()));
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm x(img);
      ASSERT_EQ(g.Contains(x), all.count(x) > 0);
    } while (std::next_permutation(img.begin(), img.end()));
    auto elems = g.Elements();
    ASSERT_EQ(std::set<Perm>(elems.begin(), elems.end()), all);
  }
}

TEST(BuildGroupTest, CustomBaseKeepsGroup) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6;
    PermGroup g(n, RandomGenerators(rng, n, 2));
    PermGroup h = g.WithBase({5, 3});
    EXPECT_EQ(h.base_point(0), 5);
    EXPECT_EQ(g, h);
  }
}

TEST(OrbitPartitionTest, Examples) {
  using VV = std::vector<std::vector<int>>;
  EXPECT_EQ(OrbitPartition(BuildGroup(3, {P("(1 2)", 3)}), {0, 1, 2}),
            (VV{{0, 1}, {2}}));
  EXPECT_EQ(OrbitPartition(PermGroup::Symmetric(4), {0, 1, 2, 3}).size(), 1u);
  EXPECT_EQ(OrbitPartition(BuildGroup(4, {P("(1 2)(3 4)", 4)}), {0, 1, 2, 3}),
            (VV{{0, 1}, {2, 3}}));
  EXPECT_THROW(OrbitPartition(BuildGroup(3, {P("(1 2)", 3)}), {0}), InputError);
}

TEST(BlockSystemTest, Examples) {
  using VV = std::vector<std::vector<int>>;
  EXPECT_EQ(MinimalBlockSystem(BuildGroup(4, {P("(1 2 3 4)", 4)}),
                               {0, 1, 2, 3}),
            (VV{{0, 2}, {1, 3}}));
  EXPECT_EQ(MinimalBlockSystem(PermGroup::Symmetric(4), {0, 1, 2, 3}),
            (VV{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(MinimalBlockSystem(BuildGroup(6, {P("(1 2 3 4 5 6)", 6)}),
                               {0, 1, 2, 3, 4, 5}),
            (VV{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_THROW(MinimalBlockSystem(BuildGroup(3, {P("(1 2)", 3)}), {0, 1, 2}),
               InputError);
}

// Checks the block-system property and primitivity of the block action by
// brute force over all partitions coarser than the answer.
TEST(BlockSystemTest, RandomTransitiveGroups) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const int n = 4 + trial % 5;
    auto gens = RandomGenerators(rng, n, 2);
    PermGroup g(n, gens);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (!g.IsTransitiveOn(all)) continue;
    ++checked;
    auto blocks = MinimalBlockSystem(g, all);
    std::vector<int> cell(n);
    for (size_t i = 0; i < blocks.size(); ++i) {
      for (int x : blocks[i]) cell[x] = static_cast<int>(i);
    }
    for (const Perm& s : g.generators()) {
      for (const auto& b : blocks) {
        for (int x : b) EXPECT_EQ(cell[s[x]], cell[s[b[0]]]);
      }
    }
    // No block system strictly between the answer and {all}.
    if (blocks.size() > 1) {
      for (size_t j = 1; j < blocks.size(); ++j) {
        std::vector<int> seed = {blocks[0][0], blocks[j][0]};
        for (int x : blocks[0]) seed.push_back(x);
        auto coarser = MinimalBlockContaining(g, all, seed);
        EXPECT_EQ(coarser.size(), 1u);
      }
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(StabilizerTest, Examples) {
  EXPECT_EQ(PermGroup::Symmetric(3).PointwiseStabilizer({0}).order(), 2);
  EXPECT_EQ(SetwiseStabilizer(PermGroup::Symmetric(4), {0, 1}).order(), 4);
  EXPECT_EQ(SetwiseStabilizer(BuildGroup(4, {P("(1 2 3 4)", 4)}), {0, 2})
                .order(),
            2);
}

TEST(StabilizerTest, MatchesFilteredElements) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    PermGroup g(n, RandomGenerators(rng, n, 2));
    std::vector<int> set;
    for (int x = 0; x < n; ++x) {
      if (rng() % 2) set.push_back(x);
    }
    auto elems = g.Elements();
    size_t setwise = 0, pointwise = 0;
    for (const Perm& e : elems) {
      bool sw = true, pw = true;
      for (int x : set) {
        sw &= std::find(set.begin(), set.end(), e[x]) != set.end();
        pw &= e[x] == x;
      }
      setwise += sw;
      pointwise += pw;
    }
    EXPECT_EQ(SetwiseStabilizer(g, set).order(), BigInt(setwise));
    EXPECT_EQ(g.PointwiseStabilizer(set).order(), BigInt(pointwise));
  }
}

TEST(CosetTransversalTest, Examples) {
  PermGroup s3 = PermGroup::Symmetric(3);
  EXPECT_EQ(CosetTransversal(s3, s3).size(), 1u);
  EXPECT_EQ(CosetTransversal(s3, BuildGroup(3, {P("(1 2)", 3)})).size(), 3u);
  std::vector<int> all = {0, 1, 2, 3};
  EXPECT_EQ(CosetTransversal(PermGroup::Symmetric(4),
                             PermGroup::Alternating(4, all))
                .size(),
            2u);
  EXPECT_THROW(CosetTransversal(BuildGroup(3, {P("(1 2)", 3)}), s3),
               InputError);
}

TEST(CosetTransversalTest, PartitionsGroup) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 2;
    PermGroup g(n, RandomGenerators(rng, n, 2));
    PermGroup h = g.PointwiseStabilizer({static_cast<int>(rng() % n)});
    auto reps = CosetTransversal(g, h);
    EXPECT_TRUE(reps[0].IsIdentity());
    std::set<Perm> covered;
    for (const Perm& d : reps) {
      for (const Perm& x : h.Elements()) covered.insert(d * x);
      // Lexicographically least member of d*H.
      for (const Perm& x : h.Elements()) EXPECT_LE(d, d * x);
    }
    EXPECT_EQ(BigInt(covered.size()), g.order());
    EXPECT_EQ(BigInt(reps.size()) * h.order(), g.order());
  }
}

TEST(CanonicalGeneratorsTest, IndependentOfGeneratingSet) {
  PermGroup a = BuildGroup(3, {P("(1 2)", 3), P("(1 2 3)", 3)});
  PermGroup b = BuildGroup(3, {P("(2 3)", 3), P("(1 3)", 3)});
  EXPECT_EQ(a.CanonicalGenerators(), b.CanonicalGenerators());
  EXPECT_TRUE(PermGroup(4).CanonicalGenerators().empty());
  EXPECT_EQ(BuildGroup(3, {P("(1 2 3)", 3)}).CanonicalGenerators(),
            BuildGroup(3, {P("(1 3 2)", 3)}).CanonicalGenerators());
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5;
    PermGroup g(n, RandomGenerators(rng, n, 2));
    // Regenerate from random elements until the same group comes out.
    auto elems = g.Elements();
    std::vector<Perm> gens;
    PermGroup h(n);
    while (h.order() != g.order()) {
      gens.push_back(elems[rng() % elems.size()]);
      h = PermGroup(n, gens);
    }
    EXPECT_EQ(g.CanonicalGenerators(), h.CanonicalGenerators());
    EXPECT_EQ(g.WithBase({4, 2}).CanonicalGenerators(),
              h.CanonicalGenerators());
  }
}

TEST(MinimalCosetRepTest, MatchesEnumeration) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5;
    PermGroup g(n, RandomGenerators(rng, n, 1 + trial % 2));
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm rho(img);
    Perm best = rho;
    for (const Perm& x : g.Elements()) best = std::min(best, x * rho);
    EXPECT_EQ(g.MinimalCosetRep(rho), best);
  }
}

TEST(IsGiantTest, Examples) {
  std::vector<int> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(IsGiant(PermGroup::Symmetric(5), all), GiantType::kSymmetric);
  EXPECT_EQ(IsGiant(PermGroup::Alternating(5, all), all),
            GiantType::kAlternating);
  EXPECT_EQ(IsGiant(BuildGroup(5, {P("(1 2 3 4 5)", 5)}), all),
            GiantType::kNeither);
}

TEST(NormalClosureTest, Examples) {
  PermGroup s4 = PermGroup::Symmetric(4);
  EXPECT_EQ(NormalClosure(s4, s4), s4);
  PermGroup v4 = NormalClosure(s4, BuildGroup(4, {P("(1 2)(3 4)", 4)}));
  EXPECT_EQ(v4.order(), 4);
  EXPECT_TRUE(v4.Contains(P("(1 3)(2 4)", 4)));
  PermGroup c3 = BuildGroup(3, {P("(1 2 3)", 3)});
  EXPECT_EQ(NormalClosure(PermGroup::Symmetric(3), c3), c3);
}

TEST(RelativeBaseTest, Examples) {
  std::vector<int> all = {0, 1, 2, 3};
  PermGroup s4 = PermGroup::Symmetric(4);
  EXPECT_TRUE(RelativeBase(s4, s4).empty());
  EXPECT_EQ(RelativeBase(s4, PermGroup::Alternating(4, all)).size(), 3u);
  PermGroup stab = SetwiseStabilizer(s4, {0, 1});
  auto x = RelativeBase(s4, stab);
  EXPECT_TRUE(s4.PointwiseStabilizer(x).IsSubgroupOf(stab));
  EXPECT_LE(x.size(), 2u);
}

TEST(RelativeBaseTest, AlwaysInsideSubgroup) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5;
    PermGroup d(n, RandomGenerators(rng, n, 2));
    std::vector<int> set = {0, static_cast<int>(1 + rng() % 4)};
    PermGroup p = SetwiseStabilizer(d, set);
    auto x = RelativeBase(d, p);
    EXPECT_TRUE(d.PointwiseStabilizer(x).IsSubgroupOf(p));
  }
}

TEST(SearchTest, SubgroupAndCosetSearch) {
  // Automorphisms of the 5-cycle inside Sym(5).
  const int n = 5;
  auto adj = [](int a, int b) { return (a - b + 5) % 5 == 1 || (b - a + 5) % 5 == 1; };
  SearchSpec spec;
  spec.partial = [&](const std::vector<int>& base, int depth,
                     const std::vector<int>& img) {
    for (int j = 0; j < depth; ++j) {
      if (adj(base[j], base[depth]) != adj(img[j], img[depth])) return false;
    }
    return true;
  };
  spec.full = [](const Perm&) { return true; };
  EXPECT_EQ(FindSubgroup(PermGroup::Symmetric(n), spec).order(), 10);
  auto x = FindInCoset(PermGroup::Symmetric(n), Perm(n), spec);
  ASSERT_TRUE(x.has_value());
}

}  // namespace
}  // namespace cosetcanon
