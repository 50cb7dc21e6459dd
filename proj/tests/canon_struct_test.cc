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

#include "cosetcanon/canon_struct.h"

#include <numeric>
#include <set>

#include "cosetcanon/generators.h"
#include "cosetcanon/group_hom.h"
#include "cosetcanon/harness.h"
#include "cosetcanon/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cosetcanon {
namespace {

using testing::P;

// The 2-subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> Pairs(int k) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) out.push_back({a, b});
  }
  return out;
}

// The action of g on the s-subsets listed in `subsets`.
PermGroup SubsetAction(const PermGroup& g,
                       const std::vector<std::vector<int>>& subsets) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = i;
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<int> img;
    for (const auto& s : subsets) {
      std::vector<int> t;
      for (int v : s) t.push_back(p[v]);
      std::sort(t.begin(), t.end());
      img.push_back(index.at(t));
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<int>(subsets.size()), std::move(gens));
}

std::vector<std::vector<int>> Subsets(int k, int s) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    std::vector<int> v;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) v.push_back(i);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(GroupHomTest, ActionOnPairs) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 3;
    PermGroup g = RandomSubgroup(rng, n, 3);
    const auto pairs = Pairs(n);
    PermGroup image = SubsetAction(g, pairs);
    GroupHom h(g, image.generators(), image.degree());
    EXPECT_EQ(h.Image(), image);
    std::vector<Perm> kernel_elems;
    for (const Perm& x : g.Elements()) {
      Perm y = h.Map(x);
      EXPECT_TRUE(image.Contains(y));
      if (y.IsIdentity()) kernel_elems.push_back(x);
      Perm l = h.Lift(y);
      EXPECT_TRUE(g.Contains(l));
      EXPECT_EQ(h.Map(l), y);
    }
    EXPECT_EQ(h.Kernel().order(), BigInt(kernel_elems.size()));
    // Preimage of the stabilizer of pair 0 is the setwise stabilizer of it.
    PermGroup pre = h.PreimageOfPointwiseStabilizer({0});
    EXPECT_EQ(pre, SetwiseStabilizer(g, pairs[0]));
    EXPECT_EQ(h.Preimage(image.PointwiseStabilizer({0})), pre);
  }
  EXPECT_THROW(GroupHom(PermGroup(3, {P("(1 2 3)", 3)}), {P("(1 2)", 2)}, 2),
               ContractError);
}

// ---- cl_rel ----------------------------------------------------------------

TEST(ClRelTest, SpecExamples) {
  const int n = 4;
  std::vector<std::vector<int>> diag;
  for (int v = 0; v < n; ++v) diag.push_back({v, v});
  EXPECT_EQ(ClRel(RelationObject(diag), n).labeling.group().order(), 24);
  EXPECT_EQ(ClRel(RelationObject({{0, 1}}), n).labeling.group().order(), 2);
  RecursionStats stats;
  CanonResult cyc =
      ClRel(RelationObject({{0, 1}, {1, 2}, {2, 0}}), 3, {}, &stats);
  EXPECT_EQ(cyc.labeling.group().order(), 3);
  EXPECT_TRUE(RelCallsWithinBound(stats.rel_calls, 3));
  EXPECT_THROW(ClRel(Object::Set({Object::Tuple({Object::Int(0)}),
                                  Object::Tuple({})}),
                     2),
               InputError);
}

TEST(ClRelTest, MatchesOracle) {
  Rng rng(32);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 5;
    const int arity = 1 + trial % 3;
    Object r = RelationObject(RandomTuples(rng, n, arity, UniformInt(rng, 0, 7)));
    RecursionStats stats;
    CheckOutcome c = CheckCanonizer(RelCanonizer({}, &stats), r, n, 3, rng);
    ASSERT_TRUE(c.ok) << c.failure;
    // Four calls to the canonizer ran; one call's count is a quarter.
    RecursionStats one;
    ClRel(r, n, {}, &one);
    EXPECT_TRUE(RelCallsWithinBound(one.rel_calls, r.size()));
  }
}

// ---- cl_hyper --------------------------------------------------------------

TEST(ClHyperTest, SpecExamples) {
  const int n = 5;
  std::vector<std::vector<int>> singletons;
  for (int v = 0; v < n; ++v) singletons.push_back({v});
  EXPECT_EQ(ClHyper(HypergraphObject(singletons), n).labeling.group().order(),
            120);
  EXPECT_EQ(ClHyper(HypergraphObject({{0, 2}}), n).labeling.group().order(), 12);
}

TEST(ClHyperTest, FanoPlane) {
  const std::vector<std::vector<int>> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6},
                                              {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                                              {2, 4, 5}};
  const Object h = HypergraphObject(fano);
  RecursionStats stats;
  CanonResult r = ClHyper(h, 7, {}, &stats);
  EXPECT_EQ(r.labeling.group().order(), 168);
  EXPECT_EQ(BruteForceAut(h, 7).order(), 168);
  EXPECT_TRUE(HyperCallsWithinBound(stats.hyper_calls, fano.size(), 7));
  Rng rng(33);
  CheckOutcome c = CheckCanonizer(HyperCanonizer({}), h, 7, 2, rng);
  EXPECT_TRUE(c.ok) << c.failure;
}

TEST(ClHyperTest, MatchesOracle) {
  Rng rng(34);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 6;
    Object h = HypergraphObject(
        RandomEdges(rng, n, UniformInt(rng, 0, 6), trial % 2 == 0));
    CheckOutcome c = CheckCanonizer(HyperCanonizer({}), h, n, 3, rng);
    ASSERT_TRUE(c.ok) << c.failure;
    RecursionStats stats;
    ClHyper(h, n, {}, &stats);
    EXPECT_TRUE(HyperCallsWithinBound(stats.hyper_calls, h.size(), n))
        << stats.hyper_calls << " calls on " << h.ToString();
  }
}

TEST(ClHyperTest, ComplementWithinSizeClass) {
  // For a uniform hypergraph, the complementary family of s-subsets has the
  // same automorphisms.
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 3;
    const int s = UniformInt(rng, 1, n - 1);
    const auto all = Subsets(n, s);
    std::vector<std::vector<int>> edges, rest;
    for (const auto& e : all) (UniformInt(rng, 0, 1) ? edges : rest).push_back(e);
    EXPECT_EQ(ClHyper(HypergraphObject(edges), n).labeling.group(),
              ClHyper(HypergraphObject(rest), n).labeling.group());
  }
}

// ---- primitive_case ----------------------------------------------------------

TEST(PrimitiveCaseTest, SpecExamples) {
  EXPECT_EQ(PrimitiveCase(PermGroup::Symmetric(5), 5, 3).kind,
            PrimitiveKind::kSmallOrder);
  std::vector<int> cycle = {1, 2, 3, 4, 5, 6, 0};
  EXPECT_EQ(PrimitiveCase(PermGroup(7, {Perm(cycle)}), 7, 3).kind,
            PrimitiveKind::kSmallOrder);
  // Sym(5) on the 10 2-subsets; with c = 3 the order test already passes,
  // so the constant is lowered to reach the cover branch.
  const PermGroup j52 = SubsetAction(PermGroup::Symmetric(5), Pairs(5));
  EXPECT_EQ(PrimitiveCase(j52, 5, 3).kind, PrimitiveKind::kSmallOrder);
  PrimitiveOutcome out = PrimitiveCase(j52, 5, 0.5);
  ASSERT_EQ(out.kind, PrimitiveKind::kSparseCover);
  ASSERT_EQ(out.cover.size(), 5u);
  const auto pairs = Pairs(5);
  std::set<std::vector<int>> want;
  for (int v = 0; v < 5; ++v) {
    std::vector<int> c;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i][0] == v || pairs[i][1] == v) c.push_back(i);
    }
    want.insert(c);
  }
  EXPECT_EQ(std::set<std::vector<int>>(out.cover.begin(), out.cover.end()), want);
  for (const auto& c : out.cover) EXPECT_EQ(c.size(), 4u);
  EXPECT_THROW(PrimitiveCase(PermGroup(4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)}),
                             4, 3),
               InputError);
}

TEST(PrimitiveCaseTest, JohnsonActions) {
  struct Case {
    int k, s;
    bool alternating;
  };
  for (Case c : {Case{5, 2, true}, Case{6, 2, false}, Case{7, 3, false},
                 Case{7, 2, true}, Case{6, 1, false}}) {
    std::vector<int> all(c.k);
    std::iota(all.begin(), all.end(), 0);
    PermGroup base = c.alternating ? PermGroup::Alternating(c.k, all)
                                   : PermGroup::Symmetric(c.k);
    const auto subsets = Subsets(c.k, c.s);
    const PermGroup g = SubsetAction(base, subsets);
    PrimitiveOutcome out = PrimitiveCase(g, c.k, 0.25);
    ASSERT_EQ(out.kind, PrimitiveKind::kSparseCover) << c.k << " " << c.s;
    ASSERT_EQ(static_cast<int>(out.cover.size()), c.k);
    std::set<std::vector<int>> parts(out.cover.begin(), out.cover.end());
    for (const auto& part : out.cover) {
      EXPECT_LE(2 * part.size(), subsets.size());
      for (const Perm& p : g.generators()) {
        std::vector<int> img;
        for (int x : part) img.push_back(p[x]);
        std::sort(img.begin(), img.end());
        EXPECT_TRUE(parts.count(img));
      }
    }
  }
  // PGL(2,5) on the projective line: primitive, neither small nor Johnson.
  // Points 0..4 of GF(5) as 1..5 and infinity as 6: x+1, 2x and -1/x.
  const PermGroup pgl(6, {P("(1 2 3 4 5)", 6), P("(2 3 5 4)", 6),
                          P("(1 6)(2 5)", 6)});
  ASSERT_EQ(pgl.order(), 120);
  EXPECT_EQ(PrimitiveCase(pgl, 6, 0.25).kind, PrimitiveKind::kFallback);
}

// ---- cl_setset ---------------------------------------------------------------

TEST(ClSetSetTest, SpecExamples) {
  Rng rng(36);
  const int n = 4;
  CosetMap one;
  one.domain = {RandomLabelingCoset(rng, n)};
  one.images = {RandomLabelingCoset(rng, n)};
  one.delta_rho = Coset(one.domain[0].group(), RandomPermutation(rng, n));
  CanonResult r = ClSetSet(one);
  EXPECT_EQ(r.form, Apply(CosetMapObject(one), r.labeling.rep()));
  EXPECT_EQ(r.labeling.group(), BruteForceAut(CosetMapObject(one), n));
  CosetMap trivial;
  trivial.delta_rho = Coset::Single(RandomPermutation(rng, n));
  trivial.domain = {Coset::All(n)};
  trivial.images = {Coset::Single(Perm(n))};
  EXPECT_TRUE(ClSetSet(trivial).labeling.group().IsTrivial());
  // Delta must permute J.
  CosetMap bad;
  bad.delta_rho = Coset::All(3);
  bad.domain = {Coset(PermGroup(3), Perm(3)), Coset(PermGroup(3), P("(1 2)", 3))};
  bad.images = {Coset::All(3), Coset::All(3)};
  EXPECT_THROW(ClSetSet(bad), InputError);
}

TEST(ClSetSetTest, MatchesOracle) {
  Rng rng(37);
  int multi = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 4;
    CosetMap m = RandomCosetMap(rng, n, 8);
    if (m.domain.size() > 1) ++multi;
    const Object x = CosetMapObject(m);
    CanonOptions options;
    options.primitive_c = trial % 3 == 0 ? 0.25 : 3.0;
    CheckOutcome c = CheckCanonizer(SetSetCanonizer(options), x, n, 3, rng);
    ASSERT_TRUE(c.ok) << c.failure;
    RecursionStats stats;
    ClSetSet(m, options, &stats);
    if (!stats.setset_fallback) {
      EXPECT_TRUE(SetSetCallsWithinBound(stats.setset_calls, m, options.primitive_c));
    }
  }
  EXPECT_GT(multi, 50);
}

// ---- cl_sethyper -------------------------------------------------------------

TEST(ClSetHyperTest, SpecExamples) {
  const int n = 4;
  const std::vector<std::vector<int>> edges = {{0, 1}, {1, 2}, {2, 3}};
  std::vector<Coset> same(edges.size(), Coset::All(n));
  CanonResult r = ClSetHyper(LabeledHypergraphObject(edges, same), n);
  EXPECT_EQ(r.labeling.group(), ClHyper(HypergraphObject(edges), n).labeling.group());
  Coset theta(PermGroup(n, {P("(1 3)", n)}), P("(1 2)", n));
  CanonResult s = ClSetHyper(LabeledHypergraphObject({{0, 1}}, {theta}), n);
  PermGroup want = IntersectGroups(
      PermGroup(n, {P("(1 2)", n), P("(3 4)", n)}), theta.group());
  EXPECT_EQ(s.labeling.group(), want);
}

TEST(ClSetHyperTest, MatchesOracle) {
  Rng rng(38);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    auto edges = RandomEdges(rng, n, UniformInt(rng, 1, 4), trial % 2 == 0);
    std::vector<Coset> labels;
    std::vector<Coset> pool = RandomCosetFamily(rng, n, 2);
    for (size_t i = 0; i < edges.size(); ++i) {
      labels.push_back(pool[UniformInt(rng, 0, 1)]);
    }
    Object x = LabeledHypergraphObject(edges, labels);
    CanonOptions options;
    options.primitive_c = trial % 2 ? 0.25 : 3.0;
    CheckOutcome c = CheckCanonizer(SetHyperCanonizer(options), x, n, 3, rng);
    ASSERT_TRUE(c.ok) << c.failure;
  }
}

TEST(ClSetHyperTest, CompleteGraphReachesCoverBranch) {
  // Sym(5) permutes the ten labeled 2-subsets as in the Johnson scheme.
  Rng rng(39);
  const int n = 5;
  for (int trial = 0; trial < 4; ++trial) {
    const auto edges = Pairs(n);
    std::vector<Coset> labels;
    std::vector<Coset> pool = {Coset::All(n), RandomLabelingCoset(rng, n)};
    for (size_t i = 0; i < edges.size(); ++i) {
      labels.push_back(pool[trial == 0 ? 0 : UniformInt(rng, 0, 1)]);
    }
    CanonOptions options;
    options.primitive_c = 0.25;
    Object x = LabeledHypergraphObject(edges, labels);
    RecursionStats stats;
    CheckOutcome c =
        CheckCanonizer(SetHyperCanonizer(options, &stats), x, n, 2, rng);
    ASSERT_TRUE(c.ok) << c.failure;
    EXPECT_GT(stats.setset_cover_branches, 0);
  }
}

}  // namespace
}  // namespace cosetcanon
