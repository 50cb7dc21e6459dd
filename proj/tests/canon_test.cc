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

#include "cosetcanon/canon.h"

#include "cosetcanon/generators.h"
#include "cosetcanon/harness.h"
#include "cosetcanon/oracle.h"
#include "gtest/gtest.h"

namespace cosetcanon {
namespace {

Perm P(const char* cycles, int n) { return Perm::FromCycles(cycles, n); }

TEST(OracleTest, SmallKnownGroups) {
  // Triangle, directed 3-cycle.
  Object tri = Object::Set({Object::Set({Object::Int(0), Object::Int(1)}),
                            Object::Set({Object::Int(1), Object::Int(2)}),
                            Object::Set({Object::Int(0), Object::Int(2)})});
  EXPECT_EQ(BruteForceAut(tri, 3).order(), 6);
  Object cyc = GraphInstance({{0, 1}, {1, 2}, {2, 0}}, Coset::All(3));
  EXPECT_EQ(BruteForceAut(cyc, 3).order(), 3);
  EXPECT_EQ(BruteForceCanon(cyc, 3).labeling.size(), 3);
}

TEST(ClGraphTest, SpecExamples) {
  Coset all3 = Coset::All(3);
  CanonResult empty = ClGraph({}, all3);
  EXPECT_EQ(empty.labeling, all3);
  CanonResult path = ClGraph({{0, 1}, {1, 0}, {1, 2}, {2, 1}}, all3);
  EXPECT_EQ(path.labeling.size(), 2);
  CanonResult arc = ClGraph({{0, 1}}, Coset::All(2));
  EXPECT_EQ(arc.labeling.size(), 1);
}

TEST(ClGraphTest, MatchesOracle) {
  Rng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 6;
    Coset c = trial % 2 ? Coset::All(n) : RandomLabelingCoset(rng, n);
    Object x = GraphInstance(RandomDigraph(rng, n, 0.3), c);
    CheckOutcome r = CheckCanonizer(GraphCanonizer(), x, n, 5, rng);
    ASSERT_TRUE(r.ok) << r.failure;
  }
}

TEST(ClGraphTest, SymmetricGraphs) {
  // Petersen-like symmetric instances exercise automorphism pruning.
  Rng rng(102);
  PairList cycle;
  const int n = 7;
  for (int i = 0; i < n; ++i) {
    cycle.emplace_back(i, (i + 1) % n);
    cycle.emplace_back((i + 1) % n, i);
  }
  Object x = GraphInstance(cycle, Coset::All(n));
  CheckOutcome r = CheckCanonizer(GraphCanonizer(), x, n, 5, rng);
  EXPECT_TRUE(r.ok) << r.failure;
  PairList none;
  CanonResult e = ClGraph(none, Coset::All(8));
  EXPECT_EQ(e.labeling.size(), Factorial(8));
}

TEST(ClIntTest, SpecExamples) {
  Coset d(PermGroup(3, {P("(1 2 3)", 3)}), P("(1 2)", 3));
  EXPECT_EQ(ClInt(d, d).labeling.group(), d.group());
  Coset t(PermGroup(3, {P("(1 2)", 3)}), Perm(3));
  Coset dd(PermGroup(3, {P("(1 2 3)", 3)}), Perm(3));
  EXPECT_TRUE(ClInt(t, dd).labeling.group().IsTrivial());
  CanonResult s = ClInt(Coset::All(3), d);
  EXPECT_EQ(s.labeling, d);
}

TEST(ClIntTest, MatchesOracle) {
  Rng rng(103);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 6;
    Object x = IntInstance(RandomLabelingCoset(rng, n), RandomLabelingCoset(rng, n));
    CheckOutcome r = CheckCanonizer(IntCanonizer(), x, n, 5, rng);
    ASSERT_TRUE(r.ok) << r.failure;
    // The result lies inside the second coset.
    CanonResult c = ClInt(x[0].coset(), x[1].coset());
    EXPECT_TRUE(x[1].coset().Contains(c.labeling.rep()));
  }
}

TEST(ClSetSmallTest, SpecExamples) {
  Coset d(PermGroup(3, {P("(1 2)", 3)}), P("(1 3)", 3));
  EXPECT_EQ(ClSetSmall({d}).labeling, d);
  CanonResult s = ClSetSmall({Coset::All(3), Coset(PermGroup::Symmetric(3), P("(1 2)", 3))});
  EXPECT_EQ(s.labeling.size(), 6);
  // Two trivial cosets differing by a transposition.
  Coset a = Coset::Single(Perm(3)), b = Coset::Single(P("(1 2)", 3));
  CanonResult ab = ClSetSmall({a, b});
  EXPECT_EQ(ab.labeling.group(), BruteForceAut(CosetSetObject({a, b}), 3));
}

TEST(ClSetSmallTest, MatchesOracle) {
  Rng rng(104);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 5;
    const int t = 1 + trial % 4;
    Object x = CosetSetObject(RandomCosetFamily(rng, n, t));
    CheckOutcome r = CheckCanonizer(SetSmallCanonizer(), x, n, 5, rng);
    ASSERT_TRUE(r.ok) << r.failure;
  }
}

TEST(ClObjectTest, SpecExamples) {
  CanonOptions small{.set_method = SetMethod::kSmall};
  EXPECT_EQ(ClObject(Object::Int(1), 3, small).labeling.size(), 2);
  Object v = Object::Set({Object::Int(0), Object::Int(1), Object::Int(2)});
  EXPECT_EQ(ClObject(v, 3, small).labeling.size(), 6);
  Object t = Object::Tuple({Object::Set({Object::Int(0)}),
                            Object::Set({Object::Int(0), Object::Int(1)})});
  EXPECT_EQ(ClObject(t, 3, small).labeling.size(), 1);
  EXPECT_EQ(ClObject(Object(), 3, small).labeling.size(), 6);
}

TEST(ClObjectTest, MatchesOracle) {
  Rng rng(105);
  CanonOptions small{.set_method = SetMethod::kSmall};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    Object x = RandomObject(rng, n, 3);
    CheckOutcome r = CheckCanonizer(ObjectCanonizerFor(small), x, n, 5, rng);
    ASSERT_TRUE(r.ok) << r.failure;
  }
}

}  // namespace
}  // namespace cosetcanon
