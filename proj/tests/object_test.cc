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

#include "cosetcanon/object.h"

#include <random>
#include <set>

#include "cosetcanon/coset.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cosetcanon {
namespace {

using testing::AllPerms;
using testing::CosetElements;
using testing::EnumerateByClosure;
using testing::P;
using testing::RandomCoset;
using testing::RandomPerm;

TEST(CosetTest, MembershipMatchesEnumeration) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    Coset c = RandomCoset(rng, n);
    std::set<Perm> elems = CosetElements(c);
    for (const Perm& x : AllPerms(n)) {
      EXPECT_EQ(c.Contains(x), elems.count(x) > 0);
    }
    EXPECT_EQ(c.MinElement(), *elems.begin());
    EXPECT_EQ(BigInt(elems.size()), c.size());
  }
}

TEST(CosetTest, MultiplicationAndInverse) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    Coset c = RandomCoset(rng, n);
    Perm p = RandomPerm(rng, n);
    std::set<Perm> left, right, inv;
    for (const Perm& x : CosetElements(c)) {
      left.insert(p * x);
      right.insert(x * p);
      inv.insert(x.Inverse());
    }
    EXPECT_EQ(CosetElements(p * c), left);
    EXPECT_EQ(CosetElements(c * p), right);
    EXPECT_EQ(CosetElements(c.Inverse()), inv);
  }
}

TEST(CosetTest, EqualityIgnoresRepresentation) {
  Coset a(PermGroup(3, {P("(1 2)", 3)}), P("(1 3)", 3));
  Coset b(PermGroup(3, {P("(1 2)", 3)}), P("(1 2)", 3) * P("(1 3)", 3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(EncodeCoset(a), EncodeCoset(b));
  EXPECT_FALSE(a == Coset(PermGroup(3, {P("(1 2)", 3)}), Perm(3)));
  EXPECT_EQ(Coset::Empty(3), Coset::Empty(3));
  EXPECT_EQ(Coset::Empty(3).ToString(), "coset[empty]");
}

TEST(CosetTest, IntersectMatchesEnumeration) {
  std::mt19937 rng(13);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    Coset a = RandomCoset(rng, n);
    Coset b = RandomCoset(rng, n);
    if (trial % 3 == 0) b = Coset(b.group(), a.MinElement());
    std::set<Perm> ea = CosetElements(a), eb = CosetElements(b), both;
    for (const Perm& x : ea) {
      if (eb.count(x)) both.insert(x);
    }
    Coset c = Intersect(a, b);
    EXPECT_EQ(CosetElements(c), both) << "trial " << trial;
    if (!both.empty()) ++nonempty;
  }
  EXPECT_GT(nonempty, 50);
}

TEST(CosetTest, IntersectSpecExample) {
  Coset theta(PermGroup(3, {P("(1 2)", 3)}), Perm(3));
  Coset delta(PermGroup(3, {P("(1 2 3)", 3)}), Perm(3));
  EXPECT_EQ(Intersect(theta, delta).size(), 1);
  EXPECT_EQ(IntersectGroups(theta.group(), delta.group()).order(), 1);
}

TEST(CosetTest, JoinIsSmallestContainingCoset) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<Coset> s;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) s.push_back(RandomCoset(rng, n));
    // Oracle: the group generated by x * y^-1 over all members x, y.
    std::set<Perm> members;
    for (const Coset& c : s) {
      for (const Perm& x : CosetElements(c)) members.insert(x);
    }
    std::vector<Perm> diffs;
    for (const Perm& x : members) diffs.push_back(x * members.begin()->Inverse());
    std::set<Perm> group = EnumerateByClosure(n, diffs);
    std::set<Perm> expected;
    for (const Perm& g : group) expected.insert(g * *members.begin());
    Coset j = Join(s);
    EXPECT_EQ(CosetElements(j), expected);
    // Invariance under relabeling.
    Perm phi = RandomPerm(rng, n);
    std::vector<Coset> moved;
    for (const Coset& c : s) moved.push_back(phi.Inverse() * c);
    EXPECT_EQ(Join(moved), phi.Inverse() * j);
  }
  Coset all = Coset::All(4);
  Coset single = Coset::Single(P("(1 2)", 4));
  EXPECT_EQ(Join({all, single}), all);
  EXPECT_EQ(Join({Join({single, all}), single}), Join({single, all, single}));
}

TEST(ObjectTest, KindOrder) {
  Object one = Object::Int(0), two = Object::Int(1);
  EXPECT_LT(one, two);
  EXPECT_EQ(one, Object::Int(0));
  Object tup = Object::Tuple({one, two});
  Object set = Object::Set({one, two});
  EXPECT_LT(tup, set);
  EXPECT_LT(two, Object::CosetAtom(Coset::All(2)));
  EXPECT_LT(Object::CosetAtom(Coset::All(2)), tup);
  EXPECT_LT(set, Object::Const(one));
  // A proper prefix comes first.
  EXPECT_LT(Object::Tuple({one}), tup);
  // Sets are order-insensitive and collapse duplicates.
  EXPECT_EQ(Object::Set({two, one, two}), set);
  EXPECT_EQ(set.size(), 2u);
}

TEST(ObjectTest, CosetOrderIsRepresentationIndependent) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    Coset c = RandomCoset(rng, n);
    // Regenerate the same coset from its elements.
    std::set<Perm> elems = CosetElements(c);
    std::vector<Perm> gens;
    for (const Perm& g : c.group().Elements()) {
      if (rng() % 2) gens.push_back(g);
    }
    for (const Perm& g : c.group().generators()) gens.push_back(g);
    auto it = elems.begin();
    std::advance(it, rng() % elems.size());
    Coset d(PermGroup(n, gens), *it);
    EXPECT_EQ(Object::CosetAtom(c), Object::CosetAtom(d));
  }
}

TEST(ObjectTest, CompareIsTotalOnSmallObjects) {
  // All objects of depth at most 2 built from {1,2,3}, sampled.
  std::vector<Object> atoms = {Object::Int(0), Object::Int(1), Object::Int(2)};
  std::vector<Object> pool = atoms;
  for (const Object& a : atoms) {
    for (const Object& b : atoms) {
      pool.push_back(Object::Tuple({a, b}));
      pool.push_back(Object::Set({a, b}));
    }
  }
  pool.push_back(Object());
  pool.push_back(Object::CosetAtom(Coset::All(3)));
  pool.push_back(Object::CosetAtom(Coset::Single(Perm(3))));
  for (const Object& a : pool) {
    EXPECT_EQ(a <=> a, std::strong_ordering::equal);
    for (const Object& b : pool) {
      auto ab = a <=> b, ba = b <=> a;
      EXPECT_EQ(ab == 0, ba == 0);
      EXPECT_EQ(ab < 0, ba > 0);
      EXPECT_EQ(ab == 0, a.encoding() == b.encoding());
      for (const Object& c : pool) {
        if (a < b && b < c) EXPECT_LT(a, c);
      }
    }
  }
}

TEST(ObjectTest, ApplySpecExample) {
  // a,b,c = 0,1,2; mu: a->b, b->c, c->a.
  Object x = Object::Set({Object::Tuple({Object::Int(0), Object::Int(1)}),
                          Object::Tuple({Object::Int(1), Object::Int(2)})});
  Perm mu({1, 2, 0});
  Object want = Object::Set({Object::Tuple({Object::Int(1), Object::Int(2)}),
                             Object::Tuple({Object::Int(2), Object::Int(0)})});
  EXPECT_EQ(Apply(x, mu), want);
  EXPECT_EQ(Apply(x, Perm(3)), x);
}

Object RandomObject(std::mt19937& rng, int n, int depth) {
  const int r = static_cast<int>(rng() % (depth > 0 ? 5 : 2));
  if (r == 0) return Object::Int(static_cast<int>(rng() % n));
  if (r == 1) return Object::CosetAtom(RandomCoset(rng, n));
  std::vector<Object> items;
  const int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) items.push_back(RandomObject(rng, n, depth - 1));
  if (r == 2) return Object::Tuple(std::move(items));
  if (r == 3) return Object::Set(std::move(items));
  return Object::Const(Object::Int(static_cast<int>(rng() % n)));
}

TEST(ObjectTest, ApplyIsAnAction) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    Object x = RandomObject(rng, n, 3);
    Perm mu = RandomPerm(rng, n), nu = RandomPerm(rng, n);
    EXPECT_EQ(Apply(x, mu * nu), Apply(Apply(x, mu), nu));
    EXPECT_EQ(Apply(Apply(x, mu), mu.Inverse()), x);
    EXPECT_EQ(IsAutomorphism(x, mu), Apply(x, mu) == x);
  }
}

TEST(ObjectTest, InducedCosetSpecExample) {
  // V = {a,b,c}, X = {{a},{b,c}}, Delta = <(b c)>.
  Object x = Object::Set({Object::Set({Object::Int(0)}),
                          Object::Set({Object::Int(1), Object::Int(2)})});
  Coset c(PermGroup(3, {P("(2 3)", 3)}), Perm(3));
  Coset ind = InducedCoset(c, x);
  EXPECT_EQ(ind.degree(), 2);
  EXPECT_TRUE(ind.group().IsTrivial());
  // {a} is the first member and its image sorts first.
  EXPECT_EQ(ind.rep()[0], 0);
  EXPECT_THROW(InducedCoset(Coset(PermGroup::Symmetric(3), Perm(3)), x),
               InputError);
}

TEST(ObjectTest, InducedCosetCommutesWithRelabeling) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 3;
    // Members: all 2-subsets, preserved by any group.
    std::vector<Object> items;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        items.push_back(Object::Set({Object::Int(a), Object::Int(b)}));
      }
    }
    Object x = Object::Set(items);
    Coset c = RandomCoset(rng, n);
    Perm mu = RandomPerm(rng, n);
    Object xm = Apply(x, mu);
    Coset lhs = InducedCoset(c, x);
    Coset rhs = InducedCoset(mu.Inverse() * c, xm);
    // Member i of x corresponds to member InducedPerm-index in xm.
    std::vector<int> match(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      Object img = Apply(x[i], mu);
      for (size_t j = 0; j < xm.size(); ++j) {
        if (xm[j] == img) match[i] = static_cast<int>(j);
      }
    }
    Perm m(match);
    EXPECT_EQ(m.Inverse() * lhs, rhs);
  }
}

}  // namespace
}  // namespace cosetcanon
