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

#include "cosetcanon/canon_set.h"

#include <map>
#include <numeric>
#include <set>

#include "cosetcanon/canon.h"
#include "cosetcanon/generators.h"
#include "cosetcanon/group_hom.h"
#include "cosetcanon/harness.h"
#include "cosetcanon/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cosetcanon {
namespace {

using testing::P;

// Thresholds low enough that the recursion runs on desk-sized instances.
CanonOptions Lowered(ProgressLedger* ledger = nullptr) {
  CanonOptions o;
  o.small_a_threshold = 1;
  o.min_w = 5;
  o.large_action_offset = -2.0;
  o.check_invariants = true;
  o.ledger = ledger;
  return o;
}

std::vector<int> Range(int lo, int hi) {
  std::vector<int> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

Object AsObject(const std::vector<Coset>& j) { return CosetSetObject(j); }

TEST(ClSetTest, Trivial) {
  const Coset c(PermGroup(4, {P("(1 2)", 4)}), P("(1 3 4)", 4));
  CanonResult r = ClSet({c});
  EXPECT_EQ(r.labeling, c);
  CanonResult all = ClSet({Coset::All(5)});
  EXPECT_EQ(all.labeling.group(), PermGroup::Symmetric(5));
  EXPECT_THROW(ClSet({}), InputError);
  EXPECT_THROW(ClSet({Coset::All(3), Coset::All(4)}), InputError);
}

TEST(ClSetTest, DefaultOptionsMatchOracle) {
  Rng rng(101);
  for (int it = 0; it < 150; ++it) {
    const int n = UniformInt(rng, 1, 6);
    const auto j = RandomCosetFamily(rng, n, UniformInt(rng, 1, 5));
    CheckOutcome out = CheckCanonizer(SetCanonizer({}), AsObject(j), n, 3, rng);
    ASSERT_TRUE(out.ok) << out.failure;
  }
}

TEST(ClSetTest, LoweredThresholdsMatchOracle) {
  Rng rng(202);
  ProgressLedger ledger;
  const CanonOptions o = Lowered(&ledger);
  for (int it = 0; it < 250; ++it) {
    const int n = UniformInt(rng, 2, 6);
    const int t = UniformInt(rng, 2, 5);
    const auto j = it % 2 ? RandomCosetFamily(rng, n, t) : StructuredCosetFamily(rng, n, t);
    CheckOutcome out = CheckCanonizer(SetCanonizer(o), AsObject(j), n, 3, rng);
    ASSERT_TRUE(out.ok) << out.failure;
  }
  EXPECT_GT(ledger.calls(), 250);
  EXPECT_EQ(ledger.shape_violations(), 0);
  EXPECT_TRUE(ledger.WithinBound());
}

TEST(ClSetTest, GroupMatchesSmallCanonizer) {
  Rng rng(303);
  for (int it = 0; it < 100; ++it) {
    const int n = UniformInt(rng, 2, 5);
    const auto j = StructuredCosetFamily(rng, n, UniformInt(rng, 1, 4));
    EXPECT_EQ(ClSet(j, Lowered()).labeling.group(),
              ClSetSmall(j).labeling.group());
  }
}

TEST(ClSetTest, DiagonalMatchings) {
  // Delta^Can is Sym(4) acting diagonally on two copies; the members are
  // matchings between two 4-sets. Exceeds the oracle, so compare groups
  // with the small canonizer.
  const int n = 8;
  const PermGroup diag(n, {P("(1 2)(5 6)", n), P("(1 2 3 4)(5 6 7 8)", n)});
  Rng rng(404);
  for (int it = 0; it < 4; ++it) {
    std::vector<Perm> reps;
    for (int i = 0; i < 4; ++i) reps.push_back(RandomPermutation(rng, n));
    const auto j = SharedCosetFamily(diag, reps);
    ProgressLedger ledger;
    CanonOptions o = Lowered(&ledger);
    o.min_w = 4;
    CanonResult r = ClSet(j, o);
    EXPECT_EQ(r.labeling.group(), BruteForceAut(AsObject(j), n));
    const Perm phi = RandomPermutation(rng, n);
    std::vector<Coset> moved;
    for (const Coset& c : j) moved.push_back(phi.Inverse() * c);
    EXPECT_EQ(ClSet(moved, o).form, r.form);
    EXPECT_EQ(ledger.shape_violations(), 0);
  }
}

TEST(RecurseOnPartitionTest, Examples) {
  Rng rng(505);
  const int n = 4;
  const PermGroup can(n, {P("(1 2)", n)});
  const auto j = SharedCosetFamily(can, {P("", n), P("(1 3)", n), P("(2 4 3)", n),
                                    P("(1 4)", n)});
  SetInstance inst = RootInstance(j);
  ProgressLedger ledger;
  CanonOptions o = Lowered(&ledger);
  // The result's group is the stabilizer of the partition in Aut(J).
  auto parted = [](const std::vector<Coset>& c, const Partition& p) {
    std::vector<Object> parts;
    for (const auto& part : p) {
      std::vector<Object> members;
      for (int i : part) members.push_back(Object::CosetAtom(c[i]));
      parts.push_back(Object::Set(std::move(members)));
    }
    return Object::Set(std::move(parts));
  };
  CanonResult r = RecurseOnPartition(inst, {{{0, 1}, {2, 3}}}, o);
  EXPECT_EQ(r.labeling.group(), BruteForceAut(parted(j, {{0, 1}, {2, 3}}), n));
  // Parts of size 2 are canonized first.
  int halves = 0;
  for (const ProgressRecord& rec : ledger.records()) {
    if (rec.parent < 0 && rec.j_size == 2) ++halves;
  }
  EXPECT_EQ(halves, 2);

  SetInstance three = RootInstance({j[0], j[1], j[2]});
  EXPECT_EQ(RecurseOnPartition(three, {{{0}, {1, 2}}}, o).labeling.group(),
            BruteForceAut(parted(three.cosets, {{0}, {1, 2}}), n));
  EXPECT_THROW(RecurseOnPartition(three, {{{0, 1, 2}}, {{0}, {1}, {2}}}, o),
               ContractError);
}

TEST(ReduceToSubgroupTest, Examples) {
  const int n = 4;
  const PermGroup s4 = PermGroup::Symmetric(n);
  SetInstance one = RootInstance({Coset(s4, Perm(n))});
  ProgressLedger ledger;
  const CanonOptions o = Lowered(&ledger);
  // Index 2: two sub-instances of one coset each.
  SubgroupReduction red = ReduceToSubgroup(one, PermGroup::Alternating(n, Range(0, n)), o);
  ASSERT_TRUE(red.result.has_value());
  EXPECT_EQ(red.result->labeling.group(), s4);
  EXPECT_EQ(ledger.calls(), 2);
  for (const ProgressRecord& rec : ledger.records()) EXPECT_EQ(rec.j_size, 1);

  // Psi = Delta: one part, the instance itself.
  SubgroupReduction same = ReduceToSubgroup(one, s4, Lowered());
  ASSERT_TRUE(same.result.has_value());
  EXPECT_EQ(same.result->labeling, one.cosets[0]);

  EXPECT_THROW(
      ReduceToSubgroup(RootInstance({Coset(PermGroup(n, {P("(1 2)", n)}), Perm(n))}),
                       s4, Lowered()),
      InputError);

  Rng rng(606);
  for (int it = 0; it < 60; ++it) {
    const PermGroup can = RandomSubgroup(rng, n, 2);
    std::vector<Perm> reps;
    const int t = UniformInt(rng, 1, 4);
    for (int i = 0; i < t; ++i) reps.push_back(RandomPermutation(rng, n));
    SetInstance inst = RootInstance(DecodeCosets(AsObject(SharedCosetFamily(can, reps))));
    const int pt = UniformInt(rng, 0, n - 1);
    const PermGroup psi = can.PointwiseStabilizer({pt});
    // The subcosets carry the same automorphisms.
    std::vector<Coset> hat;
    for (const Coset& c : inst.cosets) {
      for (const Perm& d : CosetTransversal(can, psi)) {
        const Perm lambda = c.rep() * d;
        hat.emplace_back(psi.Conjugate(lambda.Inverse()), lambda);
      }
    }
    const PermGroup aut = BruteForceAut(AsObject(inst.cosets), n);
    ASSERT_EQ(BruteForceAut(AsObject(hat), n), aut);
    SubgroupReduction r = ReduceToSubgroup(inst, psi, Lowered());
    if (r.result) {
      EXPECT_EQ(r.result->labeling.group(), aut);
    } else {
      ASSERT_TRUE(r.family.has_value());
      EXPECT_EQ(RecurseOnPartition(inst, *r.family, Lowered()).labeling.group(), aut);
    }
  }
}

TEST(ReduceToJohnsonTest, Branches) {
  // Constant-size A with default options: the base canonizer.
  Rng rng(707);
  for (int it = 0; it < 40; ++it) {
    const int n = UniformInt(rng, 2, 4);
    const auto j = StructuredCosetFamily(rng, n, UniformInt(rng, 1, 4));
    std::vector<Coset> distinct = DecodeCosets(AsObject(j));
    SetInstance inst = RootInstance(distinct);
    EXPECT_EQ(ReduceToJohnson(inst).labeling.group(),
              BruteForceAut(AsObject(distinct), n));
  }
  // Distinct least orbits: the labeled hypergraph case.
  const int n = 5;
  const PermGroup can(n, {P("(1 2)", n)});
  const auto j = SharedCosetFamily(can, {P("", n), P("(1 3)", n), P("(2 5)", n)});
  EXPECT_EQ(ReduceToJohnson(RootInstance(j), Lowered()).labeling.group(),
            BruteForceAut(AsObject(j), n));

  // Sym on |A| = 5: transitive, singleton blocks, small order, so the block
  // kernel reduction runs.
  ProgressLedger ledger;
  CanonOptions o = Lowered(&ledger);
  o.large_action_offset = 3.0;
  SetInstance sym = RootInstance({Coset::All(5)});
  EXPECT_EQ(ReduceToJohnson(sym, o).labeling.group(), PermGroup::Symmetric(5));
  ASSERT_GT(ledger.calls(), 0);
  for (const ProgressRecord& rec : ledger.records()) {
    EXPECT_EQ(rec.shape, ProgressShape::kInDelta);
  }
  EXPECT_EQ(ledger.calls(), 120);
}

// The identity representation of Sym(n) on n points.
SetInstance NaturalGiant(int n) {
  SetInstance inst = RootInstance({Coset::All(n)});
  inst.giant = GroupHom(inst.delta_can, inst.delta_can.generators(), n);
  return inst;
}

TEST(ProduceCertificatesTest, SymmetricGroupCertificate) {
  SetInstance inst = NaturalGiant(8);
  CanonOptions o;
  CertificateOutcome out = ProduceCertificates(inst, o);
  ASSERT_TRUE(out.certificate.has_value());
  EXPECT_TRUE(IsFullnessCertificate(inst, *out.certificate));
  EXPECT_TRUE(out.certificate->IsSubgroupOf(inst.delta_can));
  EXPECT_EQ(*out.certificate, PermGroup::Symmetric(8));
  const AffectedSplit split = SplitAffected(inst.delta_can, *inst.giant);
  EXPECT_EQ(split.affected, Range(0, 5));
  EXPECT_EQ(split.unaffected, Range(5, 8));
}

TEST(ProduceCertificatesTest, RejectsMissingGiant) {
  EXPECT_THROW(ProduceCertificates(RootInstance({Coset::All(3)})), InputError);
  EXPECT_THROW(ReduceToJohnson(NaturalGiant(8)), InputError);
}

// Sym(5) acting on its six Sylow 5-subgroups, with the isomorphism back to
// the natural action as giant representation.
struct ExoticS5 {
  PermGroup on6;
  GroupHom to5;
};

ExoticS5 MakeExoticS5() {
  std::vector<Perm> five_cycles;
  for (const Perm& p : testing::AllPerms(5)) {
    bool cycle = true;
    int x = 0;
    for (int k = 1; k < 5; ++k) {
      x = p[x];
      cycle = cycle && x != 0;
    }
    if (cycle && p[x] == 0) five_cycles.push_back(p);
  }
  std::vector<std::set<Perm>> subgroups;
  for (const Perm& c : five_cycles) {
    std::set<Perm> s;
    Perm x = c;
    for (int k = 0; k < 4; ++k, x = x * c) s.insert(x);
    if (std::find(subgroups.begin(), subgroups.end(), s) == subgroups.end()) {
      subgroups.push_back(s);
    }
  }
  const std::vector<Perm> gens5 = {P("(1 2)", 5), P("(1 2 3 4 5)", 5)};
  std::vector<Perm> gens6;
  for (const Perm& g : gens5) {
    std::vector<int> img;
    for (const auto& s : subgroups) {
      std::set<Perm> t;
      for (const Perm& x : s) t.insert(g.Inverse() * x * g);
      img.push_back(std::find(subgroups.begin(), subgroups.end(), t) - subgroups.begin());
    }
    gens6.emplace_back(img);
  }
  PermGroup on6(6, gens6);
  return {on6, GroupHom(on6, gens5, 5)};
}

TEST(ProduceCertificatesTest, TransitiveExoticAction) {
  const ExoticS5 s5 = MakeExoticS5();
  ASSERT_EQ(s5.on6.order(), 120);
  ASSERT_TRUE(s5.on6.IsTransitiveOn(Range(0, 6)));
  const std::vector<Perm> reps = CosetTransversal(PermGroup::Symmetric(6), s5.on6);
  ASSERT_EQ(reps.size(), 6u);
  Rng rng(808);
  for (int it = 0; it < 4; ++it) {
    std::vector<Perm> chosen;
    for (const Perm& r : reps) {
      if (UniformInt(rng, 0, 1)) chosen.push_back(r.Inverse());
    }
    if (chosen.empty()) chosen.push_back(Perm(6));
    SetInstance inst;
    inst.cosets = SharedCosetFamily(s5.on6, chosen);
    inst.a = Range(0, 6);
    inst.delta_can = s5.on6;
    inst.giant = s5.to5;
    ProgressLedger ledger;
    const CanonOptions o = Lowered(&ledger);
    ValidateSetInstance(inst, o);
    CertificateOutcome out = ProduceCertificates(inst, o);
    if (out.certificate) {
      EXPECT_TRUE(IsFullnessCertificate(inst, *out.certificate));
    }
    const PermGroup aut = BruteForceAut(AsObject(inst.cosets), 6);
    EXPECT_EQ(ClSetInstance(inst, o).labeling.group(), aut);
  }
}

TEST(AggregateCertificatesTest, Examples) {
  SetInstance inst = NaturalGiant(5);
  const PermGroup s5 = PermGroup::Symmetric(5);
  CanonOptions o = Lowered();
  CanonResult r = AggregateCertificates(inst, s5, o);
  EXPECT_EQ(r.labeling.group(), s5);
  EXPECT_THROW(AggregateCertificates(inst, PermGroup(5), o), InputError);
}

TEST(ExtendByAutomorphismsTest, Examples) {
  const int n = 3;
  const Coset lambda(PermGroup(n, {P("(1 2)", n)}), P("(2 3)", n));
  EXPECT_EQ(ExtendByAutomorphisms(lambda, PermGroup(n)), lambda);
  EXPECT_EQ(ExtendByAutomorphisms(lambda, lambda.group()), lambda);
  // The 2-cycle on {1,2} with a flip that commutes with it.
  const Coset two(PermGroup(4, {P("(1 2)", 4)}), Perm(4));
  const Coset doubled = ExtendByAutomorphisms(two, PermGroup(4, {P("(3 4)", 4)}));
  EXPECT_EQ(doubled.group().order(), 4);
  EXPECT_EQ(doubled.rep(), two.rep());
  EXPECT_THROW(ExtendByAutomorphisms(lambda, PermGroup(n, {P("(2 3)", n)})),
               ContractError);
}

TEST(SetInstanceTest, DumpRoundTrip) {
  SetInstance inst = NaturalGiant(5);
  inst.cosets.push_back(Coset(inst.delta_can, P("(1 2)", 5)));
  SetInstance back = ParseSetInstance(DumpSetInstance(inst));
  EXPECT_EQ(DumpSetInstance(back), DumpSetInstance(inst));
  ASSERT_TRUE(back.giant.has_value());
  EXPECT_THROW(ParseSetInstance("set-instance 3 1\ncoset 0\n"), InputError);
}

TEST(SetInstanceTest, ValidationNamesProperty) {
  const int n = 4;
  SetInstance inst = RootInstance(
      {Coset(PermGroup(n, {P("(1 2)", n)}), Perm(n)), Coset::All(n)});
  EXPECT_THROW(ValidateSetInstance(inst, {}), ContractError);
  SetInstance a = RootInstance({Coset(PermGroup(n), Perm(n)),
                                Coset(PermGroup(n), P("(3 4)", n))});
  a.a = {0, 1};
  EXPECT_THROW(ValidateSetInstance(a, {}), ContractError);
}

}  // namespace
}  // namespace cosetcanon
