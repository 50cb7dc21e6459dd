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

#include "cosetcanon/coset.h"

#include <sstream>

namespace cosetcanon {

Coset::Coset(PermGroup group, Perm rep)
    : empty_(false),
      degree_(group.degree()),
      group_(std::move(group)),
      rep_(std::move(rep)) {
  if (rep_.degree() != degree_) throw InputError("coset degree mismatch");
}

Coset Coset::Empty(int degree) {
  Coset c;
  c.degree_ = degree;
  c.group_ = PermGroup(degree);
  c.rep_ = Perm(degree);
  return c;
}

Coset Coset::All(int degree) {
  return Coset(PermGroup::Symmetric(degree), Perm(degree));
}

Coset Coset::Single(Perm p) {
  const int n = p.degree();
  return Coset(PermGroup(n), std::move(p));
}

bool Coset::Contains(const Perm& x) const {
  if (empty_) return false;
  return group_.Contains(x * rep_.Inverse());
}

PermGroup Coset::CodomainGroup() const { return group_.Conjugate(rep_); }

Perm Coset::MinElement() const {
  if (empty_) throw ContractError("minimum of an empty coset");
  return group_.MinimalCosetRep(rep_);
}

Coset Coset::operator*(const Perm& p) const {
  if (empty_) return Empty(degree_);
  return Coset(group_, rep_ * p);
}

Coset operator*(const Perm& p, const Coset& c) {
  if (c.empty_) return Coset::Empty(c.degree_);
  return Coset(c.group_.Conjugate(p.Inverse()), p * c.rep_);
}

Coset Coset::Inverse() const {
  if (empty_) return Empty(degree_);
  // (g rep)^-1 = rep^-1 g^-1, and rep^-1 G = (rep^-1 G rep) rep^-1.
  return Coset(group_.Conjugate(rep_), rep_.Inverse());
}

bool operator==(const Coset& a, const Coset& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_ && a.degree_ == b.degree_;
  if (a.degree_ != b.degree_) return false;
  return a.group_ == b.group_ && a.group_.Contains(b.rep_ * a.rep_.Inverse());
}

std::string Coset::ToString() const {
  if (empty_) return "coset[empty]";
  std::ostringstream out;
  out << "coset[";
  const auto& gens = group_.CanonicalGenerators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << gens[i].ToCycles();
  }
  out << ";";
  const Perm m = MinElement();
  for (int x = 0; x < degree_; ++x) out << ' ' << m[x] + 1;
  out << "]";
  return out.str();
}

CosetFilter::CosetFilter(PermGroup h, const Perm& y0)
    : h_(std::move(h)), yinv_(y0.Inverse()), cinv_(h_.degree()) {}

bool CosetFilter::Extendable(int depth, const std::vector<int>& images) {
  const int t = yinv_[images[depth]];
  const Perm* prev = depth == 0 ? nullptr : &cinv_[depth - 1];
  const int want = prev ? (*prev)[t] : t;
  if (!h_.InBasicOrbit(depth, want)) return false;
  const Perm& uinv = h_.TransversalInverse(depth, want);
  cinv_[depth] = prev ? *prev * uinv : uinv;
  return true;
}

bool CosetFilter::Contains(const Perm& x) const {
  return h_.Contains(x * yinv_);
}

Coset Intersect(const Coset& a, const Coset& b) {
  if (a.empty() || b.empty()) return Coset::Empty(a.degree());
  if (a.degree() != b.degree()) throw InputError("coset degree mismatch");
  const int n = a.degree();
  // Cheap containment cases.
  if (b.group().order() == Factorial(n)) return a;
  if (a.group().order() == Factorial(n)) return b;
  PermGroup ga = a.group().HasAscendingBase() ? a.group() : a.group().WithBase({});
  PermGroup gb = b.group().HasAscendingBase() ? b.group() : b.group().WithBase({});
  // Search over the smaller group.
  const Coset* small = &a;
  const Coset* large = &b;
  PermGroup gs = ga, gl = gb;
  if (gb.order() < ga.order()) {
    std::swap(small, large);
    std::swap(gs, gl);
  }
  CosetFilter filter(gl, large->rep());
  SearchSpec spec;
  spec.partial = [&filter](const std::vector<int>&, int depth,
                           const std::vector<int>& images) {
    return filter.Extendable(depth, images);
  };
  spec.full = [&filter](const Perm& x) { return filter.Contains(x); };
  auto x = FindInCoset(gs, small->rep(), spec);
  if (!x) return Coset::Empty(n);
  return Coset(IntersectGroups(ga, gb), *x);
}

PermGroup IntersectGroups(const PermGroup& a, const PermGroup& b) {
  const int n = a.degree();
  if (b.order() == Factorial(n) || a.IsSubgroupOf(b)) return a;
  if (a.order() == Factorial(n) || b.IsSubgroupOf(a)) return b;
  PermGroup ga = a.HasAscendingBase() ? a : a.WithBase({});
  PermGroup gb = b.HasAscendingBase() ? b : b.WithBase({});
  if (gb.order() < ga.order()) std::swap(ga, gb);
  CosetFilter filter(gb, Perm(n));
  SearchSpec spec;
  spec.partial = [&filter](const std::vector<int>&, int depth,
                           const std::vector<int>& images) {
    return filter.Extendable(depth, images);
  };
  spec.full = [&filter](const Perm& x) { return filter.Contains(x); };
  return FindSubgroup(ga, spec);
}

Coset Join(const std::vector<Coset>& cosets) {
  if (cosets.empty()) throw InputError("join of an empty family");
  std::vector<const Coset*> live;
  for (const Coset& c : cosets) {
    if (!c.empty()) live.push_back(&c);
  }
  if (live.empty()) return Coset::Empty(cosets[0].degree());
  const int n = live[0]->degree();
  const Perm r1inv = live[0]->rep().Inverse();
  std::vector<Perm> gens;
  for (const Coset* c : live) {
    if (c->degree() != n) throw InputError("join over mixed domains");
    for (const Perm& g : c->group().generators()) gens.push_back(g);
    Perm d = c->rep() * r1inv;
    if (!d.IsIdentity()) gens.push_back(std::move(d));
  }
  return Coset(PermGroup(n, std::move(gens)), live[0]->rep());
}

Coset RestrictCoset(const Coset& c, const std::vector<int>& s,
                    const std::vector<int>& t) {
  if (s.size() != t.size()) throw InputError("restriction size mismatch");
  const int k = static_cast<int>(s.size());
  if (c.empty()) return Coset::Empty(k);
  std::vector<int> spos(c.degree(), -1), tpos(c.degree(), -1);
  for (int i = 0; i < k; ++i) {
    spos[s[i]] = i;
    tpos[t[i]] = i;
  }
  std::vector<Perm> gens;
  for (const Perm& g : c.group().generators()) {
    gens.push_back(RestrictPerm(g, s, spos));
  }
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) {
    const int q = tpos[c.rep()[s[i]]];
    if (q < 0) throw InputError("coset does not map the subset onto target");
    img[i] = q;
  }
  return Coset(PermGroup(k, std::move(gens)), Perm(std::move(img)));
}

}  // namespace cosetcanon
