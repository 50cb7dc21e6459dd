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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "cosetcanon/canon_struct.h"
#include "cosetcanon/object.h"

namespace cosetcanon {

namespace {

// Largest degree for which identifier pairs are enumerated exhaustively.
constexpr int kMaxIdentifierDegree = 10;

struct Ctx {
  const CanonOptions* options;
  // Options for every auxiliary canonizer and base case: kSmall keeps the
  // coset-set canonizer inside them from re-entering CL_Set.
  CanonOptions small;
  int parent = -1;

  explicit Ctx(const CanonOptions& o) : options(&o), small(o) {
    small.set_method = SetMethod::kSmall;
  }
  ProgressLedger* ledger() const { return options->ledger; }
  void Warn(const std::string& s) const {
    if (ledger() != nullptr) ledger()->Warn(s);
  }
};

std::vector<int> Complement(int n, const std::vector<int>& s) {
  std::vector<char> in(n, 0);
  for (int x : s) in[x] = 1;
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (!in[x]) out.push_back(x);
  }
  return out;
}

std::vector<int> Intersection(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> ImageOf(const std::vector<int>& s, const Perm& p) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) out.push_back(p[x]);
  std::sort(out.begin(), out.end());
  return out;
}

Object IntSet(const std::vector<int>& s) {
  std::vector<Object> items;
  for (int x : s) items.push_back(Object::Int(x));
  return Object::Set(std::move(items));
}

void AppendSymmetricGenerators(int n, const std::vector<int>& part,
                               std::vector<Perm>& gens) {
  if (part.size() < 2) return;
  gens.push_back(Perm::FromCycleList({{part[0], part[1]}}, n));
  if (part.size() > 2) gens.push_back(Perm::FromCycleList({part}, n));
}

// The coset of the group generated by c's group and Sym(P) for each part P,
// through rep(c). For a partition {A} this is the restriction key of c to
// V \ A; for blocks B_1..B_k of A together with V \ A it is the key of the
// induced map on the blocks.
Coset Widened(const Coset& c, const std::vector<std::vector<int>>& parts) {
  std::vector<Perm> gens = c.group().generators();
  for (const auto& part : parts) AppendSymmetricGenerators(c.degree(), part, gens);
  return Coset(PermGroup(c.degree(), std::move(gens)), c.rep());
}

Object Key(const Coset& c, const std::vector<std::vector<int>>& parts) {
  return Object::CosetAtom(Widened(c, parts));
}

// Key of the restriction of c to V \ a.
Object OutsideKey(const Coset& c, const std::vector<int>& a) {
  return Key(c, {a});
}

// Key of the restriction of c to s.
Object RestrictionKey(const Coset& c, const std::vector<int>& s) {
  return Key(c, {Complement(c.degree(), s)});
}

// lambda * psi_can as a coset over V.
Coset Subcoset(const PermGroup& psi_can, const Perm& lambda) {
  return Coset(psi_can.Conjugate(lambda.Inverse()), lambda);
}

Object FormOf(const std::vector<Coset>& j, const Perm& tau) {
  return Apply(CosetSetObject(j), tau);
}

CanonResult ResultFor(const std::vector<Coset>& j, Coset labeling) {
  Object form = FormOf(j, labeling.rep());
  return {std::move(labeling), std::move(form)};
}

int LargestOrbit(const PermGroup& g, const std::vector<int>& a) {
  int best = 0;
  for (const auto& o : g.OrbitsOn(a)) best = std::max(best, (int)o.size());
  return best;
}

template <typename Key>
Partition PartitionBy(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> classes;
  for (size_t i = 0; i < keys.size(); ++i) classes[keys[i]].push_back((int)i);
  Partition out;
  for (auto& [k, part] : classes) out.push_back(std::move(part));
  return out;
}

bool IsNonTrivial(const Partition& p, int t) {
  return p.size() >= 2 && (int)p.size() < t;
}

bool IsDiscrete(const Partition& p, int t) {
  return t >= 2 && (int)p.size() == t;
}

// The object replacement {C, J \ C}.
Partition Split(const std::vector<int>& c, int t) {
  return {c, Complement(t, c)};
}

SetInstance SubInstance(const SetInstance& inst, const std::vector<int>& idx) {
  SetInstance sub;
  for (int i : idx) sub.cosets.push_back(inst.cosets[i]);
  sub.a = inst.a;
  sub.delta_can = inst.delta_can;
  sub.giant = inst.giant;
  return sub;
}

CanonResult ArgMinJoin(const std::vector<Coset>& j,
                       const std::vector<Coset>& candidates) {
  if (candidates.empty()) throw ContractError("no candidate labelings");
  std::optional<Object> best;
  std::vector<Coset> chosen;
  for (const Coset& c : candidates) {
    Object f = FormOf(j, c.rep());
    if (!best || f < *best) {
      best = f;
      chosen.clear();
    }
    if (f == *best) chosen.push_back(c);
  }
  return {Join(chosen), *best};
}

CanonResult Base(const Ctx& ctx, const std::vector<Coset>& j) {
  return ResultFor(
      j, ClObject(CosetSetObject(j), j[0].degree(), ctx.small).labeling);
}

CanonResult BaseOf(const Ctx& ctx, const std::vector<Coset>& j,
                   const Object& x) {
  return ResultFor(j, ClObject(x, j[0].degree(), ctx.small).labeling);
}

// Forward declarations of the recursive steps.
CanonResult Solve(const Ctx& ctx, SetInstance inst, ProgressShape shape);
CanonResult Recurse(const Ctx& ctx, const SetInstance& inst,
                    const PartitionFamily& family);
SubgroupReduction Reduce(const Ctx& ctx, const SetInstance& inst,
                         const PermGroup& psi,
                         const std::optional<GroupHom>& sub_giant,
                         ProgressShape shape);
CanonResult Johnson(const Ctx& ctx, const SetInstance& inst);
CertificateOutcome Certificates(const Ctx& ctx, const SetInstance& inst);
CanonResult Aggregate(const Ctx& ctx, const SetInstance& inst,
                      const PermGroup& g);

CanonResult Finish(const Ctx& ctx, const SetInstance& inst,
                   SubgroupReduction red) {
  if (red.family) return Recurse(ctx, inst, *red.family);
  return *red.result;
}

// Drops the giant representation and reduces to its kernel. Used whenever
// a step on an instance with giant representation cannot proceed.
CanonResult KernelFallback(const Ctx& ctx, const SetInstance& inst,
                           const std::string& why) {
  ctx.Warn("giant step fell back to the kernel: " + why);
  const PermGroup kernel = inst.giant->Kernel();
  return Finish(ctx, inst,
                Reduce(ctx, inst, kernel, std::nullopt, ProgressShape::kInDelta));
}

void Dedupe(std::vector<Coset>& cosets) {
  std::set<Object> seen;
  std::vector<Coset> out;
  for (Coset& c : cosets) {
    if (seen.insert(Object::CosetAtom(c)).second) out.push_back(std::move(c));
  }
  cosets = std::move(out);
}

CanonResult Solve(const Ctx& ctx, SetInstance inst, ProgressShape shape) {
  Dedupe(inst.cosets);
  Ctx child = ctx;
  if (ctx.ledger() != nullptr) {
    child.parent = ctx.ledger()->Enter(
        ctx.parent, shape, inst.degree(), (int)inst.cosets.size(),
        (int)inst.a.size(), LargestOrbit(inst.delta_can, inst.ACan()),
        inst.giant.has_value());
  }
  if (inst.cosets.size() == 1) {
    return ResultFor(inst.cosets, inst.cosets[0]);
  }
  if (ctx.options->check_invariants) ValidateSetInstance(inst, *ctx.options);
  if (!inst.giant) return Johnson(child, inst);
  CertificateOutcome out = Certificates(child, inst);
  if (out.result) return *out.result;
  return Aggregate(child, inst, *out.certificate);
}

// ---------------------------------------------------------------------------
// recurse_on_partition

CanonResult Recurse(const Ctx& ctx, const SetInstance& inst,
                    const PartitionFamily& family) {
  const int n = inst.degree();
  const int t = (int)inst.cosets.size();
  std::set<Partition> parts;
  for (const Partition& p : family) {
    Partition q;
    for (const auto& part : p) {
      if (part.empty()) continue;
      std::vector<int> s = part;
      std::sort(s.begin(), s.end());
      q.push_back(std::move(s));
    }
    std::sort(q.begin(), q.end());
    if (IsNonTrivial(q, t)) parts.insert(std::move(q));
  }
  if (parts.empty()) throw ContractError("partition family is trivial");

  std::vector<const Partition*> equi;
  for (const Partition& p : parts) {
    bool equal = true;
    for (const auto& part : p) equal = equal && part.size() == p[0].size();
    if (equal) equi.push_back(&p);
  }

  if (!equi.empty()) {
    size_t p_min = equi[0]->size();
    for (const Partition* p : equi) p_min = std::min(p_min, p->size());
    std::vector<Coset> candidates;
    for (const Partition* p : equi) {
      if (p->size() != p_min) continue;
      // Canonize every part, group parts by form and canonize each class of
      // labelings as a fresh set instance.
      std::map<Object, std::vector<Coset>> classes;
      for (const auto& part : *p) {
        SetInstance sub = SubInstance(inst, part);
        CanonResult r = Solve(ctx, sub, ProgressShape::kInJ);
        classes[FormOf(sub.cosets, r.labeling.rep())].push_back(r.labeling);
      }
      std::vector<Object> results;
      for (auto& [form, labelings] : classes) {
        CanonResult r = Solve(ctx, RootInstance(labelings), ProgressShape::kInJ);
        results.push_back(Object::CosetAtom(r.labeling));
      }
      candidates.push_back(
          ClObject(Object::Tuple(std::move(results)), n, ctx.small).labeling);
    }
    return ArgMinJoin(inst.cosets, candidates);
  }

  // P*: for each partition the union of the parts of the smallest size x
  // whose union has between 1 and |J|/2 members.
  std::set<std::vector<int>> stars;
  std::vector<char> in_star(t, 0);
  for (const Partition& p : parts) {
    std::map<size_t, std::vector<int>> by_size;
    for (const auto& part : p) {
      auto& u = by_size[part.size()];
      u.insert(u.end(), part.begin(), part.end());
    }
    for (auto& [x, u] : by_size) {
      if (2 * u.size() <= (size_t)t) {
        std::sort(u.begin(), u.end());
        for (int i : u) in_star[i] = 1;
        stars.insert(u);
        break;
      }
    }
  }
  std::vector<int> star, rest;
  for (int i = 0; i < t; ++i) (in_star[i] ? star : rest).push_back(i);
  if (star.empty()) throw ContractError("no part class of at most |J|/2");
  if (!rest.empty()) {
    CanonResult r1 =
        Solve(ctx, SubInstance(inst, star), ProgressShape::kLinearInJ);
    CanonResult r2 =
        Solve(ctx, SubInstance(inst, rest), ProgressShape::kLinearInJ);
    return BaseOf(ctx, inst.cosets,
                  Object::Tuple({Object::CosetAtom(r1.labeling),
                                 Object::CosetAtom(r2.labeling)}));
  }
  // The sets C_k cover J: canonize the set of pairs (labeling, form).
  std::vector<Object> items;
  for (const auto& c : stars) {
    SetInstance sub = SubInstance(inst, c);
    CanonResult r = Solve(ctx, sub, ProgressShape::kInJ);
    items.push_back(
        Object::Tuple({Object::CosetAtom(r.labeling),
                       Object::Const(FormOf(sub.cosets, r.labeling.rep()))}));
  }
  return BaseOf(ctx, inst.cosets, Object::Set(std::move(items)));
}

// ---------------------------------------------------------------------------
// reduce_to_subgroup

SubgroupReduction Reduce(const Ctx& ctx, const SetInstance& inst,
                         const PermGroup& psi,
                         const std::optional<GroupHom>& sub_giant,
                         ProgressShape shape) {
  const int t = (int)inst.cosets.size();
  if (!psi.IsSubgroupOf(inst.delta_can)) {
    throw InputError("subgroup is not contained in the canonical group");
  }
  const std::vector<Perm> deltas = CosetTransversal(inst.delta_can, psi);
  const std::vector<int> x_can = RelativeBase(inst.delta_can, psi);
  auto act = [](const std::vector<int>& x, const Perm& g) {
    std::vector<int> y(x.size());
    for (size_t k = 0; k < x.size(); ++k) y[k] = g[x[k]];
    return y;
  };
  const std::vector<std::vector<int>> orbit =
      OrbitStabilizer(psi, x_can, act).orbit;

  struct Sub {
    int member;
    Coset coset;
    Object key;
  };
  std::vector<Sub> subs;
  for (int i = 0; i < t; ++i) {
    for (const Perm& d : deltas) {
      Coset c = Subcoset(psi, inst.cosets[i].rep() * d);
      Object key = OutsideKey(c, inst.a);
      subs.push_back({i, std::move(c), std::move(key)});
    }
  }
  // A tuple X identifies the subcoset (lambda psi) iff X^lambda lies in the
  // psi-orbit of X^Can. The classes are the sets of subcosets identified by
  // one tuple with one restriction to V \ A; they cover the subcosets and
  // meet each member in at most one subcoset.
  std::map<std::vector<int>, std::vector<int>> by_tuple;
  for (size_t s = 0; s < subs.size(); ++s) {
    const Perm inv = subs[s].coset.rep().Inverse();
    for (const auto& y : orbit) by_tuple[act(y, inv)].push_back((int)s);
  }
  std::set<std::vector<int>> class_set;
  for (const auto& [x, list] : by_tuple) {
    std::set<int> members;
    std::map<Object, std::vector<int>> by_key;
    for (int s : list) {
      if (!members.insert(subs[s].member).second) {
        throw ContractError("a tuple identifies two subcosets of one coset");
      }
      by_key[subs[s].key].push_back(s);
    }
    for (auto& [key, cls] : by_key) class_set.insert(std::move(cls));
  }
  std::vector<std::vector<int>> classes(class_set.begin(), class_set.end());

  SubgroupReduction out;
  PartitionFamily family;
  for (const auto& list : classes) {
    std::set<int> members;
    for (int s : list) members.insert(subs[s].member);
    if ((int)members.size() < t) {
      family.push_back(Split({members.begin(), members.end()}, t));
    }
  }
  if (!family.empty()) {
    if (t >= 3) {
      out.family = std::move(family);
    } else {
      out.result = Base(ctx, inst.cosets);
    }
    return out;
  }
  std::vector<Coset> candidates;
  for (const auto& list : classes) {
    SetInstance sub;
    for (int s : list) sub.cosets.push_back(subs[s].coset);
    sub.a = inst.a;
    sub.delta_can = psi;
    sub.giant = sub_giant;
    candidates.push_back(Solve(ctx, std::move(sub), shape).labeling);
  }
  out.result = ArgMinJoin(inst.cosets, candidates);
  return out;
}

// ---------------------------------------------------------------------------
// reduce_to_johnson

// A giant representation of delta on the parts of a Johnson cover of its
// action on `blocks`, or nothing.
std::optional<GroupHom> JohnsonRepresentation(
    const PermGroup& delta, const std::vector<std::vector<int>>& blocks,
    const PermGroup& block_image, int min_w) {
  PrimitiveOutcome outcome = PrimitiveCase(block_image, 2, 0.0);
  if (outcome.kind != PrimitiveKind::kSparseCover) return std::nullopt;
  std::vector<std::vector<int>> cover = outcome.cover;
  for (auto& c : cover) std::sort(c.begin(), c.end());
  std::sort(cover.begin(), cover.end());
  if ((int)cover.size() < min_w) return std::nullopt;
  std::vector<int> block_of(delta.degree(), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[x] = (int)b;
  }
  std::map<std::vector<int>, int> index;
  for (size_t w = 0; w < cover.size(); ++w) index[cover[w]] = (int)w;
  bool ok = true;
  GroupHom g = GroupHom::FromAction(
      delta, (int)cover.size(), [&](int w, const Perm& p) {
        std::vector<int> img;
        for (int b : cover[w]) img.push_back(block_of[p[blocks[b][0]]]);
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end()) {
          ok = false;
          return w;
        }
        return it->second;
      });
  if (!ok) return std::nullopt;
  std::vector<int> all(cover.size());
  std::iota(all.begin(), all.end(), 0);
  if (IsGiant(g.Image(), all) == GiantType::kNeither) return std::nullopt;
  return g;
}

CanonResult Johnson(const Ctx& ctx, const SetInstance& inst) {
  const int n = inst.degree();
  const int t = (int)inst.cosets.size();
  const std::vector<Coset>& j = inst.cosets;
  if ((int)inst.a.size() <= std::max(1, ctx.options->small_a_threshold)) {
    return Base(ctx, j);
  }
  const std::vector<int> a_can = inst.ACan();
  const std::vector<std::vector<int>> orbits = inst.delta_can.OrbitsOn(a_can);

  if (orbits.size() > 1) {
    // The least orbit, compared as a set of points.
    std::vector<int> star_can = orbits[0];
    Object best = IntSet(star_can);
    for (const auto& o : orbits) {
      Object k = IntSet(o);
      if (k < best) {
        best = k;
        star_can = o;
      }
    }
    std::vector<std::vector<int>> stars;
    for (const Coset& c : j) stars.push_back(ImageOf(star_can, c.rep().Inverse()));
    Partition p = PartitionBy(stars);
    if (IsNonTrivial(p, t)) return Recurse(ctx, inst, {p});
    if (IsDiscrete(p, t)) {
      return ResultFor(
          j, ClSetHyper(LabeledHypergraphObject(stars, j), n, ctx.small).labeling);
    }
    const std::vector<int>& a_star = stars[0];
    std::vector<Object> keys;
    for (const Coset& c : j) keys.push_back(OutsideKey(c, a_star));
    Partition q = PartitionBy(keys);
    if (IsNonTrivial(q, t)) return Recurse(ctx, inst, {q});
    if (q.size() == 1) {
      SetInstance sub = inst;
      sub.a = a_star;
      return Solve(ctx, std::move(sub), ProgressShape::kLinearInA);
    }
    // Restrictions to V \ A* pairwise distinct: canonize them on A \ A* and
    // pull back along the bijection J° -> J.
    SetInstance outer;
    for (const Coset& c : j) outer.cosets.push_back(Widened(c, {a_star}));
    outer.delta_can = outer.cosets[0].CodomainGroup();
    std::set_difference(inst.a.begin(), inst.a.end(), a_star.begin(),
                        a_star.end(), std::back_inserter(outer.a));
    CanonResult r = Solve(ctx, outer, ProgressShape::kLinearInA);
    CosetMap m{outer.cosets, j, r.labeling};
    return ResultFor(j, ClSetSet(m, ctx.small).labeling);
  }

  // Transitive on A^Can.
  const PermGroup canonical(n, inst.delta_can.CanonicalGenerators());
  const std::vector<std::vector<int>> blocks = MinimalBlockSystem(canonical, a_can);
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[x] = (int)b;
  }
  const GroupHom on_blocks = GroupHom::FromAction(
      inst.delta_can, (int)blocks.size(),
      [&](int b, const Perm& p) { return block_of[p[blocks[b][0]]]; });
  const PermGroup image = on_blocks.Image();
  const double log_n = std::log2((double)n);
  const double log_order = std::log2(image.order().convert_to<double>());
  if (log_order >= (ctx.options->large_action_offset + log_n) * log_n) {
    std::optional<GroupHom> g = JohnsonRepresentation(
        inst.delta_can, blocks, image, MinGiantDomain(n, *ctx.options));
    if (g) {
      return Finish(ctx, inst,
                    Reduce(ctx, inst, inst.delta_can, g, ProgressShape::kInG));
    }
    ctx.Warn("large block action without a Johnson cover; block kernel used");
  }
  const PermGroup kernel = on_blocks.Kernel();
  return Finish(ctx, inst,
                Reduce(ctx, inst, kernel, std::nullopt, ProgressShape::kInDelta));
}

// ---------------------------------------------------------------------------
// produce_certificates

using Mask = uint32_t;

Mask ToMask(const std::vector<int>& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << x;
  return m;
}

// All pairs (k1, k2) of disjoint subsets of {0..n-1} with |k1|, |k2| <= c.
std::vector<std::pair<Mask, Mask>> IdentifierPairs(int n, int c) {
  std::vector<std::pair<Mask, Mask>> out;
  std::function<void(int, Mask, Mask, int, int)> rec =
      [&](int v, Mask k1, Mask k2, int s1, int s2) {
        if (v == n) {
          out.emplace_back(k1, k2);
          return;
        }
        rec(v + 1, k1, k2, s1, s2);
        if (s1 < c) rec(v + 1, k1 | (Mask{1} << v), k2, s1 + 1, s2);
        if (s2 < c) rec(v + 1, k1, k2 | (Mask{1} << v), s1, s2 + 1);
      };
  rec(0, 0, 0, 0, 0);
  return out;
}

// The case of pairwise distinct sets H_i of hyperedges.
CanonResult Identifiers(const Ctx& ctx, const SetInstance& inst,
                        std::vector<std::vector<std::vector<int>>> h) {
  const int n = inst.degree();
  const int t = (int)inst.cosets.size();
  const std::vector<Coset>& j = inst.cosets;
  if (n > kMaxIdentifierDegree) {
    return KernelFallback(ctx, inst, "identifier enumeration too large");
  }
  const double log_n = std::log2((double)n);
  const int c = (int)std::ceil((2 + log_n) * log_n);
  const std::vector<std::pair<Mask, Mask>> pairs = IdentifierPairs(n, c);
  while (true) {
    std::vector<std::vector<Mask>> masks(t);
    for (int i = 0; i < t; ++i) {
      for (const auto& s : h[i]) masks[i].push_back(ToMask(s));
    }
    PartitionFamily family;
    bool discrete = false;
    std::set<std::vector<int>> full;  // identified edge index per member
    for (const auto& [k1, k2] : pairs) {
      std::vector<int> id(t, -1);
      std::vector<int> members;
      for (int i = 0; i < t; ++i) {
        int hits = 0;
        for (size_t e = 0; e < masks[i].size(); ++e) {
          const Mask m = masks[i][e];
          if ((m & k1) == k1 && (m & k2) == 0) {
            ++hits;
            id[i] = (int)e;
          }
        }
        if (hits == 1) {
          members.push_back(i);
        } else {
          id[i] = -1;
        }
      }
      if (members.empty()) continue;
      if ((int)members.size() < t) {
        if (t >= 3) {
          family.push_back(Split(members, t));
        } else {
          discrete = true;
        }
      } else {
        full.insert(std::move(id));
      }
    }
    if (!family.empty()) return Recurse(ctx, inst, family);
    if (discrete) return Base(ctx, j);
    if (full.empty()) return KernelFallback(ctx, inst, "no identifier");

    PartitionFamily q_family;
    std::set<std::vector<int>> fixed;  // S identified in every member
    for (const auto& id : full) {
      std::vector<std::vector<int>> keys;
      for (int i = 0; i < t; ++i) keys.push_back(h[i][id[i]]);
      Partition q = PartitionBy(keys);
      if (IsNonTrivial(q, t)) q_family.push_back(std::move(q));
      if (q.size() == 1) fixed.insert(keys[0]);
    }
    if (!q_family.empty()) return Recurse(ctx, inst, q_family);
    if (fixed.empty()) {
      std::set<std::vector<std::vector<int>>> seen;
      std::vector<Coset> candidates;
      for (const auto& id : full) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < t; ++i) edges.push_back(h[i][id[i]]);
        if (!seen.insert(edges).second) continue;
        candidates.push_back(
            ClSetHyper(LabeledHypergraphObject(edges, j), n, ctx.small).labeling);
      }
      return ArgMinJoin(j, candidates);
    }
    // Hyperedges common to all members carry no information; drop them.
    for (auto& hi : h) {
      std::vector<std::vector<int>> kept;
      for (auto& s : hi) {
        if (!fixed.count(s)) kept.push_back(std::move(s));
      }
      hi = std::move(kept);
      if (hi.empty()) return KernelFallback(ctx, inst, "hyperedges exhausted");
    }
    Partition p = PartitionBy(h);
    if (IsNonTrivial(p, t)) return Recurse(ctx, inst, {p});
    if ((int)p.size() != t) return KernelFallback(ctx, inst, "hyperedge sets merged");
  }
}

CertificateOutcome Certificates(const Ctx& ctx, const SetInstance& inst) {
  const int n = inst.degree();
  const int t = (int)inst.cosets.size();
  const std::vector<Coset>& j = inst.cosets;
  CertificateOutcome out;
  auto done = [&out](CanonResult r) {
    out.result = std::move(r);
    return out;
  };
  const AffectedSplit split = SplitAffected(inst.delta_can, *inst.giant);
  if (split.affected.empty()) {
    return done(KernelFallback(ctx, inst, "no affected points"));
  }
  const std::vector<int>& s_can = split.affected;
  const PermGroup psi = SetwiseStabilizer(inst.delta_can, s_can);
  const std::vector<Perm> deltas = CosetTransversal(inst.delta_can, psi);
  // H_i: the images S of S^Can under the members, with lambda_{i,S}.
  std::vector<std::map<std::vector<int>, Perm>> h(t);
  std::vector<std::vector<std::vector<int>>> h_sets(t);
  for (int i = 0; i < t; ++i) {
    for (const Perm& d : deltas) {
      const Perm lambda = j[i].rep() * d;
      h[i].emplace(ImageOf(s_can, lambda.Inverse()), lambda);
    }
    for (const auto& [s, lambda] : h[i]) h_sets[i].push_back(s);
  }
  Partition p = PartitionBy(h_sets);
  if (IsNonTrivial(p, t)) return done(Recurse(ctx, inst, {p}));
  if (IsDiscrete(p, t)) return done(Identifiers(ctx, inst, h_sets));

  // All H_i equal.
  const std::vector<std::vector<int>>& hs = h_sets[0];
  std::vector<std::vector<Coset>> sub(hs.size());
  PartitionFamily p_family;
  bool p_discrete = false;
  for (size_t k = 0; k < hs.size(); ++k) {
    std::vector<Object> keys;
    for (int i = 0; i < t; ++i) {
      sub[k].push_back(Subcoset(psi, h[i].at(hs[k])));
      keys.push_back(OutsideKey(sub[k][i], inst.a));
    }
    Partition q = PartitionBy(keys);
    if (IsNonTrivial(q, t)) p_family.push_back(std::move(q));
    if (IsDiscrete(q, t)) p_discrete = true;
  }
  if (!p_family.empty()) return done(Recurse(ctx, inst, p_family));
  if (p_discrete) return done(Base(ctx, j));

  PartitionFamily q_family;
  std::vector<size_t> discrete;
  for (size_t k = 0; k < hs.size(); ++k) {
    std::vector<Object> keys;
    for (int i = 0; i < t; ++i) keys.push_back(RestrictionKey(sub[k][i], hs[k]));
    Partition q = PartitionBy(keys);
    if (IsNonTrivial(q, t)) q_family.push_back(std::move(q));
    if (IsDiscrete(q, t)) discrete.push_back(k);
  }
  if (!q_family.empty()) return done(Recurse(ctx, inst, q_family));

  if (!discrete.empty()) {
    // Restrictions to S pairwise distinct for the S in `discrete`: canonize
    // the subcosets widened outside S against the kernel orbits.
    const PermGroup theta = split.g_t.Kernel();
    std::vector<Perm> star_gens = psi.generators();
    AppendSymmetricGenerators(n, Complement(n, s_can), star_gens);
    const PermGroup psi_star(n, star_gens);
    const std::vector<int> a_s_can = Intersection(inst.ACan(), s_can);
    std::vector<std::vector<int>> parts = theta.OrbitsOn(a_s_can);
    const PermGroup theta_star = PartitionStabilizer(psi_star, parts);
    PartitionFamily family;
    std::vector<Coset> candidates;
    for (size_t k : discrete) {
      SetInstance star;
      for (int i = 0; i < t; ++i) {
        star.cosets.push_back(Subcoset(psi_star, h[i].at(hs[k])));
      }
      star.a = Intersection(inst.a, hs[k]);
      star.delta_can = psi_star;
      SubgroupReduction red = Reduce(ctx, star, theta_star, std::nullopt,
                                     ProgressShape::kInDelta);
      if (red.family) {
        family.insert(family.end(), red.family->begin(), red.family->end());
      } else if (family.empty()) {
        CosetMap m{star.cosets, sub[k], red.result->labeling};
        candidates.push_back(ClSetSet(m, ctx.small).labeling);
      }
    }
    if (!family.empty()) return done(Recurse(ctx, inst, family));
    return done(ArgMinJoin(j, candidates));
  }

  // All Q_S trivial: the certificate is generated by the normal closures of
  // the pointwise stabilizer of U, carried back along every lambda_{i,S}.
  const PermGroup u_stab = split.delta_t.PointwiseStabilizer(split.unaffected);
  const PermGroup closure = NormalClosure(psi, u_stab);
  std::vector<Perm> gens;
  for (int i = 0; i < t; ++i) {
    for (const auto& [s, lambda] : h[i]) {
      const PermGroup gs = closure.Conjugate(lambda.Inverse());
      gens.insert(gens.end(), gs.generators().begin(), gs.generators().end());
    }
  }
  PermGroup g(n, std::move(gens));
  if (!IsFullnessCertificate(inst, g)) {
    return done(KernelFallback(ctx, inst, "certificate check failed"));
  }
  out.certificate = std::move(g);
  return out;
}

// ---------------------------------------------------------------------------
// aggregate_certificates

// G * Lambda_0, or nothing if the product is not a coset.
std::optional<Coset> TryExtend(const Coset& lambda0, const PermGroup& g) {
  try {
    return ExtendByAutomorphisms(lambda0, g);
  } catch (const ContractError&) {
    return std::nullopt;
  }
}

CanonResult Aggregate(const Ctx& ctx, const SetInstance& inst,
                      const PermGroup& g) {
  const int n = inst.degree();
  const int t = (int)inst.cosets.size();
  const std::vector<Coset>& j = inst.cosets;
  const GroupHom& giant = *inst.giant;
  const int w = giant.target_degree();
  const PermGroup pi = giant.Kernel();
  const PermGroup psi =
      giant.Preimage(PermGroup(w, {Perm::FromCycleList({{0, 1}}, w)}));
  const std::vector<int> a_can = inst.ACan();
  const std::vector<int> outside = Complement(n, a_can);
  const std::vector<Perm> deltas = CosetTransversal(inst.delta_can, psi);

  auto extend = [&](const Coset& lambda0) {
    std::optional<Coset> r = TryExtend(lambda0, g);
    if (!r) return KernelFallback(ctx, inst, "certificate does not extend");
    return ResultFor(j, *r);
  };
  // Subcosets rho_i delta psi grouped by key, each class as listed members.
  auto least_class = [&](auto key_of) {
    std::map<Object, std::vector<std::pair<int, Coset>>> classes;
    for (int i = 0; i < t; ++i) {
      for (const Perm& d : deltas) {
        Coset c = Subcoset(psi, j[i].rep() * d);
        Object k = key_of(c);
        classes[k].emplace_back(i, std::move(c));
      }
    }
    return classes.begin()->second;
  };
  auto one_per_member = [t](const std::vector<std::pair<int, Coset>>& cls) {
    std::set<int> members;
    for (const auto& [i, c] : cls) {
      if (!members.insert(i).second) return false;
    }
    return (int)members.size() == t;
  };

  const BigInt outer_delta = RestrictToSet(inst.delta_can, outside).order();
  const BigInt outer_pi = RestrictToSet(pi, outside).order();
  if (outer_delta > 2 * outer_pi) {
    auto cls = least_class(
        [&](const Coset& c) { return OutsideKey(c, inst.a); });
    if (!one_per_member(cls)) {
      return KernelFallback(ctx, inst, "least outside class is not a section");
    }
    SetInstance sub;
    for (auto& [i, c] : cls) sub.cosets.push_back(c);
    sub.a = inst.a;
    sub.delta_can = psi;
    return extend(Solve(ctx, sub, ProgressShape::kInDelta).labeling);
  }

  // Partitions of A into the orbits of the conjugated kernels.
  std::vector<std::vector<std::vector<int>>> b(t);
  for (int i = 0; i < t; ++i) {
    b[i] = pi.Conjugate(j[i].rep().Inverse()).OrbitsOn(inst.a);
  }
  Partition p = PartitionBy(b);
  if (IsNonTrivial(p, t)) return Recurse(ctx, inst, {p});
  if (IsDiscrete(p, t)) {
    std::vector<std::vector<int>> block_of(t, std::vector<int>(n, -1));
    for (int i = 0; i < t; ++i) {
      for (size_t k = 0; k < b[i].size(); ++k) {
        for (int x : b[i][k]) block_of[i][x] = (int)k;
      }
    }
    PartitionFamily family;
    for (size_t u = 0; u < inst.a.size(); ++u) {
      for (size_t v = u + 1; v < inst.a.size(); ++v) {
        std::vector<int> c;
        for (int i = 0; i < t; ++i) {
          if (block_of[i][inst.a[u]] == block_of[i][inst.a[v]]) c.push_back(i);
        }
        if (!c.empty() && (int)c.size() < t) family.push_back(Split(c, t));
      }
    }
    if (t >= 3 && !family.empty()) return Recurse(ctx, inst, family);
    return Base(ctx, j);
  }

  std::vector<std::vector<int>> parts = b[0];
  parts.push_back(Complement(n, inst.a));
  std::vector<Object> block_keys;
  for (const Coset& c : j) block_keys.push_back(Key(c, parts));
  Partition q = PartitionBy(block_keys);
  if (IsNonTrivial(q, t)) return Recurse(ctx, inst, {q});

  if (IsDiscrete(q, t)) {
    // Each member singles out its least subcoset; split it along psi / pi
    // and order J by the intersections with it.
    const std::vector<Perm> halves = CosetTransversal(psi, pi);
    std::vector<Coset> candidates;
    for (int i = 0; i < t; ++i) {
      std::optional<Object> best;
      Perm lambda;
      for (const Perm& d : deltas) {
        const Perm l = j[i].rep() * d;
        Object k = Object::CosetAtom(Subcoset(psi, l));
        if (!best || k < *best) {
          best = k;
          lambda = l;
        }
      }
      std::vector<std::pair<Object, Coset>> pieces;
      for (const Perm& half : halves) {
        const Coset gamma = Subcoset(pi, lambda * half);
        std::vector<std::pair<Object, int>> order;
        for (int k = 0; k < t; ++k) {
          order.emplace_back(ClInt(gamma, j[k]).form, k);
        }
        std::sort(order.begin(), order.end());
        for (int k = 1; k < t; ++k) {
          if (order[k].first == order[k - 1].first) {
            return KernelFallback(ctx, inst, "intersection forms coincide");
          }
        }
        std::vector<Object> items;
        for (const auto& [f, k] : order) items.push_back(Object::CosetAtom(j[k]));
        Coset theta = ClObject(Object::Tuple(std::move(items)), n, ctx.small).labeling;
        pieces.emplace_back(FormOf(j, theta.rep()), std::move(theta));
      }
      Coset theta = pieces[0].second;
      if (pieces.size() == 2) {
        if (pieces[0].first == pieces[1].first) {
          theta = Join({pieces[0].second, pieces[1].second});
        } else if (pieces[1].first < pieces[0].first) {
          theta = pieces[1].second;
        }
      }
      std::optional<Coset> extended = TryExtend(theta, g);
      if (!extended) return KernelFallback(ctx, inst, "certificate does not extend");
      candidates.push_back(*extended);
    }
    return ArgMinJoin(j, candidates);
  }

  // Block-induced maps agree: take the least class of subcosets by their
  // induced map on the kernel orbits.
  auto cls = least_class([&](const Coset& c) {
    std::vector<std::vector<int>> subparts =
        pi.Conjugate(c.rep().Inverse()).OrbitsOn(inst.a);
    subparts.push_back(Complement(n, inst.a));
    return Key(c, subparts);
  });
  if (!one_per_member(cls)) {
    return KernelFallback(ctx, inst, "least block class is not a section");
  }
  std::map<Object, std::vector<Coset>> by_outside;
  for (auto& [i, c] : cls) by_outside[OutsideKey(c, inst.a)].push_back(c);
  SetInstance sub;
  sub.a = inst.a;
  sub.delta_can = psi;
  std::vector<Coset> all;
  for (auto& [i, c] : cls) all.push_back(c);
  if (by_outside.size() == 1) {
    sub.cosets = all;
    return extend(Solve(ctx, sub, ProgressShape::kInDelta).labeling);
  }
  std::vector<Object> items;
  for (auto& [key, cosets] : by_outside) {
    sub.cosets = cosets;
    CanonResult r = Solve(ctx, sub, ProgressShape::kInDelta);
    items.push_back(
        Object::Tuple({Object::CosetAtom(r.labeling),
                       Object::Const(FormOf(cosets, r.labeling.rep()))}));
  }
  return extend(
      BaseOf(ctx, all, Object::Set(std::move(items))).labeling);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<int> SetInstance::ACan() const {
  if (cosets.empty()) return a;
  return ImageOf(a, cosets[0].rep());
}

SetInstance RootInstance(const std::vector<Coset>& cosets) {
  if (cosets.empty()) throw InputError("empty coset family");
  SetInstance inst;
  inst.cosets = cosets;
  inst.a.resize(cosets[0].degree());
  std::iota(inst.a.begin(), inst.a.end(), 0);
  inst.delta_can = cosets[0].CodomainGroup();
  return inst;
}

int MinGiantDomain(int n, const CanonOptions& options) {
  const int log_ceil = n <= 1 ? 0 : (int)std::ceil(std::log2((double)n));
  return std::max({5, options.min_w, 2 + log_ceil});
}

void ValidateSetInstance(const SetInstance& inst, const CanonOptions& options) {
  if (inst.cosets.empty()) throw ContractError("uniform: empty instance");
  const int n = inst.degree();
  const std::vector<int> a_can = inst.ACan();
  for (const Coset& c : inst.cosets) {
    if (c.empty() || c.degree() != n) throw ContractError("uniform: degree differs");
    if (!(c.CodomainGroup() == inst.delta_can)) {
      throw ContractError("uniform: canonical groups differ");
    }
    if (ImageOf(inst.a, c.rep()) != a_can) {
      throw ContractError("uniform: images of A differ");
    }
  }
  const Object key = OutsideKey(inst.cosets[0], inst.a);
  for (const Coset& c : inst.cosets) {
    if (!(OutsideKey(c, inst.a) == key)) {
      throw ContractError("outside-A: restrictions to V \\ A differ");
    }
  }
  if (!inst.giant) return;
  const GroupHom& g = *inst.giant;
  if (!(g.Source() == inst.delta_can)) throw ContractError("giant: wrong source");
  if (!inst.delta_can.IsTransitiveOn(a_can)) {
    throw ContractError("giant: not transitive on A");
  }
  const PermGroup fix = inst.delta_can.PointwiseStabilizer(a_can);
  for (const Perm& s : fix.generators()) {
    if (!g.Map(s).IsIdentity()) {
      throw ContractError("giant: stabilizer of A not in the kernel");
    }
  }
  std::vector<int> w(g.target_degree());
  std::iota(w.begin(), w.end(), 0);
  if (g.target_degree() < MinGiantDomain(n, options) ||
      IsGiant(g.Image(), w) == GiantType::kNeither) {
    throw ContractError("giant: image is not a large giant");
  }
}

AffectedSplit SplitAffected(const PermGroup& delta, const GroupHom& g) {
  AffectedSplit out;
  const int n = delta.degree();
  const int log_ceil = n <= 1 ? 0 : (int)std::ceil(std::log2((double)n));
  const int t = std::min(g.target_degree(), 2 + log_ceil);
  out.t.resize(t);
  std::iota(out.t.begin(), out.t.end(), 0);
  out.delta_t = g.PreimageOfSetwiseStabilizer(out.t);
  std::vector<Perm> images;
  for (const Perm& s : out.delta_t.generators()) {
    const Perm full = g.Map(s);
    std::vector<int> img(full.images().begin(), full.images().begin() + t);
    images.emplace_back(std::move(img));
  }
  out.g_t = GroupHom(out.delta_t, images, t);
  for (int v = 0; v < n; ++v) {
    const PermGroup stab = out.delta_t.PointwiseStabilizer({v});
    const PermGroup image = out.g_t.Restrict(stab).Image();
    if (IsGiant(image, out.t) == GiantType::kNeither) {
      out.affected.push_back(v);
    } else {
      out.unaffected.push_back(v);
    }
  }
  return out;
}

bool IsFullnessCertificate(const SetInstance& inst, const PermGroup& g) {
  const Object j = CosetSetObject(inst.cosets);
  for (const Perm& s : g.generators()) {
    if (!(Apply(j, s) == j)) return false;
  }
  const PermGroup g_can = g.Conjugate(inst.cosets[0].rep());
  if (!g_can.IsSubgroupOf(inst.delta_can)) return false;
  for (const Coset& c : inst.cosets) {
    if (!(g.Conjugate(c.rep()) == g_can)) return false;
  }
  if (!inst.giant) return false;
  std::vector<int> w(inst.giant->target_degree());
  std::iota(w.begin(), w.end(), 0);
  return IsGiant(inst.giant->Restrict(g_can).Image(), w) != GiantType::kNeither;
}

Coset ExtendByAutomorphisms(const Coset& lambda0, const PermGroup& g) {
  const PermGroup& theta = lambda0.group();
  std::vector<Perm> gens = g.generators();
  gens.insert(gens.end(), theta.generators().begin(), theta.generators().end());
  PermGroup joint(g.degree(), std::move(gens));
  const PermGroup meet = IntersectGroups(g, theta);
  if (joint.order() * meet.order() != g.order() * theta.order()) {
    throw ContractError("G * Lambda_0 is not a coset");
  }
  return Coset(std::move(joint), lambda0.rep());
}

CanonResult ClSetInstance(const SetInstance& inst, const CanonOptions& options) {
  ValidateSetInstance(inst, options);
  return Solve(Ctx(options), inst, ProgressShape::kRoot);
}

CanonResult RecurseOnPartition(const SetInstance& inst,
                               const PartitionFamily& family,
                               const CanonOptions& options) {
  ValidateSetInstance(inst, options);
  return Recurse(Ctx(options), inst, family);
}

SubgroupReduction ReduceToSubgroup(const SetInstance& inst, const PermGroup& psi,
                                   const CanonOptions& options,
                                   const std::optional<GroupHom>& sub_giant) {
  ValidateSetInstance(inst, options);
  const ProgressShape shape =
      sub_giant ? ProgressShape::kInG : ProgressShape::kInDelta;
  return Reduce(Ctx(options), inst, psi, sub_giant, shape);
}

CanonResult ReduceToJohnson(const SetInstance& inst, const CanonOptions& options) {
  ValidateSetInstance(inst, options);
  if (inst.giant) throw InputError("instance has a giant representation");
  return Johnson(Ctx(options), inst);
}

CertificateOutcome ProduceCertificates(const SetInstance& inst,
                                       const CanonOptions& options) {
  ValidateSetInstance(inst, options);
  if (!inst.giant) throw InputError("instance has no giant representation");
  return Certificates(Ctx(options), inst);
}

CanonResult AggregateCertificates(const SetInstance& inst, const PermGroup& g,
                                  const CanonOptions& options) {
  ValidateSetInstance(inst, options);
  if (!IsFullnessCertificate(inst, g)) {
    throw InputError("not a fullness certificate");
  }
  return Aggregate(Ctx(options), inst, g);
}

CanonResult ClSet(const std::vector<Coset>& cosets, const CanonOptions& options) {
  if (cosets.empty()) throw InputError("empty coset family");
  const int n = cosets[0].degree();
  for (const Coset& c : cosets) {
    if (c.empty() || c.degree() != n) {
      throw InputError("cosets must be non-empty and of equal degree");
    }
  }
  std::vector<Coset> j = cosets;
  Dedupe(j);
  if (j.size() == 1) return ResultFor(j, j[0]);
  Ctx ctx(options);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (ctx.ledger() != nullptr) {
    int orbit = 0;
    for (const Coset& c : j) orbit = std::max(orbit, LargestOrbit(c.CodomainGroup(), all));
    ctx.parent = ctx.ledger()->Enter(-1, ProgressShape::kRoot, n, (int)j.size(),
                                     n, orbit, false);
  }
  // Uniform classes: split by the canonical group.
  std::map<Object, std::vector<Coset>> classes;
  for (const Coset& c : j) {
    classes[Object::CosetAtom(Coset(c.CodomainGroup(), Perm(n)))].push_back(c);
  }
  if (classes.size() == 1) {
    return Johnson(ctx, RootInstance(j));
  }
  std::vector<Object> results;
  for (auto& [key, members] : classes) {
    CanonResult r = Solve(ctx, RootInstance(members), ProgressShape::kLinearInJ);
    results.push_back(Object::CosetAtom(r.labeling));
  }
  return BaseOf(ctx, j, Object::Tuple(std::move(results)));
}

}  // namespace cosetcanon
