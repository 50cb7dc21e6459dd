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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "cosetcanon/group_hom.h"

namespace cosetcanon {

namespace {

long double Log2(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<long double>::infinity();
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 60) {
    return std::log2(static_cast<long double>(x.convert_to<unsigned long long>()));
  }
  const BigInt top = x >> (bits - 60);
  return (bits - 60) +
         std::log2(static_cast<long double>(top.convert_to<unsigned long long>()));
}

BigInt Binomial(int k, int s) {
  if (s < 0 || s > k) return 0;
  BigInt r = 1;
  for (int i = 1; i <= s; ++i) r = r * (k - s + i) / i;
  return r;
}

// Sets the form to x^pi for the returned labeling.
CanonResult WithForm(CanonResult r, const Object& x) {
  r.form = Apply(x, r.labeling.rep());
  return r;
}

void CheckRelation(const Object& r) {
  if (!r.is_set()) throw InputError("relation must be a set of tuples");
  for (const Object& t : r.items()) {
    if (!t.is_tuple() || t.size() != r[0].size()) {
      throw InputError("relation tuples must share one arity");
    }
    for (const Object& v : t.items()) {
      if (!v.is_int()) throw InputError("relation entries must be vertices");
    }
  }
}

void CheckHypergraph(const Object& h) {
  if (!h.is_set()) throw InputError("hypergraph must be a set of sets");
  for (const Object& e : h.items()) {
    if (!e.is_set()) throw InputError("hyperedges must be sets");
    for (const Object& v : e.items()) {
      if (!v.is_int()) throw InputError("hyperedge entries must be vertices");
    }
  }
}

CanonResult ClRelRec(const Object& r, int n, const CanonOptions& options,
                     RecursionStats* stats) {
  if (stats) ++stats->rel_calls;
  if (r.size() <= 1) return WithForm(ClObject(r, n, options), r);
  size_t pos = 0;
  auto constant_at = [&r](size_t p) {
    for (const Object& t : r.items()) {
      if (t[p].value() != r[0][p].value()) return false;
    }
    return true;
  };
  while (constant_at(pos)) ++pos;
  std::map<int, std::vector<Object>> parts;
  for (const Object& t : r.items()) parts[t[pos].value()].push_back(t);
  std::vector<Object> members;
  for (auto& [v, tuples] : parts) {
    CanonResult sub = ClRelRec(Object::Set(std::move(tuples)), n, options, stats);
    members.push_back(Object::Tuple(
        {Object::CosetAtom(sub.labeling), Object::Const(sub.form)}));
  }
  return WithForm(ClObject(Object::Set(std::move(members)), n, options), r);
}

CanonResult ClHyperRec(const Object& h, int n, const CanonOptions& options,
                       RecursionStats* stats) {
  if (stats) ++stats->hyper_calls;
  // With at most one vertex the recursion buys nothing and the call bound
  // max(1,|H|)^(2 log2 n) is 1.
  if (h.size() <= 1 || n <= 1) return WithForm(ClObject(h, n, options), h);
  const int t = static_cast<int>(h.size());
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < t; ++i) {
    for (const Object& v : h[i].items()) incident[v.value()].push_back(i);
  }
  std::set<std::vector<int>> cover;
  for (int v = 0; v < n; ++v) {
    std::vector<int> c = incident[v];
    if (2 * static_cast<int>(c.size()) > t) {
      std::vector<int> rest;
      size_t k = 0;
      for (int i = 0; i < t; ++i) {
        if (k < c.size() && c[k] == i) {
          ++k;
        } else {
          rest.push_back(i);
        }
      }
      c = std::move(rest);
    }
    if (!c.empty()) cover.insert(std::move(c));
  }
  std::vector<char> covered(t, 0);
  for (const auto& c : cover) {
    for (int i : c) covered[i] = 1;
  }
  auto subset = [&h](const std::vector<int>& idx) {
    std::vector<Object> edges;
    for (int i : idx) edges.push_back(h[i]);
    return Object::Set(std::move(edges));
  };
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    std::vector<int> star, rest;
    for (int i = 0; i < t; ++i) (covered[i] ? star : rest).push_back(i);
    CanonResult a = ClHyperRec(subset(star), n, options, stats);
    CanonResult b = ClHyperRec(subset(rest), n, options, stats);
    Object pair = Object::Tuple(
        {Object::CosetAtom(a.labeling), Object::CosetAtom(b.labeling)});
    return WithForm(ClObject(pair, n, options), h);
  }
  std::vector<Object> members;
  for (const auto& c : cover) {
    CanonResult sub = ClHyperRec(subset(c), n, options, stats);
    members.push_back(Object::Tuple(
        {Object::CosetAtom(sub.labeling), Object::Const(sub.form)}));
  }
  return WithForm(ClObject(Object::Set(std::move(members)), n, options), h);
}

// ---- Johnson scheme recognition -------------------------------------------

using Adjacency = std::vector<std::vector<char>>;

// Recovers {C_v} from the distance-1 graph of J(k, s) on the points of g.
// Each round replaces the current j-subsets by (j-1)-subsets: for an edge
// {x, y} the j-subsets containing x ∩ y are x, y and the larger of the two
// cliques in the common neighborhood (sizes k-j-1 and j-1).
std::optional<std::vector<std::vector<int>>> ReconstructJohnson(
    const Adjacency& adj0, int k, int s) {
  const int m = static_cast<int>(adj0.size());
  Adjacency adj = adj0;
  // down[y]: the original points (s-subsets) containing the current subset y.
  std::vector<std::vector<int>> down(m);
  for (int x = 0; x < m; ++x) down[x] = {x};
  for (int j = s; j >= 2; --j) {
    const int size = static_cast<int>(adj.size());
    std::set<std::vector<int>> cliques;
    for (int x = 0; x < size; ++x) {
      for (int y = x + 1; y < size; ++y) {
        if (!adj[x][y]) continue;
        std::vector<int> common;
        for (int z = 0; z < size; ++z) {
          if (adj[x][z] && adj[y][z]) common.push_back(z);
        }
        // Split the common neighborhood into its two cliques.
        std::vector<int> first, second;
        for (int z : common) {
          if (first.empty() || adj[first[0]][z]) {
            first.push_back(z);
          } else {
            second.push_back(z);
          }
        }
        if (first.size() < second.size()) std::swap(first, second);
        if (static_cast<int>(first.size()) != k - j - 1 ||
            static_cast<int>(second.size()) != j - 1) {
          return std::nullopt;
        }
        first.push_back(x);
        first.push_back(y);
        std::sort(first.begin(), first.end());
        cliques.insert(std::move(first));
      }
    }
    if (BigInt(cliques.size()) != Binomial(k, j - 1)) return std::nullopt;
    std::vector<std::vector<int>> next(cliques.begin(), cliques.end());
    const int next_size = static_cast<int>(next.size());
    std::vector<std::vector<int>> member_of(size);
    for (int c = 0; c < next_size; ++c) {
      for (int y : next[c]) member_of[y].push_back(c);
    }
    Adjacency next_adj(next_size, std::vector<char>(next_size, 0));
    for (int y = 0; y < size; ++y) {
      for (int a : member_of[y]) {
        for (int b : member_of[y]) {
          if (a != b) next_adj[a][b] = 1;
        }
      }
    }
    std::vector<std::vector<int>> next_down(next_size);
    for (int c = 0; c < next_size; ++c) {
      for (int y : next[c]) {
        next_down[c].insert(next_down[c].end(), down[y].begin(), down[y].end());
      }
      std::sort(next_down[c].begin(), next_down[c].end());
      next_down[c].erase(std::unique(next_down[c].begin(), next_down[c].end()),
                         next_down[c].end());
    }
    adj = std::move(next_adj);
    down = std::move(next_down);
  }
  if (static_cast<int>(down.size()) != k) return std::nullopt;
  // Verify: each point lies in exactly s parts and is determined by them.
  std::vector<std::vector<int>> containing(m);
  for (int v = 0; v < k; ++v) {
    if (BigInt(down[v].size()) != Binomial(k - 1, s - 1)) return std::nullopt;
    for (int x : down[v]) containing[x].push_back(v);
  }
  std::set<std::vector<int>> distinct;
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(containing[x].size()) != s) return std::nullopt;
    distinct.insert(containing[x]);
  }
  if (static_cast<int>(distinct.size()) != m) return std::nullopt;
  std::sort(down.begin(), down.end());
  return down;
}

bool IsInvariantCover(const PermGroup& g,
                      const std::vector<std::vector<int>>& cover) {
  std::set<std::vector<int>> parts(cover.begin(), cover.end());
  for (const Perm& p : g.generators()) {
    for (const auto& c : cover) {
      std::vector<int> img;
      for (int x : c) img.push_back(p[x]);
      std::sort(img.begin(), img.end());
      if (!parts.count(img)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::vector<int>>> JohnsonCover(const PermGroup& g,
                                                          int d) {
  const int m = g.degree();
  const BigInt& order = g.order();
  const BigInt max_parts = BigInt(d) * d * d;
  for (int k = 2; k <= m; ++k) {
    const BigInt fk = Factorial(k);
    if (order != fk && 2 * order != fk) continue;
    if (k > max_parts) continue;
    for (int s = 1; 2 * s <= k; ++s) {
      if (Binomial(k, s) != m) continue;
      if (s == 1) {
        std::vector<std::vector<int>> cover;
        for (int x = 0; x < m; ++x) cover.push_back({x});
        return cover;
      }
      // For k = 2s the complement map swaps the two clique types.
      if (2 * s == k) continue;
      const PermGroup gx = g.PointwiseStabilizer({0});
      const auto suborbits = gx.Orbits();
      if (static_cast<int>(suborbits.size()) != s + 1) continue;
      std::multiset<BigInt> want, have;
      for (int j = 0; j <= s; ++j) {
        want.insert(Binomial(s, j) * Binomial(k - s, s - j));
      }
      for (const auto& o : suborbits) have.insert(BigInt(o.size()));
      if (want != have) continue;
      const PermGroup g0 = g.WithBase({0});
      for (const auto& o : suborbits) {
        if (BigInt(o.size()) != BigInt(s) * (k - s)) continue;
        Adjacency adj(m, std::vector<char>(m, 0));
        for (int x = 0; x < m; ++x) {
          const Perm& t = g0.Transversal(0, x);
          for (int y : o) adj[x][t[y]] = 1;
        }
        bool symmetric = true;
        for (int x = 0; x < m && symmetric; ++x) {
          for (int y = 0; y < m; ++y) {
            if (adj[x][y] != adj[y][x]) {
              symmetric = false;
              break;
            }
          }
        }
        if (!symmetric) continue;
        auto cover = ReconstructJohnson(adj, k, s);
        if (cover && IsInvariantCover(g, *cover)) return cover;
      }
    }
  }
  return std::nullopt;
}

// {pi | S^pi = {0..|S|-1}} = (Sym(S) x Sym(V \ S)) rho_S.
Coset SubsetLabeling(const Object& set, int n) {
  std::vector<char> in(n, 0);
  for (const Object& v : set.items()) in[v.value()] = 1;
  std::vector<int> inside, outside;
  for (int v = 0; v < n; ++v) (in[v] ? inside : outside).push_back(v);
  std::vector<int> img(n);
  int next = 0;
  for (int v : inside) img[v] = next++;
  for (int v : outside) img[v] = next++;
  std::vector<Perm> gens = PermGroup::Symmetric(n, inside).generators();
  const PermGroup rest = PermGroup::Symmetric(n, outside);
  gens.insert(gens.end(), rest.generators().begin(), rest.generators().end());
  return Coset(PermGroup(n, std::move(gens)), Perm(std::move(img)));
}

// ---- CL_SetSet ------------------------------------------------------------

// The instance reordered so that domain[i] is the i-th member of the set J.
CosetMap Normalize(const CosetMap& in) {
  const size_t t = in.domain.size();
  if (in.images.size() != t) throw InputError("one image per domain coset");
  std::vector<std::pair<Object, size_t>> keyed;
  for (size_t i = 0; i < t; ++i) {
    if (in.domain[i].empty() || in.images[i].empty()) {
      throw InputError("labeling cosets must be nonempty");
    }
    keyed.emplace_back(Object::CosetAtom(in.domain[i]), i);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  CosetMap out;
  out.delta_rho = in.delta_rho;
  for (size_t r = 0; r < t; ++r) {
    if (r > 0 && keyed[r].first == keyed[r - 1].first) {
      if (!(in.images[keyed[r].second] == in.images[keyed[r - 1].second])) {
        throw InputError("alpha must be a function on J");
      }
      continue;
    }
    out.domain.push_back(in.domain[keyed[r].second]);
    out.images.push_back(in.images[keyed[r].second]);
  }
  return out;
}

CosetMap Restrict(const CosetMap& in, const std::vector<int>& idx,
                  const Coset& delta_rho) {
  CosetMap out;
  for (int i : idx) {
    out.domain.push_back(in.domain[i]);
    out.images.push_back(in.images[i]);
  }
  out.delta_rho = delta_rho;
  return out;
}

Object DomainSet(const CosetMap& m) {
  std::vector<Object> j;
  for (const Coset& c : m.domain) j.push_back(Object::CosetAtom(c));
  return Object::Set(std::move(j));
}

bool CosetWithin(const Coset& inner, const Coset& outer) {
  return inner.group().IsSubgroupOf(outer.group()) && outer.Contains(inner.rep());
}

CanonResult ClSetSetRec(const CosetMap& in, const CanonOptions& options,
                        RecursionStats* stats) {
  if (stats) ++stats->setset_calls;
  const CosetMap inst = Normalize(in);
  const Coset& delta_rho = inst.delta_rho;
  const int n = delta_rho.degree();
  const int t = static_cast<int>(inst.domain.size());
  const Object x = CosetMapObject(inst);
  auto finish = [&](CanonResult r) {
    if (!CosetWithin(r.labeling, delta_rho)) {
      r.labeling = ClInt(r.labeling, delta_rho).labeling;
    }
    return WithForm(std::move(r), x);
  };
  if (t <= 1) return finish(ClObject(x, n, options));

  const Object jset = DomainSet(inst);
  const PermGroup& delta = delta_rho.group();
  std::vector<Perm> on_j;
  for (const Perm& g : delta.generators()) on_j.push_back(InducedPerm(jset, g));
  const auto orbits = PermGroup(t, on_j).Orbits();
  const Perm& rho = delta_rho.rep();

  if (orbits.size() > 1) {
    size_t best = 0;
    Object best_key;
    for (size_t o = 0; o < orbits.size(); ++o) {
      std::vector<Object> members;
      for (int i : orbits[o]) members.push_back(jset[i]);
      Object key = Apply(Object::Set(std::move(members)), rho);
      if (o == 0 || key < best_key) {
        best = o;
        best_key = std::move(key);
      }
    }
    std::vector<int> rest;
    for (size_t o = 0; o < orbits.size(); ++o) {
      if (o != best) rest.insert(rest.end(), orbits[o].begin(), orbits[o].end());
    }
    std::sort(rest.begin(), rest.end());
    CanonResult a =
        ClSetSetRec(Restrict(inst, orbits[best], delta_rho), options, stats);
    CanonResult b = ClSetSetRec(Restrict(inst, rest, delta_rho), options, stats);
    return finish(ClInt(b.labeling, a.labeling));
  }

  // Transitive on J: work with Delta^Can acting on J^Can.
  const PermGroup dcan(n, delta.Conjugate(rho).CanonicalGenerators());
  const Object jcan = Apply(jset, rho);
  std::map<std::vector<uint32_t>, int> can_index;
  for (int i = 0; i < t; ++i) can_index.emplace(jcan[i].encoding(), i);
  // to_can[i]: position of J_i^rho in J^Can.
  std::vector<int> to_can(t), from_can(t);
  for (int i = 0; i < t; ++i) {
    to_can[i] = can_index.at(Apply(jset[i], rho).encoding());
    from_can[to_can[i]] = i;
  }
  std::map<Perm, Perm> induced;
  std::vector<Perm> on_jcan;
  for (const Perm& g : dcan.generators()) {
    on_jcan.push_back(InducedPerm(jcan, g));
    induced.emplace(g, on_jcan.back());
  }
  std::vector<int> all(t);
  std::iota(all.begin(), all.end(), 0);
  const auto blocks = MinimalBlockSystem(PermGroup(t, on_jcan), all);
  const int b = static_cast<int>(blocks.size());
  std::vector<int> block_of(t);
  for (int k = 0; k < b; ++k) {
    for (int i : blocks[k]) block_of[i] = k;
  }
  std::vector<Perm> on_blocks;
  for (const Perm& p : on_jcan) {
    std::vector<int> img(b);
    for (int k = 0; k < b; ++k) img[k] = block_of[p[blocks[k][0]]];
    on_blocks.emplace_back(std::move(img));
  }
  const GroupHom to_blocks(dcan, on_blocks, b);
  const PermGroup gb = to_blocks.Image();
  // The block action is a quotient of Delta <= Sym(V), so it has at most
  // |V|! points; a primitive group with d! < |X| does not arise here.
  if (Factorial(n) < b) throw ContractError("block count exceeds |V|!");
  const PrimitiveOutcome pc = PrimitiveCase(gb, n, options.primitive_c);

  if (pc.kind == PrimitiveKind::kSparseCover) {
    if (stats) ++stats->setset_cover_branches;
    auto act = [&induced](const std::vector<int>& set, const Perm& g) {
      const Perm& p = induced.at(g);
      std::vector<int> img;
      for (int i : set) img.push_back(p[i]);
      std::sort(img.begin(), img.end());
      return img;
    };
    std::vector<Object> members;
    for (const auto& part : pc.cover) {
      std::vector<int> c_can;
      for (int k : part) c_can.insert(c_can.end(), blocks[k].begin(), blocks[k].end());
      std::sort(c_can.begin(), c_can.end());
      auto os = OrbitStabilizer(dcan, c_can, act);
      const size_t least =
          std::min_element(os.orbit.begin(), os.orbit.end()) - os.orbit.begin();
      const Coset sub_dr(os.stabilizer.Conjugate(rho.Inverse()),
                         rho * os.transversal[least]);
      std::vector<int> idx;
      for (int i : c_can) idx.push_back(from_can[i]);
      std::sort(idx.begin(), idx.end());
      CanonResult sub = ClSetSetRec(Restrict(inst, idx, sub_dr), options, stats);
      members.push_back(Object::Tuple(
          {Object::CosetAtom(sub.labeling), Object::Const(sub.form)}));
    }
    return finish(ClObject(Object::Set(std::move(members)), n, options));
  }

  if (stats) {
    ++stats->setset_enumeration_branches;
    if (pc.kind == PrimitiveKind::kFallback) stats->setset_fallback = true;
  }
  const PermGroup psi = to_blocks.Kernel();
  std::vector<Coset> best;
  Object best_form;
  for (const Perm& d : CosetTransversal(dcan, psi)) {
    const Perm rho_d = rho * d;
    const Coset sub_dr(psi.Conjugate(rho_d.Inverse()), rho_d);
    CanonResult sub = ClSetSetRec(Restrict(inst, all, sub_dr), options, stats);
    Object f = Apply(x, sub.labeling.rep());
    if (best.empty() || f < best_form) {
      best.clear();
      best_form = std::move(f);
      best.push_back(std::move(sub.labeling));
    } else if (f == best_form) {
      best.push_back(std::move(sub.labeling));
    }
  }
  CanonResult r;
  r.labeling = Join(best);
  return finish(std::move(r));
}

}  // namespace

Object RelationObject(const std::vector<std::vector<int>>& tuples) {
  std::vector<Object> items;
  for (const auto& t : tuples) {
    std::vector<Object> entries;
    for (int v : t) entries.push_back(Object::Int(v));
    items.push_back(Object::Tuple(std::move(entries)));
  }
  Object r = Object::Set(std::move(items));
  CheckRelation(r);
  return r;
}

Object HypergraphObject(const std::vector<std::vector<int>>& edges) {
  std::vector<Object> items;
  for (const auto& e : edges) {
    std::vector<Object> vs;
    for (int v : e) vs.push_back(Object::Int(v));
    items.push_back(Object::Set(std::move(vs)));
  }
  return Object::Set(std::move(items));
}

CanonResult ClRel(const Object& relation, int n, const CanonOptions& options,
                  RecursionStats* stats) {
  CheckRelation(relation);
  if (GroundSize(relation) > n) throw InputError("vertex out of range");
  return ClRelRec(relation, n, options, stats);
}

CanonResult ClHyper(const Object& hypergraph, int n, const CanonOptions& options,
                    RecursionStats* stats) {
  CheckHypergraph(hypergraph);
  if (GroundSize(hypergraph) > n) throw InputError("vertex out of range");
  return ClHyperRec(hypergraph, n, options, stats);
}

bool RelCallsWithinBound(int64_t calls, size_t relation_size) {
  const int64_t s = std::max<int64_t>(1, static_cast<int64_t>(relation_size));
  return calls <= s * s;
}

bool HyperCallsWithinBound(int64_t calls, size_t hypergraph_size, int n) {
  const long double s = std::max<long double>(1, hypergraph_size);
  const long double log_bound =
      n <= 1 ? 0 : 2 * std::log2(static_cast<long double>(n)) * std::log2(s);
  return std::log2(static_cast<long double>(calls)) <= log_bound + 1e-9;
}

PrimitiveOutcome PrimitiveCase(const PermGroup& g, int d, double c) {
  const int m = g.degree();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  if (m == 0 || !g.IsTransitiveOn(all) ||
      static_cast<int>(MinimalBlockSystem(g, all).size()) != m) {
    throw InputError("primitive_case needs a primitive group");
  }
  PrimitiveOutcome out;
  const long double bound =
      m <= 1 || d <= 1 ? 0
                       : c * std::log2(static_cast<long double>(d)) *
                             std::log2(static_cast<long double>(m));
  if (Log2(g.order()) <= bound + 1e-9) {
    out.kind = PrimitiveKind::kSmallOrder;
    return out;
  }
  if (auto cover = JohnsonCover(g, d)) {
    out.kind = PrimitiveKind::kSparseCover;
    out.cover = std::move(*cover);
    return out;
  }
  out.kind = PrimitiveKind::kFallback;
  return out;
}

Object CosetMapObject(const CosetMap& instance) {
  if (instance.images.size() != instance.domain.size()) {
    throw InputError("one image per domain coset");
  }
  std::vector<Object> j, l, pairs;
  for (size_t i = 0; i < instance.domain.size(); ++i) {
    j.push_back(Object::CosetAtom(instance.domain[i]));
    l.push_back(Object::CosetAtom(instance.images[i]));
    pairs.push_back(Object::Tuple({j.back(), l.back()}));
  }
  return Object::Tuple({Object::Set(std::move(j)), Object::Set(std::move(l)),
                        Object::Set(std::move(pairs)),
                        Object::CosetAtom(instance.delta_rho)});
}

CosetMap DecodeCosetMap(const Object& x) {
  CosetMap m;
  for (const Object& p : x[2].items()) {
    m.domain.push_back(p[0].coset());
    m.images.push_back(p[1].coset());
  }
  m.delta_rho = x[3].coset();
  return m;
}

CanonResult ClSetSet(const CosetMap& instance, const CanonOptions& options,
                     RecursionStats* stats) {
  const int n = instance.delta_rho.degree();
  if (instance.delta_rho.empty()) throw InputError("empty labeling coset");
  for (size_t i = 0; i < instance.domain.size(); ++i) {
    if (instance.domain[i].degree() != n ||
        (i < instance.images.size() && instance.images[i].degree() != n)) {
      throw InputError("coset degrees differ");
    }
  }
  return ClSetSetRec(instance, options, stats);
}

bool SetSetCallsWithinBound(int64_t calls, const CosetMap& instance, double c) {
  const CosetMap inst = Normalize(instance);
  const int t = static_cast<int>(inst.domain.size());
  const int n = inst.delta_rho.degree();
  int k = 1;
  if (t > 0) {
    const Object jset = DomainSet(inst);
    std::vector<Perm> on_j;
    for (const Perm& g : inst.delta_rho.group().generators()) {
      on_j.push_back(InducedPerm(jset, g));
    }
    for (const auto& o : PermGroup(t, on_j).Orbits()) {
      k = std::max(k, static_cast<int>(o.size()));
    }
  }
  const long double log_bound =
      (n <= 1 ? 0 : 4 * c * std::log2(static_cast<long double>(n)) *
                        std::log2(static_cast<long double>(k))) +
      2 * std::log2(static_cast<long double>(std::max(1, t)));
  return std::log2(static_cast<long double>(calls)) <= log_bound + 1e-9;
}

Object LabeledHypergraphObject(const std::vector<std::vector<int>>& edges,
                               const std::vector<Coset>& labels) {
  if (edges.size() != labels.size()) throw InputError("one label per edge");
  std::vector<Object> items;
  for (size_t i = 0; i < edges.size(); ++i) {
    std::vector<Object> vs;
    for (int v : edges[i]) vs.push_back(Object::Int(v));
    items.push_back(Object::Tuple(
        {Object::Set(std::move(vs)), Object::CosetAtom(labels[i])}));
  }
  return Object::Set(std::move(items));
}

CanonResult ClSetHyper(const Object& labeled_hypergraph, int n,
                       const CanonOptions& options, RecursionStats* stats) {
  const Object& x = labeled_hypergraph;
  if (!x.is_set()) throw InputError("labeled hypergraph must be a set");
  std::vector<Object> edges;
  CosetMap m;
  for (const Object& e : x.items()) {
    if (!e.is_tuple() || e.size() != 2 || !e[1].is_coset()) {
      throw InputError("labeled hyperedges are (edge, coset) pairs");
    }
    if (e[1].coset().degree() != n) throw InputError("label degree differs");
    edges.push_back(e[0]);
    m.images.push_back(e[1].coset());
  }
  const Object h = Object::Set(edges);
  if (h.size() != edges.size()) throw InputError("alpha must be a function");
  m.delta_rho = ClHyper(h, n, options, stats).labeling;
  // The labelings of the empty edge and of V coincide, so the label of the
  // empty edge is intersected in separately.
  std::optional<Coset> empty_label;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].size() == 0) {
      empty_label = m.images[i];
      m.images.erase(m.images.begin() + i);
      break;
    }
  }
  for (const Object& e : edges) {
    if (e.size() > 0) m.domain.push_back(SubsetLabeling(e, n));
  }
  CanonResult r = ClSetSet(m, options, stats);
  if (empty_label) r = ClInt(*empty_label, r.labeling);
  return WithForm(std::move(r), x);
}

}  // namespace cosetcanon
