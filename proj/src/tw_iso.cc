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

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "cosetcanon/canon.h"
#include "cosetcanon/canon_struct.h"
#include "cosetcanon/object.h"

namespace cosetcanon {

void Structure::AddGraph(const Graph& g, uint32_t color) {
  for (const auto& [u, v] : g.Edges()) tuples.push_back({{u, v}, color, false});
}

namespace {

using Key = std::vector<int>;

Key TupleKey(const Structure::Tuple& t, std::vector<int> pts) {
  if (!t.ordered) std::sort(pts.begin(), pts.end());
  Key k = {t.ordered ? 1 : 0, static_cast<int>(t.color),
           static_cast<int>(pts.size())};
  k.insert(k.end(), pts.begin(), pts.end());
  return k;
}

int CountColors(const std::vector<uint32_t>& c) {
  std::vector<uint32_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

// Search state for Iso(A; B): tuple lookup tables and, per search depth,
// the equitable colorings of both sides after individualizing the base
// prefix and its images.
class Matcher {
 public:
  Matcher(const Structure& a, const Structure& b)
      : a_(Normalized(a)), b_(Normalized(b)) {
    ok_ = a.n == b.n;
    if (!ok_) return;
    Index(a_, keys_a_, inc_a_);
    Index(b_, keys_b_, inc_b_);
    std::map<Key, int> shape;
    for (const Key& k : keys_a_) ++shape[{k[0], k[1], k[2]}];
    for (const Key& k : keys_b_) --shape[{k[0], k[1], k[2]}];
    for (const auto& [s, c] : shape) ok_ = ok_ && c == 0;
    init_a_ = a.colors;
    init_b_ = b.colors;
    ok_ = ok_ && Refine(init_a_, init_b_);
    state_a_.assign(a.n + 1, {});
    state_b_.assign(a.n + 1, {});
    discrete_.assign(a.n + 2, 0);
    discrete_[0] = CountColors(init_a_) == a.n;
  }

  bool ok() const { return ok_; }

  bool Partial(const std::vector<int>& base, int depth,
               const std::vector<int>& images) {
    const std::vector<uint32_t>& pa = depth == 0 ? init_a_ : state_a_[depth - 1];
    const std::vector<uint32_t>& pb = depth == 0 ? init_b_ : state_b_[depth - 1];
    const int u = base[depth], x = images[depth];
    if (pa[u] != pb[x]) return false;
    if (discrete_[depth]) {
      state_a_[depth] = pa;
      state_b_[depth] = pb;
      discrete_[depth + 1] = 1;
    } else {
      std::vector<uint32_t> ca = pa, cb = pb;
      const uint32_t fresh = *std::max_element(ca.begin(), ca.end()) + 1;
      ca[u] = cb[x] = fresh;
      if (!Refine(ca, cb)) return false;
      discrete_[depth + 1] = CountColors(ca) == a_.n;
      state_a_[depth] = std::move(ca);
      state_b_[depth] = std::move(cb);
    }
    std::vector<int> fwd(a_.n, -1), bwd(a_.n, -1);
    for (int j = 0; j <= depth; ++j) {
      fwd[base[j]] = images[j];
      bwd[images[j]] = base[j];
    }
    return Consistent(a_, inc_a_[u], fwd, keys_b_) &&
           Consistent(b_, inc_b_[x], bwd, keys_a_);
  }

  bool Full(const Perm& x) const {
    for (const auto& t : a_.tuples) {
      std::vector<int> img;
      for (int p : t.points) img.push_back(x[p]);
      if (!keys_b_.count(TupleKey(t, img))) return false;
    }
    return true;
  }

  // Breadth-first over co-occurrence, starting from the smallest color
  // class.
  std::vector<int> BaseOrder() const {
    const int n = a_.n;
    std::map<uint32_t, int> size;
    for (uint32_t c : init_a_) ++size[c];
    auto rank = [&](int v) { return std::make_pair(size.at(init_a_[v]), v); };
    std::vector<std::vector<int>> near(n);
    for (const auto& t : a_.tuples) {
      for (int p : t.points) {
        for (int q : t.points) {
          if (p != q) near[p].push_back(q);
        }
      }
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (;;) {
      int start = -1;
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && (start < 0 || rank(v) < rank(start))) start = v;
      }
      if (start < 0) break;
      seen[start] = 1;
      const size_t from = order.size();
      order.push_back(start);
      for (size_t i = from; i < order.size(); ++i) {
        std::vector<int> next;
        for (int w : near[order[i]]) {
          if (!seen[w]) {
            seen[w] = 1;
            next.push_back(w);
          }
        }
        std::sort(next.begin(), next.end(),
                  [&](int p, int q) { return rank(p) < rank(q); });
        order.insert(order.end(), next.begin(), next.end());
      }
    }
    return order;
  }

 private:
  // Tuples form a set: repeats are dropped and unordered points sorted.
  static Structure Normalized(const Structure& s) {
    if (static_cast<int>(s.colors.size()) != s.n) {
      throw InputError("structure needs one color per point");
    }
    Structure out(s.n);
    out.colors = s.colors;
    std::set<Key> seen;
    for (Structure::Tuple t : s.tuples) {
      for (int p : t.points) {
        if (p < 0 || p >= s.n) throw InputError("tuple point out of range");
      }
      if (!t.ordered) std::sort(t.points.begin(), t.points.end());
      if (seen.insert(TupleKey(t, t.points)).second) out.tuples.push_back(std::move(t));
    }
    return out;
  }

  static void Index(const Structure& s, std::set<Key>& keys,
                    std::vector<std::vector<int>>& inc) {
    inc.assign(s.n, {});
    for (size_t i = 0; i < s.tuples.size(); ++i) {
      keys.insert(TupleKey(s.tuples[i], s.tuples[i].points));
      std::vector<int> pts = s.tuples[i].points;
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      for (int p : pts) inc[p].push_back(static_cast<int>(i));
    }
  }

  static bool Consistent(const Structure& s, const std::vector<int>& inc,
                         const std::vector<int>& map,
                         const std::set<Key>& other) {
    for (int i : inc) {
      const auto& t = s.tuples[i];
      std::vector<int> img;
      for (int p : t.points) {
        if (map[p] < 0) break;
        img.push_back(map[p]);
      }
      if (img.size() == t.points.size() && !other.count(TupleKey(t, img))) {
        return false;
      }
    }
    return true;
  }

  static std::vector<uint32_t> Signature(const Structure& s,
                                         const std::vector<std::vector<int>>& inc,
                                         const std::vector<uint32_t>& c, int v) {
    std::vector<std::vector<uint32_t>> parts;
    for (int i : inc[v]) {
      const auto& t = s.tuples[i];
      if (t.ordered) {
        for (size_t p = 0; p < t.points.size(); ++p) {
          if (t.points[p] != v) continue;
          std::vector<uint32_t> part = {1, t.color, static_cast<uint32_t>(p)};
          for (int q : t.points) part.push_back(c[q]);
          parts.push_back(std::move(part));
        }
      } else {
        std::vector<uint32_t> part = {0, t.color,
                                      static_cast<uint32_t>(t.points.size())};
        std::vector<uint32_t> cols;
        for (int q : t.points) cols.push_back(c[q]);
        std::sort(cols.begin(), cols.end());
        part.insert(part.end(), cols.begin(), cols.end());
        parts.push_back(std::move(part));
      }
    }
    std::sort(parts.begin(), parts.end());
    std::vector<uint32_t> sig = {c[v]};
    for (const auto& part : parts) {
      sig.push_back(static_cast<uint32_t>(part.size()));
      sig.insert(sig.end(), part.begin(), part.end());
    }
    return sig;
  }

  // Refines both colorings with shared color names; false once the color
  // histograms differ.
  bool Refine(std::vector<uint32_t>& ca, std::vector<uint32_t>& cb) const {
    const int n = a_.n;
    int classes = -1;
    for (;;) {
      std::vector<uint32_t> ha = ca, hb = cb;
      std::sort(ha.begin(), ha.end());
      std::sort(hb.begin(), hb.end());
      if (ha != hb) return false;
      const int now = static_cast<int>(std::unique(ha.begin(), ha.end()) - ha.begin());
      if (now == classes || now == n) return true;
      classes = now;
      std::vector<std::vector<uint32_t>> sa(n), sb(n);
      std::map<std::vector<uint32_t>, uint32_t> names;
      for (int v = 0; v < n; ++v) {
        sa[v] = Signature(a_, inc_a_, ca, v);
        sb[v] = Signature(b_, inc_b_, cb, v);
        names.emplace(sa[v], 0);
        names.emplace(sb[v], 0);
      }
      uint32_t next = 0;
      for (auto& [sig, name] : names) name = next++;
      for (int v = 0; v < n; ++v) {
        ca[v] = names.at(sa[v]);
        cb[v] = names.at(sb[v]);
      }
    }
  }

  const Structure a_;
  const Structure b_;
  bool ok_ = false;
  std::set<Key> keys_a_, keys_b_;
  std::vector<std::vector<int>> inc_a_, inc_b_;
  std::vector<uint32_t> init_a_, init_b_;
  std::vector<std::vector<uint32_t>> state_a_, state_b_;
  std::vector<char> discrete_;
};

SearchSpec SpecFor(Matcher& m) {
  SearchSpec spec;
  spec.base_prefix = m.BaseOrder();
  spec.partial = [&m](const std::vector<int>& base, int depth,
                      const std::vector<int>& images) {
    return m.Partial(base, depth, images);
  };
  spec.full = [&m](const Perm& x) { return m.Full(x); };
  return spec;
}

Structure GraphStructure(const Graph& g) {
  Structure s(g.n());
  s.AddGraph(g, 1);
  return s;
}

}  // namespace

Coset StructureIso(const Structure& a, const Structure& b, const Coset& within) {
  if (within.empty()) return within;
  if (a.n != within.degree() || b.n != within.degree()) {
    throw InputError("structure sizes do not match the coset");
  }
  if (a.n == 0) return within;
  Matcher ab(a, b);
  if (!ab.ok()) return Coset::Empty(a.n);
  SearchSpec spec = SpecFor(ab);
  std::optional<Perm> x = FindInCoset(within.group(), within.rep(), spec);
  if (!x) return Coset::Empty(a.n);
  Matcher aa(a, a);
  SearchSpec self = SpecFor(aa);
  return Coset(FindSubgroup(within.group(), self), *x);
}

Coset IsoCosetConstrained(const Graph& g1, const Graph& g2, const Coset& within) {
  if (g1.n() != g2.n()) throw InputError("graphs differ in order");
  return StructureIso(GraphStructure(g1), GraphStructure(g2), within);
}

// ---- Iso_Basic ---------------------------------------------------------------

namespace {

std::vector<int> PositionsIn(const std::vector<int>& list, int n) {
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
  return pos;
}

// The coset on s1 -> s2 positions extended to t1 -> t2 (t_i ⊇ s_i), with
// the new points free.
Coset ExtendFree(const Coset& d, const std::vector<int>& s1,
                 const std::vector<int>& t1, const std::vector<int>& s2,
                 const std::vector<int>& t2, int n) {
  const std::vector<int> p1 = PositionsIn(t1, n), p2 = PositionsIn(t2, n);
  const int m = static_cast<int>(t1.size());
  std::vector<int> new1, new2;
  std::vector<char> in1(n, 0), in2(n, 0);
  for (int v : s1) in1[v] = 1;
  for (int v : s2) in2[v] = 1;
  for (int i = 0; i < m; ++i) {
    if (!in1[t1[i]]) new1.push_back(i);
    if (!in2[t2[i]]) new2.push_back(i);
  }
  std::vector<Perm> gens;
  for (const Perm& g : d.group().generators()) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < s1.size(); ++i) img[p1[s1[i]]] = p1[s1[g[i]]];
    gens.emplace_back(std::move(img));
  }
  if (new1.size() >= 2) {
    std::vector<int> swap(m), cycle(m);
    std::iota(swap.begin(), swap.end(), 0);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::swap(swap[new1[0]], swap[new1[1]]);
    for (size_t j = 0; j < new1.size(); ++j) {
      cycle[new1[j]] = new1[(j + 1) % new1.size()];
    }
    gens.emplace_back(std::move(swap));
    gens.emplace_back(std::move(cycle));
  }
  std::vector<int> rep(m);
  for (size_t i = 0; i < s1.size(); ++i) rep[p1[s1[i]]] = p2[s2[d.rep()[i]]];
  for (size_t j = 0; j < new1.size(); ++j) rep[new1[j]] = new2[j];
  return Coset(PermGroup(m, std::move(gens)), Perm(std::move(rep)));
}

struct Growth {
  // Ordered non-adjacent pairs (i, j) of positions in S with S_{S[i],S[j]}.
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> seps;
  std::vector<int> grown;
};

Growth Grow(const Graph& g, const std::vector<int>& s) {
  Growth out;
  std::set<int> grown(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = 0; j < s.size(); ++j) {
      if (i == j || g.HasEdge(s[i], s[j])) continue;
      std::vector<int> sep = LeftmostMinSeparator(g, s[i], s[j]);
      grown.insert(sep.begin(), sep.end());
      out.seps.push_back({{static_cast<int>(i), static_cast<int>(j)}, sep});
    }
  }
  out.grown.assign(grown.begin(), grown.end());
  return out;
}

// The pairs of S colored by adjacency and |S_{v,w}|.
Structure SeparatorSizes(const Graph& g, const std::vector<int>& s,
                         const Growth& gr) {
  Structure x(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (g.HasEdge(s[i], s[j])) {
        x.tuples.push_back({{static_cast<int>(i), static_cast<int>(j)}, 1, false});
      }
    }
  }
  for (const auto& [pair, sep] : gr.seps) {
    x.tuples.push_back({{pair.first, pair.second},
                        2 + static_cast<uint32_t>(sep.size()), true});
  }
  return x;
}

// S' with the old points colored, the separator memberships (v, w, s) and
// the edges of G[S'].
Structure Identified(const Graph& g, const std::vector<int>& s,
                     const std::vector<int>& t, const Growth& gr) {
  const std::vector<int> pos = PositionsIn(t, g.n());
  Structure y(static_cast<int>(t.size()));
  for (size_t i = 0; i < t.size(); ++i) y.colors[i] = 2;
  for (int v : s) y.colors[pos[v]] = 1;
  for (const auto& [pair, sep] : gr.seps) {
    for (int x : sep) {
      y.tuples.push_back({{pos[s[pair.first]], pos[s[pair.second]], pos[x]}, 3, true});
    }
  }
  for (size_t i = 0; i < t.size(); ++i) {
    for (size_t j = i + 1; j < t.size(); ++j) {
      if (g.HasEdge(t[i], t[j])) {
        y.tuples.push_back({{static_cast<int>(i), static_cast<int>(j)}, 4, false});
      }
    }
  }
  return y;
}

Coset IsoBasicFrom(const Graph& g1, std::vector<int> s1, const Graph& g2,
                   std::vector<int> s2, Coset d) {
  const int n = g1.n();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (;;) {
    if (d.empty() || s1.size() != s2.size()) return Coset::Empty(n);
    if (static_cast<int>(s1.size()) == n) {
      return IsoCosetConstrained(g1, g2, d);
    }
    const Growth gr1 = Grow(g1, s1), gr2 = Grow(g2, s2);
    d = StructureIso(SeparatorSizes(g1, s1, gr1), SeparatorSizes(g2, s2, gr2), d);
    if (d.empty()) return Coset::Empty(n);
    std::vector<int> t1 = gr1.grown, t2 = gr2.grown;
    if (t1.size() != t2.size()) return Coset::Empty(n);
    // Only complete graphs stop growing; continue on all of V.
    if (t1 == s1) t1 = t2 = all;
    Coset lifted = ExtendFree(d, s1, t1, s2, t2, n);
    d = StructureIso(Identified(g1, s1, t1, gr1), Identified(g2, s2, t2, gr2),
                     lifted);
    s1 = std::move(t1);
    s2 = std::move(t2);
  }
}

std::set<std::vector<int>> MinDegreeNeighbourhoods(const Graph& g) {
  int low = g.n();
  for (int v = 0; v < g.n(); ++v) low = std::min(low, g.Degree(v));
  std::set<std::vector<int>> out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.Degree(v) == low) out.insert(g.Neighbors(v));
  }
  return out;
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.n(); ++v) d.push_back(g.Degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

Coset IsoBasicUnchecked(const Graph& g1, const Graph& g2) {
  const int n = g1.n();
  if (n != g2.n() || g1.num_edges() != g2.num_edges() ||
      DegreeSequence(g1) != DegreeSequence(g2)) {
    return Coset::Empty(n);
  }
  if (n <= 1) return Coset::All(n);
  const auto seeds1 = MinDegreeNeighbourhoods(g1);
  const auto seeds2 = MinDegreeNeighbourhoods(g2);
  if (seeds1.size() != seeds2.size()) return Coset::Empty(n);
  const std::vector<int>& s1 = *seeds1.begin();
  std::vector<Coset> parts;
  for (const auto& s2 : seeds2) {
    Coset r = IsoBasicFrom(g1, s1, g2, s2,
                           Coset::All(static_cast<int>(s1.size())));
    if (!r.empty()) parts.push_back(std::move(r));
  }
  if (parts.empty()) return Coset::Empty(n);
  return Join(parts);
}

std::vector<std::vector<int>> Normalized(const std::vector<std::vector<int>>& h,
                                         int n) {
  std::set<std::vector<int>> out;
  for (std::vector<int> e : h) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int v : e) {
      if (v < 0 || v >= n) throw InputError("hyperedge vertex out of range");
    }
    out.insert(std::move(e));
  }
  return {out.begin(), out.end()};
}

// Rank of the isomorphism type of {S in H : S ⊆ alpha(v)} for every v of
// both graphs, in a shared numbering.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> CoverColors(
    const Graph& g1, const std::vector<std::vector<int>>& h1, const Graph& g2,
    const std::vector<std::vector<int>>& h2) {
  auto types = [](const Graph& g, const std::vector<std::vector<int>>& h) {
    std::vector<Object> out;
    for (const auto& a : CliqueCover(g)) {
      const std::vector<int> pos = PositionsIn(a, g.n());
      std::vector<std::vector<int>> local;
      for (const auto& e : h) {
        std::vector<int> le;
        for (int v : e) {
          if (pos[v] < 0) break;
          le.push_back(pos[v]);
        }
        if (le.size() == e.size()) local.push_back(std::move(le));
      }
      const int k = static_cast<int>(a.size());
      Object form = local.empty() ? Object()
                                  : ClHyper(HypergraphObject(local), k).form;
      out.push_back(Object::Tuple(
          {Object::Const(Object::Tuple({Object::Int(k)})), Object::Const(form)}));
    }
    return out;
  };
  const std::vector<Object> t1 = types(g1, h1), t2 = types(g2, h2);
  std::map<Object, uint32_t> names;
  for (const Object& t : t1) names.emplace(t, 0);
  for (const Object& t : t2) names.emplace(t, 0);
  uint32_t next = 0;
  for (auto& [t, name] : names) name = next++;
  std::vector<uint32_t> c1, c2;
  for (const Object& t : t1) c1.push_back(names.at(t));
  for (const Object& t : t2) c2.push_back(names.at(t));
  return {c1, c2};
}

Coset IsoBasicCliqueUnchecked(const Graph& g1,
                              const std::vector<std::vector<int>>& h1,
                              const Graph& g2,
                              const std::vector<std::vector<int>>& h2) {
  Coset d = IsoBasicUnchecked(g1, g2);
  if (d.empty() || (h1.empty() && h2.empty())) return d;
  if (h1.size() != h2.size()) return Coset::Empty(g1.n());
  auto [c1, c2] = CoverColors(g1, h1, g2, h2);
  Structure x1(g1.n()), x2(g2.n());
  x1.colors = c1;
  x2.colors = c2;
  x1.AddGraph(g1, 1);
  x2.AddGraph(g2, 1);
  d = StructureIso(x1, x2, d);
  for (const auto& e : h1) x1.tuples.push_back({e, 2, false});
  for (const auto& e : h2) x2.tuples.push_back({e, 2, false});
  return StructureIso(x1, x2, d);
}

}  // namespace

Coset IsoBasic(const Graph& g1, const Graph& g2) {
  if (HasCliqueSeparator(g1) || HasCliqueSeparator(g2)) {
    throw InputError("iso_basic needs clique-separator-free graphs");
  }
  return IsoBasicUnchecked(g1, g2);
}

std::vector<std::vector<int>> CliqueCover(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> alpha(n);
  std::vector<char> alive(n, 1);
  int left = n;
  while (left > 0) {
    std::vector<int> deg(n, 0);
    int low = n;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (int w : g.Neighbors(v)) deg[v] += alive[w];
      low = std::min(low, deg[v]);
    }
    std::vector<int> peel;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && deg[v] == low) peel.push_back(v);
    }
    for (int v : peel) {
      for (int w : g.Neighbors(v)) {
        if (alive[w]) alpha[v].push_back(w);
      }
      alpha[v].push_back(v);
      std::sort(alpha[v].begin(), alpha[v].end());
    }
    for (int v : peel) alive[v] = 0;
    left -= static_cast<int>(peel.size());
  }
  return alpha;
}

Coset IsoBasicClique(const Graph& g1, const std::vector<std::vector<int>>& h1,
                     const Graph& g2, const std::vector<std::vector<int>>& h2) {
  const auto n1 = Normalized(h1, g1.n()), n2 = Normalized(h2, g2.n());
  for (const auto& e : n1) {
    if (!g1.IsClique(e)) throw InputError("hyperedge is not a clique");
  }
  for (const auto& e : n2) {
    if (!g2.IsClique(e)) throw InputError("hyperedge is not a clique");
  }
  if (HasCliqueSeparator(g1) || HasCliqueSeparator(g2)) {
    throw InputError("iso_basic_clique needs clique-separator-free graphs");
  }
  return IsoBasicCliqueUnchecked(g1, n1, g2, n2);
}

// ---- Coset-labeled hypergraphs ---------------------------------------------------

namespace {

std::set<std::vector<int>> MappedEdges(const std::vector<std::vector<int>>& edges,
                                       const Perm& p) {
  std::set<std::vector<int>> out;
  for (const auto& e : edges) {
    std::vector<int> img;
    for (int v : e) img.push_back(p[v]);
    std::sort(img.begin(), img.end());
    out.insert(std::move(img));
  }
  return out;
}

void ValidateLabeled(const CosetLabeledHypergraph& h) {
  if (h.edges.size() != h.labels.size()) {
    throw InputError("every hyperedge needs one label");
  }
  std::set<std::vector<int>> seen;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    std::vector<int> e = h.edges[i];
    std::sort(e.begin(), e.end());
    for (int v : e) {
      if (v < 0 || v >= h.n) throw InputError("hyperedge vertex out of range");
    }
    if (!seen.insert(e).second) throw InputError("repeated hyperedge");
    if (h.labels[i].degree() != h.n || h.labels[i].empty()) {
      throw InputError("label is not a labeling coset over V");
    }
  }
}

}  // namespace

Coset IsoCosetHypergraph(const CosetLabeledHypergraph& h1,
                         const CosetLabeledHypergraph& h2, const Coset& within) {
  ValidateLabeled(h1);
  ValidateLabeled(h2);
  if (h1.n != h2.n || within.degree() != h1.n) {
    throw InputError("hypergraph sizes do not match the coset");
  }
  if (within.empty()) return within;
  const std::set<std::vector<int>> e1 = MappedEdges(h1.edges, Perm(h1.n));
  const std::set<std::vector<int>> e2 = MappedEdges(h2.edges, Perm(h2.n));
  for (const Perm& g : within.group().generators()) {
    if (MappedEdges(h1.edges, g) != e1) {
      throw InputError("coset group does not preserve the hyperedges");
    }
  }
  if (MappedEdges(h1.edges, within.rep()) != e2) {
    throw InputError("coset does not map the hyperedges onto each other");
  }
  const CanonResult c1 = ClSetHyper(LabeledHypergraphObject(h1.edges, h1.labels), h1.n);
  const CanonResult c2 = ClSetHyper(LabeledHypergraphObject(h2.edges, h2.labels), h2.n);
  if (!(c1.form == c2.form)) return Coset::Empty(h1.n);
  const Coset iso(c1.labeling.group(),
                  c1.labeling.rep() * c2.labeling.rep().Inverse());
  return Intersect(iso, within);
}

// ---- Iso_Tree --------------------------------------------------------------------

namespace {

std::vector<int> IntersectSorted(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> TreeCenters(const std::vector<std::vector<int>>& adj) {
  const int m = static_cast<int>(adj.size());
  std::vector<int> deg(m);
  std::vector<int> layer;
  for (int t = 0; t < m; ++t) {
    deg[t] = static_cast<int>(adj[t].size());
    if (deg[t] <= 1) layer.push_back(t);
  }
  int left = m;
  while (left > 2) {
    std::vector<int> next;
    left -= static_cast<int>(layer.size());
    for (int t : layer) {
      for (int y : adj[t]) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// x in the coset with x(src[j]) = tgt[j], if any.
std::optional<Perm> MatchOn(const Coset& c, const std::vector<int>& src,
                            const std::vector<int>& tgt) {
  SearchSpec spec;
  spec.base_prefix = src;
  const size_t s = src.size();
  spec.partial = [&tgt, s](const std::vector<int>&, int depth,
                           const std::vector<int>& images) {
    return static_cast<size_t>(depth) >= s || images[depth] == tgt[depth];
  };
  return FindInCoset(c.group(), c.rep(), spec);
}

class TreeIso {
 public:
  TreeIso(const Graph& g1, const Graph& g2, int k, IsoTreeStats* stats)
      : stats_(stats) {
    const Graph* gs[2] = {&g1, &g2};
    for (int i = 0; i < 2; ++i) {
      sides_[i].g = gs[i];
      sides_[i].gk = KImprove(*gs[i], k);
      sides_[i].td = CliqueSeparatorDecomposition(sides_[i].gk);
      sides_[i].adj = sides_[i].td.Adjacency();
    }
    if (stats_) {
      stats_->k = k;
      stats_->bags = static_cast<int>(sides_[0].td.bags.size());
      stats_->width = sides_[0].td.Width();
    }
  }

  Coset Run() {
    const int n = sides_[0].g->n();
    const auto c1 = TreeCenters(sides_[0].adj), c2 = TreeCenters(sides_[1].adj);
    if (sides_[0].td.bags.size() != sides_[1].td.bags.size() ||
        c1.size() != c2.size()) {
      return Coset::Empty(n);
    }
    std::vector<Coset> parts;
    for (int r2 : c2) {
      Coset r = Iso({0, c1[0], -1}, {1, r2, -1});
      if (!r.empty()) parts.push_back(std::move(r));
    }
    if (parts.empty()) return Coset::Empty(n);
    return Join(parts);
  }

 private:
  struct Side {
    const Graph* g = nullptr;
    Graph gk;
    TreeDecomposition td;
    std::vector<std::vector<int>> adj;
  };
  struct Ref {
    int side, node, parent;
    auto operator<=>(const Ref&) const = default;
  };
  struct Info {
    std::vector<int> bag, vertices, adhesion;
    std::vector<Ref> children;
    std::vector<int> pos, bag_pos;  // vertex -> position, or -1
    int edges = 0;
  };

  const Info& InfoOf(const Ref& r) {
    auto it = info_.find(r);
    if (it != info_.end()) return it->second;
    const Side& s = sides_[r.side];
    const int n = s.g->n();
    Info in;
    in.bag = s.td.bags[r.node];
    if (r.parent >= 0) in.adhesion = IntersectSorted(in.bag, s.td.bags[r.parent]);
    std::set<int> vs(in.bag.begin(), in.bag.end());
    for (int y : s.adj[r.node]) {
      if (y == r.parent) continue;
      Ref c{r.side, y, r.node};
      in.children.push_back(c);
      const Info& ci = InfoOf(c);
      vs.insert(ci.vertices.begin(), ci.vertices.end());
    }
    in.vertices.assign(vs.begin(), vs.end());
    in.pos = PositionsIn(in.vertices, n);
    in.bag_pos = PositionsIn(in.bag, n);
    for (int v : in.vertices) {
      for (int w : s.g->Neighbors(v)) in.edges += v < w && in.pos[w] >= 0;
    }
    return info_.emplace(r, std::move(in)).first->second;
  }

  Coset Iso(const Ref& a, const Ref& b) {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Coset r = Compute(a, b);
    if (stats_) ++stats_->subtree_pairs;
    memo_.emplace(key, r);
    return r;
  }

  // Positions of `vertices` inside the subtree of r.
  std::vector<int> Where(const Ref& r, const std::vector<int>& vertices) {
    const Info& in = InfoOf(r);
    std::vector<int> out;
    for (int v : vertices) out.push_back(in.pos[v]);
    return out;
  }

  // Lambda_c over the bag of `parent`: the adhesion of c goes to labels
  // 0..s-1 through Iso(c; rep) and the ascending labeling of rep's adhesion,
  // the rest of the bag to labels s.. freely.
  Coset Label(const Ref& parent, const Ref& c, const Ref& rep) {
    const Info& p = InfoOf(parent);
    const Info& ci = InfoOf(c);
    const Info& ri = InfoOf(rep);
    const Coset restricted = RestrictCoset(Iso(c, rep), Where(c, ci.adhesion),
                                           Where(rep, ri.adhesion));
    const int m = static_cast<int>(p.bag.size());
    const int s = static_cast<int>(ci.adhesion.size());
    std::vector<int> q;
    for (int v : ci.adhesion) q.push_back(p.bag_pos[v]);
    std::vector<char> in_s(m, 0);
    for (int x : q) in_s[x] = 1;
    std::vector<int> rest;
    for (int i = 0; i < m; ++i) {
      if (!in_s[i]) rest.push_back(i);
    }
    std::vector<Perm> gens;
    for (const Perm& g : restricted.group().generators()) {
      std::vector<int> img(m);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < s; ++i) img[q[i]] = q[g[i]];
      gens.emplace_back(std::move(img));
    }
    if (rest.size() >= 2) {
      std::vector<int> swap(m), cycle(m);
      std::iota(swap.begin(), swap.end(), 0);
      std::iota(cycle.begin(), cycle.end(), 0);
      std::swap(swap[rest[0]], swap[rest[1]]);
      for (size_t j = 0; j < rest.size(); ++j) cycle[rest[j]] = rest[(j + 1) % rest.size()];
      gens.emplace_back(std::move(swap));
      gens.emplace_back(std::move(cycle));
    }
    std::vector<int> img(m);
    for (int i = 0; i < s; ++i) img[q[i]] = restricted.rep()[i];
    for (size_t j = 0; j < rest.size(); ++j) img[rest[j]] = s + static_cast<int>(j);
    return Coset(PermGroup(m, std::move(gens)), Perm(std::move(img)));
  }

  static bool AllEqual(const std::vector<std::vector<int>>& adhesions) {
    if (adhesions.size() < 2) return false;
    for (const auto& a : adhesions) {
      if (a != adhesions[0]) return false;
    }
    return true;
  }

  Coset Compute(const Ref& a, const Ref& b) {
    const Info& A = InfoOf(a);
    const Info& B = InfoOf(b);
    const int na = static_cast<int>(A.vertices.size());
    const Coset none = Coset::Empty(na);
    if (A.vertices.size() != B.vertices.size() || A.bag.size() != B.bag.size() ||
        A.adhesion.size() != B.adhesion.size() ||
        A.children.size() != B.children.size() || A.edges != B.edges) {
      return none;
    }
    // Classes of child subtrees, represented by their first member.
    std::vector<Ref> reps;
    std::vector<int> class_a, class_b;
    std::vector<int> count;
    for (const Ref& c : A.children) {
      int j = 0;
      while (j < static_cast<int>(reps.size()) && Iso(c, reps[j]).empty()) ++j;
      if (j == static_cast<int>(reps.size())) {
        reps.push_back(c);
        count.push_back(0);
      }
      class_a.push_back(j);
      ++count[j];
    }
    for (const Ref& c : B.children) {
      int j = 0;
      while (j < static_cast<int>(reps.size()) && Iso(c, reps[j]).empty()) ++j;
      if (j == static_cast<int>(reps.size()) || --count[j] < 0) return none;
      class_b.push_back(j);
    }
    std::vector<Coset> labels_a, labels_b;
    std::vector<std::vector<int>> adh_a, adh_b;
    for (size_t i = 0; i < A.children.size(); ++i) {
      labels_a.push_back(Label(a, A.children[i], reps[class_a[i]]));
      labels_b.push_back(Label(b, B.children[i], reps[class_b[i]]));
      std::vector<int> ha, hb;
      for (int v : InfoOf(A.children[i]).adhesion) ha.push_back(A.bag_pos[v]);
      for (int v : InfoOf(B.children[i]).adhesion) hb.push_back(B.bag_pos[v]);
      adh_a.push_back(ha);
      adh_b.push_back(hb);
    }
    const bool equal = AllEqual(adh_a);
    if (equal != AllEqual(adh_b)) return none;
    Coset d = equal ? EqualBranch(a, b, class_a, class_b, labels_a, labels_b)
                    : DistinctBranch(a, b, class_a, class_b, labels_a, labels_b,
                                     adh_a, adh_b);
    if (d.empty()) return none;
    return Lift(a, b, d);
  }

  Object BagObject(const Ref& r, const std::vector<int>& classes,
                   const std::vector<Coset>& labels) {
    const Info& in = InfoOf(r);
    const Graph& g = *sides_[r.side].g;
    const int m = static_cast<int>(in.bag.size());
    std::vector<Object> edges, parent, children;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (g.HasEdge(in.bag[i], in.bag[j])) {
          edges.push_back(Object::Set({Object::Int(i), Object::Int(j)}));
        }
      }
    }
    for (int v : in.adhesion) parent.push_back(Object::Int(in.bag_pos[v]));
    for (size_t i = 0; i < labels.size(); ++i) {
      int mult = 0;
      for (size_t j = 0; j < labels.size(); ++j) {
        mult += classes[j] == classes[i] && labels[j] == labels[i];
      }
      children.push_back(Object::Tuple(
          {Object::CosetAtom(labels[i]),
           Object::Const(Object::Tuple({Object::Int(classes[i]), Object::Int(mult)}))}));
    }
    return Object::Tuple({Object::Set(std::move(edges)), Object::Set(std::move(parent)),
                          Object::Set(std::move(children))});
  }

  Coset EqualBranch(const Ref& a, const Ref& b, const std::vector<int>& class_a,
                    const std::vector<int>& class_b,
                    const std::vector<Coset>& labels_a,
                    const std::vector<Coset>& labels_b) {
    if (stats_) ++stats_->equal_branches;
    const int m = static_cast<int>(InfoOf(a).bag.size());
    const CanonResult ca = ClObject(BagObject(a, class_a, labels_a), m);
    const CanonResult cb = ClObject(BagObject(b, class_b, labels_b), m);
    if (!(ca.form == cb.form)) return Coset::Empty(m);
    return Coset(ca.labeling.group(), ca.labeling.rep() * cb.labeling.rep().Inverse());
  }

  Structure BagStructure(const Ref& r, const std::vector<int>& classes,
                         const std::vector<std::vector<int>>& adhesions) {
    const Info& in = InfoOf(r);
    Structure x(static_cast<int>(in.bag.size()));
    x.AddGraph(sides_[r.side].g->Induced(in.bag), 1);
    for (int v : in.adhesion) x.colors[in.bag_pos[v]] = 1;
    for (size_t i = 0; i < adhesions.size(); ++i) {
      x.tuples.push_back({adhesions[i], 2 + static_cast<uint32_t>(classes[i]), false});
    }
    return x;
  }

  Coset DistinctBranch(const Ref& a, const Ref& b, const std::vector<int>& class_a,
                       const std::vector<int>& class_b,
                       const std::vector<Coset>& labels_a,
                       const std::vector<Coset>& labels_b,
                       const std::vector<std::vector<int>>& adh_a,
                       const std::vector<std::vector<int>>& adh_b) {
    if (stats_) ++stats_->distinct_branches;
    const Info& A = InfoOf(a);
    const Info& B = InfoOf(b);
    const Graph ya = sides_[a.side].gk.Induced(A.bag);
    const Graph yb = sides_[b.side].gk.Induced(B.bag);
    Coset d = IsoBasicCliqueUnchecked(ya, adh_a, yb, adh_b);
    if (d.empty()) return d;
    if (!adh_a.empty()) {
      const int m = static_cast<int>(A.bag.size());
      d = IsoCosetHypergraph({m, adh_a, labels_a}, {m, adh_b, labels_b}, d);
      if (d.empty()) return d;
    }
    return StructureIso(BagStructure(a, class_a, adh_a),
                        BagStructure(b, class_b, adh_b), d);
  }

  // Extends a bag map x (bag of a -> bag of y) to the subtrees, matching
  // children whose isomorphisms agree with x on the adhesion.
  std::optional<Perm> Extend(const Ref& a, const Perm& x, const Ref& y) {
    const Info& A = InfoOf(a);
    const Info& Y = InfoOf(y);
    std::vector<int> img(A.vertices.size(), -1);
    for (size_t i = 0; i < A.bag.size(); ++i) {
      img[A.pos[A.bag[i]]] = Y.pos[Y.bag[x[i]]];
    }
    std::vector<char> used(Y.children.size(), 0);
    for (const Ref& c : A.children) {
      const Info& C = InfoOf(c);
      std::vector<int> target;
      for (int s : C.adhesion) target.push_back(Y.bag[x[A.bag_pos[s]]]);
      std::vector<int> sorted_target = target;
      std::sort(sorted_target.begin(), sorted_target.end());
      bool found = false;
      for (size_t j = 0; j < Y.children.size() && !found; ++j) {
        if (used[j]) continue;
        const Ref& c2 = Y.children[j];
        const Info& C2 = InfoOf(c2);
        if (C2.adhesion != sorted_target) continue;
        const Coset r = Iso(c, c2);
        if (r.empty()) continue;
        std::optional<Perm> psi = MatchOn(r, Where(c, C.adhesion), Where(c2, target));
        if (!psi) continue;
        for (int u : C.vertices) {
          img[A.pos[u]] = Y.pos[C2.vertices[(*psi)[C.pos[u]]]];
        }
        used[j] = 1;
        found = true;
      }
      if (!found) return std::nullopt;
    }
    return Perm(std::move(img));
  }

  void Verify(const Ref& a, const Ref& b, const Perm& x) {
    const Info& A = InfoOf(a);
    const Info& B = InfoOf(b);
    const Graph& ga = *sides_[a.side].g;
    const Graph& gb = *sides_[b.side].g;
    for (size_t i = 0; i < A.vertices.size(); ++i) {
      for (int w : ga.Neighbors(A.vertices[i])) {
        if (A.pos[w] < 0) continue;
        if (!gb.HasEdge(B.vertices[x[i]], B.vertices[x[A.pos[w]]])) {
          throw ContractError("lifted map is not an isomorphism");
        }
      }
    }
  }

  // Iso of the subtrees from the bag-level coset d: a section of its group,
  // the kernel of the restriction to the bag, and one lifted representative.
  Coset Lift(const Ref& a, const Ref& b, const Coset& d) {
    const Info& A = InfoOf(a);
    const int na = static_cast<int>(A.vertices.size());
    std::optional<Perm> rep = Extend(a, d.rep(), b);
    if (!rep) throw ContractError("bag isomorphism does not extend");
    Verify(a, b, *rep);
    std::vector<Perm> gens;
    for (const Perm& g : d.group().generators()) {
      std::optional<Perm> e = Extend(a, g, a);
      if (!e) throw ContractError("bag automorphism does not extend");
      Verify(a, a, *e);
      gens.push_back(std::move(*e));
    }
    for (size_t i = 0; i < A.children.size(); ++i) {
      const Ref& c = A.children[i];
      const Info& C = InfoOf(c);
      const PermGroup k = Iso(c, c).group().PointwiseStabilizer(Where(c, C.adhesion));
      for (const Perm& g : k.generators()) {
        std::vector<int> img(na);
        std::iota(img.begin(), img.end(), 0);
        for (int u : C.vertices) img[A.pos[u]] = A.pos[C.vertices[g[C.pos[u]]]];
        gens.emplace_back(std::move(img));
      }
      // Exchange with the first earlier sibling that matches c on the
      // adhesion pointwise.
      for (size_t j = 0; j < i; ++j) {
        const Ref& c0 = A.children[j];
        const Info& C0 = InfoOf(c0);
        if (C0.adhesion != C.adhesion) continue;
        const Coset r = Iso(c0, c);
        if (r.empty()) continue;
        std::optional<Perm> psi =
            MatchOn(r, Where(c0, C0.adhesion), Where(c, C.adhesion));
        if (!psi) continue;
        std::vector<int> img(na);
        std::iota(img.begin(), img.end(), 0);
        for (int u : C0.vertices) {
          const int v = C.vertices[(*psi)[C0.pos[u]]];
          if (u == v) continue;
          img[A.pos[u]] = A.pos[v];
          img[A.pos[v]] = A.pos[u];
        }
        gens.emplace_back(std::move(img));
        break;
      }
    }
    return Coset(PermGroup(na, std::move(gens)), std::move(*rep));
  }

  IsoTreeStats* stats_;
  Side sides_[2];
  std::map<Ref, Info> info_;
  std::map<std::pair<Ref, Ref>, Coset> memo_;
};

}  // namespace

Coset IsoTreewidth(const Graph& g1, const Graph& g2, IsoTreeStats* stats) {
  if (!g1.IsConnected() || !g2.IsConnected()) {
    throw InputError("iso_treewidth needs connected graphs");
  }
  const int n = g1.n();
  if (n != g2.n() || g1.num_edges() != g2.num_edges()) return Coset::Empty(n);
  if (n <= 1) return Coset::All(n);
  const int k = std::max({1, MinFillWidth(g1), MinFillWidth(g2)});
  TreeIso t(g1, g2, k, stats);
  return t.Run();
}

}  // namespace cosetcanon
