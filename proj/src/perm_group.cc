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
#include <numeric>
#include <set>
#include <sstream>

namespace cosetcanon {

BigInt Factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// ---- Chain construction ---------------------------------------------------

std::shared_ptr<PermGroup::Chain> PermGroup::Build(
    int degree, std::vector<Perm> gens, const std::vector<int>& base_prefix) {
  auto c = std::make_shared<Chain>();
  c->degree = degree;
  std::vector<char> in_base(degree, 0);
  for (int p : base_prefix) {
    if (p < 0 || p >= degree) throw InputError("base point out of range");
    if (in_base[p]) continue;
    in_base[p] = 1;
    c->base.push_back(p);
  }
  for (int p = 0; p < degree; ++p) {
    if (!in_base[p]) c->base.push_back(p);
  }
  c->levels.resize(degree);
  for (int i = 0; i < degree; ++i) {
    Level& l = c->levels[i];
    l.point = c->base[i];
    l.orbit = {l.point};
    l.index.assign(degree, -1);
    l.index[l.point] = 0;
    l.u = {Perm(degree)};
    l.uinv = {Perm(degree)};
    l.done = {0};
  }

  for (Perm& g : gens) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    Perm h = g;
    int stop = Strip(*c, h, 0);
    if (h.IsIdentity()) continue;
    c->generators.push_back(g);
    // Insert the residue and restore completeness from its level upwards.
    // Levels below `stop` were complete before and stay complete.
    int i = stop;
    const int sid = static_cast<int>(c->strong.size());
    c->strong.push_back(h);
    for (int l = 0; l <= stop; ++l) c->levels[l].gens.push_back(sid);
    for (int l = 0; l <= stop; ++l) ExtendOrbit(*c, l);
    while (i >= 0) {
      Level& lev = c->levels[i];
      bool restarted = false;
      for (size_t pos = 0; pos < lev.orbit.size() && !restarted; ++pos) {
        while (lev.done[pos] < static_cast<int>(lev.gens.size())) {
          const Perm& s = c->strong[lev.gens[lev.done[pos]]];
          const int q = s[lev.orbit[pos]];
          const int qpos = lev.index[q];
          Perm r = lev.u[pos] * s * lev.uinv[qpos];
          ++lev.done[pos];
          const int j = Strip(*c, r, i + 1);
          if (r.IsIdentity()) continue;
          const int rid = static_cast<int>(c->strong.size());
          c->strong.push_back(r);
          for (int l = i + 1; l <= j; ++l) {
            c->levels[l].gens.push_back(rid);
            ExtendOrbit(*c, l);
          }
          i = j;
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }
  c->order = 1;
  for (const Level& l : c->levels) c->order *= static_cast<int>(l.orbit.size());
  return c;
}

void PermGroup::ExtendOrbit(Chain& c, int level) {
  Level& l = c.levels[level];
  for (size_t pos = 0; pos < l.orbit.size(); ++pos) {
    for (int gid : l.gens) {
      const Perm& s = c.strong[gid];
      const int q = s[l.orbit[pos]];
      if (l.index[q] >= 0) continue;
      l.index[q] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(q);
      l.u.push_back(l.u[pos] * s);
      l.uinv.push_back(l.u.back().Inverse());
      l.done.push_back(0);
    }
  }
}

int PermGroup::Strip(const Chain& c, Perm& h, int from_level) {
  for (int i = from_level; i < c.degree; ++i) {
    const Level& l = c.levels[i];
    const int x = h[l.point];
    const int pos = l.index[x];
    if (pos < 0) return i;
    if (pos > 0) h = h * l.uinv[pos];
  }
  return c.degree;
}

// ---- Basic accessors ------------------------------------------------------

PermGroup::PermGroup() : PermGroup(0) {}

PermGroup::PermGroup(int degree) : chain_(Build(degree, {}, {})) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     const std::vector<int>& base_prefix)
    : chain_(Build(degree, std::move(generators), base_prefix)) {}

PermGroup PermGroup::Symmetric(int degree) {
  std::vector<int> all(degree);
  std::iota(all.begin(), all.end(), 0);
  return Symmetric(degree, all);
}

PermGroup PermGroup::Symmetric(int degree, const std::vector<int>& support) {
  std::vector<Perm> gens;
  if (support.size() >= 2) {
    gens.push_back(Perm::FromCycleList({{support[0], support[1]}}, degree));
  }
  if (support.size() >= 3) {
    gens.push_back(Perm::FromCycleList({support}, degree));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::Alternating(int degree, const std::vector<int>& support) {
  std::vector<Perm> gens;
  for (size_t i = 2; i < support.size(); ++i) {
    gens.push_back(
        Perm::FromCycleList({{support[0], support[1], support[i]}}, degree));
  }
  return PermGroup(degree, std::move(gens));
}

bool PermGroup::Contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  Perm h = p;
  Strip(*chain_, h, 0);
  return h.IsIdentity();
}

bool PermGroup::IsSubgroupOf(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  for (const Perm& g : generators()) {
    if (!other.Contains(g)) return false;
  }
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.IsSubgroupOf(b);
}

PermGroup PermGroup::WithBase(const std::vector<int>& base_prefix) const {
  PermGroup g;
  g.chain_ = Build(degree(), StrongGenerators(), base_prefix);
  return g;
}

bool PermGroup::HasAscendingBase() const {
  for (int i = 0; i < degree(); ++i) {
    if (chain_->base[i] != i) return false;
  }
  return true;
}

const Perm& PermGroup::Transversal(int level, int point) const {
  const Level& l = chain_->levels[level];
  return l.u[l.index[point]];
}

const Perm& PermGroup::TransversalInverse(int level, int point) const {
  const Level& l = chain_->levels[level];
  return l.uinv[l.index[point]];
}

std::vector<Perm> PermGroup::LevelGenerators(int level) const {
  std::vector<Perm> r;
  for (int gid : chain_->levels[level].gens) r.push_back(chain_->strong[gid]);
  return r;
}

std::vector<Perm> PermGroup::StrongGenerators() const { return chain_->strong; }

std::vector<int> PermGroup::Orbit(int point) const {
  std::vector<char> seen(degree(), 0);
  std::vector<int> orbit = {point};
  seen[point] = 1;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& s : generators()) {
      const int q = s[orbit[i]];
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<int>> PermGroup::OrbitsOn(
    const std::vector<int>& set) const {
  std::vector<char> seen(degree(), 0);
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> orbits;
  for (int p : sorted) {
    if (seen[p]) continue;
    std::vector<int> o = Orbit(p);
    for (int q : o) seen[q] = 1;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<std::vector<int>> PermGroup::Orbits() const {
  std::vector<int> all(degree());
  std::iota(all.begin(), all.end(), 0);
  return OrbitsOn(all);
}

bool PermGroup::IsTransitiveOn(const std::vector<int>& set) const {
  if (set.empty()) return true;
  std::vector<int> o = Orbit(set[0]);
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  return o == s;
}

PermGroup PermGroup::PointwiseStabilizer(const std::vector<int>& points) const {
  if (points.empty()) return *this;
  PermGroup b = WithBase(points);
  std::vector<int> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const int k = static_cast<int>(distinct.size());
  return PermGroup(degree(), k < degree() ? b.LevelGenerators(k)
                                          : std::vector<Perm>{});
}

PermGroup PermGroup::Conjugate(const Perm& p) const {
  std::vector<Perm> gens;
  for (const Perm& g : StrongGenerators()) gens.push_back(g.ConjugateBy(p));
  return PermGroup(degree(), std::move(gens));
}

std::vector<Perm> PermGroup::Elements() const {
  std::vector<Perm> cur = {Perm(degree())};
  for (int i = degree() - 1; i >= 0; --i) {
    const Level& l = chain_->levels[i];
    if (l.orbit.size() == 1) continue;
    std::vector<Perm> next;
    next.reserve(cur.size() * l.orbit.size());
    for (const Perm& s : cur) {
      for (const Perm& u : l.u) next.push_back(s * u);
    }
    cur = std::move(next);
  }
  return cur;
}

Perm PermGroup::MinimalCosetRep(const Perm& rho) const {
  if (!HasAscendingBase()) return WithBase({}).MinimalCosetRep(rho);
  Perm cur = rho;
  for (int i = 0; i < degree(); ++i) {
    const Level& l = chain_->levels[i];
    if (l.orbit.size() == 1) continue;
    int best = 0;
    for (size_t pos = 1; pos < l.orbit.size(); ++pos) {
      if (cur[l.orbit[pos]] < cur[l.orbit[best]]) best = static_cast<int>(pos);
    }
    if (best != 0) cur = l.u[best] * cur;
  }
  return cur;
}

const std::vector<Perm>& PermGroup::CanonicalGenerators() const {
  if (!HasAscendingBase()) {
    // The canonical set only depends on the group; compute it once on an
    // ascending-base copy and keep it here.
    std::call_once(chain_->canonical_once, [this] {
      chain_->canonical = WithBase({}).CanonicalGenerators();
    });
    return chain_->canonical;
  }
  std::call_once(chain_->canonical_once, [this] {
    const Chain& c = *chain_;
    for (int i = 0; i < c.degree; ++i) {
      const Level& l = c.levels[i];
      std::vector<int> pts = l.orbit;
      std::sort(pts.begin(), pts.end());
      for (int p : pts) {
        if (p == l.point) continue;
        Perm cur = l.u[l.index[p]];
        for (int j = i + 1; j < c.degree; ++j) {
          const Level& m = c.levels[j];
          if (m.orbit.size() == 1) continue;
          int best = 0;
          for (size_t pos = 1; pos < m.orbit.size(); ++pos) {
            if (cur[m.orbit[pos]] < cur[m.orbit[best]]) {
              best = static_cast<int>(pos);
            }
          }
          if (best != 0) cur = m.u[best] * cur;
        }
        c.canonical.push_back(std::move(cur));
      }
    }
  });
  return chain_->canonical;
}

std::string PermGroup::ToString() const {
  std::ostringstream out;
  for (const Perm& g : generators()) out << g.ToCycles() << "\n";
  return out.str();
}

// ---- Algorithms -----------------------------------------------------------

PermGroup BuildGroup(int degree, const std::vector<Perm>& generators) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw InputError("generators on mixed domains");
  }
  return PermGroup(degree, generators);
}

std::vector<std::vector<int>> OrbitPartition(const PermGroup& g,
                                             const std::vector<int>& a) {
  std::vector<char> in(g.degree(), 0);
  for (int x : a) in[x] = 1;
  for (const Perm& s : g.generators()) {
    for (int x : a) {
      if (!in[s[x]]) throw InputError("set is not invariant under the group");
    }
  }
  return g.OrbitsOn(a);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns true if a merge happened.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Closes the partition given by `uf` on `a` under the group, starting from
// the pending merged pairs.
void CloseBlocks(const PermGroup& g, UnionFind& uf,
                 std::vector<std::pair<int, int>> pending) {
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const Perm& s : g.generators()) {
      const int fx = uf.Find(s[x]);
      const int fy = uf.Find(s[y]);
      if (fx != fy) {
        uf.Union(fx, fy);
        pending.emplace_back(fx, fy);
      }
    }
  }
}

std::vector<std::vector<int>> PartitionFromUf(UnionFind& uf,
                                              const std::vector<int>& a) {
  std::map<int, std::vector<int>> classes;
  for (int x : a) classes[uf.Find(x)].push_back(x);
  std::vector<std::vector<int>> r;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    r.push_back(std::move(members));
  }
  std::sort(r.begin(), r.end());
  return r;
}

bool StrictlyCoarser(const std::vector<std::vector<int>>& coarse,
                     const std::vector<std::vector<int>>& fine) {
  if (coarse.size() >= fine.size()) return false;
  // Every fine block inside some coarse block.
  std::map<int, int> block_of;
  for (size_t i = 0; i < coarse.size(); ++i) {
    for (int x : coarse[i]) block_of[x] = static_cast<int>(i);
  }
  for (const auto& b : fine) {
    for (int x : b) {
      if (block_of[x] != block_of[b[0]]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> MinimalBlockContaining(
    const PermGroup& g, const std::vector<int>& a,
    const std::vector<int>& seed) {
  UnionFind uf(g.degree());
  std::vector<std::pair<int, int>> pending;
  for (size_t i = 1; i < seed.size(); ++i) {
    if (uf.Union(seed[0], seed[i])) pending.emplace_back(seed[0], seed[i]);
  }
  CloseBlocks(g, uf, pending);
  return PartitionFromUf(uf, a);
}

std::vector<std::vector<int>> MinimalBlockSystem(const PermGroup& g,
                                                 const std::vector<int>& a) {
  if (!g.IsTransitiveOn(a)) throw InputError("group is not transitive on set");
  std::vector<std::vector<int>> singletons;
  for (int x : a) singletons.push_back({x});
  std::sort(singletons.begin(), singletons.end());
  if (a.size() <= 2) return singletons;
  const int alpha = *std::min_element(a.begin(), a.end());

  // Enumerate all non-trivial block systems by closing under extra merges.
  std::set<std::vector<std::vector<int>>> systems;
  std::vector<std::vector<std::vector<int>>> queue;
  auto add = [&](std::vector<std::vector<int>> p) {
    if (p.size() <= 1) return;
    if (systems.insert(p).second) queue.push_back(std::move(p));
  };
  for (int b : a) {
    if (b != alpha) add(MinimalBlockContaining(g, a, {alpha, b}));
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const auto p = queue[qi];
    const std::vector<int>* home = nullptr;
    for (const auto& blk : p) {
      if (std::binary_search(blk.begin(), blk.end(), alpha)) home = &blk;
    }
    for (const auto& blk : p) {
      if (&blk == home) continue;
      UnionFind uf(g.degree());
      std::vector<std::pair<int, int>> pending;
      for (const auto& b : p) {
        for (size_t i = 1; i < b.size(); ++i) uf.Union(b[0], b[i]);
      }
      uf.Union(alpha, blk[0]);
      pending.emplace_back(alpha, blk[0]);
      for (const auto& b : p) {
        for (size_t i = 1; i < b.size(); ++i) pending.emplace_back(b[0], b[i]);
      }
      CloseBlocks(g, uf, pending);
      add(PartitionFromUf(uf, a));
    }
  }
  const std::vector<std::vector<int>>* best = nullptr;
  for (const auto& p : systems) {
    bool maximal = true;
    for (const auto& q : systems) {
      if (StrictlyCoarser(q, p)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (best == nullptr || (*best)[0].size() > p[0].size() ||
        ((*best)[0].size() == p[0].size() && p < *best)) {
      best = &p;
    }
  }
  if (best == nullptr) return singletons;
  return *best;
}

PermGroup SetwiseStabilizer(const PermGroup& g, const std::vector<int>& set) {
  return PartitionStabilizer(g, {set});
}

PermGroup PartitionStabilizer(const PermGroup& g,
                              const std::vector<std::vector<int>>& parts) {
  const int n = g.degree();
  std::vector<int> cell(n, -1);
  std::vector<int> prefix;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int x : parts[i]) {
      cell[x] = static_cast<int>(i);
      prefix.push_back(x);
    }
  }
  // Quick exit: generators already preserve every part.
  bool all = true;
  for (const Perm& s : g.generators()) {
    for (int x = 0; x < n && all; ++x) all = cell[s[x]] == cell[x];
  }
  if (all) return g;
  SearchSpec spec;
  spec.base_prefix = prefix;
  spec.partial = [&cell](const std::vector<int>& base, int depth,
                         const std::vector<int>& images) {
    return cell[images[depth]] == cell[base[depth]];
  };
  spec.full = [&cell, n](const Perm& p) {
    for (int x = 0; x < n; ++x) {
      if (cell[p[x]] != cell[x]) return false;
    }
    return true;
  };
  return FindSubgroup(g, spec);
}

std::vector<Perm> CosetTransversal(const PermGroup& g, const PermGroup& h) {
  if (!h.IsSubgroupOf(g)) throw InputError("subgroup is not contained");
  // d*H is identified by the least element of the right coset H*d^-1; its
  // inverse lies in d*H and depends only on the coset.
  auto normal = [&h](const Perm& d) {
    return h.MinimalCosetRep(d.Inverse()).Inverse();
  };
  std::set<Perm> seen = {Perm(g.degree())};
  std::vector<Perm> reps = {Perm(g.degree())};
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const Perm& s : g.generators()) {
      Perm c = normal(s * reps[i]);
      if (seen.insert(c).second) reps.push_back(std::move(c));
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

GiantType IsGiant(const PermGroup& g, const std::vector<int>& w) {
  if (w.size() <= 1) return GiantType::kSymmetric;
  PermGroup r = RestrictToSet(g, w);
  const BigInt f = Factorial(static_cast<int>(w.size()));
  if (r.order() == f) return GiantType::kSymmetric;
  if (w.size() >= 3 && r.order() * 2 == f) return GiantType::kAlternating;
  return GiantType::kNeither;
}

PermGroup NormalClosure(const PermGroup& g, const PermGroup& h) {
  if (!h.IsSubgroupOf(g)) throw InputError("subgroup is not contained");
  std::vector<Perm> gens = h.generators();
  PermGroup n(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Perm> cur = n.generators();
    for (const Perm& x : cur) {
      for (const Perm& s : g.generators()) {
        Perm c = x.ConjugateBy(s);
        if (!n.Contains(c)) {
          gens.push_back(std::move(c));
          n = PermGroup(g.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return n;
}

std::vector<int> RelativeBase(const PermGroup& d, const PermGroup& p) {
  if (!p.IsSubgroupOf(d)) throw InputError("subgroup is not contained");
  std::vector<int> x;
  PermGroup cur = d;
  auto inside = [&p](const PermGroup& s) { return s.IsSubgroupOf(p); };
  while (!inside(cur)) {
    BigInt best_index = -1;
    int best_point = -1;
    int fallback = -1;
    const BigInt cur_index = cur.order() / p.PointwiseStabilizer(x).order();
    for (int v = 0; v < d.degree(); ++v) {
      if (std::find(x.begin(), x.end(), v) != x.end()) continue;
      std::vector<int> y = x;
      y.push_back(v);
      PermGroup s = d.PointwiseStabilizer(y);
      if (s.order() == cur.order()) continue;
      if (fallback < 0) fallback = v;
      const BigInt idx = s.order() / p.PointwiseStabilizer(y).order();
      if (idx < cur_index && (best_point < 0 || idx < best_index)) {
        best_index = idx;
        best_point = v;
      }
    }
    const int v = best_point >= 0 ? best_point : fallback;
    if (v < 0) throw ContractError("relative base search stalled");
    x.push_back(v);
    cur = d.PointwiseStabilizer(x);
  }
  return x;
}

Perm RestrictPerm(const Perm& p, const std::vector<int>& set,
                  const std::vector<int>& position) {
  std::vector<int> img(set.size());
  for (size_t i = 0; i < set.size(); ++i) {
    const int q = position[p[set[i]]];
    if (q < 0) throw InputError("set is not invariant under permutation");
    img[i] = q;
  }
  return Perm(std::move(img));
}

PermGroup RestrictToSet(const PermGroup& g, const std::vector<int>& set) {
  std::vector<int> position(g.degree(), -1);
  for (size_t i = 0; i < set.size(); ++i) position[set[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    gens.push_back(RestrictPerm(s, set, position));
  }
  return PermGroup(static_cast<int>(set.size()), std::move(gens));
}

// ---- Backtrack search -----------------------------------------------------

namespace {

class Searcher {
 public:
  Searcher(const PermGroup& g, const SearchSpec& spec)
      : g_(g), spec_(spec), images_(g.degree()) {}

  // Depth-first over G^(level) * d, with images_[0..level) already set.
  std::optional<Perm> Run(int level, const Perm& d) {
    const int n = g_.degree();
    if (level == n) {
      if (!spec_.full || spec_.full(d)) return d;
      return std::nullopt;
    }
    const std::vector<int>& orbit = g_.basic_orbit(level);
    // Visit children in order of their image to keep the search canonical.
    std::vector<std::pair<int, int>> order;
    order.reserve(orbit.size());
    for (int p : orbit) order.emplace_back(d[p], p);
    std::sort(order.begin(), order.end());
    for (auto [img, p] : order) {
      images_[level] = img;
      if (spec_.partial && !spec_.partial(g_.base(), level, images_)) continue;
      auto r = Run(level + 1, p == g_.base_point(level)
                                  ? d
                                  : g_.Transversal(level, p) * d);
      if (r) return r;
    }
    return std::nullopt;
  }

  std::vector<int>& images() { return images_; }

 private:
  const PermGroup& g_;
  const SearchSpec& spec_;
  std::vector<int> images_;
};

}  // namespace

std::optional<Perm> FindInCoset(const PermGroup& g, const Perm& rho,
                                const SearchSpec& spec) {
  PermGroup b = spec.base_prefix.empty() ? g : g.WithBase(spec.base_prefix);
  Searcher s(b, spec);
  return s.Run(0, rho);
}

PermGroup FindSubgroup(const PermGroup& g, const SearchSpec& spec) {
  PermGroup b = spec.base_prefix.empty() ? g : g.WithBase(spec.base_prefix);
  const int n = b.degree();
  std::vector<Perm> found;
  Searcher s(b, spec);
  for (int level = n - 1; level >= 0; --level) {
    const std::vector<int>& orbit = b.basic_orbit(level);
    if (orbit.size() == 1) continue;
    const int beta = b.base_point(level);
    // Orbit of beta under the subgroup found so far.
    std::vector<char> reached(n, 0);
    auto recompute = [&] {
      std::fill(reached.begin(), reached.end(), 0);
      std::vector<int> q = {beta};
      reached[beta] = 1;
      for (size_t i = 0; i < q.size(); ++i) {
        for (const Perm& k : found) {
          if (!reached[k[q[i]]]) {
            reached[k[q[i]]] = 1;
            q.push_back(k[q[i]]);
          }
        }
      }
    };
    recompute();
    for (int j = 0; j < level; ++j) s.images()[j] = b.base_point(j);
    bool prefix_ok = true;
    for (int j = 0; j < level && prefix_ok; ++j) {
      prefix_ok = !spec.partial || spec.partial(b.base(), j, s.images());
    }
    if (!prefix_ok) throw ContractError("subgroup predicate rejects identity");
    std::vector<int> pts = orbit;
    std::sort(pts.begin(), pts.end());
    for (int p : pts) {
      if (reached[p]) continue;
      s.images()[level] = p;
      if (spec.partial && !spec.partial(b.base(), level, s.images())) continue;
      auto r = s.Run(level + 1, b.Transversal(level, p));
      if (r) {
        found.push_back(*r);
        recompute();
      }
    }
  }
  return PermGroup(n, std::move(found));
}

}  // namespace cosetcanon
