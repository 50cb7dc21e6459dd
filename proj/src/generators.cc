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

#include "cosetcanon/generators.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace cosetcanon {

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Perm RandomPermutation(Rng& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

Perm RandomSparsePermutation(Rng& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  if (n < 2) return Perm(std::move(img));
  std::vector<int> pts = img;
  std::shuffle(pts.begin(), pts.end(), rng);
  const int k = UniformInt(rng, 2, n);
  // One or two cycles on the first k shuffled points.
  const int split = k >= 4 && UniformInt(rng, 0, 1) ? UniformInt(rng, 2, k - 2) : k;
  for (int j = 0; j < split; ++j) img[pts[j]] = pts[(j + 1) % split];
  for (int j = split; j < k; ++j) img[pts[j]] = pts[j + 1 < k ? j + 1 : split];
  return Perm(std::move(img));
}

PermGroup RandomSubgroup(Rng& rng, int n, int max_gens) {
  std::vector<Perm> gens;
  const int k = UniformInt(rng, 0, max_gens);
  for (int i = 0; i < k; ++i) gens.push_back(RandomSparsePermutation(rng, n));
  return PermGroup(n, std::move(gens));
}

Coset RandomLabelingCoset(Rng& rng, int n, int max_gens) {
  return Coset(RandomSubgroup(rng, n, max_gens), RandomPermutation(rng, n));
}

std::vector<Coset> RandomCosetFamily(Rng& rng, int n, int t) {
  std::vector<Coset> out;
  PermGroup shared = RandomSubgroup(rng, n);
  for (int i = 0; i < t; ++i) {
    Perm rho = RandomPermutation(rng, n);
    if (UniformInt(rng, 0, 2) > 0) {
      // Delta_i rho_i with rho_i^-1 Delta_i rho_i = shared.
      out.emplace_back(shared.Conjugate(rho.Inverse()), rho);
    } else {
      out.push_back(RandomLabelingCoset(rng, n));
    }
  }
  return out;
}

PairList RandomDigraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  PairList e;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return e;
}

Object RandomObject(Rng& rng, int n, int depth) {
  const int r = UniformInt(rng, 0, depth > 0 ? 4 : 1);
  if (r == 0) return Object::Int(UniformInt(rng, 0, n - 1));
  if (r == 1 && depth > 0 && UniformInt(rng, 0, 2) == 0) {
    return Object::CosetAtom(RandomLabelingCoset(rng, n));
  }
  if (r == 1) return Object::Int(UniformInt(rng, 0, n - 1));
  std::vector<Object> items;
  const int k = UniformInt(rng, 0, 3);
  for (int i = 0; i < k; ++i) items.push_back(RandomObject(rng, n, depth - 1));
  if (r == 2) return Object::Tuple(std::move(items));
  if (r == 3) return Object::Set(std::move(items));
  return Object::Const(Object::Int(UniformInt(rng, 0, 3)));
}

std::vector<std::vector<int>> RandomTuples(Rng& rng, int n, int arity,
                                           int count) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<int> t(arity);
    for (int& v : t) v = UniformInt(rng, 0, n - 1);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<int>> RandomEdges(Rng& rng, int n, int count,
                                          bool uniform) {
  std::set<std::vector<int>> edges;
  const int size = UniformInt(rng, 1, std::max(1, n - 1));
  for (int attempt = 0; attempt < 4 * count && (int)edges.size() < count;
       ++attempt) {
    const int s = uniform ? size : UniformInt(rng, 0, n);
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(s);
    std::sort(pts.begin(), pts.end());
    edges.insert(std::move(pts));
  }
  return {edges.begin(), edges.end()};
}

CosetMap RandomCosetMap(Rng& rng, int n, int max_domain) {
  CosetMap m;
  m.delta_rho = RandomLabelingCoset(rng, n, 2);
  const PermGroup& delta = m.delta_rho.group();
  std::vector<Coset> pool;
  for (int i = 0; i < 2; ++i) pool.push_back(RandomLabelingCoset(rng, n));
  std::set<Object> seen;
  auto act = [](const Object& c, const Perm& g) { return Apply(c, g); };
  const int seeds = UniformInt(rng, 1, 3);
  for (int s = 0; s < seeds; ++s) {
    Coset seed = RandomCosetFamily(rng, n, 1)[0];
    Coset label = RandomLabelingCoset(rng, n);
    const bool equivariant = UniformInt(rng, 0, 1) == 1;
    auto orbit = OrbitStabilizer(delta, Object::CosetAtom(seed), act);
    if ((int)(m.domain.size() + orbit.orbit.size()) > max_domain) continue;
    for (size_t i = 0; i < orbit.orbit.size(); ++i) {
      if (!seen.insert(orbit.orbit[i]).second) continue;
      m.domain.push_back(orbit.orbit[i].coset());
      const Perm& g = orbit.transversal[i];
      m.images.push_back(equivariant ? g.Inverse() * label
                                     : pool[UniformInt(rng, 0, 1)]);
    }
  }
  return m;
}

namespace {

void Reconnect(Rng& rng, Graph& g) {
  for (;;) {
    const auto comps = g.Components();
    if (comps.size() <= 1) return;
    const auto& a = comps[0];
    const auto& b = comps[UniformInt(rng, 1, static_cast<int>(comps.size()) - 1)];
    g.AddEdge(a[UniformInt(rng, 0, static_cast<int>(a.size()) - 1)],
              b[UniformInt(rng, 0, static_cast<int>(b.size()) - 1)]);
  }
}

}  // namespace

Graph RandomConnectedGraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.AddEdge(u, v);
    }
  }
  Reconnect(rng, g);
  return g;
}

Graph RandomPartialKTree(Rng& rng, int n, int k, double keep) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cliques;
  std::vector<int> first(std::min(n, k + 1));
  std::iota(first.begin(), first.end(), 0);
  for (size_t i = 0; i < first.size(); ++i) {
    for (size_t j = i + 1; j < first.size(); ++j) edges.emplace_back(first[i], first[j]);
  }
  cliques.push_back(first);
  for (int v = k + 1; v < n; ++v) {
    // Attach v to a k-subset of an existing (k+1)-clique.
    std::vector<int> c = cliques[UniformInt(rng, 0, static_cast<int>(cliques.size()) - 1)];
    c.erase(c.begin() + UniformInt(rng, 0, static_cast<int>(c.size()) - 1));
    for (int u : c) edges.emplace_back(u, v);
    c.push_back(v);
    cliques.push_back(std::move(c));
  }
  std::bernoulli_distribution coin(keep);
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (coin(rng)) g.AddEdge(u, v);
  }
  Reconnect(rng, g);
  Perm relabel = RandomPermutation(rng, n);
  return g.Relabel(relabel);
}

Graph SwapEdges(Rng& rng, const Graph& g) {
  const auto edges = g.Edges();
  const int m = static_cast<int>(edges.size());
  for (int attempt = 0; attempt < 200 && m >= 2; ++attempt) {
    auto [a, b] = edges[UniformInt(rng, 0, m - 1)];
    auto [c, d] = edges[UniformInt(rng, 0, m - 1)];
    if (UniformInt(rng, 0, 1)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d || g.HasEdge(a, d) || g.HasEdge(c, b)) {
      continue;
    }
    const std::pair<int, int> ab(std::min(a, b), std::max(a, b));
    const std::pair<int, int> cd(std::min(c, d), std::max(c, d));
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) {
      if (e != ab && e != cd) out.push_back(e);
    }
    out.emplace_back(a, d);
    out.emplace_back(c, b);
    Graph h = Graph::FromEdges(g.n(), out);
    if (h.IsConnected()) return h;
  }
  return g;
}

std::vector<Coset> SharedCosetFamily(const PermGroup& can, const std::vector<Perm>& reps) {
  std::vector<Coset> out;
  for (const Perm& r : reps) out.emplace_back(can.Conjugate(r.Inverse()), r);
  return out;
}

std::vector<Coset> StructuredCosetFamily(Rng& rng, int n, int t) {
  std::vector<Perm> gens;
  const int shape = UniformInt(rng, 0, 3);
  const int k = UniformInt(rng, 1, n);
  if (shape == 0) {
    std::vector<int> first(k);
    std::iota(first.begin(), first.end(), 0);
    gens = PermGroup::Symmetric(n, first).generators();
  } else if (shape == 1 && 2 * k <= n && k >= 2) {
    // Diagonal Sym(k) on two copies.
    std::vector<int> a(n), b(n);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::swap(a[0], a[1]);
    std::swap(a[k], a[k + 1]);
    for (int i = 0; i < k; ++i) {
      b[i] = (i + 1) % k;
      b[k + i] = k + (i + 1) % k;
    }
    gens = {Perm(a), Perm(b)};
  } else if (shape == 2 && k >= 2) {
    // Blocks of size 2.
    for (int i = 0; i + 1 < k; i += 2) gens.push_back(Perm::FromCycleList({{i, i + 1}}, n));
    if (k >= 4) gens.push_back(Perm::FromCycleList({{0, 2}, {1, 3}}, n));
  } else {
    gens = RandomSubgroup(rng, n).generators();
  }
  const PermGroup can(n, gens);
  std::vector<Perm> reps;
  for (int i = 0; i < t; ++i) reps.push_back(RandomPermutation(rng, n));
  return SharedCosetFamily(can, reps);
}

}  // namespace cosetcanon
