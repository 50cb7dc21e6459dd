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

#include "cosetcanon/oracle.h"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>

namespace cosetcanon {

namespace {

void CheckCap(int n) {
  if (n > kOracleMaxDegree) throw InputError("instance above oracle size cap");
}

}  // namespace

std::vector<Perm> AllPermutations(int n) {
  CheckCap(n);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

PermGroup GroupFromElements(int n, const std::vector<Perm>& elements) {
  PermGroup g(n);
  std::vector<Perm> gens;
  for (const Perm& p : elements) {
    if (g.Contains(p)) continue;
    gens.push_back(p);
    g = PermGroup(n, gens);
  }
  return g;
}

PermGroup BruteForceAut(const Object& x, int n) {
  std::vector<Perm> auts;
  for (const Perm& s : AllPermutations(n)) {
    if (IsAutomorphism(x, s)) auts.push_back(s);
  }
  PermGroup g = GroupFromElements(n, auts);
  if (g.order() != BigInt(auts.size())) {
    throw ContractError("automorphisms do not form a group");
  }
  return g;
}

CanonResult BruteForceCanon(const Object& x, int n) {
  std::vector<Perm> all = AllPermutations(n);
  Object best = Apply(x, all[0]);
  size_t arg = 0;
  for (size_t i = 1; i < all.size(); ++i) {
    Object y = Apply(x, all[i]);
    if (y < best) {
      best = std::move(y);
      arg = i;
    }
  }
  return {Coset(BruteForceAut(x, n), all[arg]), best};
}

std::vector<Perm> BruteForceGraphIso(const Graph& g1, const Graph& g2) {
  std::vector<Perm> out;
  if (g1.n() != g2.n() || g1.num_edges() != g2.num_edges()) return out;
  const auto edges = g1.Edges();
  for (const Perm& s : AllPermutations(g1.n())) {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!g2.HasEdge(s[u], s[v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<Perm> BruteForceHypergraphIso(const CosetLabeledHypergraph& h1,
                                          const CosetLabeledHypergraph& h2) {
  std::vector<Perm> out;
  if (h1.n != h2.n || h1.edges.size() != h2.edges.size()) return out;
  std::map<std::vector<int>, Coset> target;
  for (size_t i = 0; i < h2.edges.size(); ++i) {
    std::vector<int> e = h2.edges[i];
    std::sort(e.begin(), e.end());
    target.emplace(e, h2.labels[i]);
  }
  for (const Perm& s : AllPermutations(h1.n)) {
    bool ok = true;
    for (size_t i = 0; i < h1.edges.size() && ok; ++i) {
      std::vector<int> e;
      for (int v : h1.edges[i]) e.push_back(s[v]);
      std::sort(e.begin(), e.end());
      auto it = target.find(e);
      ok = it != target.end() && it->second == s.Inverse() * h1.labels[i];
    }
    if (ok) out.push_back(s);
  }
  return out;
}

bool RefinementDistinguishes(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n()) return true;
  const int n = g1.n();
  std::vector<int> c1(n, 0), c2(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::map<std::vector<int>, int> names;
    auto sig = [](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> s;
      for (int w : g.Neighbors(v)) s.push_back(c[w]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c[v]);
      return s;
    };
    std::vector<std::vector<int>> s1(n), s2(n);
    for (int v = 0; v < n; ++v) {
      s1[v] = sig(g1, c1, v);
      s2[v] = sig(g2, c2, v);
      names.emplace(s1[v], 0);
      names.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [k, name] : names) name = next++;
    for (int v = 0; v < n; ++v) {
      c1[v] = names.at(s1[v]);
      c2[v] = names.at(s2[v]);
    }
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return true;
  }
  return false;
}

std::vector<int> BruteForceLeftmostSeparator(const Graph& g, int v, int w) {
  const int n = g.n();
  if (n > 18) throw InputError("instance above oracle size cap");
  std::vector<int> others;
  for (int x = 0; x < n; ++x) {
    if (x != v && x != w) others.push_back(x);
  }
  auto reach = [&](const std::vector<int>& removed) {
    std::vector<char> blocked(n, 0), seen(n, 0);
    for (int x : removed) blocked[x] = 1;
    std::vector<int> stack = {v};
    seen[v] = 1;
    std::set<int> side;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      side.insert(x);
      for (int y : g.Neighbors(x)) {
        if (!seen[y] && !blocked[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return side;
  };
  size_t best = others.size() + 1;
  std::vector<std::pair<std::vector<int>, std::set<int>>> minimum;
  for (uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<int> s;
    for (size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) s.push_back(others[i]);
    }
    if (s.size() > best) continue;
    std::set<int> side = reach(s);
    if (side.count(w)) continue;
    if (s.size() < best) {
      best = s.size();
      minimum.clear();
    }
    minimum.emplace_back(std::move(s), std::move(side));
  }
  size_t arg = 0;
  for (size_t i = 1; i < minimum.size(); ++i) {
    if (minimum[i].second.size() < minimum[arg].second.size()) arg = i;
  }
  for (const auto& [s, side] : minimum) {
    if (!std::includes(side.begin(), side.end(), minimum[arg].second.begin(),
                       minimum[arg].second.end())) {
      throw ContractError("no leftmost minimum separator");
    }
  }
  return minimum[arg].first;
}

}  // namespace cosetcanon
