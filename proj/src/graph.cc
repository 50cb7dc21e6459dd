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

#include "cosetcanon/graph.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cosetcanon {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0), nbrs_(n) {}

Graph Graph::FromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("loops are not allowed");
    g.AddEdge(u, v);
  }
  return g;
}

bool Graph::AddEdge(int u, int v) {
  if (adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++m_;
  return true;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : nbrs_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::Relabel(const Perm& p) const {
  Graph g(n_);
  for (const auto& [u, v] : Edges()) g.AddEdge(p[u], p[v]);
  return g;
}

Graph Graph::Induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (HasEdge(vertices[i], vertices[j])) g.AddEdge(i, j);
    }
  }
  return g;
}

bool Graph::IsConnected() const { return Components().size() <= 1; }

bool Graph::IsClique(const std::vector<int>& vertices) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (!HasEdge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Graph::Components(
    const std::vector<int>& removed) const {
  std::vector<int> comp(n_, -1);
  for (int v : removed) comp[v] = -2;
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> queue = {s};
    comp[s] = id;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (int w : nbrs_[queue[i]]) {
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(std::move(queue));
  }
  return out;
}

std::vector<int> Graph::Boundary(const std::vector<int>& c) const {
  std::vector<char> in(n_, 0);
  for (int v : c) in[v] = 1;
  std::vector<char> mark(n_, 0);
  for (int v : c) {
    for (int w : nbrs_[v]) {
      if (!in[w]) mark[w] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

// ---- Flows -----------------------------------------------------------------

namespace {

// Unit vertex capacities by splitting v into in(v) = 2v and out(v) = 2v + 1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : head_(2 * g.n(), -1) {
    const int inf = g.n() + 1;
    for (int x = 0; x < g.n(); ++x) {
      AddArc(2 * x, 2 * x + 1, x == s || x == t ? inf : 1);
    }
    for (const auto& [a, b] : g.Edges()) {
      AddArc(2 * a + 1, 2 * b, inf);
      AddArc(2 * b + 1, 2 * a, inf);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  // Augments until the flow reaches `limit` or no path is left.
  int Run(int limit) {
    int flow = 0;
    while (flow < limit && Augment()) ++flow;
    return flow;
  }

  std::vector<char> Reachable() const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> queue = {source_};
    seen[source_] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (int e = head_[queue[i]]; e >= 0; e = next_[e]) {
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          queue.push_back(to_[e]);
        }
      }
    }
    return seen;
  }

 private:
  void AddArc(int a, int b, int c) {
    to_.push_back(b), cap_.push_back(c), next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a), cap_.push_back(0), next_.push_back(head_[b]);
    head_[b] = static_cast<int>(to_.size()) - 1;
  }

  bool Augment() {
    std::vector<int> via(head_.size(), -1);
    std::vector<int> queue = {source_};
    via[source_] = -2;
    for (size_t i = 0; i < queue.size() && via[sink_] == -1; ++i) {
      for (int e = head_[queue[i]]; e >= 0; e = next_[e]) {
        if (cap_[e] > 0 && via[to_[e]] == -1) {
          via[to_[e]] = e;
          queue.push_back(to_[e]);
        }
      }
    }
    if (via[sink_] == -1) return false;
    for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
      --cap_[via[x]];
      ++cap_[via[x] ^ 1];
    }
    return true;
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

VertexCut CutWithLimit(const Graph& g, int v, int w, int limit) {
  SplitFlow f(g, v, w);
  VertexCut out;
  out.paths = f.Run(limit);
  if (out.paths < limit) {
    const std::vector<char> seen = f.Reachable();
    for (int x = 0; x < g.n(); ++x) {
      if (seen[2 * x] && !seen[2 * x + 1]) out.separator.push_back(x);
    }
  }
  return out;
}

}  // namespace

VertexCut MinVertexCut(const Graph& g, int v, int w) {
  if (v == w || g.HasEdge(v, w)) {
    throw InputError("separator endpoints must be distinct and non-adjacent");
  }
  return CutWithLimit(g, v, w, g.n());
}

std::vector<int> LeftmostMinSeparator(const Graph& g, int v, int w) {
  return MinVertexCut(g, v, w).separator;
}

Graph KImprove(const Graph& g, int k, bool check_fixpoint) {
  if (k < 1) throw InputError("k-improvement needs k >= 1");
  Graph out = g;
  for (int v = 0; v < g.n(); ++v) {
    for (int w = v + 1; w < g.n(); ++w) {
      if (g.HasEdge(v, w)) continue;
      if (CutWithLimit(g, v, w, k + 1).paths > k) out.AddEdge(v, w);
    }
  }
  if (check_fixpoint && !(KImprove(out, k, false) == out)) {
    throw ContractError("k-improvement is not a fixpoint");
  }
  return out;
}

int MinFillWidth(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.Edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> alive(n, 1);
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = std::numeric_limits<long>::max();
    std::vector<int> best_nbrs;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (alive[w] && adj[v][w]) nb.push_back(w);
      }
      long fill = 0;
      for (size_t i = 0; i < nb.size(); ++i) {
        for (size_t j = i + 1; j < nb.size(); ++j) fill += !adj[nb[i]][nb[j]];
      }
      if (fill < best_fill) {
        best_fill = fill;
        best = v;
        best_nbrs = std::move(nb);
      }
    }
    width = std::max(width, static_cast<int>(best_nbrs.size()));
    for (int a : best_nbrs) {
      for (int b : best_nbrs) {
        if (a != b) adj[a][b] = 1;
      }
    }
    alive[best] = 0;
  }
  return width;
}

// ---- Clique minimal separators -----------------------------------------------

namespace {

// MCS-M. Returns the higher neighbourhoods madj(v) in the minimal
// triangulation it builds; eliminating by increasing MCS number is a perfect
// elimination ordering of that triangulation.
std::vector<std::vector<int>> McsmHigherNeighbourhoods(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0), number(n, -1);
  std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.Edges()) fill[u][v] = fill[v][u] = 1;
  for (int i = n - 1; i >= 0; --i) {
    int v = -1;
    for (int x = 0; x < n; ++x) {
      if (number[x] < 0 && (v < 0 || weight[x] > weight[v])) v = x;
    }
    // Minimax weight of internal vertices over paths from v through
    // unnumbered vertices.
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> cost(n, inf);
    std::vector<char> done(n, 0);
    cost[v] = -1;
    for (;;) {
      int x = -1;
      for (int y = 0; y < n; ++y) {
        if (number[y] < 0 && !done[y] && cost[y] < inf &&
            (x < 0 || cost[y] < cost[x])) {
          x = y;
        }
      }
      if (x < 0) break;
      done[x] = 1;
      const int through = x == v ? -1 : std::max(cost[x], weight[x]);
      for (int y : g.Neighbors(x)) {
        if (number[y] < 0 && !done[y] && through < cost[y]) cost[y] = through;
      }
    }
    std::vector<int> reached;
    for (int u = 0; u < n; ++u) {
      if (u != v && number[u] < 0 && cost[u] < weight[u]) reached.push_back(u);
    }
    for (int u : reached) {
      ++weight[u];
      fill[u][v] = fill[v][u] = 1;
    }
    number[v] = i;
  }
  std::vector<std::vector<int>> madj(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (fill[v][u] && number[u] > number[v]) madj[v].push_back(u);
    }
  }
  return madj;
}

// Components C of G - s with N(C) = s.
std::vector<std::vector<int>> FullComponents(const Graph& g,
                                             const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  for (auto& c : g.Components(s)) {
    if (g.Boundary(c) == s) out.push_back(std::move(c));
  }
  return out;
}

bool Contains(const std::vector<char>& mask, const std::vector<int>& set) {
  for (int v : set) {
    if (!mask[v]) return false;
  }
  return true;
}

std::vector<char> Mask(int n, const std::vector<int>& set) {
  std::vector<char> m(n, 0);
  for (int v : set) m[v] = 1;
  return m;
}

std::vector<int> Intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::vector<int>> CliqueMinimalSeparators(const Graph& g) {
  std::set<std::vector<int>> out;
  for (const std::vector<int>& s : McsmHigherNeighbourhoods(g)) {
    if (g.IsClique(s) && FullComponents(g, s).size() >= 2) out.insert(s);
  }
  return {out.begin(), out.end()};
}

bool HasCliqueSeparator(const Graph& g) {
  return !CliqueMinimalSeparators(g).empty();
}

// ---- Decomposition -----------------------------------------------------------

int TreeDecomposition::Width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

std::vector<std::vector<int>> TreeDecomposition::Adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> TreeDecomposition::ParentAdhesion(int t) const {
  if (parent[t] < 0) return {};
  return Intersect(bags[t], bags[parent[t]]);
}

namespace {

struct Forest {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;
};

std::vector<std::vector<int>> MaximalSets(const std::set<std::vector<int>>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& x : sets) {
    bool inside = false;
    for (const auto& y : sets) {
      if (x != y && x.size() < y.size() &&
          std::includes(y.begin(), y.end(), x.begin(), x.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) out.push_back(x);
  }
  return out;
}

// Maximal vertex sets that no member of `seps` separates.
std::vector<std::vector<int>> Pieces(const Graph& g,
                                     const std::vector<std::vector<int>>& seps) {
  const int n = g.n();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> current = {all};
  for (const auto& sep : seps) {
    std::set<std::vector<int>> next;
    const auto comps = g.Components(sep);
    for (const auto& x : current) {
      const std::vector<char> xm = Mask(n, x);
      bool split = false;
      for (const auto& c : comps) {
        if (std::none_of(c.begin(), c.end(), [&](int v) { return xm[v] != 0; })) {
          continue;
        }
        split = true;
        std::vector<int> side = c;
        side.insert(side.end(), sep.begin(), sep.end());
        std::sort(side.begin(), side.end());
        next.insert(Intersect(x, side));
      }
      if (!split) next.insert(x);
    }
    current = MaximalSets(next);
  }
  return current;
}

// One node, or the two ends of the middle edge, of the subtree on `nodes`.
std::vector<int> SubtreeCenter(const std::vector<int>& nodes,
                               const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<int>> adj;
  for (int t : nodes) adj[t];
  for (const auto& [a, b] : edges) {
    if (adj.count(a) && adj.count(b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::map<int, int> deg;
  std::vector<int> layer;
  for (const auto& [t, ys] : adj) {
    deg[t] = static_cast<int>(ys.size());
    if (deg[t] <= 1) layer.push_back(t);
  }
  size_t left = nodes.size();
  while (left > 2) {
    std::vector<int> next;
    left -= layer.size();
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

// Splits along the clique minimal separators of least size: the pieces
// left by all of them are decomposed recursively, and each separator gets
// a node joined to the middle of the subtree of every piece containing it.
Forest Decompose(const Graph& g) {
  const int n = g.n();
  const auto all_seps = CliqueMinimalSeparators(g);
  if (all_seps.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return {{all}, {}};
  }
  size_t least = n;
  for (const auto& s : all_seps) least = std::min(least, s.size());
  std::vector<std::vector<int>> seps;
  for (const auto& s : all_seps) {
    if (s.size() == least) seps.push_back(s);
  }
  Forest out;
  struct Range {
    std::vector<char> mask;
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Range> pieces;
  for (const auto& piece : Pieces(g, seps)) {
    Forest f = Decompose(g.Induced(piece));
    const int offset = static_cast<int>(out.bags.size());
    Range r;
    r.mask = Mask(n, piece);
    for (auto& bag : f.bags) {
      for (int& v : bag) v = piece[v];
      r.nodes.push_back(static_cast<int>(out.bags.size()));
      out.bags.push_back(std::move(bag));
    }
    for (const auto& [a, b] : f.edges) r.edges.emplace_back(a + offset, b + offset);
    pieces.push_back(std::move(r));
  }
  // A separator is joined to the middle node of its holders in each piece,
  // or to a new node subdividing their middle edge. With two pieces the
  // separator node is left out.
  std::map<std::pair<int, int>, int> middle;
  std::vector<std::vector<std::pair<int, int>>> targets(seps.size());
  for (size_t i = 0; i < seps.size(); ++i) {
    for (const Range& r : pieces) {
      if (!Contains(r.mask, seps[i])) continue;
      std::vector<int> holders;
      for (int t : r.nodes) {
        if (Contains(Mask(n, out.bags[t]), seps[i])) holders.push_back(t);
      }
      const std::vector<int> center = SubtreeCenter(holders, r.edges);
      if (center.size() == 1) {
        targets[i].emplace_back(center[0], -1);
      } else {
        middle.emplace(std::make_pair(center[0], center[1]), -1);
        targets[i].emplace_back(center[0], center[1]);
      }
    }
  }
  for (auto& [e, id] : middle) {
    id = static_cast<int>(out.bags.size());
    out.bags.push_back(Intersect(out.bags[e.first], out.bags[e.second]));
  }
  for (const Range& r : pieces) {
    for (const auto& [a, b] : r.edges) {
      auto it = middle.find({std::min(a, b), std::max(a, b)});
      if (it == middle.end()) {
        out.edges.emplace_back(a, b);
      } else {
        out.edges.emplace_back(a, it->second);
        out.edges.emplace_back(it->second, b);
      }
    }
  }
  auto resolve = [&middle](const std::pair<int, int>& e) {
    return e.second < 0 ? e.first : middle.at(e);
  };
  for (size_t i = 0; i < seps.size(); ++i) {
    if (targets[i].size() == 2) {
      out.edges.emplace_back(resolve(targets[i][0]), resolve(targets[i][1]));
      continue;
    }
    const int node = static_cast<int>(out.bags.size());
    out.bags.push_back(seps[i]);
    for (const auto& e : targets[i]) out.edges.emplace_back(node, resolve(e));
  }
  return out;
}

}  // namespace

TreeDecomposition CliqueSeparatorDecomposition(const Graph& g) {
  if (!g.IsConnected()) throw InputError("decomposition needs a connected graph");
  Forest f = Decompose(g);
  std::vector<std::vector<int>> bags = std::move(f.bags);
  std::vector<std::pair<int, int>> edges = std::move(f.edges);
  if (edges.size() + 1 != bags.size()) {
    throw ContractError("separator tree has the wrong number of edges");
  }
  // Hubs for repeated adhesion sets.
  const int base_nodes = static_cast<int>(bags.size());
  for (int x = 0; x < base_nodes; ++x) {
    std::map<std::vector<int>, std::vector<int>> classes;  // adhesion -> edges
    for (size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      if (a != x && b != x) continue;
      classes[Intersect(bags[a], bags[b])].push_back(static_cast<int>(e));
    }
    size_t incident = 0;
    for (const auto& [adh, es] : classes) incident += es.size();
    if (classes.size() == incident) continue;
    if (classes.size() == 1 && classes.begin()->first == bags[x]) continue;
    for (const auto& [adh, es] : classes) {
      if (es.size() < 2) continue;
      const int hub = static_cast<int>(bags.size());
      bags.push_back(adh);
      for (int e : es) {
        if (edges[e].first == x) edges[e].first = hub;
        else edges[e].second = hub;
      }
      edges.emplace_back(x, hub);
    }
  }
  // Number nodes by bag content.
  std::vector<int> order(bags.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return bags[a] < bags[b]; });
  std::vector<int> rank(bags.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  TreeDecomposition td;
  for (int i : order) td.bags.push_back(bags[i]);
  for (auto [a, b] : edges) {
    td.edges.emplace_back(std::min(rank[a], rank[b]), std::max(rank[a], rank[b]));
  }
  std::sort(td.edges.begin(), td.edges.end());
  td.root = 0;
  td.parent.assign(td.bags.size(), -1);
  const auto adj = td.Adjacency();
  std::vector<char> seen(td.bags.size(), 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int y : adj[queue[i]]) {
      if (!seen[y]) {
        seen[y] = 1;
        td.parent[y] = queue[i];
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != td.bags.size()) {
    throw ContractError("separation tree is disconnected");
  }
  return td;
}

std::string CheckDecomposition(const Graph& g, const TreeDecomposition& td,
                               int tw_bound) {
  const int nodes = static_cast<int>(td.bags.size());
  if (nodes == 0) return "no bags";
  if (static_cast<int>(td.edges.size()) != nodes - 1) return "not a tree";
  const auto adj = td.Adjacency();
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> has(nodes, 0);
    int first = -1, count = 0;
    for (int t = 0; t < nodes; ++t) {
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
        has[t] = 1;
        ++count;
        if (first < 0) first = t;
      }
    }
    if (count == 0) return "vertex " + std::to_string(v + 1) + " in no bag";
    std::vector<int> queue = {first};
    std::vector<char> seen(nodes, 0);
    seen[first] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (int y : adj[queue[i]]) {
        if (has[y] && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (static_cast<int>(queue.size()) != count) {
      return "bags of vertex " + std::to_string(v + 1) + " not connected";
    }
  }
  for (const auto& [u, v] : g.Edges()) {
    bool found = false;
    for (const auto& b : td.bags) {
      found = found || (std::binary_search(b.begin(), b.end(), u) &&
                        std::binary_search(b.begin(), b.end(), v));
    }
    if (!found) return "edge not covered";
  }
  for (int t = 0; t < nodes; ++t) {
    if (HasCliqueSeparator(g.Induced(td.bags[t]))) {
      return "bag " + std::to_string(t + 1) + " has a clique separator";
    }
    std::vector<std::vector<int>> adhesions;
    for (int y : adj[t]) {
      adhesions.push_back(Intersect(td.bags[t], td.bags[y]));
      if (!g.IsClique(adhesions.back())) return "adhesion is not a clique";
    }
    std::sort(adhesions.begin(), adhesions.end());
    const bool distinct =
        std::adjacent_find(adhesions.begin(), adhesions.end()) == adhesions.end();
    const bool equal = !adhesions.empty() && adhesions.front() == adhesions.back();
    if (!distinct && !(equal && static_cast<int>(td.bags[t].size()) <= tw_bound + 1)) {
      return "bag " + std::to_string(t + 1) + " breaks the adhesion rule";
    }
  }
  return "";
}

// ---- Text formats ------------------------------------------------------------

Graph ParseDimacsGraph(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::string rest;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) throw InputError(where + "second header");
      if (!(ls >> kind >> n >> declared) || kind != "edge" || n < 0 || (ls >> rest)) {
        throw InputError(where + "expected \"p edge n m\"");
      }
    } else if (tag == "e") {
      int u, v;
      if (n < 0) throw InputError(where + "edge before header");
      if (!(ls >> u >> v) || (ls >> rest)) {
        throw InputError(where + "expected \"e u v\"");
      }
      if (u < 1 || v < 1 || u > n || v > n) {
        throw InputError(where + "vertex out of range");
      }
      if (u == v) throw InputError(where + "loop");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw InputError(where + "unknown line type \"" + tag + "\"");
    }
  }
  if (n < 0) throw InputError("missing \"p edge\" header");
  Graph g = Graph::FromEdges(n, edges);
  if (warnings && static_cast<size_t>(g.num_edges()) != edges.size()) {
    warnings->push_back(std::to_string(edges.size() - g.num_edges()) +
                        " duplicate edges collapsed");
  }
  if (warnings && declared != static_cast<long>(edges.size())) {
    warnings->push_back("header declares " + std::to_string(declared) +
                        " edges, found " + std::to_string(edges.size()));
  }
  return g;
}

std::string FormatDimacsGraph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.Edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string FormatTreeDecomposition(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << " " << td.Width() + 1 << " " << n << "\n";
  for (size_t t = 0; t < td.bags.size(); ++t) {
    out << "b " << t + 1;
    for (int v : td.bags[t]) out << " " << v + 1;
    out << "\n";
  }
  for (const auto& [a, b] : td.edges) out << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

namespace {

std::string TreeForm(const TreeDecomposition& td, const Perm& p, int t, int parent) {
  std::vector<int> bag;
  for (int v : td.bags[t]) bag.push_back(p[v]);
  std::sort(bag.begin(), bag.end());
  std::vector<std::string> kids;
  const auto adj = td.Adjacency();
  for (int y : adj[t]) {
    if (y != parent) kids.push_back(TreeForm(td, p, y, t));
  }
  std::sort(kids.begin(), kids.end());
  std::ostringstream out;
  out << "[";
  for (int v : bag) out << v << ",";
  for (const auto& k : kids) out << k;
  out << "]";
  return out.str();
}

}  // namespace

std::set<std::string> RootedTreeForms(const TreeDecomposition& td, const Perm& p) {
  std::set<std::string> out;
  for (size_t t = 0; t < td.bags.size(); ++t) {
    out.insert(TreeForm(td, p, static_cast<int>(t), -1));
  }
  return out;
}

}  // namespace cosetcanon
