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

// Simple undirected graphs on {0..n-1} and the separator machinery used by
// the treewidth pipeline: leftmost minimal separators, k-improvement, clique
// minimal separators and the decomposition into clique-separator-free bags.

#ifndef COSETCANON_GRAPH_H_
#define COSETCANON_GRAPH_H_

#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cosetcanon/perm.h"

namespace cosetcanon {

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on loops or endpoints out of range. Duplicate edges
  // collapse.
  static Graph FromEdges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int num_edges() const { return m_; }
  bool HasEdge(int u, int v) const { return adj_[u * n_ + v] != 0; }
  // Sorted.
  const std::vector<int>& Neighbors(int v) const { return nbrs_[v]; }
  int Degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  // Returns false if the edge was already present.
  bool AddEdge(int u, int v);
  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> Edges() const;

  // The graph with vertex v renamed to p[v].
  Graph Relabel(const Perm& p) const;
  // G[vertices], vertex i of the result being vertices[i].
  Graph Induced(const std::vector<int>& vertices) const;

  bool IsConnected() const;
  bool IsClique(const std::vector<int>& vertices) const;
  // Vertex sets of the components of G - removed, each sorted, ordered by
  // minimum.
  std::vector<std::vector<int>> Components(
      const std::vector<int>& removed = {}) const;
  // N(c) for a vertex set c: neighbours outside c, sorted.
  std::vector<int> Boundary(const std::vector<int>& c) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_;
};

// Maximum number of internally vertex-disjoint v-w paths and the leftmost
// minimum separator, by unit vertex capacities. v and w must be distinct and
// non-adjacent.
struct VertexCut {
  int paths = 0;
  std::vector<int> separator;
};
VertexCut MinVertexCut(const Graph& g, int v, int w);

// S_{v,w}. Throws InputError when v == w or v, w are adjacent.
std::vector<int> LeftmostMinSeparator(const Graph& g, int v, int w);

// G^k: one pass adding {v,w} for every non-adjacent pair joined by more than
// k internally disjoint paths, counted in G. With check_fixpoint the result
// is improved again and a ContractError is raised unless nothing changes.
Graph KImprove(const Graph& g, int k, bool check_fixpoint = true);

// Largest neighbourhood met while eliminating by minimum fill-in (ties by
// smallest vertex); an upper bound on the treewidth.
int MinFillWidth(const Graph& g);

// Clique minimal separators, sorted, via the minimal triangulation MCS-M.
std::vector<std::vector<int>> CliqueMinimalSeparators(const Graph& g);
// True if some clique separates G; a disconnected graph is separated by the
// empty clique.
bool HasCliqueSeparator(const Graph& g);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;
  int root = 0;
  // parent[root] == -1.
  std::vector<int> parent;

  int Width() const;
  std::vector<std::vector<int>> Adjacency() const;
  // beta(t) ∩ beta(parent(t)); empty for the root.
  std::vector<int> ParentAdhesion(int t) const;
};

// Decomposition of a connected graph along all its clique minimal
// separators. The separators of least size cut G into pieces, the maximal
// vertex sets none of them separates; each piece is decomposed recursively,
// and each separator gets a node joined to the middle node of the subtree
// of bags containing it in every piece holding it (a middle edge is
// subdivided by its adhesion set). A separator lying in exactly two pieces
// becomes a plain edge. A bag whose adhesion sets repeat is then given one
// hub bag, equal to the adhesion set, per repeated class. No choices are
// made, so the output commutes with relabeling up to the numbering of tree
// nodes. Rooted at node 0, the bags being listed in ascending order. Throws
// InputError if G is disconnected.
TreeDecomposition CliqueSeparatorDecomposition(const Graph& g);

// Checks that every vertex lies in a connected set of bags, every edge in
// some bag, clique adhesions, clique-separator-free bags and the
// equal-or-distinct adhesion rule (equal adhesions need |bag| <= tw_bound+1).
// Returns an empty string on success, otherwise the first failure.
std::string CheckDecomposition(const Graph& g, const TreeDecomposition& td,
                               int tw_bound);

// The decomposition tree rooted at each node in turn, with bags renamed by
// p, as nested strings. Two decompositions are isomorphic as trees decorated
// by bags (up to p) iff the sets are equal.
std::set<std::string> RootedTreeForms(const TreeDecomposition& td, const Perm& p);

// "p edge n m" header, "e u v" lines (1-based), "c" comments. Malformed
// lines raise InputError naming the line number; duplicate edges collapse
// and are reported in `warnings`.
Graph ParseDimacsGraph(std::istream& in, std::vector<std::string>* warnings);
std::string FormatDimacsGraph(const Graph& g);
// "s td <bags> <max bag size> <n>", "b <id> <vertices>", then tree edges.
std::string FormatTreeDecomposition(const TreeDecomposition& td, int n);

}  // namespace cosetcanon

#endif  // COSETCANON_GRAPH_H_
