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

// Isomorphism of graphs parameterized by treewidth.
//
// Isomorphism sets Iso(X1; X2) are cosets Aut(X1) * phi of bijections from
// V(X1) onto V(X2), both numbered 0..n-1; an empty coset means
// non-isomorphic.

#ifndef COSETCANON_TW_ISO_H_
#define COSETCANON_TW_ISO_H_

#include <cstdint>
#include <vector>

#include "cosetcanon/coset.h"
#include "cosetcanon/graph.h"

namespace cosetcanon {

// Vertex colors plus colored tuples; unordered tuples stand for sets.
struct Structure {
  struct Tuple {
    std::vector<int> points;
    uint32_t color = 0;
    bool ordered = true;
  };

  Structure() = default;
  explicit Structure(int n) : n(n), colors(n, 0) {}
  // Each edge as an unordered pair of the given color.
  void AddGraph(const Graph& g, uint32_t color);

  int n = 0;
  std::vector<uint32_t> colors;
  std::vector<Tuple> tuples;
};

// Iso(A; B) ∩ within, by backtracking over `within` with color refinement
// after each individualized base point.
Coset StructureIso(const Structure& a, const Structure& b, const Coset& within);

// Iso(G1; G2) ∩ within.
Coset IsoCosetConstrained(const Graph& g1, const Graph& g2, const Coset& within);

// Iso(G1; G2) for clique-separator-free graphs, grown from the minimum
// degree neighbourhoods through leftmost minimal separators. Throws
// InputError if either graph has a clique separator.
Coset IsoBasic(const Graph& g1, const Graph& g2);

// The cover alpha(v): vertices are peeled in rounds of minimum degree and a
// peeled v gets N(v) ∪ {v} in the remaining graph. Every clique lies in some
// alpha(v). Each entry sorted.
std::vector<std::vector<int>> CliqueCover(const Graph& g);

// Iso(G1, H1; G2, H2): isomorphisms mapping the set of cliques H1 onto H2.
// Throws InputError if a member of H_i is not a clique of G_i or a graph has
// a clique separator.
Coset IsoBasicClique(const Graph& g1, const std::vector<std::vector<int>>& h1,
                     const Graph& g2, const std::vector<std::vector<int>>& h2);

// (V, H, J, alpha) with alpha(edges[i]) = labels[i]; labels are labeling
// cosets over V.
struct CosetLabeledHypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
  std::vector<Coset> labels;
};

// Iso(H1; H2) ∩ within, where an isomorphism phi maps each edge S to an edge
// with alpha2(phi(S)) = phi^-1 alpha1(S). Throws InputError unless `within`
// maps the edges of H1 onto those of H2.
Coset IsoCosetHypergraph(const CosetLabeledHypergraph& h1,
                         const CosetLabeledHypergraph& h2, const Coset& within);

struct IsoTreeStats {
  int k = 0;
  int bags = 0;
  int width = 0;
  int subtree_pairs = 0;
  int equal_branches = 0;
  int distinct_branches = 0;
};

// Iso(G1; G2) for connected graphs: k from the min-fill bound, both graphs
// k-improved, decomposed along clique separators, and compared bottom-up
// over the rooted decompositions. Throws InputError if a graph is
// disconnected.
Coset IsoTreewidth(const Graph& g1, const Graph& g2,
                   IsoTreeStats* stats = nullptr);

}  // namespace cosetcanon

#endif  // COSETCANON_TW_ISO_H_
