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

// Exhaustive reference implementations used by tests and the self-test.
// They enumerate all labelings and are refused above kOracleMaxDegree.

#ifndef COSETCANON_ORACLE_H_
#define COSETCANON_ORACLE_H_

#include <vector>

#include "cosetcanon/canon.h"
#include "cosetcanon/graph.h"
#include "cosetcanon/object.h"
#include "cosetcanon/perm_group.h"
#include "cosetcanon/tw_iso.h"

namespace cosetcanon {

inline constexpr int kOracleMaxDegree = 8;

// All n! permutations in lexicographic order.
std::vector<Perm> AllPermutations(int n);

// Group generated by an explicit list of elements.
PermGroup GroupFromElements(int n, const std::vector<Perm>& elements);

// {sigma in Sym(n) | x^sigma = x}.
PermGroup BruteForceAut(const Object& x, int n);

// The least form x^lambda over all labelings, with the coset of all
// minimizing labelings.
CanonResult BruteForceCanon(const Object& x, int n);

// Every bijection V(G1) -> V(G2) preserving edges, in lexicographic order.
std::vector<Perm> BruteForceGraphIso(const Graph& g1, const Graph& g2);

// The same for coset-labeled hypergraphs.
std::vector<Perm> BruteForceHypergraphIso(const CosetLabeledHypergraph& h1,
                                          const CosetLabeledHypergraph& h2);

// True if color refinement gives different color histograms on the two
// graphs, which certifies that they are not isomorphic.
bool RefinementDistinguishes(const Graph& g1, const Graph& g2);

// S_{v,w} by enumerating vertex subsets: the minimum v-w separator whose
// side containing v is smallest. Raises ContractError if that side is not
// contained in the v-side of every other minimum separator. At most 18
// vertices.
std::vector<int> BruteForceLeftmostSeparator(const Graph& g, int v, int w);

}  // namespace cosetcanon

#endif  // COSETCANON_ORACLE_H_
