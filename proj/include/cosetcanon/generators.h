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

// Seeded random instances.

#ifndef COSETCANON_GENERATORS_H_
#define COSETCANON_GENERATORS_H_

#include <random>
#include <vector>

#include "cosetcanon/canon.h"
#include "cosetcanon/canon_struct.h"
#include "cosetcanon/coset.h"
#include "cosetcanon/graph.h"
#include "cosetcanon/object.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

using Rng = std::mt19937_64;

int UniformInt(Rng& rng, int lo, int hi);  // inclusive bounds
Perm RandomPermutation(Rng& rng, int n);
// Product of random cycles on random supports; favors proper subgroups.
Perm RandomSparsePermutation(Rng& rng, int n);
// A group generated by up to `max_gens` sparse permutations.
PermGroup RandomSubgroup(Rng& rng, int n, int max_gens = 2);
Coset RandomLabelingCoset(Rng& rng, int n, int max_gens = 2);
// A set of t cosets, some of which share the canonical group.
std::vector<Coset> RandomCosetFamily(Rng& rng, int n, int t);
// One coset per rep r, each with canonical group `can`.
std::vector<Coset> SharedCosetFamily(const PermGroup& can, const std::vector<Perm>& reps);
// Shared-group families drawn from a few shapes (a symmetric factor, a
// diagonal Sym(k) on two copies, blocks of size 2, a random subgroup) that
// drive the intransitive, block and direct-product branches of cl_set.
std::vector<Coset> StructuredCosetFamily(Rng& rng, int n, int t);
PairList RandomDigraph(Rng& rng, int n, double p);
// Random object of nesting depth at most `depth` over {0..n-1}.
Object RandomObject(Rng& rng, int n, int depth);

std::vector<std::vector<int>> RandomTuples(Rng& rng, int n, int arity, int count);
// Distinct random subsets; sizes are mostly equal when `uniform` is set.
std::vector<std::vector<int>> RandomEdges(Rng& rng, int n, int count,
                                          bool uniform);
// A CL_SetSet instance: J is a union of orbits of Delta on a few random
// cosets, alpha is partly Delta-equivariant and partly random from a pool.
CosetMap RandomCosetMap(Rng& rng, int n, int max_domain);

// G(n, p) conditioned on connectivity by joining components with random
// edges.
Graph RandomConnectedGraph(Rng& rng, int n, double p);
// A random k-tree on n > k vertices with each edge kept with probability
// `keep`, then reconnected; treewidth at most k.
Graph RandomPartialKTree(Rng& rng, int n, int k, double keep);
// G with one random double edge swap {a,b},{c,d} -> {a,d},{c,b}, which
// keeps the degrees; G itself if no swap keeps the graph connected.
Graph SwapEdges(Rng& rng, const Graph& g);

}  // namespace cosetcanon

#endif  // COSETCANON_GENERATORS_H_
