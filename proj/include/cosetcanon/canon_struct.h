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

// Structured canonizers: relations, hypergraphs, coset-to-coset maps and
// coset-labeled hypergraphs, plus the case analysis for primitive groups.

#ifndef COSETCANON_CANON_STRUCT_H_
#define COSETCANON_CANON_STRUCT_H_

#include <cstdint>
#include <vector>

#include "cosetcanon/canon.h"
#include "cosetcanon/coset.h"
#include "cosetcanon/object.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

// Recursion counters. Each canonizer increments its own field once per call.
struct RecursionStats {
  int64_t rel_calls = 0;
  int64_t hyper_calls = 0;
  int64_t setset_calls = 0;
  // cl_setset branches taken in the transitive case.
  int64_t setset_cover_branches = 0;
  int64_t setset_enumeration_branches = 0;
  // Set when cl_setset took the fallback enumeration, which has no bound.
  bool setset_fallback = false;
};

// A k-ary relation: a set of tuples of vertex atoms, all of length k.
Object RelationObject(const std::vector<std::vector<int>>& tuples);
// A hypergraph: a set of sets of vertex atoms.
Object HypergraphObject(const std::vector<std::vector<int>>& edges);

// CL_Rel by partitioning on the first position where the tuples differ.
// Throws InputError for tuples of mixed arity.
CanonResult ClRel(const Object& relation, int n, const CanonOptions& options = {},
                  RecursionStats* stats = nullptr);

// CL_Hyper by the vertex-incidence cover and its complement trick.
CanonResult ClHyper(const Object& hypergraph, int n,
                    const CanonOptions& options = {},
                    RecursionStats* stats = nullptr);

// Upper bounds on the recursion counts: max(1,|R|)^2 and
// max(1,|H|)^(2 log2 n).
bool RelCallsWithinBound(int64_t calls, size_t relation_size);
bool HyperCallsWithinBound(int64_t calls, size_t hypergraph_size, int n);

enum class PrimitiveKind { kSmallOrder, kSparseCover, kFallback };

struct PrimitiveOutcome {
  PrimitiveKind kind = PrimitiveKind::kFallback;
  // For kSparseCover: sorted point sets, listed in ascending order.
  std::vector<std::vector<int>> cover;
};

// Case analysis for a group acting primitively on its m points:
//   kSmallOrder when |G| <= m^(c log2 d),
//   kSparseCover when G acts as Sym(k) or Alt(k) on the s-subsets of a
//     k-set (k > 2s, or s = 1); the cover is {C_v}, C_v the subsets
//     containing v, recovered from the orbital graph of the Johnson scheme,
//   kFallback otherwise.
// Throws InputError when the action is not primitive.
PrimitiveOutcome PrimitiveCase(const PermGroup& g, int d, double c);

// An instance (J, L, alpha, Delta rho) of CL_SetSet. `domain` lists J and
// images[i] = alpha(domain[i]); L is the image of alpha.
struct CosetMap {
  std::vector<Coset> domain;
  std::vector<Coset> images;
  Coset delta_rho;
};

// (J, L, alpha, Delta rho) as the object (set J, set L, set of (J_i,
// alpha(J_i)) pairs, Delta rho).
Object CosetMapObject(const CosetMap& instance);
CosetMap DecodeCosetMap(const Object& x);

// CL_SetSet. The result lies in Delta rho and its group is
// {delta in Delta | alpha(J_i^delta) = alpha(J_i)^delta for all i}.
// Throws InputError if Delta does not permute J.
CanonResult ClSetSet(const CosetMap& instance, const CanonOptions& options = {},
                     RecursionStats* stats = nullptr);

// cl_setset's recursion bound k^(4 c log2 n) |J|^2, k the largest orbit of
// Delta on J.
bool SetSetCallsWithinBound(int64_t calls, const CosetMap& instance, double c);

// A coset-labeled hypergraph as the set of (edge, label) tuples.
Object LabeledHypergraphObject(const std::vector<std::vector<int>>& edges,
                               const std::vector<Coset>& labels);

// CL_SetHyper on the object produced by LabeledHypergraphObject.
CanonResult ClSetHyper(const Object& labeled_hypergraph, int n,
                       const CanonOptions& options = {},
                       RecursionStats* stats = nullptr);

}  // namespace cosetcanon

#endif  // COSETCANON_CANON_STRUCT_H_
