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

// Base canonizers. Every function returns a labeling coset Lambda = Aut * pi
// of the input, together with the canonical form X^pi.
//
// A canonical labeling function CL satisfies
//   CL(X) = phi * CL(X^phi) for every bijection phi, and
//   CL(X) = Aut(X) * pi for some labeling pi.
// The canonical form depends only on the isomorphism class of X.

#ifndef COSETCANON_CANON_H_
#define COSETCANON_CANON_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "cosetcanon/coset.h"
#include "cosetcanon/object.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

class ProgressLedger;

struct CanonResult {
  Coset labeling;
  Object form;
};

// Which multiple-coset canonizer canonizes sets of labeling cosets.
enum class SetMethod {
  // The blow-up reduction to graph canonization.
  kSmall,
  // The recursive group-theoretic algorithm.
  kFull,
};

struct CanonOptions {
  SetMethod set_method = SetMethod::kFull;
  // reduce_to_johnson calls cl_object directly when |A| is at most this.
  int small_a_threshold = 8;
  // Lower bound for the giant domain size |W|: max(min_w, 2 + ceil(log2 |V|)).
  int min_w = 8;
  // Constant c in the small-order test |G| <= |X|^(c log d).
  double primitive_c = 3.0;
  // A transitive block action is treated as large, and searched for a
  // Johnson cover, when its order is at least |V|^(offset + log2 |V|).
  double large_action_offset = 3.0;
  // Re-checks the outside-A, uniform and giant properties on every recursive CL_Set call.
  bool check_invariants = false;
  // Optional statistics sink; not owned.
  ProgressLedger* ledger = nullptr;
};

using PairList = std::vector<std::pair<int, int>>;

// Square matrix of small colors indexed by labels.
using ColorMatrix = std::vector<std::vector<uint32_t>>;

// The canonical labeling of the colored complete digraph `f` (over labels
// 0..n-1) within the group `gamma`: the least x^-1 with x in gamma ordering
// the matrix f(x(b_i), x(b_j)) lexicographically along the growing squares
// of the base b. Returns the minimizing x and generators of the stabilizer
// of f in gamma.
struct MatrixCanon {
  Perm x;
  std::vector<Perm> automorphisms;
};
MatrixCanon CanonizeMatrix(const PermGroup& gamma, const ColorMatrix& f);

// CL_Graph: canonization of a digraph within a labeling coset.
CanonResult ClGraph(const PairList& edges, const Coset& labeling);
// Variant with colored pairs; absent pairs have color 0.
CanonResult ClColoredGraph(const ColorMatrix& colors, const Coset& labeling);

// CL_Int: canonization of the ordered pair (theta_tau, delta_rho); the
// resulting coset lies inside delta_rho and has group Theta ∩ Delta.
CanonResult ClInt(const Coset& theta_tau, const Coset& delta_rho);

// CL_Set via the blow-up to a graph on V and |J| copies of V.
CanonResult ClSetSmall(const std::vector<Coset>& cosets);

// CL_Object by structural recursion.
CanonResult ClObject(const Object& x, int n, const CanonOptions& options = {});

// Sets of labeling cosets with the configured method.
CanonResult CanonizeCosetSet(const std::vector<Coset>& cosets,
                             const CanonOptions& options);

// The set {Delta_1 rho_1, ..., Delta_t rho_t} as an object.
Object CosetSetObject(const std::vector<Coset>& cosets);

}  // namespace cosetcanon

#endif  // COSETCANON_CANON_H_
