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

// The multiple-coset canonizer CL_Set.
//
// An instance is a set J of labeling cosets Delta_i rho_i over V together
// with a set A of points, the common group Delta^Can = rho_i^-1 Delta_i
// rho_i and optionally a giant representation g^Can : Delta^Can -> Sym(W).
// Every instance satisfies
//   outside-A: the restrictions of the cosets to V \ A coincide,
//   uniform: rho_i^-1 Delta_i rho_i and A^rho_i do not depend on i,
//   giant: if g is present, Delta^Can is transitive on A^Can, the pointwise
//     stabilizer of A^Can lies in the kernel and the image is a giant on
//     at least max(min_w, 2 + ceil(log2 |V|)) points.
// The output is a canonical labeling coset of J whose group is Aut(J).

#ifndef COSETCANON_CANON_SET_H_
#define COSETCANON_CANON_SET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetcanon/canon.h"
#include "cosetcanon/coset.h"
#include "cosetcanon/group_hom.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

struct SetInstance {
  std::vector<Coset> cosets;     // J, pairwise distinct
  std::vector<int> a;            // A, ascending
  PermGroup delta_can;           // Delta^Can
  std::optional<GroupHom> giant; // g^Can, with source Delta^Can

  int degree() const { return delta_can.degree(); }
  // A^Can = A^rho_1, ascending.
  std::vector<int> ACan() const;
};

// The root instance (J, V, Delta^Can, none). J must be uniform.
SetInstance RootInstance(const std::vector<Coset>& cosets);

// Throws ContractError naming the first of outside-A, uniform and giant
// that fails.
void ValidateSetInstance(const SetInstance& inst, const CanonOptions& options);
// max(5, min_w, 2 + ceil(log2 n)).
int MinGiantDomain(int n, const CanonOptions& options);

// Text form used for replaying instances:
//   set-instance <n> <|J|>
//   coset <k>            followed by k generator lines in 1-based cycle
//                        notation and one line "rep <images>"
//   a <points>
//   delta <k>            followed by k generator lines
//   giant <m>            optional; one image line per generator of delta
//   end
std::string DumpSetInstance(const SetInstance& inst);
SetInstance ParseSetInstance(const std::string& text);

enum class ProgressShape {
  kRoot,
  kLinearInJ,  // |J'| < |J|, same A and groups
  kLinearInA,  // |A'| < |A|, no giant representation
  kInJ,        // |J'| <= |J| / 2
  kInDelta,    // |J'| <= |J|, largest orbit on A' at most half, no g
  kInG,        // giant representation introduced, nothing else grows
};
const char* ProgressShapeName(ProgressShape shape);

struct ProgressRecord {
  int parent = -1;  // index of the calling record, -1 for a root
  int root = 0;     // index of the root record of this call tree
  ProgressShape shape = ProgressShape::kRoot;
  int j_size = 0;
  int a_size = 0;
  int orbit = 0;    // largest orbit of Delta^Can on A^Can
  bool giant = false;
  bool shape_ok = true;
};

// Records every CL_Set call with its parameters and the progress shape
// relative to its caller. Each root carries the bound
//   T = 2^(log2(|V|+2)^3 * (2 log2(|V|+4) log2|J| + log2 orb))
//       * |J|^2 * |A| * |V|^(2 - 2 delta)
// on the number of calls in its tree, evaluated in log space.
class ProgressLedger {
 public:
  int Enter(int parent, ProgressShape shape, int n, int j_size, int a_size,
            int orbit, bool giant);
  void Warn(std::string message);
  void Clear();

  int64_t calls() const { return static_cast<int64_t>(records_.size()); }
  const std::vector<ProgressRecord>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  int shape_violations() const;
  // log2 T for the root record `root`.
  double Log2Bound(int root) const;
  // Number of records in the tree of `root`.
  int64_t TreeSize(int root) const;
  // True if every root tree stays within its bound.
  bool WithinBound() const;

 private:
  std::vector<ProgressRecord> records_;
  std::vector<int> degrees_;
  std::vector<std::string> warnings_;
};

// Canonical labeling of the set of cosets; group Aut(J). Throws InputError
// on an empty family or mixed degrees.
CanonResult ClSet(const std::vector<Coset>& cosets,
                  const CanonOptions& options = {});

// The recursive entry point on an instance satisfying outside-A, uniform and
// giant.
CanonResult ClSetInstance(const SetInstance& inst,
                          const CanonOptions& options = {});

// Partitions are lists of parts, each a list of indices into inst.cosets.
using Partition = std::vector<std::vector<int>>;
using PartitionFamily = std::vector<Partition>;

// Canonizes J given an Aut(J)-invariant family of partitions with at least
// one non-trivial member.
CanonResult RecurseOnPartition(const SetInstance& inst,
                               const PartitionFamily& family,
                               const CanonOptions& options = {});

// Either an invariant family with a non-trivial member or a result.
struct SubgroupReduction {
  std::optional<PartitionFamily> family;
  std::optional<CanonResult> result;
};
// Replaces Delta^Can by psi <= Delta^Can. `sub_giant`, if given, becomes the
// giant representation of the sub-instances.
SubgroupReduction ReduceToSubgroup(
    const SetInstance& inst, const PermGroup& psi,
    const CanonOptions& options = {},
    const std::optional<GroupHom>& sub_giant = std::nullopt);

// Instances without giant representation.
CanonResult ReduceToJohnson(const SetInstance& inst,
                            const CanonOptions& options = {});

// Instances with giant representation: a verified subgroup G of Aut(J)
// whose canonical copy maps onto a giant, or a result.
struct CertificateOutcome {
  std::optional<PermGroup> certificate;
  std::optional<CanonResult> result;
};
CertificateOutcome ProduceCertificates(const SetInstance& inst,
                                       const CanonOptions& options = {});
// True if g permutes J, g^rho_i is the same subgroup of Delta^Can for all i
// and its image under the giant representation is a giant.
bool IsFullnessCertificate(const SetInstance& inst, const PermGroup& g);
CanonResult AggregateCertificates(const SetInstance& inst, const PermGroup& g,
                                  const CanonOptions& options = {});

// G * Lambda_0 for a group G of automorphisms: the coset of
// <G, group(Lambda_0)> through rep(Lambda_0). Throws ContractError unless
// G * group(Lambda_0) is a group.
Coset ExtendByAutomorphisms(const Coset& lambda0, const PermGroup& g);

// Points v of V^Can are affected if their stabilizer in Delta_T does not
// map onto a giant on T, with T = {0..t-1}, t = min(|W|, 2 + ceil(log2 n))
// and Delta_T the preimage of the setwise stabilizer of T. With this reading
// the pointwise stabilizer of the unaffected points maps onto a giant.
struct AffectedSplit {
  std::vector<int> t;
  PermGroup delta_t;
  GroupHom g_t;
  std::vector<int> affected;
  std::vector<int> unaffected;
};
AffectedSplit SplitAffected(const PermGroup& delta, const GroupHom& g);

}  // namespace cosetcanon

#endif  // COSETCANON_CANON_SET_H_
