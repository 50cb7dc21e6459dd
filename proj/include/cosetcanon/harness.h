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

// Property checks shared by the unit tests, the acceptance binary and the
// self-test verb: canonizers are run on an instance and on random
// relabelings of it and compared with the exhaustive oracle.

#ifndef COSETCANON_HARNESS_H_
#define COSETCANON_HARNESS_H_

#include <functional>
#include <random>
#include <string>

#include "cosetcanon/canon.h"
#include "cosetcanon/canon_struct.h"
#include "cosetcanon/object.h"

namespace cosetcanon {

// Runs a canonizer on an instance encoded as an object over {0..n-1}.
using ObjectCanonizer = std::function<CanonResult(const Object& x, int n)>;

struct CheckOutcome {
  bool ok = true;
  std::string failure;
};

// Checks on x:
//   the group of the result equals the brute-force automorphism group,
//   the representative maps x onto the returned form,
//   on `relabelings` random bijections phi the form is identical and the
//   labeling of x^phi equals phi^-1 times the labeling of x.
CheckOutcome CheckCanonizer(const ObjectCanonizer& canon, const Object& x,
                            int n, int relabelings, std::mt19937_64& rng);

// Instances as objects, so that relabeling and the oracle apply uniformly.
// Graph: (set of (u, v) tuples, coset). Intersection: (theta_tau, delta_rho).
// Coset set: set of coset atoms.
Object GraphInstance(const PairList& edges, const Coset& labeling);
Object IntInstance(const Coset& theta_tau, const Coset& delta_rho);

PairList DecodePairs(const Object& set);
std::vector<Coset> DecodeCosets(const Object& set);

ObjectCanonizer GraphCanonizer();
ObjectCanonizer IntCanonizer();
ObjectCanonizer SetSmallCanonizer();
ObjectCanonizer ObjectCanonizerFor(const CanonOptions& options);
// Structured canonizers on RelationObject, HypergraphObject, CosetMapObject
// and LabeledHypergraphObject instances. `stats` may be null.
ObjectCanonizer RelCanonizer(const CanonOptions& options,
                             RecursionStats* stats = nullptr);
ObjectCanonizer HyperCanonizer(const CanonOptions& options,
                               RecursionStats* stats = nullptr);
ObjectCanonizer SetSetCanonizer(const CanonOptions& options,
                                RecursionStats* stats = nullptr);
ObjectCanonizer SetHyperCanonizer(const CanonOptions& options,
                                  RecursionStats* stats = nullptr);
// CL_Set on a set of coset atoms.
ObjectCanonizer SetCanonizer(const CanonOptions& options);

}  // namespace cosetcanon

#endif  // COSETCANON_HARNESS_H_
