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

// Seeded property suites shared by the "selftest" verb and the acceptance
// binary. Each suite draws its own instances from (seed, suite name), so
// suites are independent and their reports can be merged in any order.

#ifndef COSETCANON_SUITES_H_
#define COSETCANON_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace cosetcanon {

// Deliberate faults for checking that the harness notices them.
enum class Injection {
  kNone,
  // cl_graph: one pair of the canonical form is toggled after canonization.
  kEdgeFlip,
  // cl_rel: the recorded call count is pushed past its bound.
  kLedgerOverflow,
};

struct SuiteConfig {
  uint64_t seed = 1;
  // Instances per canonizer, or pairs / graphs for the graph suites.
  int instances = 30;
  int relabelings = 3;
  Injection inject = Injection::kNone;
};

struct SuiteReport {
  std::string name;
  bool ok = true;
  int instances = 0;
  // Recursion counts compared with their bounds, and how many exceeded.
  int64_t bound_checks = 0;
  int64_t bound_violations = 0;
  std::string failure;  // the first failure
  std::vector<std::string> stats;

  bool passed() const { return ok && bound_violations == 0; }
};

//   cl_graph cl_int cl_set_small cl_object cl_rel cl_hyper cl_setset
//   cl_sethyper cl_set: random instances against the exhaustive oracle with
//     relabelings; recursion counters against their bounds.
//   fano: |Aut| = 168.
//   iso_tw_oracle: iso_treewidth against enumeration, n <= 8.
//   iso_tw_planted / iso_tw_perturbed: partial k-trees with k <= 4, n <= 40.
//   decomposition: k-improvement fixpoint, decomposition properties and
//     relabeling invariance.
//   unaffected: the unaffected-stabilizer properties on giant
//     representations with |W| in {8, 9}.
//   separators: leftmost minimum separators against enumeration, n <= 10.
const std::vector<std::string>& SuiteNames();

// Throws InputError for an unknown name.
SuiteReport RunSuite(const std::string& name, const SuiteConfig& config);

}  // namespace cosetcanon

#endif  // COSETCANON_SUITES_H_
