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

// Shared helpers for the unit tests.

#ifndef COSETCANON_TESTS_TEST_UTIL_H_
#define COSETCANON_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cosetcanon/coset.h"
#include "cosetcanon/perm.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon::testing {

inline Perm P(const char* cycles, int n) { return Perm::FromCycles(cycles, n); }

// Closure of the generators under multiplication.
inline std::set<Perm> EnumerateByClosure(int n, const std::vector<Perm>& gens) {
  std::set<Perm> all = {Perm(n)};
  std::vector<Perm> queue = {Perm(n)};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : gens) {
      Perm x = queue[i] * g;
      if (all.insert(x).second) queue.push_back(x);
    }
  }
  return all;
}

inline Perm RandomPerm(std::mt19937& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

// Mostly sparse cycles so that proper subgroups come up often.
inline std::vector<Perm> RandomGenerators(std::mt19937& rng, int n, int count) {
  std::vector<Perm> gens;
  if (n < 2) return gens;
  for (int i = 0; i < count; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<int> pts = img;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(k);
    for (int j = 0; j < k; ++j) img[pts[j]] = pts[(j + 1) % k];
    gens.emplace_back(img);
  }
  return gens;
}

inline PermGroup RandomGroup(std::mt19937& rng, int n) {
  return PermGroup(n, RandomGenerators(rng, n, static_cast<int>(rng() % 3)));
}

inline Coset RandomCoset(std::mt19937& rng, int n) {
  return Coset(RandomGroup(rng, n), RandomPerm(rng, n));
}

inline std::vector<Perm> AllPerms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Elements of a coset by explicit enumeration.
inline std::set<Perm> CosetElements(const Coset& c) {
  std::set<Perm> out;
  if (c.empty()) return out;
  for (const Perm& g : c.group().Elements()) out.insert(g * c.rep());
  return out;
}

}  // namespace cosetcanon::testing

#endif  // COSETCANON_TESTS_TEST_UTIL_H_
