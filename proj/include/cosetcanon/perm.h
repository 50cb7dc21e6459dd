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

// Permutations of {0, ..., n-1}.
//
// Composition follows the convention "f * g applies f first and then g", so
// (f * g)[x] == g[f[x]]. Text I/O uses 1-based disjoint-cycle notation such
// as "(1 2 3)(4 5)".

#ifndef COSETCANON_PERM_H_
#define COSETCANON_PERM_H_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cosetcanon {

// Raised on malformed input or violated preconditions of a public operation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal invariant that the algorithms rely on fails.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Perm {
 public:
  Perm() = default;
  // Identity on n points.
  explicit Perm(int n);
  // Takes ownership of an image table. Throws InputError if not a bijection.
  explicit Perm(std::vector<int> images);

  static Perm Identity(int n) { return Perm(n); }
  // Parses 1-based cycle notation. The empty string and "()" are the
  // identity.
  static Perm FromCycles(std::string_view text, int n);
  // Builds the permutation that is the product of the given cycles.
  static Perm FromCycleList(const std::vector<std::vector<int>>& cycles, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool IsIdentity() const;
  Perm Inverse() const;
  // Returns the list of points moved by this permutation, ascending.
  std::vector<int> Support() const;
  // 1-based disjoint cycle notation; "()" for the identity.
  std::string ToCycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  Perm& operator*=(const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

  // p^-1 * this * p: the permutation acting on relabeled points.
  Perm ConjugateBy(const Perm& p) const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace cosetcanon

#endif  // COSETCANON_PERM_H_
