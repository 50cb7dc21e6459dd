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

// Hereditarily finite combinatorial objects over a ground set {0..n-1}.
//
// An object is a vertex atom, a coset atom, a tuple or a set of objects, or a
// constant. A constant wraps an ordered object that bijections leave
// untouched; it lets ordered data (such as canonical forms of parts) travel
// inside an object over V without being confused with vertex atoms.
//
// Every object has a canonical encoding, a sequence of 32-bit words with
// explicit kind tags. Two objects are equal iff their encodings are equal,
// and the total order on ordered objects is the lexicographic order of the
// encodings:
//   integers < cosets < tuples < sets < constants,
//   integers by value, tuples lexicographically (a proper prefix first),
//   sets as their sorted member sequences, cosets by group order, then
//   canonical generators, then the lexicographically least element.

#ifndef COSETCANON_OBJECT_H_
#define COSETCANON_OBJECT_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cosetcanon/coset.h"
#include "cosetcanon/perm.h"

namespace cosetcanon {

class Object {
 public:
  enum class Kind : uint32_t {
    kInt = 1,
    kCoset = 2,
    kTuple = 3,
    kSet = 4,
    kConst = 5,
  };

  // The empty tuple.
  Object();
  static Object Int(int v);
  static Object CosetAtom(Coset c);
  static Object Tuple(std::vector<Object> items);
  // Sorts members and drops duplicates.
  static Object Set(std::vector<Object> items);
  static Object Const(Object inner);

  Kind kind() const { return node_->kind; }
  bool is_int() const { return kind() == Kind::kInt; }
  bool is_coset() const { return kind() == Kind::kCoset; }
  bool is_tuple() const { return kind() == Kind::kTuple; }
  bool is_set() const { return kind() == Kind::kSet; }
  bool is_const() const { return kind() == Kind::kConst; }

  int value() const { return node_->value; }
  const Coset& coset() const { return node_->coset; }
  // Members of a tuple or set, or the single wrapped object of a constant.
  const std::vector<Object>& items() const { return node_->items; }
  size_t size() const { return node_->items.size(); }
  const Object& operator[](size_t i) const { return node_->items[i]; }

  const std::vector<uint32_t>& encoding() const { return node_->encoding; }
  // Hex digest of the encoding (FNV-1a 64 over the words).
  std::string Digest() const;
  std::string ToString() const;

  friend bool operator==(const Object& a, const Object& b) {
    return a.node_ == b.node_ || a.encoding() == b.encoding();
  }
  friend std::strong_ordering operator<=>(const Object& a, const Object& b) {
    return a.encoding() <=> b.encoding();
  }

 private:
  struct Node {
    Kind kind = Kind::kTuple;
    int value = 0;
    Coset coset;
    std::vector<Object> items;
    std::vector<uint32_t> encoding;
  };
  explicit Object(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Encoding words for a coset atom.
std::vector<uint32_t> EncodeCoset(const Coset& c);

// X^mu: vertices v -> mu(v), cosets -> mu^-1 * coset, constants unchanged.
Object Apply(const Object& x, const Perm& mu);

// Structural equality check of X^sigma and X that avoids canonical coset
// encodings; used by the brute-force oracles.
bool IsAutomorphism(const Object& x, const Perm& sigma);

// Comparison of ordered objects. Result of a three-way comparison.
std::strong_ordering CompareOrdered(const Object& a, const Object& b);

// Δ[X] ρ[X] for a set X: the action of the coset's group on the members of
// X (as indices into X.items()) and the labeling ordering members by their
// ρ-images.
Coset InducedCoset(const Coset& c, const Object& set);
// The permutation of member indices induced by sigma; throws InputError if
// sigma does not permute the members.
Perm InducedPerm(const Object& set, const Perm& sigma);

// Maximum vertex value plus one over all vertex atoms and coset degrees.
int GroundSize(const Object& x);

}  // namespace cosetcanon

#endif  // COSETCANON_OBJECT_H_
