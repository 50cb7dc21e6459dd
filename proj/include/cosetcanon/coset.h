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

// Cosets G * rep = {g * rep : g in G} of bijections between two point sets
// of equal size, both numbered 0..n-1.
//
// A labeling coset over V is the case where the codomain is the ordered set
// of labels. Isomorphism sets Iso(X1; X2) are the case where the codomain is
// the ground set of a second object. Emptiness is an explicit state.

#ifndef COSETCANON_COSET_H_
#define COSETCANON_COSET_H_

#include <string>
#include <vector>

#include "cosetcanon/perm.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

class Coset {
 public:
  // The empty coset on zero points.
  Coset() = default;
  Coset(PermGroup group, Perm rep);

  static Coset Empty(int degree);
  // Label(V): all bijections.
  static Coset All(int degree);
  static Coset Single(Perm p);

  bool empty() const { return empty_; }
  int degree() const { return degree_; }
  const PermGroup& group() const { return group_; }
  const Perm& rep() const { return rep_; }
  BigInt size() const { return empty_ ? BigInt(0) : group_.order(); }

  bool Contains(const Perm& x) const;
  // rep^-1 * G * rep: the group acting on the codomain.
  PermGroup CodomainGroup() const;
  // Lexicographically least element.
  Perm MinElement() const;

  // (G * rep) * p.
  Coset operator*(const Perm& p) const;
  // p * G * rep = (p G p^-1) * (p rep).
  friend Coset operator*(const Perm& p, const Coset& c);
  // {x^-1 : x in coset}.
  Coset Inverse() const;

  friend bool operator==(const Coset& a, const Coset& b);

  // "coset[g1, g2; image list]" with 1-based points.
  std::string ToString() const;

 private:
  bool empty_ = true;
  int degree_ = 0;
  PermGroup group_;
  Perm rep_;
};

// Set of x in G*x0 whose partial base images can extend to an element of
// H*y0. Used to prune searches against a second coset.
class CosetFilter {
 public:
  // `h` must carry a chain whose base equals `base`.
  CosetFilter(PermGroup h, const Perm& y0);
  bool Extendable(int depth, const std::vector<int>& images);
  bool Contains(const Perm& x) const;

 private:
  PermGroup h_;
  Perm yinv_;
  std::vector<Perm> cinv_;
};

// Intersection of two cosets over the same domain and codomain.
Coset Intersect(const Coset& a, const Coset& b);
PermGroup IntersectGroups(const PermGroup& a, const PermGroup& b);

// Smallest coset containing every member: group generated by all groups and
// all rep_i * rep_1^-1, with representative rep_1.
Coset Join(const std::vector<Coset>& cosets);

// The restriction of a coset to a subset S that all its members map onto
// the image set T (both given as ordered lists). The result acts from
// positions in S to positions in T.
Coset RestrictCoset(const Coset& c, const std::vector<int>& s,
                    const std::vector<int>& t);

}  // namespace cosetcanon

#endif  // COSETCANON_COSET_H_
