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

// Permutation groups held as a base and strong generating set.
//
// Every group carries a full stabilizer chain: the base lists all points of
// the domain, so levels whose basic orbit is trivial are kept. By default the
// base is 0, 1, ..., n-1, which makes sift-minimal representatives equal to
// lexicographically least elements. Values are immutable and cheap to copy.

#ifndef COSETCANON_PERM_GROUP_H_
#define COSETCANON_PERM_GROUP_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cosetcanon/perm.h"

namespace cosetcanon {

using BigInt = boost::multiprecision::cpp_int;

BigInt Factorial(int n);

class PermGroup {
 public:
  // The trivial group on zero points.
  PermGroup();
  // The trivial group on n points.
  explicit PermGroup(int degree);
  // The group generated by `generators`, all of the given degree. The base
  // starts with `base_prefix` and continues with the remaining points in
  // ascending order.
  PermGroup(int degree, std::vector<Perm> generators,
            const std::vector<int>& base_prefix = {});

  static PermGroup Symmetric(int degree);
  // Sym(support) fixing every other point.
  static PermGroup Symmetric(int degree, const std::vector<int>& support);
  static PermGroup Alternating(int degree, const std::vector<int>& support);

  int degree() const { return chain_->degree; }
  const std::vector<Perm>& generators() const { return chain_->generators; }
  const BigInt& order() const { return chain_->order; }
  bool IsTrivial() const { return chain_->order == 1; }
  bool Contains(const Perm& p) const;
  bool IsSubgroupOf(const PermGroup& other) const;
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  // The same group with a chain for the requested base prefix.
  PermGroup WithBase(const std::vector<int>& base_prefix) const;
  bool HasAscendingBase() const;

  // Stabilizer chain access. Level i stabilizes base points 0..i-1.
  int num_levels() const { return chain_->degree; }
  int base_point(int level) const { return chain_->levels[level].point; }
  const std::vector<int>& base() const { return chain_->base; }
  // Points of the basic orbit at `level`, in discovery order.
  const std::vector<int>& basic_orbit(int level) const {
    return chain_->levels[level].orbit;
  }
  bool InBasicOrbit(int level, int point) const {
    return chain_->levels[level].index[point] >= 0;
  }
  // Element of level `level` that maps the base point to `point`.
  const Perm& Transversal(int level, int point) const;
  const Perm& TransversalInverse(int level, int point) const;
  // Strong generators fixing the first `level` base points.
  std::vector<Perm> LevelGenerators(int level) const;
  std::vector<Perm> StrongGenerators() const;

  // Orbits on the whole domain, each sorted, ordered by minimum element.
  std::vector<std::vector<int>> Orbits() const;
  std::vector<int> Orbit(int point) const;
  std::vector<std::vector<int>> OrbitsOn(const std::vector<int>& set) const;
  bool IsTransitiveOn(const std::vector<int>& set) const;

  PermGroup PointwiseStabilizer(const std::vector<int>& points) const;
  // p^-1 G p.
  PermGroup Conjugate(const Perm& p) const;
  // All elements; intended for small groups only.
  std::vector<Perm> Elements() const;
  // Lexicographically least element of the right coset G * rho.
  Perm MinimalCosetRep(const Perm& rho) const;
  // Lex-least strong generating set relative to base 0..n-1. Depends only on
  // the group as a set of permutations.
  const std::vector<Perm>& CanonicalGenerators() const;

  std::string ToString() const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    std::vector<int> index;  // point -> position in orbit, or -1
    std::vector<Perm> u;     // u[pos] maps `point` to orbit[pos]
    std::vector<Perm> uinv;
    std::vector<int> gens;   // indices into Chain::strong
    std::vector<int> done;   // per orbit position: gens already processed
  };
  struct Chain {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> strong;
    std::vector<int> base;
    std::vector<Level> levels;
    BigInt order = 1;
    mutable std::once_flag canonical_once;
    mutable std::vector<Perm> canonical;
  };

  static std::shared_ptr<Chain> Build(int degree, std::vector<Perm> gens,
                                      const std::vector<int>& base_prefix);
  static void ExtendOrbit(Chain& c, int level);
  static int Strip(const Chain& c, Perm& h, int from_level);

  std::shared_ptr<const Chain> chain_;
};

// ---- Group algorithms -----------------------------------------------------

PermGroup BuildGroup(int degree, const std::vector<Perm>& generators);

// Orbits of G on an invariant subset A, each sorted, ordered by minimum.
std::vector<std::vector<int>> OrbitPartition(const PermGroup& g,
                                             const std::vector<int>& a);

// Finest G-invariant partition of the orbit A in which all of `seed` lie in
// one block.
std::vector<std::vector<int>> MinimalBlockContaining(
    const PermGroup& g, const std::vector<int>& a, const std::vector<int>& seed);

// A block system of the transitive action on A whose induced action on the
// blocks is primitive. Among those, returns the one with the smallest blocks,
// ties broken lexicographically. Returns singletons when G is primitive on A.
std::vector<std::vector<int>> MinimalBlockSystem(const PermGroup& g,
                                                 const std::vector<int>& a);

PermGroup SetwiseStabilizer(const PermGroup& g, const std::vector<int>& set);

// Stabilizer of an ordered partition (each part setwise).
PermGroup PartitionStabilizer(const PermGroup& g,
                              const std::vector<std::vector<int>>& parts);

// Representatives of the left cosets d*H of H in G. The representative of
// d*H is the inverse of the least element of H*d^-1, so it depends only on
// the coset. The first is the identity, the rest ascend.
std::vector<Perm> CosetTransversal(const PermGroup& g, const PermGroup& h);

enum class GiantType { kSymmetric, kAlternating, kNeither };
// Classifies the action of G on the invariant set W.
GiantType IsGiant(const PermGroup& g, const std::vector<int>& w);

PermGroup NormalClosure(const PermGroup& g, const PermGroup& h);

// Points X with G_(X) <= P, chosen greedily.
std::vector<int> RelativeBase(const PermGroup& d, const PermGroup& p);

// The group generated by g's generators restricted to the invariant set
// `set`, relabeled to 0..|set|-1 in the order given.
PermGroup RestrictToSet(const PermGroup& g, const std::vector<int>& set);
Perm RestrictPerm(const Perm& p, const std::vector<int>& set,
                  const std::vector<int>& position);

// ---- Backtrack search over a group ----------------------------------------

// Search callbacks receive the base and the images chosen so far;
// images[j] is the image of base[j] for j <= depth.
struct SearchSpec {
  std::vector<int> base_prefix;
  std::function<bool(const std::vector<int>& base, int depth,
                     const std::vector<int>& images)>
      partial;
  std::function<bool(const Perm&)> full;
};

// Some x in G * rho with spec.full(x), or nullopt.
std::optional<Perm> FindInCoset(const PermGroup& g, const Perm& rho,
                                const SearchSpec& spec);
// The subgroup {x in G : spec.full(x)}; the predicate must define a subgroup.
PermGroup FindSubgroup(const PermGroup& g, const SearchSpec& spec);

// Orbit of `start` under G with the Schreier stabilizer.
template <typename T, typename Act>
struct OrbitStabilizerResult {
  std::vector<T> orbit;
  std::vector<Perm> transversal;  // transversal[i] maps start to orbit[i]
  PermGroup stabilizer;
};

template <typename T, typename Act>
OrbitStabilizerResult<T, Act> OrbitStabilizer(const PermGroup& g,
                                              const T& start, Act act) {
  OrbitStabilizerResult<T, Act> r;
  std::map<T, int> where;
  r.orbit.push_back(start);
  r.transversal.push_back(Perm(g.degree()));
  where.emplace(start, 0);
  std::vector<Perm> schreier;
  for (size_t i = 0; i < r.orbit.size(); ++i) {
    for (const Perm& s : g.generators()) {
      T img = act(r.orbit[i], s);
      auto it = where.find(img);
      if (it == where.end()) {
        where.emplace(img, static_cast<int>(r.orbit.size()));
        r.orbit.push_back(img);
        r.transversal.push_back(r.transversal[i] * s);
      } else {
        Perm h = r.transversal[i] * s * r.transversal[it->second].Inverse();
        if (!h.IsIdentity()) schreier.push_back(std::move(h));
      }
    }
  }
  r.stabilizer = PermGroup(g.degree(), std::move(schreier));
  return r;
}

}  // namespace cosetcanon

#endif  // COSETCANON_PERM_GROUP_H_
