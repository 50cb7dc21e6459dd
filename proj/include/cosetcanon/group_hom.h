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

// Homomorphisms from a permutation group to Sym(m), given by the images of
// the source generators and represented through the graph subgroup
// {(g, h(g))} acting on n + m points.

#ifndef COSETCANON_GROUP_HOM_H_
#define COSETCANON_GROUP_HOM_H_

#include <vector>

#include "cosetcanon/perm.h"
#include "cosetcanon/perm_group.h"

namespace cosetcanon {

class GroupHom {
 public:
  GroupHom() = default;
  // images[i] is the image of source.generators()[i], a permutation of
  // target_degree points. Throws ContractError if the images do not define
  // a homomorphism.
  GroupHom(const PermGroup& source, const std::vector<Perm>& images,
           int target_degree);

  // The homomorphism induced by the action of `source` on a set of objects;
  // `act(i, g)` returns the image of object i under generator g.
  template <typename Act>
  static GroupHom FromAction(const PermGroup& source, int m, Act act) {
    std::vector<Perm> images;
    for (const Perm& g : source.generators()) {
      std::vector<int> img(m);
      for (int i = 0; i < m; ++i) img[i] = act(i, g);
      images.emplace_back(std::move(img));
    }
    return GroupHom(source, images, m);
  }

  int source_degree() const { return n_; }
  int target_degree() const { return m_; }
  const PermGroup& Source() const { return source_; }
  PermGroup Image() const;
  PermGroup Kernel() const;
  // h(x) for x in the source group.
  Perm Map(const Perm& x) const;
  // {x in source | h(x) in sub}.
  PermGroup Preimage(const PermGroup& sub) const;
  // {x in source | h(x) fixes every point of `points`}.
  PermGroup PreimageOfPointwiseStabilizer(const std::vector<int>& points) const;
  // {x in source | h(x) maps `set` onto itself}.
  PermGroup PreimageOfSetwiseStabilizer(const std::vector<int>& set) const;
  // The restriction to a subgroup of the source.
  GroupHom Restrict(const PermGroup& sub) const;
  // An element mapping to y, if y is in the image.
  Perm Lift(const Perm& y) const;

 private:
  PermGroup Project(const PermGroup& graph_subgroup) const;

  int n_ = 0;
  int m_ = 0;
  PermGroup source_;
  PermGroup graph_;  // on n + m points, ascending base
};

}  // namespace cosetcanon

#endif  // COSETCANON_GROUP_HOM_H_
