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

#include "cosetcanon/group_hom.h"

#include <numeric>

#include "cosetcanon/coset.h"

namespace cosetcanon {

namespace {

Perm Pair(const Perm& g, const Perm& h) {
  const int n = g.degree(), m = h.degree();
  std::vector<int> img(n + m);
  for (int i = 0; i < n; ++i) img[i] = g[i];
  for (int i = 0; i < m; ++i) img[n + i] = n + h[i];
  return Perm(std::move(img));
}

Perm Part(const Perm& p, int lo, int len) {
  std::vector<int> img(len);
  for (int i = 0; i < len; ++i) img[i] = p[lo + i] - lo;
  return Perm(std::move(img));
}

PermGroup Part(const PermGroup& g, int lo, int len) {
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    Perm q = Part(s, lo, len);
    if (!q.IsIdentity()) gens.push_back(std::move(q));
  }
  return PermGroup(len, std::move(gens));
}

}  // namespace

GroupHom::GroupHom(const PermGroup& source, const std::vector<Perm>& images,
                   int target_degree)
    : n_(source.degree()),
      m_(target_degree),
      source_(source) {
  if (images.size() != source.generators().size()) {
    throw InputError("one image per generator required");
  }
  std::vector<Perm> gens;
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != m_) throw InputError("image degree mismatch");
    gens.push_back(Pair(source.generators()[i], images[i]));
  }
  graph_ = PermGroup(n_ + m_, std::move(gens));
  if (graph_.order() != source.order()) {
    throw ContractError("generator images do not define a homomorphism");
  }
}

PermGroup GroupHom::Image() const { return Part(graph_, n_, m_); }

PermGroup GroupHom::Project(const PermGroup& graph_subgroup) const {
  return Part(graph_subgroup, 0, n_);
}

PermGroup GroupHom::Kernel() const {
  std::vector<int> w(m_);
  std::iota(w.begin(), w.end(), n_);
  return Project(graph_.PointwiseStabilizer(w));
}

Perm GroupHom::Map(const Perm& x) const {
  // Sift (x, id) through the levels of the first n base points; the residue
  // is (id, z) with (x, id) = (id, z) * w, so h(x) = z^-1.
  Perm r = Pair(x, Perm(m_));
  for (int level = 0; level < n_; ++level) {
    const int p = r[graph_.base_point(level)];
    if (!graph_.InBasicOrbit(level, p)) {
      throw InputError("element is not in the source group");
    }
    r = r * graph_.TransversalInverse(level, p);
  }
  Perm z = Part(r, n_, m_);
  for (int i = 0; i < n_; ++i) {
    if (r[i] != i) throw InputError("element is not in the source group");
  }
  return z.Inverse();
}

PermGroup GroupHom::Preimage(const PermGroup& sub) const {
  std::vector<Perm> gens;
  const PermGroup sym = PermGroup::Symmetric(n_);
  for (const Perm& g : sym.generators()) {
    gens.push_back(Pair(g, Perm(m_)));
  }
  for (const Perm& g : sub.generators()) gens.push_back(Pair(Perm(n_), g));
  return Project(IntersectGroups(graph_, PermGroup(n_ + m_, std::move(gens))));
}

PermGroup GroupHom::PreimageOfPointwiseStabilizer(
    const std::vector<int>& points) const {
  std::vector<int> shifted;
  for (int p : points) shifted.push_back(n_ + p);
  return Project(graph_.PointwiseStabilizer(shifted));
}

PermGroup GroupHom::PreimageOfSetwiseStabilizer(const std::vector<int>& set) const {
  std::vector<int> shifted;
  for (int p : set) shifted.push_back(n_ + p);
  return Project(SetwiseStabilizer(graph_, shifted));
}

GroupHom GroupHom::Restrict(const PermGroup& sub) const {
  std::vector<Perm> images;
  for (const Perm& g : sub.generators()) images.push_back(Map(g));
  return GroupHom(sub, images, m_);
}

Perm GroupHom::Lift(const Perm& y) const {
  // Sift (id, y) through the levels of the last m base points after moving
  // the first n; uses a chain whose base starts with the target points.
  std::vector<int> base(m_);
  std::iota(base.begin(), base.end(), n_);
  PermGroup g = graph_.WithBase(base);
  Perm r = Pair(Perm(n_), y);
  Perm w(n_ + m_);
  for (int level = 0; level < m_; ++level) {
    const int p = r[g.base_point(level)];
    if (!g.InBasicOrbit(level, p)) throw InputError("not in the image");
    const Perm& u = g.Transversal(level, p);
    r = r * g.TransversalInverse(level, p);
    w = u * w;
  }
  // Now (id, y) = r * w with r fixing the target; project w.
  return Part(w, 0, n_);
}

}  // namespace cosetcanon
