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

#include "cosetcanon/canon.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "cosetcanon/canon_set.h"

namespace cosetcanon {

namespace {

// Depth-first search over the stabilizer chain of gamma. At depth k the
// image x(b_k) is fixed and the key
//   f(x_k, x_k), f(x_0, x_k), f(x_k, x_0), ..., f(x_{k-1}, x_k), f(x_k, x_{k-1})
// is appended, so the concatenated keys are the matrix read along growing
// squares. Only children with the least key can carry the minimum. Leaves
// equal to the best one yield automorphisms, whose point stabilizers prune
// equivalent children.
class MatrixSearch {
 public:
  MatrixSearch(const PermGroup& gamma, const ColorMatrix& f)
      : f_(f), n_(gamma.degree()), best_x_(gamma.degree()) {
    std::vector<int> orbit_size(n_, 1);
    for (const auto& orb : gamma.Orbits()) {
      for (int p : orb) orbit_size[p] = static_cast<int>(orb.size());
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return orbit_size[a] < orbit_size[b];
    });
    g_ = gamma.WithBase(order);
    aut_group_ = PermGroup(n_);
  }

  MatrixCanon Run() {
    Search(0, Perm(n_), true);
    return {best_x_, auts_};
  }

 private:
  void Key(int level, int c, std::vector<uint32_t>& key) const {
    key.clear();
    key.push_back(f_[c][c]);
    for (int j = 0; j < level; ++j) {
      key.push_back(f_[images_[j]][c]);
      key.push_back(f_[c][images_[j]]);
    }
  }

  void Leaf(const Perm& x, bool equal) {
    if (!has_best_ || !equal) {
      has_best_ = true;
      best_ = cur_;
      best_x_ = x;
      ++version_;
      return;
    }
    Perm a = best_x_.Inverse() * x;
    if (a.IsIdentity() || aut_group_.Contains(a)) return;
    auts_.push_back(std::move(a));
    aut_group_ = PermGroup(n_, auts_);
  }

  // Orbit representatives of the pointwise stabilizer of images_[0..level).
  std::vector<int> StabilizerOrbits(int level) const {
    PermGroup s(n_, auts_,
                std::vector<int>(images_.begin(), images_.begin() + level));
    std::vector<int> rep(n_);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&rep](int a) {
      while (rep[a] != a) a = rep[a] = rep[rep[a]];
      return a;
    };
    for (const Perm& g : s.LevelGenerators(level)) {
      for (int p = 0; p < n_; ++p) {
        const int a = find(p), b = find(g[p]);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int p = 0; p < n_; ++p) rep[p] = find(p);
    return rep;
  }

  void Search(int level, const Perm& d, bool equal) {
    if (level == n_) {
      Leaf(d, equal);
      return;
    }
    const std::vector<int>& orbit = g_.basic_orbit(level);
    struct Child {
      int image;
      int point;
    };
    std::vector<Child> children;
    std::vector<uint32_t> key, min_key;
    for (int p : orbit) {
      const int c = d[p];
      Key(level, c, key);
      if (children.empty() || key < min_key) {
        children.clear();
        min_key = key;
      }
      if (key == min_key) children.push_back({c, p});
    }
    if (has_best_ && equal) {
      const size_t off = static_cast<size_t>(level) * level;
      auto cmp = std::lexicographical_compare_three_way(
          min_key.begin(), min_key.end(), best_.begin() + off,
          best_.begin() + off + min_key.size());
      if (cmp > 0) return;
      if (cmp < 0) equal = false;
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.image < b.image; });
    std::vector<int> explored;
    std::vector<int> orbit_rep;
    size_t orbit_auts = 0;
    for (const Child& ch : children) {
      if (!auts_.empty() && !explored.empty()) {
        if (orbit_rep.empty() || orbit_auts != auts_.size()) {
          orbit_rep = StabilizerOrbits(level);
          orbit_auts = auts_.size();
        }
        bool skip = false;
        for (int e : explored) {
          if (orbit_rep[e] == orbit_rep[ch.image]) {
            skip = true;
            break;
          }
        }
        if (skip) continue;
      }
      explored.push_back(ch.image);
      images_.push_back(ch.image);
      cur_.insert(cur_.end(), min_key.begin(), min_key.end());
      const int before = version_;
      Search(level + 1, g_.Transversal(level, ch.point) * d,
             equal || !has_best_);
      cur_.resize(cur_.size() - min_key.size());
      images_.pop_back();
      // A new best found below passes through this node.
      if (version_ != before) equal = true;
    }
  }

  const ColorMatrix& f_;
  const int n_;
  PermGroup g_;
  PermGroup aut_group_;
  std::vector<int> images_;
  std::vector<uint32_t> cur_;
  std::vector<uint32_t> best_;
  bool has_best_ = false;
  Perm best_x_;
  int version_ = 0;
  std::vector<Perm> auts_;
};

// The first n images of a permutation that preserves {0..n-1}.
Perm Truncate(const Perm& p, int n) {
  std::vector<int> img(p.images().begin(), p.images().begin() + n);
  return Perm(std::move(img));
}

PermGroup TruncateGroup(const std::vector<Perm>& gens, int n) {
  std::vector<Perm> out;
  for (const Perm& g : gens) {
    Perm t = Truncate(g, n);
    if (!t.IsIdentity()) out.push_back(std::move(t));
  }
  return PermGroup(n, std::move(out));
}

bool IsSymmetric(const PermGroup& g) {
  return g.order() == Factorial(g.degree());
}

// Generators of Sym on labels [lo, lo+len) in a group of degree n.
void AppendSymmetricGenerators(int n, int lo, int len, std::vector<Perm>& out) {
  if (len < 2) return;
  std::vector<int> t(n), c(n);
  std::iota(t.begin(), t.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  std::swap(t[lo], t[lo + 1]);
  out.emplace_back(t);
  if (len > 2) {
    for (int i = 0; i < len; ++i) c[lo + i] = lo + (i + 1) % len;
    out.emplace_back(c);
  }
}

// Embeds a permutation of degree m at offset `lo` into degree n.
Perm Shift(const Perm& p, int lo, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[lo + i] = lo + p[i];
  return Perm(std::move(img));
}

// Canonization in label space followed by restriction to labels [0, n).
// `rho_v` maps V onto [0, n); the result is a coset on V.
Coset RestrictedCanon(const PermGroup& gamma_u, const ColorMatrix& f,
                      const Perm& rho_v) {
  const int n = rho_v.degree();
  MatrixCanon mc = CanonizeMatrix(gamma_u, f);
  PermGroup a = TruncateGroup(mc.automorphisms, n);
  return Coset(a.Conjugate(rho_v.Inverse()),
               rho_v * Truncate(mc.x.Inverse(), n));
}

ColorMatrix ZeroMatrix(int n) {
  return ColorMatrix(n, std::vector<uint32_t>(n, 0));
}

}  // namespace

MatrixCanon CanonizeMatrix(const PermGroup& gamma, const ColorMatrix& f) {
  if (gamma.degree() == 0) return {Perm(0), {}};
  return MatrixSearch(gamma, f).Run();
}

CanonResult ClColoredGraph(const ColorMatrix& colors, const Coset& labeling) {
  if (labeling.empty()) throw InputError("empty labeling coset");
  const int n = labeling.degree();
  if (static_cast<int>(colors.size()) != n) {
    throw InputError("color matrix size mismatch");
  }
  const Perm& rho = labeling.rep();
  auto form_of = [&](const Perm& pi) {
    std::vector<Object> items;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (colors[u][v] == 0) continue;
        items.push_back(Object::Tuple({Object::Int(pi[u]), Object::Int(pi[v]),
                                       Object::Int(static_cast<int>(colors[u][v]))}));
      }
    }
    return Object::Set(std::move(items));
  };
  bool invariant = true;
  for (const Perm& g : labeling.group().generators()) {
    for (int u = 0; u < n && invariant; ++u) {
      for (int v = 0; v < n; ++v) {
        if (colors[g[u]][g[v]] != colors[u][v]) {
          invariant = false;
          break;
        }
      }
    }
    if (!invariant) break;
  }
  if (invariant) return {labeling, form_of(rho)};
  ColorMatrix f = ZeroMatrix(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) f[rho[u]][rho[v]] = colors[u][v];
  }
  PermGroup gamma = labeling.group().Conjugate(rho);
  MatrixCanon mc = CanonizeMatrix(gamma, f);
  Coset out(PermGroup(n, mc.automorphisms).Conjugate(rho.Inverse()),
            rho * mc.x.Inverse());
  return {out, form_of(out.rep())};
}

CanonResult ClGraph(const PairList& edges, const Coset& labeling) {
  const int n = labeling.degree();
  ColorMatrix colors = ZeroMatrix(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge endpoint out of range");
    }
    colors[u][v] = 1;
  }
  CanonResult r = ClColoredGraph(colors, labeling);
  std::vector<Object> items;
  const Perm& pi = r.labeling.rep();
  for (const auto& [u, v] : edges) {
    items.push_back(Object::Tuple({Object::Int(pi[u]), Object::Int(pi[v])}));
  }
  r.form = Object::Set(std::move(items));
  return r;
}

CanonResult ClInt(const Coset& theta_tau, const Coset& delta_rho) {
  if (theta_tau.empty() || delta_rho.empty()) {
    throw InputError("empty labeling coset");
  }
  const int n = delta_rho.degree();
  if (theta_tau.degree() != n) throw InputError("coset degree mismatch");
  const Object pair = Object::Tuple(
      {Object::CosetAtom(theta_tau), Object::CosetAtom(delta_rho)});
  auto result = [&](const Coset& c) {
    return CanonResult{c, Apply(pair, c.rep())};
  };
  if (IsSymmetric(theta_tau.group()) || theta_tau == delta_rho) {
    return result(delta_rho);
  }
  if (IsSymmetric(delta_rho.group())) return result(theta_tau);
  // Two copies of V joined by identification edges; the first copy carries
  // delta_rho, the second theta_tau.
  const Perm& rho = delta_rho.rep();
  const Perm& tau = theta_tau.rep();
  std::vector<Perm> gens;
  const PermGroup gd = delta_rho.group().Conjugate(rho);
  const PermGroup gt = theta_tau.group().Conjugate(tau);
  for (const Perm& g : gd.generators()) gens.push_back(Shift(g, 0, 2 * n));
  for (const Perm& g : gt.generators()) gens.push_back(Shift(g, n, 2 * n));
  ColorMatrix f = ZeroMatrix(2 * n);
  for (int v = 0; v < n; ++v) f[rho[v]][tau[v] + n] = 1;
  return result(RestrictedCanon(PermGroup(2 * n, std::move(gens)), f, rho));
}

Object CosetSetObject(const std::vector<Coset>& cosets) {
  std::vector<Object> items;
  items.reserve(cosets.size());
  for (const Coset& c : cosets) items.push_back(Object::CosetAtom(c));
  return Object::Set(std::move(items));
}

CanonResult ClSetSmall(const std::vector<Coset>& cosets) {
  if (cosets.empty()) throw InputError("empty set of cosets");
  const Object set = CosetSetObject(cosets);
  const int n = cosets[0].degree();
  const int t = static_cast<int>(set.size());
  for (const Object& c : set.items()) {
    if (c.coset().degree() != n) throw InputError("mixed ground sets");
    if (c.coset().empty()) throw InputError("empty labeling coset");
  }
  if (t == 1) return {set[0].coset(), Apply(set, set[0].coset().rep())};
  // Components sorted by the canonical group rho_i^-1 Delta_i rho_i.
  struct Component {
    Object can;
    int index;
  };
  std::vector<Component> comps;
  for (int i = 0; i < t; ++i) {
    const Coset& c = set[i].coset();
    comps.push_back(
        {Object::CosetAtom(Coset(c.CodomainGroup(), Perm(n))), i});
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const Component& a, const Component& b) {
                     return a.can < b.can;
                   });
  // Labels: V gets [0, n), the component of rank k gets [(k+1)n, (k+2)n).
  // Points: V is [0, n), copy i of V is [(i+1)n, (i+2)n).
  const int m = (t + 1) * n;
  std::vector<Perm> gens;
  AppendSymmetricGenerators(m, 0, n, gens);
  for (int k = 0; k < t;) {
    int e = k;
    while (e < t && comps[e].can == comps[k].can) ++e;
    const PermGroup& can = comps[k].can.coset().group();
    const int lo = (k + 1) * n;
    for (const Perm& g : can.generators()) gens.push_back(Shift(g, lo, m));
    const int classes = e - k;
    if (classes > 1) {
      std::vector<int> swap(m), cycle(m);
      std::iota(swap.begin(), swap.end(), 0);
      std::iota(cycle.begin(), cycle.end(), 0);
      for (int v = 0; v < n; ++v) {
        std::swap(swap[lo + v], swap[lo + n + v]);
        for (int j = 0; j < classes; ++j) {
          cycle[lo + j * n + v] = lo + ((j + 1) % classes) * n + v;
        }
      }
      gens.emplace_back(swap);
      if (classes > 2) gens.emplace_back(cycle);
    }
    k = e;
  }
  ColorMatrix f = ZeroMatrix(m);
  for (int k = 0; k < t; ++k) {
    const Perm& rho = set[comps[k].index].coset().rep();
    for (int v = 0; v < n; ++v) f[v][rho[v] + (k + 1) * n] = 1;
  }
  Coset out = RestrictedCanon(PermGroup(m, std::move(gens)), f, Perm(n));
  return {out, Apply(set, out.rep())};
}

CanonResult CanonizeCosetSet(const std::vector<Coset>& cosets,
                             const CanonOptions& options) {
  if (options.set_method == SetMethod::kSmall) return ClSetSmall(cosets);
  return ClSet(cosets, options);
}

CanonResult ClObject(const Object& x, int n, const CanonOptions& options) {
  switch (x.kind()) {
    case Object::Kind::kInt: {
      const int v = x.value();
      if (v < 0 || v >= n) throw InputError("vertex out of range");
      std::vector<int> rest;
      for (int w = 0; w < n; ++w) {
        if (w != v) rest.push_back(w);
      }
      std::vector<int> swap(n);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[0], swap[v]);
      return {Coset(PermGroup::Symmetric(n, rest), Perm(swap)), Object::Int(0)};
    }
    case Object::Kind::kCoset:
      if (x.coset().degree() != n) throw InputError("coset degree mismatch");
      if (x.coset().empty()) throw InputError("empty labeling coset");
      return {x.coset(), Apply(x, x.coset().rep())};
    case Object::Kind::kConst:
      return {Coset::All(n), x};
    case Object::Kind::kTuple: {
      Coset lambda = Coset::All(n);
      for (const Object& item : x.items()) {
        lambda = ClInt(ClObject(item, n, options).labeling, lambda).labeling;
      }
      return {lambda, Apply(x, lambda.rep())};
    }
    case Object::Kind::kSet: {
      std::map<Object, std::vector<Coset>> classes;
      for (const Object& item : x.items()) {
        CanonResult r = ClObject(item, n, options);
        classes[r.form].push_back(std::move(r.labeling));
      }
      Coset lambda = Coset::All(n);
      for (const auto& [form, members] : classes) {
        Coset c = members.size() == 1
                      ? members[0]
                      : CanonizeCosetSet(members, options).labeling;
        lambda = ClInt(c, lambda).labeling;
      }
      return {lambda, Apply(x, lambda.rep())};
    }
  }
  throw ContractError("unknown object kind");
}

}  // namespace cosetcanon
