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

#include "cosetcanon/harness.h"

#include <algorithm>
#include <numeric>

#include "cosetcanon/canon_set.h"
#include "cosetcanon/oracle.h"

namespace cosetcanon {

namespace {

Perm RandomBijection(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

CheckOutcome CheckCanonizer(const ObjectCanonizer& canon, const Object& x,
                            int n, int relabelings, std::mt19937_64& rng) {
  CheckOutcome out;
  auto fail = [&out, &x](const std::string& why) {
    out.ok = false;
    out.failure = why + " on " + x.ToString();
    return out;
  };
  CanonResult r = canon(x, n);
  if (r.labeling.empty() || r.labeling.degree() != n) {
    return fail("malformed labeling");
  }
  if (!(r.labeling.group() == BruteForceAut(x, n))) {
    return fail("group differs from Aut");
  }
  if (!(Apply(x, r.labeling.rep()) == r.form)) {
    return fail("representative does not produce the form");
  }
  for (int i = 0; i < relabelings; ++i) {
    const Perm phi = RandomBijection(rng, n);
    CanonResult s = canon(Apply(x, phi), n);
    if (!(s.form == r.form)) return fail("form not invariant");
    if (!(s.labeling == phi.Inverse() * r.labeling)) {
      return fail("labeling not equivariant");
    }
  }
  return out;
}

Object GraphInstance(const PairList& edges, const Coset& labeling) {
  std::vector<Object> pairs;
  for (const auto& [u, v] : edges) {
    pairs.push_back(Object::Tuple({Object::Int(u), Object::Int(v)}));
  }
  return Object::Tuple(
      {Object::Set(std::move(pairs)), Object::CosetAtom(labeling)});
}

Object IntInstance(const Coset& theta_tau, const Coset& delta_rho) {
  return Object::Tuple(
      {Object::CosetAtom(theta_tau), Object::CosetAtom(delta_rho)});
}

PairList DecodePairs(const Object& set) {
  PairList out;
  for (const Object& t : set.items()) out.emplace_back(t[0].value(), t[1].value());
  return out;
}

std::vector<Coset> DecodeCosets(const Object& set) {
  std::vector<Coset> out;
  for (const Object& c : set.items()) out.push_back(c.coset());
  return out;
}

ObjectCanonizer GraphCanonizer() {
  return [](const Object& x, int) {
    CanonResult r = ClGraph(DecodePairs(x[0]), x[1].coset());
    r.form = Object::Tuple({r.form, Apply(x[1], r.labeling.rep())});
    return r;
  };
}

ObjectCanonizer IntCanonizer() {
  return [](const Object& x, int) { return ClInt(x[0].coset(), x[1].coset()); };
}

ObjectCanonizer SetSmallCanonizer() {
  return [](const Object& x, int) { return ClSetSmall(DecodeCosets(x)); };
}

ObjectCanonizer ObjectCanonizerFor(const CanonOptions& options) {
  return [options](const Object& x, int n) { return ClObject(x, n, options); };
}

ObjectCanonizer RelCanonizer(const CanonOptions& options, RecursionStats* stats) {
  return [options, stats](const Object& x, int n) {
    return ClRel(x, n, options, stats);
  };
}

ObjectCanonizer HyperCanonizer(const CanonOptions& options,
                               RecursionStats* stats) {
  return [options, stats](const Object& x, int n) {
    return ClHyper(x, n, options, stats);
  };
}

ObjectCanonizer SetSetCanonizer(const CanonOptions& options,
                                RecursionStats* stats) {
  return [options, stats](const Object& x, int) {
    return ClSetSet(DecodeCosetMap(x), options, stats);
  };
}

ObjectCanonizer SetHyperCanonizer(const CanonOptions& options,
                                  RecursionStats* stats) {
  return [options, stats](const Object& x, int n) {
    return ClSetHyper(x, n, options, stats);
  };
}

ObjectCanonizer SetCanonizer(const CanonOptions& options) {
  return [options](const Object& x, int) {
    return ClSet(DecodeCosets(x), options);
  };
}

}  // namespace cosetcanon
