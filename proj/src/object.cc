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

#include "cosetcanon/object.h"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <map>
#include <sstream>

namespace cosetcanon {

namespace {

constexpr uint32_t kEnd = 0;

void AppendBigInt(const BigInt& x, std::vector<uint32_t>& out) {
  std::vector<uint32_t> words;
  boost::multiprecision::export_bits(x, std::back_inserter(words), 32, true);
  out.push_back(static_cast<uint32_t>(words.size()));
  out.insert(out.end(), words.begin(), words.end());
}

}  // namespace

std::vector<uint32_t> EncodeCoset(const Coset& c) {
  std::vector<uint32_t> e;
  e.push_back(static_cast<uint32_t>(Object::Kind::kCoset));
  e.push_back(static_cast<uint32_t>(c.degree()));
  if (c.empty()) {
    // The empty coset sorts before every nonempty one (order 0).
    AppendBigInt(0, e);
    return e;
  }
  AppendBigInt(c.group().order(), e);
  const auto& gens = c.group().CanonicalGenerators();
  e.push_back(static_cast<uint32_t>(gens.size()));
  for (const Perm& g : gens) {
    for (int x : g.images()) e.push_back(static_cast<uint32_t>(x));
  }
  const Perm m = c.MinElement();
  for (int x : m.images()) e.push_back(static_cast<uint32_t>(x));
  return e;
}

Object::Object() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kTuple;
  n->encoding = {static_cast<uint32_t>(Kind::kTuple), kEnd};
  node_ = std::move(n);
}

Object Object::Int(int v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInt;
  n->value = v;
  n->encoding = {static_cast<uint32_t>(Kind::kInt), static_cast<uint32_t>(v)};
  return Object(std::move(n));
}

Object Object::CosetAtom(Coset c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCoset;
  n->encoding = EncodeCoset(c);
  n->coset = std::move(c);
  return Object(std::move(n));
}

Object Object::Tuple(std::vector<Object> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kTuple;
  size_t len = 2;
  for (const Object& o : items) len += o.encoding().size();
  n->encoding.reserve(len);
  n->encoding.push_back(static_cast<uint32_t>(Kind::kTuple));
  for (const Object& o : items) {
    n->encoding.insert(n->encoding.end(), o.encoding().begin(),
                       o.encoding().end());
  }
  n->encoding.push_back(kEnd);
  n->items = std::move(items);
  return Object(std::move(n));
}

Object Object::Set(std::vector<Object> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSet;
  size_t len = 2;
  for (const Object& o : items) len += o.encoding().size();
  n->encoding.reserve(len);
  n->encoding.push_back(static_cast<uint32_t>(Kind::kSet));
  for (const Object& o : items) {
    n->encoding.insert(n->encoding.end(), o.encoding().begin(),
                       o.encoding().end());
  }
  n->encoding.push_back(kEnd);
  n->items = std::move(items);
  return Object(std::move(n));
}

Object Object::Const(Object inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->encoding.push_back(static_cast<uint32_t>(Kind::kConst));
  n->encoding.insert(n->encoding.end(), inner.encoding().begin(),
                     inner.encoding().end());
  n->items = {std::move(inner)};
  return Object(std::move(n));
}

std::string Object::Digest() const {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t w : encoding()) {
    for (int b = 0; b < 4; ++b) {
      h ^= (w >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Object::ToString() const {
  switch (kind()) {
    case Kind::kInt:
      return std::to_string(value() + 1);
    case Kind::kCoset:
      return coset().ToString();
    case Kind::kConst:
      return "<" + items()[0].ToString() + ">";
    case Kind::kTuple:
    case Kind::kSet: {
      std::string s = is_tuple() ? "(" : "{";
      for (size_t i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += items()[i].ToString();
      }
      s += is_tuple() ? ")" : "}";
      return s;
    }
  }
  return "";
}

Object Apply(const Object& x, const Perm& mu) {
  switch (x.kind()) {
    case Object::Kind::kInt:
      return Object::Int(mu[x.value()]);
    case Object::Kind::kCoset:
      return Object::CosetAtom(mu.Inverse() * x.coset());
    case Object::Kind::kConst:
      return x;
    case Object::Kind::kTuple:
    case Object::Kind::kSet: {
      std::vector<Object> items;
      items.reserve(x.size());
      for (const Object& y : x.items()) items.push_back(Apply(y, mu));
      return x.is_tuple() ? Object::Tuple(std::move(items))
                          : Object::Set(std::move(items));
    }
  }
  return x;
}

namespace {

// Whether a^sigma equals b, without building canonical encodings.
bool SameUnder(const Object& a, const Perm& sigma, const Perm& sigma_inv,
               const Object& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Object::Kind::kInt:
      return sigma[a.value()] == b.value();
    case Object::Kind::kCoset:
      return (sigma_inv * a.coset()) == b.coset();
    case Object::Kind::kConst:
      return a == b;
    case Object::Kind::kTuple:
      if (a.size() != b.size()) return false;
      for (size_t i = 0; i < a.size(); ++i) {
        if (!SameUnder(a[i], sigma, sigma_inv, b[i])) return false;
      }
      return true;
    case Object::Kind::kSet: {
      if (a.size() != b.size()) return false;
      std::vector<char> used(b.size(), 0);
      for (const Object& y : a.items()) {
        bool found = false;
        for (size_t j = 0; j < b.size() && !found; ++j) {
          if (used[j]) continue;
          if (SameUnder(y, sigma, sigma_inv, b[j])) {
            used[j] = 1;
            found = true;
          }
        }
        if (!found) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool IsAutomorphism(const Object& x, const Perm& sigma) {
  return SameUnder(x, sigma, sigma.Inverse(), x);
}

std::strong_ordering CompareOrdered(const Object& a, const Object& b) {
  return a <=> b;
}

Perm InducedPerm(const Object& set, const Perm& sigma) {
  if (!set.is_set()) throw InputError("induced action needs a set");
  std::map<std::vector<uint32_t>, int> index;
  for (size_t i = 0; i < set.size(); ++i) {
    index.emplace(set[i].encoding(), static_cast<int>(i));
  }
  std::vector<int> img(set.size());
  for (size_t i = 0; i < set.size(); ++i) {
    auto it = index.find(Apply(set[i], sigma).encoding());
    if (it == index.end()) {
      throw InputError("permutation does not preserve the set");
    }
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

Coset InducedCoset(const Coset& c, const Object& set) {
  if (!set.is_set()) throw InputError("induced coset needs a set");
  const int t = static_cast<int>(set.size());
  std::vector<Perm> gens;
  for (const Perm& g : c.group().generators()) {
    gens.push_back(InducedPerm(set, g));
  }
  std::vector<std::pair<Object, int>> images;
  for (int i = 0; i < t; ++i) images.emplace_back(Apply(set[i], c.rep()), i);
  std::sort(images.begin(), images.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> rank(t);
  for (int r = 0; r < t; ++r) {
    if (r > 0 && images[r].first == images[r - 1].first) {
      throw InputError("distinct members with identical images");
    }
    rank[images[r].second] = r;
  }
  return Coset(PermGroup(t, std::move(gens)), Perm(std::move(rank)));
}

int GroundSize(const Object& x) {
  switch (x.kind()) {
    case Object::Kind::kInt:
      return x.value() + 1;
    case Object::Kind::kCoset:
      return x.coset().degree();
    case Object::Kind::kConst:
      return 0;
    case Object::Kind::kTuple:
    case Object::Kind::kSet: {
      int m = 0;
      for (const Object& y : x.items()) m = std::max(m, GroundSize(y));
      return m;
    }
  }
  return 0;
}

}  // namespace cosetcanon
