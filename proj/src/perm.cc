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

#include "cosetcanon/perm.h"

#include <cctype>
#include <numeric>
#include <sstream>

namespace cosetcanon {

Perm::Perm(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) {
      throw InputError("image table is not a bijection");
    }
    seen[x] = 1;
  }
}

Perm Perm::FromCycleList(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 0 || x >= n) throw InputError("cycle point out of range");
      if (used[x]) throw InputError("cycles are not disjoint");
      used[x] = 1;
      img[x] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::FromCycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw InputError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("unexpected character in cycle notation");
      }
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(v - 1);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return FromCycleList(cycles, n);
}

bool Perm::IsIdentity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<int> Perm::Support() const {
  std::vector<int> s;
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) s.push_back(i);
  }
  return s;
}

std::string Perm::ToCycles() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    int x = i;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out << ' ';
      out << x + 1;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.images_.resize(a.images_.size());
  for (size_t i = 0; i < a.images_.size(); ++i) {
    r.images_[i] = b.images_[a.images_[i]];
  }
  return r;
}

Perm& Perm::operator*=(const Perm& b) {
  for (auto& x : images_) x = b.images_[x];
  return *this;
}

Perm Perm::ConjugateBy(const Perm& p) const {
  // (p^-1 * this * p)[p[x]] = p[this[x]].
  Perm r;
  r.images_.resize(images_.size());
  for (int x = 0; x < degree(); ++x) r.images_[p[x]] = p[images_[x]];
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace cosetcanon
