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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cosetcanon/canon_set.h"

namespace cosetcanon {

namespace {

bool ShapeHolds(ProgressShape shape, const ProgressRecord& p,
                const ProgressRecord& c) {
  switch (shape) {
    case ProgressShape::kRoot:
      return false;
    case ProgressShape::kLinearInJ:
      return c.j_size < p.j_size && c.a_size == p.a_size;
    case ProgressShape::kLinearInA:
      return c.a_size < p.a_size && !c.giant;
    case ProgressShape::kInJ:
      return 2 * c.j_size <= p.j_size;
    case ProgressShape::kInDelta:
      return c.j_size <= p.j_size && !c.giant &&
             (2 * c.orbit <= p.orbit || (p.giant && c.orbit <= p.orbit));
    case ProgressShape::kInG:
      return c.giant && !p.giant && c.j_size <= p.j_size &&
             c.orbit <= p.orbit;
  }
  return false;
}

std::string Images(const Perm& p) {
  std::string s;
  for (int x : p.images()) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
  return s;
}

Perm ParseImages(std::istringstream& in, int n) {
  std::vector<int> img(n);
  for (int& x : img) {
    if (!(in >> x)) throw InputError("truncated image list");
    --x;
  }
  return Perm(std::move(img));
}

std::vector<Perm> ParseGenerators(std::istream& in, int k, int n) {
  std::vector<Perm> gens;
  std::string line;
  while ((int)gens.size() < k && std::getline(in, line)) {
    if (line.empty()) continue;
    gens.push_back(Perm::FromCycles(line, n));
  }
  if ((int)gens.size() != k) throw InputError("truncated generator list");
  return gens;
}

std::istringstream NextLine(std::istream& in, const std::string& tag) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != tag) throw InputError("expected '" + tag + "', got '" + word + "'");
    return ls;
  }
  throw InputError("missing '" + tag + "'");
}

}  // namespace

const char* ProgressShapeName(ProgressShape shape) {
  switch (shape) {
    case ProgressShape::kRoot: return "root";
    case ProgressShape::kLinearInJ: return "linear-in-J";
    case ProgressShape::kLinearInA: return "linear-in-A";
    case ProgressShape::kInJ: return "in-J";
    case ProgressShape::kInDelta: return "in-Delta";
    case ProgressShape::kInG: return "in-g";
  }
  return "?";
}

int ProgressLedger::Enter(int parent, ProgressShape shape, int n, int j_size,
                          int a_size, int orbit, bool giant) {
  ProgressRecord r;
  r.parent = parent;
  r.shape = shape;
  r.j_size = j_size;
  r.a_size = a_size;
  r.orbit = orbit;
  r.giant = giant;
  if (parent < 0) {
    r.root = static_cast<int>(records_.size());
    r.shape_ok = shape == ProgressShape::kRoot;
  } else {
    r.root = records_[parent].root;
    r.shape_ok = ShapeHolds(shape, records_[parent], r);
  }
  records_.push_back(r);
  degrees_.push_back(n);
  return static_cast<int>(records_.size()) - 1;
}

void ProgressLedger::Warn(std::string message) {
  warnings_.push_back(std::move(message));
}

void ProgressLedger::Clear() {
  records_.clear();
  degrees_.clear();
  warnings_.clear();
}

int ProgressLedger::shape_violations() const {
  int v = 0;
  for (const ProgressRecord& r : records_) v += r.shape_ok ? 0 : 1;
  return v;
}

double ProgressLedger::Log2Bound(int root) const {
  const ProgressRecord& r = records_[root];
  const double n = degrees_[root];
  const double j = std::max(1, r.j_size);
  const double a = std::max(1, r.a_size);
  const double orb = std::max(1, r.orbit);
  const double delta = r.giant ? 1.0 : 0.0;
  const double l = std::log2(n + 2);
  return l * l * l * (2 * std::log2(n + 4) * std::log2(j) + std::log2(orb)) +
         2 * std::log2(j) + std::log2(a) + (2 - 2 * delta) * std::log2(n);
}

int64_t ProgressLedger::TreeSize(int root) const {
  int64_t count = 0;
  for (const ProgressRecord& r : records_) count += r.root == root ? 1 : 0;
  return count;
}

bool ProgressLedger::WithinBound() const {
  std::vector<int64_t> size(records_.size(), 0);
  for (const ProgressRecord& r : records_) ++size[r.root];
  for (size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].parent >= 0) continue;
    if (std::log2(static_cast<double>(size[i])) > Log2Bound(static_cast<int>(i))) {
      return false;
    }
  }
  return true;
}

std::string DumpSetInstance(const SetInstance& inst) {
  std::ostringstream out;
  const int n = inst.degree();
  out << "set-instance " << n << " " << inst.cosets.size() << "\n";
  for (const Coset& c : inst.cosets) {
    out << "coset " << c.group().generators().size() << "\n";
    for (const Perm& g : c.group().generators()) out << g.ToCycles() << "\n";
    out << "rep " << Images(c.rep()) << "\n";
  }
  out << "a";
  for (int x : inst.a) out << " " << x + 1;
  out << "\n";
  out << "delta " << inst.delta_can.generators().size() << "\n";
  for (const Perm& g : inst.delta_can.generators()) out << g.ToCycles() << "\n";
  if (inst.giant) {
    out << "giant " << inst.giant->target_degree() << "\n";
    for (const Perm& g : inst.delta_can.generators()) {
      out << Images(inst.giant->Map(g)) << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

SetInstance ParseSetInstance(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  size_t t = 0;
  {
    std::istringstream head = NextLine(in, "set-instance");
    if (!(head >> n >> t) || n <= 0) throw InputError("bad set-instance header");
  }
  SetInstance inst;
  for (size_t i = 0; i < t; ++i) {
    int k = 0;
    NextLine(in, "coset") >> k;
    std::vector<Perm> gens = ParseGenerators(in, k, n);
    std::istringstream rep = NextLine(in, "rep");
    inst.cosets.emplace_back(PermGroup(n, std::move(gens)), ParseImages(rep, n));
  }
  {
    std::istringstream a = NextLine(in, "a");
    int x = 0;
    while (a >> x) {
      if (x < 1 || x > n) throw InputError("point out of range in a");
      inst.a.push_back(x - 1);
    }
  }
  int k = 0;
  NextLine(in, "delta") >> k;
  inst.delta_can = PermGroup(n, ParseGenerators(in, k, n));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "end") return inst;
    if (word != "giant") throw InputError("unexpected '" + word + "'");
    int m = 0;
    ls >> m;
    std::vector<Perm> images;
    for (size_t g = 0; g < inst.delta_can.generators().size(); ++g) {
      if (!std::getline(in, line)) throw InputError("truncated giant table");
      std::istringstream il(line);
      images.push_back(ParseImages(il, m));
    }
    inst.giant = GroupHom(inst.delta_can, images, m);
  }
  throw InputError("missing 'end'");
}

}  // namespace cosetcanon
