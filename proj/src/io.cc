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

#include "cosetcanon/io.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cosetcanon/perm_group.h"

namespace cosetcanon {

namespace {

// Non-comment, non-blank lines with their numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool Next(std::vector<std::string>& words) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      text_ = line;
      std::istringstream s(line);
      words.clear();
      for (std::string w; s >> w;) words.push_back(w);
      if (words.empty() || words[0] == "c") continue;
      return true;
    }
    return false;
  }

  int number() const { return number_; }
  const std::string& text() const { return text_; }

  [[noreturn]] void Fail(const std::string& why) const {
    throw InputError("line " + std::to_string(number_) + ": " + why);
  }

  int Int(const std::string& w) const {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(w, &used);
    } catch (const std::exception&) {
      Fail("expected an integer, got '" + w + "'");
    }
    if (used != w.size()) Fail("expected an integer, got '" + w + "'");
    return v;
  }

  int Vertex(const std::string& w, int n) const {
    const int v = Int(w);
    if (v < 1 || v > n) Fail("vertex " + w + " out of range 1.." + std::to_string(n));
    return v - 1;
  }

 private:
  std::istream& in_;
  int number_ = 0;
  std::string text_;
};

// Reads "p <kind> a b" and returns {a, b}; b is -1 when absent.
std::pair<int, int> Header(LineReader& r, const std::string& kind, bool two) {
  std::vector<std::string> w;
  if (!r.Next(w)) throw InputError("missing header 'p " + kind + "'");
  if (w[0] != "p" || w.size() < 2 || w[1] != kind ||
      w.size() != (two ? 4u : 3u)) {
    r.Fail("expected header 'p " + kind + (two ? " <n> <count>'" : " <n>'"));
  }
  const int n = r.Int(w[2]);
  if (n < 0) r.Fail("negative size");
  const int b = two ? r.Int(w[3]) : -1;
  if (two && b < 0) r.Fail("negative count");
  return {n, b};
}

void CountWarning(int declared, size_t found, const std::string& what,
                  std::vector<std::string>* warnings) {
  if (warnings && declared != static_cast<int>(found)) {
    warnings->push_back("header declares " + std::to_string(declared) + " " + what +
                        ", found " + std::to_string(found));
  }
}

std::string Images(const Perm& p) {
  std::string s;
  for (int x = 0; x < p.degree(); ++x) {
    if (x) s += ' ';
    s += std::to_string(p[x] + 1);
  }
  return s;
}

Perm ParseImages(const LineReader& r, const std::vector<std::string>& w,
                 size_t from, int n) {
  if (w.size() - from != static_cast<size_t>(n)) {
    r.Fail("expected " + std::to_string(n) + " images");
  }
  std::vector<int> img;
  for (size_t i = from; i < w.size(); ++i) img.push_back(r.Vertex(w[i], n));
  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.Fail("images do not form a permutation");
  }
  return Perm(std::move(img));
}

}  // namespace

Hypergraph ParseHypergraph(std::istream& in, std::vector<std::string>* warnings) {
  LineReader r(in);
  const auto [n, m] = Header(r, "hyper", true);
  std::set<std::vector<int>> edges;
  std::vector<std::string> w;
  size_t lines = 0;
  while (r.Next(w)) {
    if (w[0] != "e") r.Fail("expected 'e v1 v2 ...'");
    std::vector<int> e;
    for (size_t i = 1; i < w.size(); ++i) e.push_back(r.Vertex(w[i], n));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      if (warnings) warnings->push_back("line " + std::to_string(r.number()) + ": repeated vertex collapsed");
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    ++lines;
    if (!edges.insert(e).second && warnings) {
      warnings->push_back("line " + std::to_string(r.number()) + ": duplicate edge collapsed");
    }
  }
  CountWarning(m, lines, "edges", warnings);
  return {n, {edges.begin(), edges.end()}};
}

std::string FormatHypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hyper " << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    out << 'e';
    for (int v : e) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Relation ParseRelation(std::istream& in, std::vector<std::string>* warnings) {
  LineReader r(in);
  const auto [n, k] = Header(r, "rel", true);
  std::set<std::vector<int>> tuples;
  std::vector<std::string> w;
  while (r.Next(w)) {
    if (w[0] != "t") r.Fail("expected 't v1 ... vk'");
    if (w.size() != static_cast<size_t>(k) + 1) {
      r.Fail("tuple needs " + std::to_string(k) + " entries");
    }
    std::vector<int> t;
    for (size_t i = 1; i < w.size(); ++i) t.push_back(r.Vertex(w[i], n));
    if (!tuples.insert(t).second && warnings) {
      warnings->push_back("line " + std::to_string(r.number()) + ": duplicate tuple collapsed");
    }
  }
  return {n, k, {tuples.begin(), tuples.end()}};
}

std::string FormatRelation(const Relation& rel) {
  std::ostringstream out;
  out << "p rel " << rel.n << ' ' << rel.arity << '\n';
  for (const auto& t : rel.tuples) {
    out << 't';
    for (int v : t) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

CosetFamily ParseCosets(std::istream& in) {
  LineReader r(in);
  const auto [n, t] = Header(r, "cosets", true);
  CosetFamily f;
  f.n = n;
  std::vector<std::string> w;
  while (r.Next(w)) {
    if (w[0] != "coset" || w.size() != 2) r.Fail("expected 'coset <k>' or 'coset empty'");
    if (w[1] == "empty") {
      f.cosets.push_back(Coset::Empty(n));
      continue;
    }
    const int k = r.Int(w[1]);
    if (k < 0) r.Fail("negative generator count");
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) {
      if (!r.Next(w) || w[0] != "g") r.Fail("expected 'g <cycles>'");
      const std::string& line = r.text();
      const std::string cycles = line.substr(line.find('g') + 1);
      try {
        gens.push_back(Perm::FromCycles(cycles, n));
      } catch (const InputError& e) {
        r.Fail(e.what());
      }
    }
    if (!r.Next(w) || w[0] != "rep") r.Fail("expected 'rep <images>'");
    Perm rep = ParseImages(r, w, 1, n);
    f.cosets.emplace_back(PermGroup(n, std::move(gens)), std::move(rep));
  }
  if (static_cast<int>(f.cosets.size()) != t) {
    throw InputError("header declares " + std::to_string(t) + " cosets, found " +
                     std::to_string(f.cosets.size()));
  }
  return f;
}

std::string FormatCosets(const CosetFamily& f) {
  std::ostringstream out;
  out << "p cosets " << f.n << ' ' << f.cosets.size() << '\n';
  for (const Coset& c : f.cosets) {
    if (c.empty()) {
      out << "coset empty\n";
      continue;
    }
    const auto& gens = c.group().CanonicalGenerators();
    out << "coset " << gens.size() << '\n';
    for (const Perm& g : gens) out << "g " << g.ToCycles() << '\n';
    out << "rep " << Images(c.MinElement()) << '\n';
  }
  return out.str();
}

namespace {

class ObjectParser {
 public:
  ObjectParser(const std::string& text, int n) : s_(text), n_(n) {}

  Object Parse() {
    Object x = Value();
    Skip();
    if (pos_ != s_.size()) Fail("trailing text");
    return x;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw InputError("object text at offset " + std::to_string(pos_) + ": " + why);
  }

  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool Eat(char c) {
    Skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int Number() {
    Skip();
    const size_t from = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (from == pos_) Fail("expected a number");
    return std::stoi(s_.substr(from, pos_ - from));
  }

  std::vector<Object> Items(char close) {
    std::vector<Object> items;
    if (Eat(close)) return items;
    for (;;) {
      items.push_back(Value());
      if (Eat(close)) return items;
      if (!Eat(',')) Fail("expected ',' or closing bracket");
    }
  }

  Object CosetValue() {
    const size_t close = s_.find(']', pos_);
    if (close == std::string::npos) Fail("unterminated coset");
    const std::string body = s_.substr(pos_, close - pos_);
    pos_ = close + 1;
    if (body == "empty") return Object::CosetAtom(Coset::Empty(n_));
    const size_t semi = body.find(';');
    if (semi == std::string::npos) Fail("coset needs ';' before the images");
    std::vector<Perm> gens;
    std::string g = body.substr(0, semi);
    std::istringstream parts(g);
    for (std::string part; std::getline(parts, part, ',');) {
      if (part.find_first_not_of(' ') == std::string::npos) continue;
      gens.push_back(Perm::FromCycles(part, n_));
    }
    std::istringstream imgs(body.substr(semi + 1));
    std::vector<int> img;
    for (int v; imgs >> v;) {
      if (v < 1 || v > n_) Fail("coset image out of range");
      img.push_back(v - 1);
    }
    if (static_cast<int>(img.size()) != n_) Fail("coset needs n images");
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      Fail("coset images do not form a permutation");
    }
    return Object::CosetAtom(Coset(PermGroup(n_, std::move(gens)), Perm(std::move(img))));
  }

  Object Value() {
    Skip();
    if (pos_ >= s_.size()) Fail("unexpected end");
    if (Eat('(')) return Object::Tuple(Items(')'));
    if (Eat('{')) return Object::Set(Items('}'));
    if (Eat('<')) {
      ++const_depth_;
      Object inner = Value();
      --const_depth_;
      if (!Eat('>')) Fail("expected '>'");
      return Object::Const(inner);
    }
    if (s_.compare(pos_, 6, "coset[") == 0) {
      pos_ += 6;
      return CosetValue();
    }
    const size_t at = pos_;
    const int v = Number();
    if (v < 1 || (const_depth_ == 0 && v > n_)) {
      pos_ = at;
      Fail("point out of range 1.." + std::to_string(n_));
    }
    return Object::Int(v - 1);
  }

  const std::string& s_;
  size_t pos_ = 0;
  int n_;
  int const_depth_ = 0;  // integers inside <...> are not points
};

}  // namespace

Object ParseObjectText(const std::string& text, int n) {
  return ObjectParser(text, n).Parse();
}

ObjectInstance ParseObject(std::istream& in) {
  LineReader r(in);
  const auto [n, unused] = Header(r, "object", false);
  (void)unused;
  std::string text;
  std::vector<std::string> w;
  while (r.Next(w)) text += r.text() + "\n";
  if (text.empty()) throw InputError("missing object after the header");
  return {n, ParseObjectText(text, n)};
}

std::string FormatObject(const ObjectInstance& x) {
  return "p object " + std::to_string(x.n) + "\n" + x.object.ToString() + "\n";
}

std::string FormatCanonResult(const CanonResult& r, bool labeling) {
  std::ostringstream out;
  out << "form " << r.form.ToString() << '\n';
  out << "digest " << r.form.Digest() << '\n';
  out << "aut-order " << r.labeling.size() << '\n';
  if (labeling) out << "labeling " << Images(r.labeling.MinElement()) << '\n';
  return out.str();
}

}  // namespace cosetcanon
