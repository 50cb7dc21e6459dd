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

// Text formats of the command-line tool. Vertices are 1-based in text and
// 0-based in memory; "c" lines are comments everywhere. Malformed input
// raises InputError naming the line; repeated edges or tuples collapse with
// a warning.
//
//   hypergraph:  p hyper <n> <m>, then "e v1 v2 ..." per edge
//   relation:    p rel <n> <k>, then "t v1 ... vk" per tuple
//   cosets:      p cosets <n> <t>, then per coset "coset <k>" followed by k
//                lines "g <cycles>" and one line "rep <images>", or a single
//                line "coset empty"
//   object:      p object <n>, then one object in the notation of
//                Object::ToString (1-based points, (tuples), {sets}, <constant> whose integers are
//                ordinals rather than points,
//                coset[<cycles>, ...; <images>])

#ifndef COSETCANON_IO_H_
#define COSETCANON_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "cosetcanon/canon.h"
#include "cosetcanon/coset.h"
#include "cosetcanon/object.h"

namespace cosetcanon {

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;  // each sorted, no repeats
};

struct Relation {
  int n = 0;
  int arity = 0;
  std::vector<std::vector<int>> tuples;
};

struct CosetFamily {
  int n = 0;
  std::vector<Coset> cosets;
};

struct ObjectInstance {
  int n = 0;
  Object object;
};

Hypergraph ParseHypergraph(std::istream& in, std::vector<std::string>* warnings);
std::string FormatHypergraph(const Hypergraph& h);

Relation ParseRelation(std::istream& in, std::vector<std::string>* warnings);
std::string FormatRelation(const Relation& r);

CosetFamily ParseCosets(std::istream& in);
std::string FormatCosets(const CosetFamily& f);

ObjectInstance ParseObject(std::istream& in);
std::string FormatObject(const ObjectInstance& x);
// Parses the notation of Object::ToString over n points.
Object ParseObjectText(const std::string& text, int n);

// "form", "digest" and "aut-order" lines; with `labeling` also a "labeling"
// line with the 1-based images of the least element of the coset.
std::string FormatCanonResult(const CanonResult& r, bool labeling);

}  // namespace cosetcanon

#endif  // COSETCANON_IO_H_
