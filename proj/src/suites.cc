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

#include "cosetcanon/suites.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cosetcanon/canon.h"
#include "cosetcanon/canon_set.h"
#include "cosetcanon/canon_struct.h"
#include "cosetcanon/generators.h"
#include "cosetcanon/graph.h"
#include "cosetcanon/group_hom.h"
#include "cosetcanon/harness.h"
#include "cosetcanon/oracle.h"
#include "cosetcanon/tw_iso.h"

namespace cosetcanon {

namespace {

using SuiteFn = std::function<void(const SuiteConfig&, Rng&, SuiteReport&)>;

void Fail(SuiteReport& r, const std::string& why) {
  if (r.ok) r.failure = why;
  r.ok = false;
}

void Stat(SuiteReport& r, const std::string& key, const std::string& value) {
  r.stats.push_back(key + " " + value);
}

std::vector<int> Range(int lo, int hi) {
  std::vector<int> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Canonizer suites: `make` draws instance i, and the canonizer records its
// bound checks in the report.
struct CanonSuite {
  std::function<std::pair<Object, int>(Rng&, int)> make;
  std::function<ObjectCanonizer(SuiteReport&, int)> canonizer;
};

void RunCanonSuite(const CanonSuite& suite, const SuiteConfig& config, Rng& rng,
                   SuiteReport& report) {
  int max_n = 0;
  for (int i = 0; i < config.instances; ++i) {
    auto [x, n] = suite.make(rng, i);
    max_n = std::max(max_n, n);
    CheckOutcome out;
    try {
      out = CheckCanonizer(suite.canonizer(report, i), x, n, config.relabelings, rng);
    } catch (const std::exception& e) {
      out.ok = false;
      out.failure = std::string("exception: ") + e.what() + " on " + x.ToString();
    }
    ++report.instances;
    if (!out.ok) {
      Fail(report, out.failure);
      return;
    }
  }
  Stat(report, "max_n", std::to_string(max_n));
}

void CountBound(SuiteReport& r, bool within) {
  ++r.bound_checks;
  if (!within) ++r.bound_violations;
}

// Thresholds low enough that the recursion runs on instances of this size.
CanonOptions LoweredSetOptions() {
  CanonOptions o;
  o.small_a_threshold = 1;
  o.min_w = 5;
  o.large_action_offset = -2.0;
  o.check_invariants = true;
  return o;
}

Object ToggledForm(const Object& form) {
  std::vector<Object> pairs = form[0].items();
  const Object e = Object::Tuple({Object::Int(0), Object::Int(0)});
  auto it = std::find(pairs.begin(), pairs.end(), e);
  if (it == pairs.end()) {
    pairs.push_back(e);
  } else {
    pairs.erase(it);
  }
  return Object::Tuple({Object::Set(std::move(pairs)), form[1]});
}

CanonSuite GraphSuite() {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 6;
            Coset c = i % 2 ? Coset::All(n) : RandomLabelingCoset(rng, n);
            return std::pair(GraphInstance(RandomDigraph(rng, n, 0.3), c), n);
          },
          [](SuiteReport&, int) { return GraphCanonizer(); }};
}

CanonSuite IntSuite() {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 6;
            return std::pair(
                IntInstance(RandomLabelingCoset(rng, n), RandomLabelingCoset(rng, n)), n);
          },
          [](SuiteReport&, int) { return IntCanonizer(); }};
}

CanonSuite SetSmallSuite() {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 6;
            return std::pair(CosetSetObject(RandomCosetFamily(rng, n, 1 + i % 4)), n);
          },
          [](SuiteReport&, int) { return SetSmallCanonizer(); }};
}

CanonSuite ObjectSuite() {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 6;
            return std::pair(RandomObject(rng, n, 3), n);
          },
          [](SuiteReport&, int i) {
            CanonOptions o;
            if (i % 2 == 0) o.set_method = SetMethod::kSmall;
            return ObjectCanonizerFor(o);
          }};
}

CanonSuite RelSuite(Injection inject) {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 7;
            return std::pair(
                RelationObject(RandomTuples(rng, n, 1 + i % 3, UniformInt(rng, 0, 7))), n);
          },
          [inject](SuiteReport& report, int) -> ObjectCanonizer {
            return [&report, inject](const Object& x, int n) {
              RecursionStats stats;
              CanonResult r = ClRel(x, n, {}, &stats);
              if (inject == Injection::kLedgerOverflow) {
                stats.rel_calls += static_cast<int64_t>(x.size() * x.size()) + 2;
              }
              CountBound(report, RelCallsWithinBound(stats.rel_calls, x.size()));
              return r;
            };
          }};
}

CanonSuite HyperSuite() {
  return {[](Rng& rng, int i) {
            const int n = 1 + i % 7;
            return std::pair(
                HypergraphObject(RandomEdges(rng, n, UniformInt(rng, 0, 6), i % 2 == 0)), n);
          },
          [](SuiteReport& report, int) -> ObjectCanonizer {
            return [&report](const Object& x, int n) {
              RecursionStats stats;
              CanonResult r = ClHyper(x, n, {}, &stats);
              CountBound(report, HyperCallsWithinBound(stats.hyper_calls, x.size(), n));
              return r;
            };
          }};
}

CanonSuite SetSetSuite() {
  return {[](Rng& rng, int i) {
            const int n = 2 + i % 5;
            return std::pair(CosetMapObject(RandomCosetMap(rng, n, 8)), n);
          },
          [](SuiteReport& report, int i) -> ObjectCanonizer {
            CanonOptions o;
            o.primitive_c = i % 3 == 0 ? 0.25 : 3.0;
            return [&report, o](const Object& x, int) {
              RecursionStats stats;
              const CosetMap m = DecodeCosetMap(x);
              CanonResult r = ClSetSet(m, o, &stats);
              // The fallback enumeration has no bound to compare with.
              if (!stats.setset_fallback) {
                CountBound(report, SetSetCallsWithinBound(stats.setset_calls, m, o.primitive_c));
              }
              return r;
            };
          }};
}

CanonSuite SetHyperSuite() {
  return {[](Rng& rng, int i) {
            const int n = 2 + i % 5;
            auto edges = RandomEdges(rng, n, UniformInt(rng, 1, 4), i % 2 == 0);
            const std::vector<Coset> pool = RandomCosetFamily(rng, n, 2);
            std::vector<Coset> labels;
            for (size_t e = 0; e < edges.size(); ++e) labels.push_back(pool[UniformInt(rng, 0, 1)]);
            return std::pair(LabeledHypergraphObject(edges, labels), n);
          },
          [](SuiteReport&, int i) {
            CanonOptions o;
            o.primitive_c = i % 2 ? 0.25 : 3.0;
            return SetHyperCanonizer(o);
          }};
}

CanonSuite SetSuite() {
  return {[](Rng& rng, int i) {
            const int n = UniformInt(rng, 1, 6);
            const int t = UniformInt(rng, 1, 5);
            const auto j = i % 2 ? RandomCosetFamily(rng, n, t) : StructuredCosetFamily(rng, n, t);
            return std::pair(CosetSetObject(j), n);
          },
          [](SuiteReport& report, int i) -> ObjectCanonizer {
            const bool lowered = i % 2 == 0;
            return [&report, lowered](const Object& x, int) {
              ProgressLedger ledger;
              CanonOptions o = lowered ? LoweredSetOptions() : CanonOptions{};
              o.ledger = &ledger;
              CanonResult r = ClSet(DecodeCosets(x), o);
              CountBound(report, ledger.WithinBound() && ledger.shape_violations() == 0);
              return r;
            };
          }};
}

void FanoSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  const std::vector<std::vector<int>> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                              {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  const Object h = HypergraphObject(fano);
  RecursionStats stats;
  const CanonResult r = ClHyper(h, 7, {}, &stats);
  CountBound(report, HyperCallsWithinBound(stats.hyper_calls, fano.size(), 7));
  const BigInt oracle = BruteForceAut(h, 7).order();
  report.instances = 1;
  Stat(report, "aut_order", r.labeling.size().str());
  Stat(report, "oracle_order", oracle.str());
  if (r.labeling.size() != 168 || oracle != 168) Fail(report, "Fano plane group order is not 168");
  const CheckOutcome out = CheckCanonizer(HyperCanonizer({}), h, 7, config.relabelings, rng);
  if (!out.ok) Fail(report, out.failure);
}

bool IsIso(const Graph& a, const Graph& b, const Perm& x) {
  for (const auto& [u, v] : a.Edges()) {
    if (!b.HasEdge(x[u], x[v])) return false;
  }
  return a.num_edges() == b.num_edges();
}

void IsoOracleSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int iso = 0;
  for (int i = 0; i < config.instances; ++i) {
    const int n = UniformInt(rng, 2, 8);
    const Graph g = i % 2 ? RandomConnectedGraph(rng, n, 0.35)
                          : RandomPartialKTree(rng, n, UniformInt(rng, 1, 4), 0.8);
    Graph h;
    switch (i % 3) {
      case 0:
        h = g.Relabel(RandomPermutation(rng, n));
        break;
      case 1:
        h = SwapEdges(rng, g).Relabel(RandomPermutation(rng, n));
        break;
      default:
        h = RandomConnectedGraph(rng, n, 0.35);
    }
    const Coset got = IsoTreewidth(g, h);
    const std::vector<Perm> all = BruteForceGraphIso(g, h);
    ++report.instances;
    if (!all.empty()) ++iso;
    bool same = got.size() == BigInt(all.size());
    for (size_t j = 0; same && j < all.size(); ++j) same = got.Contains(all[j]);
    if (!same) {
      Fail(report, "iso_treewidth differs from enumeration on\n" + FormatDimacsGraph(g) +
                       "and\n" + FormatDimacsGraph(h));
      return;
    }
  }
  Stat(report, "isomorphic_pairs", std::to_string(iso));
}

Graph PlantedBase(Rng& rng, int& max_k) {
  const int n = UniformInt(rng, 10, 40);
  const int k = UniformInt(rng, 1, 4);
  max_k = std::max(max_k, k);
  return RandomPartialKTree(rng, n, k, 0.8);
}

void IsoPlantedSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int max_k = 0, max_n = 0;
  for (int i = 0; i < config.instances; ++i) {
    const Graph g = PlantedBase(rng, max_k);
    max_n = std::max(max_n, g.n());
    const Perm phi = RandomPermutation(rng, g.n());
    const Graph h = g.Relabel(phi);
    const Coset got = IsoTreewidth(g, h);
    ++report.instances;
    if (got.empty() || !got.Contains(phi) || !IsIso(g, h, got.rep())) {
      Fail(report, "planted map missing for\n" + FormatDimacsGraph(g));
      return;
    }
  }
  Stat(report, "max_k", std::to_string(max_k));
  Stat(report, "max_n", std::to_string(max_n));
}

void IsoPerturbedSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int max_k = 0, drawn = 0;
  while (report.instances < config.instances && drawn < 50 * config.instances) {
    ++drawn;
    const Graph g = PlantedBase(rng, max_k);
    const Graph h = SwapEdges(rng, g);
    // Only pairs certified non-isomorphic by colour refinement count.
    if (!RefinementDistinguishes(g, h)) continue;
    ++report.instances;
    if (!IsoTreewidth(g, h.Relabel(RandomPermutation(rng, g.n()))).empty()) {
      Fail(report, "nonempty result for a certified non-isomorphic pair, base\n" +
                       FormatDimacsGraph(g));
      return;
    }
  }
  if (report.instances < config.instances) {
    Fail(report, "only " + std::to_string(report.instances) + " certified pairs drawn");
  }
  Stat(report, "drawn", std::to_string(drawn));
  Stat(report, "max_k", std::to_string(max_k));
}

void DecompositionSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int max_bags = 0;
  for (int i = 0; i < config.instances; ++i) {
    const int n = UniformInt(rng, 2, 30);
    const Graph g = i % 3 ? RandomPartialKTree(rng, n, UniformInt(rng, 1, 3), 0.75)
                          : RandomConnectedGraph(rng, n, 0.25);
    const int w = std::max(1, MinFillWidth(g));
    ++report.instances;
    const Graph gk = KImprove(g, w, false);
    if (!(KImprove(gk, w, false) == gk)) {
      Fail(report, "k-improvement is not a fixpoint on\n" + FormatDimacsGraph(g));
      return;
    }
    const TreeDecomposition td = CliqueSeparatorDecomposition(gk);
    max_bags = std::max(max_bags, static_cast<int>(td.bags.size()));
    const std::string why = CheckDecomposition(gk, td, w);
    if (!why.empty()) {
      Fail(report, why + " on\n" + FormatDimacsGraph(g));
      return;
    }
    const Perm p = RandomPermutation(rng, n);
    const TreeDecomposition tp = CliqueSeparatorDecomposition(KImprove(g.Relabel(p), w, false));
    if (RootedTreeForms(td, p) != RootedTreeForms(tp, Perm(n))) {
      Fail(report, "decomposition of a relabeled copy differs on\n" + FormatDimacsGraph(g));
      return;
    }
  }
  Stat(report, "max_bags", std::to_string(max_bags));
}

void SeparatorSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int64_t pairs = 0;
  for (int i = 0; i < config.instances; ++i) {
    const int n = UniformInt(rng, 3, 10);
    const Graph g = i % 2 ? RandomConnectedGraph(rng, n, 0.35)
                          : RandomPartialKTree(rng, n, UniformInt(rng, 1, 3), 0.8);
    ++report.instances;
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (v == w || g.HasEdge(v, w)) continue;
        ++pairs;
        if (LeftmostMinSeparator(g, v, w) != BruteForceLeftmostSeparator(g, v, w)) {
          Fail(report, "separator differs for " + std::to_string(v + 1) + " " +
                           std::to_string(w + 1) + " on\n" + FormatDimacsGraph(g));
          return;
        }
      }
    }
  }
  Stat(report, "pairs", std::to_string(pairs));
}

// ---- Giant representations ------------------------------------------------

struct GiantInstance {
  PermGroup delta;
  GroupHom g;
  int w = 0;
};

// Sym(m) or Alt(m) on m points.
std::vector<Perm> BaseGenerators(int m, bool alt) {
  return alt ? PermGroup::Alternating(m, Range(0, m)).generators()
             : PermGroup::Symmetric(m).generators();
}

// x acting on copies of {0..m-1} placed at the given offsets, fixing the
// rest of n points.
Perm OnCopies(const Perm& x, int m, const std::vector<int>& offsets, int n) {
  std::vector<int> img = Range(0, n);
  for (int off : offsets) {
    for (int i = 0; i < m; ++i) img[off + i] = off + x[i];
  }
  return Perm(std::move(img));
}

GiantInstance MakeGiant(Rng& rng, int i) {
  const int m = 8 + (i / 5) % 2;
  const bool alt = UniformInt(rng, 0, 1) == 1;
  const std::vector<Perm> base = BaseGenerators(m, alt);
  const Perm id_m(m);
  std::vector<Perm> gens, images;
  int n = 0;
  switch (i % 5) {
    case 0: {  // natural action beside a random group on extra points
      const int extra = UniformInt(rng, 0, 3);
      n = m + extra;
      for (const Perm& x : base) {
        gens.push_back(OnCopies(x, m, {0}, n));
        images.push_back(x);
      }
      if (extra > 0) {
        const PermGroup h = RandomSubgroup(rng, extra);
        for (const Perm& y : h.generators()) {
          gens.push_back(OnCopies(y, extra, {m}, n));
          images.push_back(id_m);
        }
      }
      break;
    }
    case 1: {  // 2-subsets
      std::map<std::pair<int, int>, int> index;
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) index.emplace(std::pair(a, b), n++);
      }
      for (const Perm& x : base) {
        std::vector<int> img(n);
        for (const auto& [ab, k] : index) {
          img[k] = index.at(std::minmax(x[ab.first], x[ab.second]));
        }
        gens.emplace_back(std::move(img));
        images.push_back(x);
      }
      break;
    }
    case 2: {  // Sym(2) wr Sym(m) acting on its m blocks
      n = 2 * m;
      std::vector<int> swap = Range(0, n);
      std::swap(swap[0], swap[1]);
      gens.emplace_back(swap);
      images.push_back(id_m);
      for (const Perm& x : base) {
        std::vector<int> img(n);
        for (int b = 0; b < m; ++b) {
          img[2 * b] = 2 * x[b];
          img[2 * b + 1] = 2 * x[b] + 1;
        }
        gens.emplace_back(std::move(img));
        images.push_back(x);
      }
      break;
    }
    case 3:  // diagonal on two copies
      n = 2 * m;
      for (const Perm& x : base) {
        gens.push_back(OnCopies(x, m, {0, m}, n));
        images.push_back(x);
      }
      break;
    default:  // direct product, projected to the first factor
      n = 2 * m;
      for (const Perm& x : base) {
        gens.push_back(OnCopies(x, m, {0}, n));
        images.push_back(x);
        gens.push_back(OnCopies(x, m, {m}, n));
        images.push_back(id_m);
      }
  }
  // Random names on both sides.
  const Perm sigma = RandomPermutation(rng, n);
  const Perm tau = RandomPermutation(rng, m);
  for (Perm& x : gens) x = sigma.Inverse() * x * sigma;
  for (Perm& y : images) y = tau.Inverse() * y * tau;
  PermGroup delta(n, gens);
  return {delta, GroupHom(delta, images, m), m};
}

bool IsGiantOn(const PermGroup& image, int m) {
  return IsGiant(image, Range(0, m)) != GiantType::kNeither;
}

void UnaffectedSuite(const SuiteConfig& config, Rng& rng, SuiteReport& report) {
  int64_t orbits_checked = 0, unaffected_total = 0;
  for (int i = 0; i < config.instances; ++i) {
    const GiantInstance inst = MakeGiant(rng, i);
    const int n = inst.delta.degree(), m = inst.w;
    ++report.instances;
    const std::string where = " on instance " + std::to_string(i) + ": " + inst.delta.ToString();
    if (!IsGiantOn(inst.g.Image(), m)) {
      Fail(report, "not a giant representation" + where);
      return;
    }
    // v is unaffected when its stabilizer still maps onto a giant.
    std::vector<int> u;
    for (int v = 0; v < n; ++v) {
      if (IsGiantOn(inst.g.Restrict(inst.delta.PointwiseStabilizer({v})).Image(), m)) {
        u.push_back(v);
      }
    }
    unaffected_total += static_cast<int64_t>(u.size());
    if (!IsGiantOn(inst.g.Restrict(inst.delta.PointwiseStabilizer(u)).Image(), m)) {
      Fail(report, "pointwise stabilizer of U is not mapped onto a giant" + where);
      return;
    }
    const PermGroup kernel = inst.g.Kernel();
    for (const auto& s : inst.delta.Orbits()) {
      if (std::any_of(s.begin(), s.end(), [&u](int v) {
            return std::binary_search(u.begin(), u.end(), v);
          })) {
        continue;
      }
      ++orbits_checked;
      for (const auto& o : kernel.OrbitsOn(s)) {
        if (o.size() * m > s.size()) {
          Fail(report, "kernel orbit longer than |S|/|W|" + where);
          return;
        }
      }
    }
  }
  Stat(report, "affected_orbits", std::to_string(orbits_checked));
  Stat(report, "unaffected_points", std::to_string(unaffected_total));
}

const std::map<std::string, SuiteFn>& Registry() {
  static const auto* registry = [] {
    auto* r = new std::map<std::string, SuiteFn>;
    auto canon = [](std::function<CanonSuite(const SuiteConfig&)> make) -> SuiteFn {
      return [make](const SuiteConfig& c, Rng& rng, SuiteReport& rep) {
        RunCanonSuite(make(c), c, rng, rep);
      };
    };
    (*r)["cl_graph"] = canon([](const SuiteConfig& c) {
      CanonSuite s = GraphSuite();
      if (c.inject == Injection::kEdgeFlip) {
        s.canonizer = [](SuiteReport&, int) -> ObjectCanonizer {
          return [](const Object& x, int n) {
            CanonResult r = GraphCanonizer()(x, n);
            r.form = ToggledForm(r.form);
            return r;
          };
        };
      }
      return s;
    });
    (*r)["cl_int"] = canon([](const SuiteConfig&) { return IntSuite(); });
    (*r)["cl_set_small"] = canon([](const SuiteConfig&) { return SetSmallSuite(); });
    (*r)["cl_object"] = canon([](const SuiteConfig&) { return ObjectSuite(); });
    (*r)["cl_rel"] = canon([](const SuiteConfig& c) { return RelSuite(c.inject); });
    (*r)["cl_hyper"] = canon([](const SuiteConfig&) { return HyperSuite(); });
    (*r)["cl_setset"] = canon([](const SuiteConfig&) { return SetSetSuite(); });
    (*r)["cl_sethyper"] = canon([](const SuiteConfig&) { return SetHyperSuite(); });
    (*r)["cl_set"] = canon([](const SuiteConfig&) { return SetSuite(); });
    (*r)["fano"] = FanoSuite;
    (*r)["iso_tw_oracle"] = IsoOracleSuite;
    (*r)["iso_tw_planted"] = IsoPlantedSuite;
    (*r)["iso_tw_perturbed"] = IsoPerturbedSuite;
    (*r)["decomposition"] = DecompositionSuite;
    (*r)["unaffected"] = UnaffectedSuite;
    (*r)["separators"] = SeparatorSuite;
    return r;
  }();
  return *registry;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "cl_graph",      "cl_int",         "cl_set_small",     "cl_object",
      "cl_rel",        "cl_hyper",       "cl_setset",        "cl_sethyper",
      "cl_set",        "fano",           "iso_tw_oracle",    "iso_tw_planted",
      "iso_tw_perturbed", "decomposition", "unaffected",     "separators"};
  return names;
}

SuiteReport RunSuite(const std::string& name, const SuiteConfig& config) {
  const auto& registry = Registry();
  auto it = registry.find(name);
  if (it == registry.end()) throw InputError("unknown suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  // Seed from (seed, suite position) so a suite's instances do not depend on
  // which other suites run.
  const auto& names = SuiteNames();
  const auto pos = std::find(names.begin(), names.end(), name) - names.begin();
  std::seed_seq seq{static_cast<uint32_t>(config.seed), static_cast<uint32_t>(config.seed >> 32),
                    static_cast<uint32_t>(pos)};
  Rng rng(seq);
  try {
    it->second(config, rng, report);
  } catch (const std::exception& e) {
    Fail(report, std::string("exception: ") + e.what());
  }
  return report;
}

}  // namespace cosetcanon
