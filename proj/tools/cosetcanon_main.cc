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

// Command-line front end. Exit codes: 0 success (and "isomorphic" for
// iso-tw), 1 "non-isomorphic", 2 input error, 3 failed self-test, oracle
// check or internal check.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cosetcanon/canon.h"
#include "cosetcanon/canon_set.h"
#include "cosetcanon/canon_struct.h"
#include "cosetcanon/generators.h"
#include "cosetcanon/graph.h"
#include "cosetcanon/harness.h"
#include "cosetcanon/io.h"
#include "cosetcanon/oracle.h"
#include "cosetcanon/suites.h"
#include "cosetcanon/tw_iso.h"

namespace cosetcanon {
namespace {

constexpr int kExitNonIso = 1;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;
// Brute-force caps for --oracle-check.
constexpr int kOracleMaxVertices = 8;
constexpr int kOracleMaxCosets = 40320;  // 8!

struct Flags {
  uint64_t seed = 1;
  int verbosity = 0;
  bool ledger_dump = false;
  bool oracle_check = false;
  bool labeling = false;
  int max_vertices = 512;
  int max_items = 200000;
  std::string method = "full";
};

// Thrown when a check requested on the command line fails.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
      return;
    }
    file_.open(path);
    if (!file_) throw InputError("cannot open '" + path + "'");
    in_ = &file_;
  }
  std::istream& get() { return *in_; }

 private:
  std::ifstream file_;
  std::istream* in_ = nullptr;
};

void Warn(const Flags& f, const std::vector<std::string>& warnings) {
  if (f.verbosity < 1) return;
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

void CheckSize(const Flags& f, int n, size_t items) {
  if (n > f.max_vertices) {
    throw InputError(std::to_string(n) + " points exceed --max-vertices " +
                     std::to_string(f.max_vertices));
  }
  if (items > static_cast<size_t>(f.max_items)) {
    throw InputError(std::to_string(items) + " items exceed --max-items " +
                     std::to_string(f.max_items));
  }
}

void RequireOracleSize(int n, size_t t = 0) {
  if (n > kOracleMaxVertices) {
    throw InputError("--oracle-check refuses " + std::to_string(n) +
                     " points; the brute-force cap is " + std::to_string(kOracleMaxVertices));
  }
  if (t > static_cast<size_t>(kOracleMaxCosets)) {
    throw InputError("--oracle-check refuses " + std::to_string(t) +
                     " cosets; the brute-force cap is 8!");
  }
}

CanonOptions Options(const Flags& f, ProgressLedger* ledger) {
  CanonOptions o;
  o.set_method = f.method == "small" ? SetMethod::kSmall : SetMethod::kFull;
  o.ledger = ledger;
  return o;
}

void DumpLedger(const ProgressLedger& ledger) {
  std::cerr << "ledger calls " << ledger.calls() << '\n';
  std::cerr << "ledger shape_violations " << ledger.shape_violations() << '\n';
  for (const auto& r : ledger.records()) {
    if (r.parent >= 0) continue;
    const int root = static_cast<int>(&r - ledger.records().data());
    std::cerr << "ledger root " << root << " tree " << ledger.TreeSize(root) << " log2_bound "
              << ledger.Log2Bound(root) << '\n';
  }
  std::cerr << "ledger within_bound " << (ledger.WithinBound() ? "yes" : "no") << '\n';
  for (const auto& w : ledger.warnings()) std::cerr << "ledger warning " << w << '\n';
}

// Emits the result, after comparing its group with enumeration if asked.
int Emit(const Flags& f, const CanonResult& r, const Object& x, int n) {
  std::cout << FormatCanonResult(r, f.labeling);
  if (f.oracle_check) {
    if (!(BruteForceAut(x, n) == r.labeling.group())) {
      throw CheckFailure("automorphism group differs from enumeration");
    }
    std::cout << "oracle agrees\n";
  }
  return 0;
}

PairList SymmetricPairs(const Graph& g) {
  PairList pairs;
  for (const auto& [u, v] : g.Edges()) {
    pairs.emplace_back(u, v);
    pairs.emplace_back(v, u);
  }
  return pairs;
}

int CanonGraph(const Flags& f, const std::string& path) {
  Input in(path);
  std::vector<std::string> warnings;
  const Graph g = ParseDimacsGraph(in.get(), &warnings);
  Warn(f, warnings);
  CheckSize(f, g.n(), g.num_edges());
  if (f.oracle_check) RequireOracleSize(g.n());
  const PairList pairs = SymmetricPairs(g);
  const CanonResult r = ClGraph(pairs, Coset::All(g.n()));
  return Emit(f, r, GraphInstance(pairs, Coset::All(g.n()))[0], g.n());
}

int CanonHyper(const Flags& f, const std::string& path) {
  Input in(path);
  std::vector<std::string> warnings;
  const Hypergraph h = ParseHypergraph(in.get(), &warnings);
  Warn(f, warnings);
  CheckSize(f, h.n, h.edges.size());
  if (f.oracle_check) RequireOracleSize(h.n);
  const Object x = HypergraphObject(h.edges);
  RecursionStats stats;
  const CanonResult r = ClHyper(x, h.n, Options(f, nullptr), &stats);
  if (f.ledger_dump) {
    std::cerr << "ledger hyper_calls " << stats.hyper_calls << " within_bound "
              << (HyperCallsWithinBound(stats.hyper_calls, x.size(), h.n) ? "yes" : "no") << '\n';
  }
  return Emit(f, r, x, h.n);
}

int CanonRel(const Flags& f, const std::string& path) {
  Input in(path);
  std::vector<std::string> warnings;
  const Relation rel = ParseRelation(in.get(), &warnings);
  Warn(f, warnings);
  CheckSize(f, rel.n, rel.tuples.size());
  if (f.oracle_check) RequireOracleSize(rel.n);
  const Object x = RelationObject(rel.tuples);
  RecursionStats stats;
  const CanonResult r = ClRel(x, rel.n, Options(f, nullptr), &stats);
  if (f.ledger_dump) {
    std::cerr << "ledger rel_calls " << stats.rel_calls << " within_bound "
              << (RelCallsWithinBound(stats.rel_calls, x.size()) ? "yes" : "no") << '\n';
  }
  return Emit(f, r, x, rel.n);
}

int CanonCosets(const Flags& f, const std::string& path) {
  Input in(path);
  const CosetFamily fam = ParseCosets(in.get());
  CheckSize(f, fam.n, fam.cosets.size());
  if (f.oracle_check) RequireOracleSize(fam.n, fam.cosets.size());
  ProgressLedger ledger;
  const CanonResult r = CanonizeCosetSet(fam.cosets, Options(f, &ledger));
  if (f.ledger_dump) DumpLedger(ledger);
  return Emit(f, r, CosetSetObject(fam.cosets), fam.n);
}

int CanonObject(const Flags& f, const std::string& path) {
  Input in(path);
  const ObjectInstance x = ParseObject(in.get());
  CheckSize(f, x.n, x.object.size());
  if (f.oracle_check) RequireOracleSize(x.n);
  ProgressLedger ledger;
  const CanonResult r = ClObject(x.object, x.n, Options(f, &ledger));
  if (f.ledger_dump) DumpLedger(ledger);
  return Emit(f, r, x.object, x.n);
}

Graph ReadGraph(const Flags& f, const std::string& path) {
  Input in(path);
  std::vector<std::string> warnings;
  Graph g = ParseDimacsGraph(in.get(), &warnings);
  Warn(f, warnings);
  CheckSize(f, g.n(), g.num_edges());
  return g;
}

int Decompose(const Flags& f, const std::string& path, int k) {
  const Graph g = ReadGraph(f, path);
  if (!g.IsConnected()) throw InputError("graph is disconnected");
  if (k <= 0) k = std::max(1, MinFillWidth(g));
  const Graph gk = KImprove(g, k);
  const TreeDecomposition td = CliqueSeparatorDecomposition(gk);
  std::cout << "c k " << k << '\n';
  std::cout << FormatTreeDecomposition(td, g.n());
  if (f.ledger_dump) {
    std::cerr << "ledger improved_edges " << gk.num_edges() - g.num_edges() << '\n';
    std::cerr << "ledger check " << [&] {
      const std::string why = CheckDecomposition(gk, td, k);
      return why.empty() ? std::string("ok") : why;
    }() << '\n';
  }
  return 0;
}

int IsoTw(const Flags& f, const std::string& path1, const std::string& path2) {
  const Graph g1 = ReadGraph(f, path1);
  const Graph g2 = ReadGraph(f, path2);
  if (f.oracle_check) {
    RequireOracleSize(g1.n());
    RequireOracleSize(g2.n());
  }
  if (!g1.IsConnected() || !g2.IsConnected()) throw InputError("graph is disconnected");
  IsoTreeStats stats;
  const Coset iso = g1.n() == g2.n() ? IsoTreewidth(g1, g2, &stats) : Coset::Empty(g1.n());
  if (f.ledger_dump) {
    std::cerr << "ledger k " << stats.k << " bags " << stats.bags << " width " << stats.width
              << " subtree_pairs " << stats.subtree_pairs << " equal_branches "
              << stats.equal_branches << " distinct_branches " << stats.distinct_branches
              << '\n';
  }
  if (f.oracle_check && g1.n() == g2.n()) {
    const std::vector<Perm> all = BruteForceGraphIso(g1, g2);
    bool same = iso.size() == BigInt(all.size());
    for (size_t i = 0; same && i < all.size(); ++i) same = iso.Contains(all[i]);
    if (!same) throw CheckFailure("isomorphisms differ from enumeration");
  }
  if (iso.empty()) {
    std::cout << "non-isomorphic\n";
    if (f.oracle_check) std::cout << "oracle agrees\n";
    return kExitNonIso;
  }
  const Perm x = iso.MinElement();
  std::cout << "isomorphic\n";
  std::cout << "isomorphisms " << iso.size() << '\n';
  std::cout << "map";
  for (int v = 0; v < x.degree(); ++v) std::cout << ' ' << x[v] + 1;
  std::cout << '\n';
  if (f.oracle_check) std::cout << "oracle agrees\n";
  return 0;
}

int Selftest(const Flags& f, std::vector<std::string> suites, int instances, int relabelings,
             const std::string& inject) {
  SuiteConfig config;
  config.seed = f.seed;
  config.instances = instances;
  config.relabelings = relabelings;
  if (inject == "edge-flip") {
    config.inject = Injection::kEdgeFlip;
  } else if (inject == "ledger-overflow") {
    config.inject = Injection::kLedgerOverflow;
  }
  if (suites.empty()) suites = SuiteNames();
  int failed = 0;
  for (const auto& name : suites) {
    const SuiteReport r = RunSuite(name, config);
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " instances " << r.instances
              << " bound_checks " << r.bound_checks << " bound_violations "
              << r.bound_violations << '\n';
    if (f.verbosity > 0 || f.ledger_dump) {
      for (const auto& s : r.stats) std::cout << "  " << s << '\n';
    }
    if (!r.ok) std::cout << "  failure: " << r.failure << '\n';
    if (r.ok && r.bound_violations > 0) std::cout << "  failure: recursion bound exceeded\n";
    if (!r.passed()) ++failed;
  }
  std::cout << (failed ? "selftest FAILED " : "selftest passed ") << failed << " of "
            << suites.size() << " suites failed\n";
  return failed ? kExitFailure : 0;
}

// Prints deterministic instance data on stdout and wall-clock times on stderr.
int Bench(const Flags& f, int max_n, int repeat) {
  Rng rng(f.seed);
  using Clock = std::chrono::steady_clock;
  auto time = [&](const std::string& name, int n, auto&& run) {
    for (int i = 0; i < repeat; ++i) {
      const auto start = Clock::now();
      const std::string out = run();
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      std::cout << name << " n " << n << " run " << i << ' ' << out << '\n';
      std::cerr << name << " n " << n << " run " << i << " ms " << ms << '\n';
    }
  };
  for (int n = 4; n <= max_n; n += 2) {
    time("cl_graph", n, [&] {
      return "aut-order " +
             ClGraph(RandomDigraph(rng, n, 0.3), Coset::All(n)).labeling.size().str();
    });
    time("cl_hyper", n, [&] {
      RecursionStats s;
      const auto r = ClHyper(HypergraphObject(RandomEdges(rng, n, n, true)), n, {}, &s);
      return "aut-order " + r.labeling.size().str() + " calls " + std::to_string(s.hyper_calls);
    });
    time("cl_rel", n, [&] {
      RecursionStats s;
      const auto r = ClRel(RelationObject(RandomTuples(rng, n, 2, 2 * n)), n, {}, &s);
      return "aut-order " + r.labeling.size().str() + " calls " + std::to_string(s.rel_calls);
    });
    time("cl_set", n, [&] {
      ProgressLedger ledger;
      CanonOptions o;
      o.ledger = &ledger;
      const auto r = ClSet(StructuredCosetFamily(rng, n, 4), o);
      return "aut-order " + r.labeling.size().str() + " calls " + std::to_string(ledger.calls());
    });
  }
  for (int n = 10; n <= 40; n += 10) {
    time("iso_tw", n, [&] {
      const Graph g = RandomPartialKTree(rng, n, 3, 0.8);
      IsoTreeStats s;
      const Coset c = IsoTreewidth(g, g.Relabel(RandomPermutation(rng, n)), &s);
      return "isomorphisms " + c.size().str() + " k " + std::to_string(s.k) + " bags " +
             std::to_string(s.bags);
    });
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Canonical labeling of graphs, hypergraphs, relations and sets of "
               "labeling cosets; isomorphism of bounded-treewidth graphs."};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--seed", f.seed, "Seed for selftest and bench")->capture_default_str();
  app.add_flag("-v,--verbose", f.verbosity, "Print warnings; repeat for more detail");
  app.add_flag("--ledger-dump", f.ledger_dump, "Print recursion statistics on stderr");
  app.add_flag("--oracle-check", f.oracle_check,
               "Compare with exhaustive enumeration (at most 8 points, 8! cosets)");
  app.add_flag("--labeling", f.labeling, "Also print the least canonical labeling");
  app.add_option("--max-vertices", f.max_vertices, "Refuse inputs with more points")
      ->capture_default_str();
  app.add_option("--max-items", f.max_items, "Refuse inputs with more edges, tuples or cosets")
      ->capture_default_str();
  app.add_option("--method", f.method, "Set canonizer for cosets: full or small")
      ->check(CLI::IsMember({"full", "small"}))
      ->capture_default_str();

  std::string path, path2;
  auto canon = [&](const std::string& verb, const std::string& what) {
    auto* c = app.add_subcommand(verb, "Canonize a " + what);
    c->add_option("file", path, "Input file, '-' for stdin")->required();
    return c;
  };
  auto* graph = canon("canon-graph", "graph ('p edge n m', 'e u v')");
  auto* hyper = canon("canon-hyper", "hypergraph ('p hyper n m', 'e v...')");
  auto* rel = canon("canon-rel", "relation ('p rel n k', 't v1..vk')");
  auto* cosets = canon("canon-cosets", "set of labeling cosets ('p cosets n t')");
  auto* object = canon("canon-object", "hereditarily finite object ('p object n')");

  int k = 0;
  auto* decompose = app.add_subcommand(
      "decompose", "Clique-separator decomposition of the k-improved graph");
  decompose->add_option("file", path, "Graph file")->required();
  decompose->add_option("-k", k, "Width parameter; default: the min-fill width");

  auto* iso = app.add_subcommand("iso-tw", "Isomorphisms between two connected graphs");
  iso->add_option("first", path, "First graph")->required();
  iso->add_option("second", path2, "Second graph")->required();

  std::vector<std::string> suites;
  int instances = 30, relabelings = 3;
  std::string inject = "none";
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--suite", suites, "Suites to run; default: all")
      ->check(CLI::IsMember(SuiteNames()));
  selftest->add_option("--instances", instances, "Instances per suite")->capture_default_str();
  selftest->add_option("--relabelings", relabelings, "Relabelings per instance")
      ->capture_default_str();
  selftest->add_option("--inject", inject, "Deliberate fault: none, edge-flip, ledger-overflow")
      ->check(CLI::IsMember({"none", "edge-flip", "ledger-overflow"}))
      ->capture_default_str();

  int max_n = 10, repeat = 1;
  auto* bench = app.add_subcommand("bench", "Time the canonizers on random instances");
  bench->add_option("--max-n", max_n, "Largest size")->capture_default_str();
  bench->add_option("--repeat", repeat, "Runs per size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*graph) return CanonGraph(f, path);
    if (*hyper) return CanonHyper(f, path);
    if (*rel) return CanonRel(f, path);
    if (*cosets) return CanonCosets(f, path);
    if (*object) return CanonObject(f, path);
    if (*decompose) return Decompose(f, path, k);
    if (*iso) return IsoTw(f, path, path2);
    if (*selftest) return Selftest(f, suites, instances, relabelings, inject);
    if (*bench) return Bench(f, max_n, repeat);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ContractError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace
}  // namespace cosetcanon

int main(int argc, char** argv) { return cosetcanon::Main(argc, argv); }
