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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Sizes and tolerances are fixed here; --seed changes only the instances.

#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cosetcanon/suites.h"

namespace cosetcanon {
namespace {

// Instances per canonizer and relabelings per instance (criteria 1, 2).
constexpr int kCanonInstances = 500;
constexpr int kRelabelings = 10;
// Graph pairs against enumeration, planted pairs, perturbed pairs.
constexpr int kOraclePairs = 200;
constexpr int kPlantedPairs = 50;
constexpr int kPerturbedPairs = 50;
constexpr int kDecompositionGraphs = 200;
constexpr int kGiantInstances = 100;
constexpr int kSeparatorGraphs = 100;
// Every criterion is exact: no mismatch and no bound violation is tolerated.
constexpr int64_t kAllowedFailures = 0;

const std::vector<std::string> kCanonizers = {"cl_graph", "cl_int",   "cl_set_small",
                                              "cl_object", "cl_rel",  "cl_hyper",
                                              "cl_setset", "cl_sethyper", "cl_set"};

struct Job {
  std::string suite;
  int instances;
};

int Main(int argc, char** argv) {
  CLI::App app{"Runs the acceptance criteria"};
  uint64_t seed = 1;
  app.add_option("--seed", seed, "Instance seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<Job> jobs;
  for (const auto& c : kCanonizers) jobs.push_back({c, kCanonInstances});
  jobs.push_back({"fano", 1});
  jobs.push_back({"iso_tw_oracle", kOraclePairs});
  jobs.push_back({"iso_tw_planted", kPlantedPairs});
  jobs.push_back({"iso_tw_perturbed", kPerturbedPairs});
  jobs.push_back({"decomposition", kDecompositionGraphs});
  jobs.push_back({"unaffected", kGiantInstances});
  jobs.push_back({"separators", kSeparatorGraphs});

  // Suites are independent; run them concurrently and read them back by name.
  std::vector<std::future<SuiteReport>> futures;
  for (const Job& job : jobs) {
    SuiteConfig config;
    config.seed = seed;
    config.instances = job.instances;
    config.relabelings = kRelabelings;
    futures.push_back(std::async(std::launch::async, RunSuite, job.suite, config));
  }
  std::map<std::string, SuiteReport> reports;
  for (auto& f : futures) {
    SuiteReport r = f.get();
    reports.emplace(r.name, std::move(r));
  }

  bool all = true;
  auto line = [&all](int criterion, bool pass, const std::string& text) {
    all = all && pass;
    std::cout << "criterion " << criterion << (pass ? " PASS " : " FAIL ") << text << '\n';
  };
  auto failures = [&reports](const std::vector<std::string>& names) {
    std::ostringstream out;
    for (const auto& n : names) {
      const SuiteReport& r = reports.at(n);
      if (!r.ok) out << "; " << n << ": " << r.failure;
    }
    return out.str();
  };
  auto complete = [&reports](const std::string& n, int want) {
    const SuiteReport& r = reports.at(n);
    return r.ok && r.instances >= want;
  };

  {
    bool pass = true;
    std::ostringstream text;
    text << "oracle equivalence, " << kRelabelings << " relabelings:";
    for (const auto& c : kCanonizers) {
      pass = pass && complete(c, kCanonInstances);
      text << ' ' << c << '=' << reports.at(c).instances;
    }
    line(1, pass, text.str() + failures(kCanonizers));
  }
  {
    int64_t checks = 0, violations = 0;
    bool covered = true;
    std::ostringstream text;
    for (const auto& c : kCanonizers) {
      const SuiteReport& r = reports.at(c);
      checks += r.bound_checks;
      violations += r.bound_violations;
      if (r.bound_checks > 0) {
        text << ' ' << c << '=' << r.bound_violations << '/' << r.bound_checks;
      }
    }
    for (const char* c : {"cl_rel", "cl_hyper", "cl_set"}) {
      covered = covered && reports.at(c).bound_checks > 0;
    }
    line(2, covered && violations <= kAllowedFailures,
         "recursion bounds, violations/checks:" + text.str());
  }
  {
    const SuiteReport& r = reports.at("fano");
    std::string orders;
    for (const auto& s : r.stats) orders += ", " + s;
    line(3, r.passed(), "Fano plane" + orders + failures({"fano"}));
  }
  {
    const bool pass = complete("iso_tw_oracle", kOraclePairs) &&
                      complete("iso_tw_planted", kPlantedPairs) &&
                      complete("iso_tw_perturbed", kPerturbedPairs);
    std::ostringstream text;
    text << "iso_treewidth: " << reports.at("iso_tw_oracle").instances
         << " pairs vs enumeration, " << reports.at("iso_tw_planted").instances
         << " planted, " << reports.at("iso_tw_perturbed").instances << " perturbed";
    line(4, pass, text.str() +
                      failures({"iso_tw_oracle", "iso_tw_planted", "iso_tw_perturbed"}));
  }
  {
    std::ostringstream text;
    text << "k-improvement fixpoint, decomposition properties and relabeling invariance on "
         << reports.at("decomposition").instances << " graphs";
    line(5, complete("decomposition", kDecompositionGraphs),
         text.str() + failures({"decomposition"}));
  }
  {
    std::ostringstream text;
    text << "unaffected stabilizer and affected orbits on " << reports.at("unaffected").instances
         << " giant representations";
    line(6, complete("unaffected", kGiantInstances), text.str() + failures({"unaffected"}));
  }
  {
    const SuiteReport& r = reports.at("separators");
    std::ostringstream text;
    text << "leftmost minimum separators on " << r.instances << " graphs";
    for (const auto& s : r.stats) text << ", " << s;
    line(7, complete("separators", kSeparatorGraphs), text.str() + failures({"separators"}));
  }
  std::cout << (all ? "acceptance PASS" : "acceptance FAIL") << '\n';
  return all ? 0 : 1;
}

}  // namespace
}  // namespace cosetcanon

int main(int argc, char** argv) { return cosetcanon::Main(argc, argv); }
