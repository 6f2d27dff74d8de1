// Copyright 2026 The bsdiag Authors
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

#include "verify_suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "decomposition.hpp"
#include "diagnoser.hpp"
#include "graph_metrics.hpp"
#include "lemma_checks.hpp"
#include "rng.hpp"

namespace bsdiag {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// Appends a mismatch to `detail` and returns false when got != want.
template <class T>
bool expect(std::ostringstream& detail, const std::string& what, const T& got, const T& want) {
  if (got == want) return true;
  detail << what << ": got " << got << ", want " << want << "; ";
  return false;
}

CheckResult structural_facts() {
  CheckResult r{1, "structure", true, {}, 0};
  std::ostringstream d;
  for (int n = 2; n <= 7; ++n) {
    const Graph g = build_bubble_sort(n);
    const std::uint64_t f = factorial(n);
    const std::string tag = "B" + std::to_string(n);
    r.passed &= expect<std::uint64_t>(d, tag + " |V|", g.vertex_count(), f);
    r.passed &= expect<std::uint64_t>(d, tag + " |E|", g.edge_count(), (n - 1) * f / 2);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != static_cast<std::size_t>(n - 1)) {
        r.passed = false;
        d << tag << " degree mismatch at " << g.vertex_name(v) << "; ";
        break;
      }
    }
  }
  for (int n : {4, 5}) {
    const Graph g = build_bubble_sort(n);
    const std::string tag = "B" + std::to_string(n);
    r.passed &= expect<std::size_t>(d, tag + " connectivity", vertex_connectivity(g),
                                    static_cast<std::size_t>(n - 1));
    r.passed &= expect<std::size_t>(d, tag + " diameter", diameter(g),
                                    static_cast<std::size_t>(n * (n - 1) / 2));
  }
  r.detail = r.passed ? "n=2..7 order/size/degree; kappa(B4)=3 diam(B4)=6 kappa(B5)=4 diam(B5)=10"
                      : d.str();
  return r;
}

CheckResult pair_edge_witnesses() {
  CheckResult r{2, "pair-edge witness", true, {}, 0};
  std::ostringstream d;
  for (int n = 4; n <= 7; ++n) {
    const Graph g = build_bubble_sort(n);
    const WitnessPair w = lemma6_witness(g);
    const std::string tag = "B" + std::to_string(n);
    const auto want = static_cast<std::size_t>(4 * n - 10);
    r.passed &= expect(d, tag + " |F1|", w.f1.size(), want);
    r.passed &= expect(d, tag + " |F2|", w.f2.size(), want);
    r.passed &= expect(d, tag + " F1 conditional", is_conditional_fault_set(g, w.f1), true);
    r.passed &= expect(d, tag + " F2 conditional", is_conditional_fault_set(g, w.f2), true);
    r.passed &= expect(d, tag + " distinguishable", are_distinguishable(g, w.f1, w.f2), false);
    r.passed &= expect(d, tag + " |N(cycle)|", w.s.size(), static_cast<std::size_t>(4 * (n - 3)));
  }
  r.detail = r.passed ? "sizes 6,10,14,18; conditional; indistinguishable; |N|=4(n-3)" : d.str();
  return r;
}

CheckResult tc_b4_check(const SuiteOptions& opts) {
  CheckResult r{3, "t_c(B4) exhaustive", false, {}, 0};
  SearchBudget budget;
  budget.threads = opts.threads;
  const Theorem2Result t2 = verify_theorem2_exhaustive(budget);
  // The pass at bound 5 is part of the deepening loop; repeat it explicitly.
  const Graph g = build_bubble_sort(4);
  const PairSearchResult none = find_indistinguishable_pair(g, 5, true, budget);
  r.passed = !none.witness.has_value() && t2.report.value == 5;
  r.detail = "t_c=" + num(t2.report.value) + " witness=(" + num(t2.report.witness->max_size()) + "," +
             num(t2.report.witness->min_size()) + ") pairs<=5: " + (none.witness ? "found" : "none") +
             " subsets=" + num(none.stats.subsets_enumerated) + " |C|=" + num(t2.remaining_component_size);
  return r;
}

CheckResult ordinary_b4(const SuiteOptions& opts) {
  CheckResult r{4, "t(B4) exhaustive", false, {}, 0};
  SearchBudget budget;
  budget.threads = opts.threads;
  const Graph g = build_bubble_sort(4);
  const DiagnosabilityReport t = diagnosability(g, budget);
  const DiagnosabilityReport tc = conditional_diagnosability(g, SearchMode::kExhaustive, budget);
  r.passed = t.value == 3 && t.witness && t.witness->max_size() == 4;
  r.detail = "t(B4)=" + num(t.value) + " t_c(B4)=" + num(tc.value);
  return r;
}

DiagnosabilityReport refutation_b5(const SuiteOptions& opts, unsigned threads) {
  SearchBudget budget;
  budget.threads = threads;
  budget.samples = kRefutationSamples;
  budget.seed = opts.seed;
  return conditional_diagnosability(build_bubble_sort(5), SearchMode::kRandomized, budget);
}

CheckResult tc_b5_check(const SuiteOptions& opts) {
  CheckResult r{5, "t_c(B5) witness + refutation", false, {}, 0};
  const DiagnosabilityReport rep = refutation_b5(opts, opts.threads);
  r.passed = rep.value == 9 && !rep.refutation_found && rep.witness && rep.witness->max_size() == 10;
  r.detail = "upper bound 9; samples=" + num(rep.samples) + " rejected=" + num(rep.stats.samples_rejected) +
             " refuted=" + (rep.refutation_found ? "yes" : "no") + " best sampled size=" +
             (rep.best_sampled_size ? num(*rep.best_sampled_size) : std::string("none"));
  return r;
}

CheckResult dual_oracle(const SuiteOptions& opts) {
  CheckResult r{6, "dual-oracle equivalence", true, {}, 0};
  std::ostringstream d;
  SearchBudget budget;
  budget.threads = opts.threads;
  budget.override_guards = true;
  int count = 0;
  for (const Graph& g : dual_oracle_graphs(opts.seed)) {
    const std::size_t n = g.vertex_count();
    for (bool conditional : {false, true}) {
      const auto naive = naive_min_pair_size(g, conditional);
      const std::size_t want = naive ? *naive - 1 : n;
      const std::size_t got = conditional ? conditional_diagnosability(g, SearchMode::kExhaustive, budget).value
                                          : diagnosability(g, budget).value;
      r.passed &= expect(d, g.name() + (conditional ? " t_c" : " t"), got, want);
    }
    ++count;
  }
  r.detail = r.passed ? num(count) + " graphs agree on t and t_c" : d.str();
  return r;
}

CheckResult a2_check(const SuiteOptions& opts) {
  CheckResult r{7, "A2 - S connected on B5", false, {}, 0};
  const Lemma5Result res = verify_lemma5(build_bubble_sort(5), kA2Trials, opts.seed);
  r.passed = res.passed() && res.trials == kA2Trials;
  r.detail = "trials=" + num(res.trials) + " with A1 nonempty=" + num(res.trials_with_a1) +
             " disconnected=" + num(res.failures) + " unjoined=" + num(res.fault_free_join_failures);
  return r;
}

FaultSet random_conditional_set(const Graph& g, std::size_t max_size, std::mt19937_64& rng) {
  for (;;) {
    const std::size_t size = uniform_below(rng, max_size + 1);
    FaultSet f(g.vertex_count());
    while (f.size() < size) f.insert(static_cast<VertexId>(uniform_below(rng, g.vertex_count())));
    if (is_conditional_fault_set(g, f)) return f;
  }
}

CheckResult diagnosis_round_trip(const SuiteOptions& opts) {
  CheckResult r{8, "diagnosis round trip", true, {}, 0};
  std::ostringstream d;
  const Graph g = build_bubble_sort(4);
  DiagnoseOptions dopts;
  dopts.t = 5;
  dopts.conditional = true;
  std::uint64_t unique = 0;
  for (std::uint64_t trial = 0; trial < kRoundTripTrials; ++trial) {
    auto rng = stream_engine(opts.seed, trial);
    const FaultSet f = random_conditional_set(g, 5, rng);
    const TesterStrategy s = trial % 3 == 0   ? TesterStrategy::fixed_zero()
                             : trial % 3 == 1 ? TesterStrategy::fixed_one()
                                              : TesterStrategy::random_seeded(rng());
    const DiagnosisOutcome out = diagnose(g, generate_syndrome(g, f, s), dopts);
    if (out.kind == DiagnosisOutcome::Kind::kUnique && out.candidates.front() == f) {
      ++unique;
    } else if (r.passed) {
      r.passed = false;
      d << "trial " << trial << " returned " << to_string(out.kind) << "; ";
    }
  }
  const WitnessPair w = lemma6_witness(g);
  dopts.t = 6;
  const DiagnosisOutcome amb = diagnose(g, shared_syndrome(g, w.f1, w.f2), dopts);
  const bool amb_ok = amb.kind == DiagnosisOutcome::Kind::kAmbiguous && amb.candidate_count == 2 &&
                      ((amb.candidates[0] == w.f1 && amb.candidates[1] == w.f2) ||
                       (amb.candidates[0] == w.f2 && amb.candidates[1] == w.f1));
  if (!amb_ok) {
    r.passed = false;
    d << "shared syndrome gave " << to_string(amb.kind) << " with " << amb.candidate_count << " candidates; ";
  }
  r.detail = r.passed ? "unique=" + num(unique) + "/" + num(kRoundTripTrials) + "; shared syndrome ambiguous {F1,F2}"
                      : d.str();
  return r;
}

CheckResult determinism(const SuiteOptions& opts) {
  CheckResult r{9, "thread determinism", true, {}, 0};
  std::ostringstream d;
  const Graph b4 = build_bubble_sort(4);
  const Graph b5 = build_bubble_sort(5);
  std::string ref3, ref5;
  for (unsigned threads : {1u, 4u, 8u}) {
    SearchBudget budget;
    budget.threads = threads;
    const std::string j3 =
        report_to_json(b4, conditional_diagnosability(b4, SearchMode::kExhaustive, budget), false).dump();
    const std::string j5 = report_to_json(b5, refutation_b5(opts, threads), false).dump();
    if (threads == 1) {
      ref3 = j3;
      ref5 = j5;
      continue;
    }
    if (j3 != ref3) {
      r.passed = false;
      d << "t_c(B4) JSON differs at " << threads << " threads; ";
    }
    if (j5 != ref5) {
      r.passed = false;
      d << "t_c(B5) JSON differs at " << threads << " threads; ";
    }
  }
  r.detail = r.passed ? "byte-identical JSON for 1, 4, 8 threads" : d.str();
  return r;
}

}  // namespace

std::vector<Graph> dual_oracle_graphs(std::uint64_t seed) {
  std::vector<Graph> out;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const std::size_t n = 6 + k % 5;
    const double density = 0.3 + 0.4 * static_cast<double>(k) / 19.0;
    out.push_back(make_random_graph(n, density, mix64(seed, k)));
  }
  out.push_back(make_path(5));
  out.push_back(make_cycle(6));
  out.push_back(make_complete(4));
  out.push_back(make_complete_bipartite(2, 3));
  return out;
}

std::vector<CheckResult> run_verify_suite(const SuiteOptions& opts) {
  const std::vector<std::function<CheckResult()>> checks = {
      [] { return structural_facts(); },
      [] { return pair_edge_witnesses(); },
      [&] { return tc_b4_check(opts); },
      [&] { return ordinary_b4(opts); },
      [&] { return tc_b5_check(opts); },
      [&] { return dual_oracle(opts); },
      [&] { return a2_check(opts); },
      [&] { return diagnosis_round_trip(opts); },
      [&] { return determinism(opts); },
  };
  std::vector<CheckResult> results;
  int id = 0;
  for (const auto& check : checks) {
    ++id;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "check " + std::to_string(id);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

Json suite_to_json(const std::vector<CheckResult>& results, const SuiteOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = "paper";
  j["seed"] = opts.seed;
  bool all = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    if (opts.include_timing) c["wall_ms"] = static_cast<std::int64_t>(r.wall_ms + 0.5);
    checks.push_back(std::move(c));
  }
  j["passed"] = all;
  j["checks"] = std::move(checks);
  return j;
}

std::string suite_to_csv(const std::vector<CheckResult>& results, bool include_timing) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "id,name,result,detail" << (include_timing ? ",wall_ms" : "") << "\n";
  for (const auto& r : results) {
    os << r.id << "," << quote(r.name) << "," << (r.passed ? "pass" : "fail") << "," << quote(r.detail);
    if (include_timing) os << "," << static_cast<std::int64_t>(r.wall_ms + 0.5);
    os << "\n";
  }
  return os.str();
}

}  // namespace bsdiag
