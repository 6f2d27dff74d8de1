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

#ifndef BSDIAG_VERIFY_SUITE_HPP_
#define BSDIAG_VERIFY_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace bsdiag {

struct SuiteOptions {
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool include_timing = false;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_ms = 0;
};

// Structural facts, the pair-edge witnesses, exhaustive t_c(B4) and t(B4),
// randomized refutation on B5, the dual-oracle cross-check, the A2
// connectivity property, diagnosis round trips and thread determinism.
std::vector<CheckResult> run_verify_suite(const SuiteOptions& opts);

Json suite_to_json(const std::vector<CheckResult>& results, const SuiteOptions& opts);
std::string suite_to_csv(const std::vector<CheckResult>& results, bool include_timing);

// Shared fixtures for the randomized checks.
inline constexpr std::uint64_t kRefutationSamples = 100000;
inline constexpr std::uint64_t kA2Trials = 1000;
inline constexpr std::uint64_t kRoundTripTrials = 1000;

// The 24 graphs of the dual-oracle check: 20 seeded random graphs on 6..10
// vertices with density 0.3..0.7, then P5, C6, K4 and K2,3.
std::vector<Graph> dual_oracle_graphs(std::uint64_t seed);

}  // namespace bsdiag

#endif  // BSDIAG_VERIFY_SUITE_HPP_
