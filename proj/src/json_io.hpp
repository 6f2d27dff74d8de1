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

#ifndef BSDIAG_JSON_IO_HPP_
#define BSDIAG_JSON_IO_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "diagnosability.hpp"
#include "diagnoser.hpp"
#include "pmc.hpp"

namespace bsdiag {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Sorted vertex names.
Json vertex_list(const Graph& g, const FaultSet& s);

// {"vertices": [...]}
Json fault_set_to_json(const Graph& g, const FaultSet& f);
FaultSet fault_set_from_json(const Graph& g, const Json& j);
// Comma-separated vertex names; empty string is the empty set.
FaultSet parse_fault_list(const Graph& g, std::string_view csv);

// {"n": int, "tests": [{"tester", "tested", "result"}, ...]} sorted by
// (tester, tested). Non-bubble-sort graphs write "vertex_count" instead of n.
Json syndrome_to_json(const Graph& g, const Syndrome& sigma);
// May return a partial syndrome; duplicates and non-adjacent pairs throw.
Syndrome syndrome_from_json(const Graph& g, const Json& j);

Json witness_to_json(const Graph& g, const WitnessPair& w);
Json report_to_json(const Graph& g, const DiagnosabilityReport& r, bool include_timing);
Json outcome_to_json(const Graph& g, const DiagnosisOutcome& o);

// Parses text, turning parse errors into Error(kInvalidArgument).
Json parse_json(std::string_view text);

}  // namespace bsdiag

#endif  // BSDIAG_JSON_IO_HPP_
