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

#include "json_io.hpp"

#include "errors.hpp"

namespace bsdiag {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Json vertex_list(const Graph& g, const FaultSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(g.vertex_name(v)); });
  return out;
}

Json fault_set_to_json(const Graph& g, const FaultSet& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["vertices"] = vertex_list(g, f);
  return j;
}

FaultSet fault_set_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw_invalid("fault-set JSON needs a \"vertices\" array");
  }
  FaultSet f(g.vertex_count());
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw_invalid("fault-set vertices must be label strings");
    f.insert(g.parse_vertex(v.get<std::string>()));
  }
  return f;
}

FaultSet parse_fault_list(const Graph& g, std::string_view csv) {
  FaultSet f(g.vertex_count());
  std::string_view rest = csv;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    if (!item.empty()) f.insert(g.parse_vertex(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return f;
}

Json syndrome_to_json(const Graph& g, const Syndrome& sigma) {
  if (sigma.size() != g.directed_edge_count()) throw_invalid("syndrome does not match graph");
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (g.dimension()) {
    j["n"] = *g.dimension();
  } else {
    j["vertex_count"] = g.vertex_count();
  }
  Json tests = Json::array();
  // Ids follow label order, so id order is (tester, tested) label order.
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::size_t idx = g.directed_begin(u);
    for (VertexId v : g.neighbors(u)) {
      const std::uint8_t r = sigma[idx++];
      if (r == Syndrome::kUnset) continue;
      Json t;
      t["tester"] = g.vertex_name(u);
      t["tested"] = g.vertex_name(v);
      t["result"] = static_cast<int>(r);
      tests.push_back(std::move(t));
    }
  }
  j["tests"] = std::move(tests);
  return j;
}

Syndrome syndrome_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("tests") || !j["tests"].is_array()) {
    throw_invalid("syndrome JSON needs a \"tests\" array");
  }
  if (g.dimension()) {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() != *g.dimension()) {
      throw_invalid("syndrome JSON \"n\" does not match B" + std::to_string(*g.dimension()));
    }
  }
  Syndrome sigma(g);
  for (const auto& t : j["tests"]) {
    if (!t.is_object() || !t.contains("tester") || !t.contains("tested") || !t.contains("result") ||
        !t["tester"].is_string() || !t["tested"].is_string() || !t["result"].is_number_integer()) {
      throw_invalid("each test needs string \"tester\", \"tested\" and integer \"result\"");
    }
    const VertexId u = g.parse_vertex(t["tester"].get<std::string>());
    const VertexId v = g.parse_vertex(t["tested"].get<std::string>());
    const int r = t["result"].get<int>();
    if (r != 0 && r != 1) throw_invalid("test result must be 0 or 1");
    const std::size_t idx = g.directed_index(u, v);
    if (sigma[idx] != Syndrome::kUnset) {
      throw_invalid("duplicate test " + g.vertex_name(u) + " -> " + g.vertex_name(v));
    }
    sigma[idx] = static_cast<std::uint8_t>(r);
  }
  return sigma;
}

Json witness_to_json(const Graph& g, const WitnessPair& w) {
  Json j;
  j["F1"] = vertex_list(g, w.f1);
  j["F2"] = vertex_list(g, w.f2);
  j["S"] = vertex_list(g, w.s);
  j["D"] = vertex_list(g, w.d);
  j["sizes"] = {w.f1.size(), w.f2.size()};
  j["conditional"] = w.conditional;
  return j;
}

Json report_to_json(const Graph& g, const DiagnosabilityReport& r, bool include_timing) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = r.graph;
  j["mode"] = to_string(r.mode);
  j[r.conditional ? "t_c" : "t"] = r.value;
  if (r.mode != SearchMode::kExhaustive) j["bound"] = "upper";
  j["witness"] = r.witness ? witness_to_json(g, *r.witness) : Json(nullptr);
  if (r.no_pair_exists) j["no_pair_exists"] = true;
  j["subsets_examined"] = r.stats.subsets_enumerated;
  j["candidates_examined"] = r.stats.candidates_examined;
  j["bipartitions_examined"] = r.stats.bipartitions_examined;
  if (r.mode == SearchMode::kRandomized) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["samples_rejected"] = r.stats.samples_rejected;
    j["refutation_found"] = r.refutation_found;
    j["best_sampled_size"] = r.best_sampled_size ? Json(*r.best_sampled_size) : Json(nullptr);
  }
  if (include_timing) j["wall_ms"] = static_cast<std::int64_t>(r.stats.wall_ms + 0.5);
  return j;
}

Json outcome_to_json(const Graph& g, const DiagnosisOutcome& o) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = to_string(o.kind);
  switch (o.kind) {
    case DiagnosisOutcome::Kind::kUnique:
      j["faults"] = vertex_list(g, o.candidates.front());
      break;
    case DiagnosisOutcome::Kind::kAmbiguous: {
      Json list = Json::array();
      for (const auto& c : o.candidates) list.push_back(vertex_list(g, c));
      j["candidates"] = std::move(list);
      j["candidate_count"] = o.candidate_count;
      j["truncated"] = o.candidate_count > o.candidates.size();
      break;
    }
    case DiagnosisOutcome::Kind::kInfeasible:
      break;
  }
  j["candidates_examined"] = o.examined;
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw_invalid(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace bsdiag
