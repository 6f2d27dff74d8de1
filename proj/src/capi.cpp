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

#include "bsdiag/bsdiag.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "diagnosability.hpp"
#include "diagnoser.hpp"
#include "errors.hpp"
#include "graph_metrics.hpp"
#include "json_io.hpp"
#include "lemma_checks.hpp"
#include "pmc.hpp"
#include "verify_suite.hpp"

struct bsd_graph {
  bsdiag::Graph graph;
};

namespace {

thread_local std::string g_last_error;

constexpr std::size_t kConnectivityVertexLimit = 720;

bsd_status record(bsd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, mapping exceptions onto status codes.
template <class Fn>
bsd_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const bsdiag::Error& e) {
    return record(static_cast<bsd_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return record(BSD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(BSD_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(BSD_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bsd_status emit(const std::string& text, char** out, bsd_status status = BSD_OK) {
  *out = duplicate(text);
  return status;
}

std::string dump(const bsdiag::Json& j) { return j.dump(2) + "\n"; }

void require(const void* p, const char* what) {
  if (!p) bsdiag::throw_invalid(std::string(what) + " must not be NULL");
}

bsdiag::SearchBudget to_budget(const bsd_options* opts) {
  bsd_options defaults;
  bsd_options_init(&defaults);
  const bsd_options& o = opts ? *opts : defaults;
  bsdiag::SearchBudget b;
  b.threads = o.threads;
  b.seed = o.seed;
  b.samples = o.samples;
  b.max_t = o.max_t;
  b.max_vertices = o.max_vertices;
  b.override_guards = o.override_guards != 0;
  if (b.max_t < 1) bsdiag::throw_invalid("max_t must be positive");
  return b;
}

bool timing(const bsd_options* opts) { return opts && opts->include_timing; }

}  // namespace

extern "C" {

void bsd_options_init(bsd_options* opts) {
  if (!opts) return;
  const bsdiag::SearchBudget b;
  opts->threads = 0;
  opts->seed = b.seed;
  opts->samples = b.samples;
  opts->max_t = b.max_t;
  opts->max_vertices = b.max_vertices;
  opts->override_guards = 0;
  opts->include_timing = 0;
}

const char* bsd_version(void) { return "1.0.0"; }

const char* bsd_last_error(void) { return g_last_error.c_str(); }

void bsd_string_free(char* s) { std::free(s); }

bsd_status bsd_graph_bubble_sort(int n, bsd_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new bsd_graph{bsdiag::build_bubble_sort(n)};
    return BSD_OK;
  });
}

bsd_status bsd_graph_from_edges(size_t vertex_count, const uint32_t* endpoints, size_t edge_count,
                                bsd_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) require(endpoints, "endpoints");
    std::vector<bsdiag::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new bsd_graph{bsdiag::Graph::from_edges(vertex_count, edges)};
    return BSD_OK;
  });
}

void bsd_graph_free(bsd_graph* g) { delete g; }

size_t bsd_graph_vertex_count(const bsd_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t bsd_graph_edge_count(const bsd_graph* g) { return g ? g->graph.edge_count() : 0; }

bsd_status bsd_graph_export(const bsd_graph* g, bsd_export_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    switch (format) {
      case BSD_EXPORT_EDGE_LIST:
        return emit(bsdiag::export_edge_list(g->graph), out);
      case BSD_EXPORT_DOT:
        return emit(bsdiag::export_dot(g->graph), out);
    }
    bsdiag::throw_invalid("unknown export format");
  });
}

bsd_status bsd_graph_props_json(const bsd_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const bsdiag::Graph& graph = g->graph;
    bsdiag::Json j;
    j["schema_version"] = bsdiag::kSchemaVersion;
    j["graph"] = graph.name();
    if (graph.dimension()) j["n"] = *graph.dimension();
    j["vertices"] = graph.vertex_count();
    j["edges"] = graph.edge_count();
    std::size_t lo = graph.degree(0), hi = lo;
    for (bsdiag::VertexId v = 1; v < graph.vertex_count(); ++v) {
      lo = std::min(lo, graph.degree(v));
      hi = std::max(hi, graph.degree(v));
    }
    j["degree"] = lo == hi ? bsdiag::Json(lo) : bsdiag::Json(nullptr);
    j["connectivity"] = graph.vertex_count() >= 2 && graph.vertex_count() <= kConnectivityVertexLimit
                            ? bsdiag::Json(bsdiag::vertex_connectivity(graph))
                            : bsdiag::Json(nullptr);
    j["diameter"] = bsdiag::diameter(graph);
    return emit(dump(j), out);
  });
}

bsd_status bsd_is_conditional(const bsd_graph* g, const char* faults, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(faults, "faults");
    require(out, "out");
    *out = bsdiag::is_conditional_fault_set(g->graph, bsdiag::parse_fault_list(g->graph, faults)) ? 1 : 0;
    return BSD_OK;
  });
}

bsd_status bsd_are_distinguishable(const bsd_graph* g, const char* f1, const char* f2, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(f1, "f1");
    require(f2, "f2");
    require(out, "out");
    *out = bsdiag::are_distinguishable(g->graph, bsdiag::parse_fault_list(g->graph, f1),
                                       bsdiag::parse_fault_list(g->graph, f2))
               ? 1
               : 0;
    return BSD_OK;
  });
}

bsd_status bsd_witness_json(const bsd_graph* g, const char* x, const char* y, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const bsdiag::Graph& graph = g->graph;
    if (!graph.has_labels()) bsdiag::throw_invalid("witness needs a bubble-sort graph");
    const int n = *graph.dimension();
    if ((x == nullptr) != (y == nullptr)) bsdiag::throw_invalid("give both x and y, or neither");
    bsdiag::VertexId vx, vy;
    if (x) {
      vx = graph.parse_vertex(x);
      vy = graph.parse_vertex(y);
    } else {
      const bsdiag::Permutation id = bsdiag::Permutation::identity(n);
      vx = static_cast<bsdiag::VertexId>(bsdiag::perm_rank(id));
      vy = static_cast<bsdiag::VertexId>(bsdiag::perm_rank(id.swapped(1)));
    }
    const bsdiag::PairEdgeGadget gadget = bsdiag::pair_edge_gadget(graph, vx, vy);
    const bsdiag::WitnessPair w = bsdiag::lemma6_witness(graph, vx, vy);
    const bool c1 = bsdiag::is_conditional_fault_set(graph, w.f1);
    const bool c2 = bsdiag::is_conditional_fault_set(graph, w.f2);
    const bool indist = !bsdiag::are_distinguishable(graph, w.f1, w.f2);
    const bool necessary = c1 && c2 && indist && bsdiag::verify_lemma4(graph, w.f1, w.f2);
    const std::size_t expected = static_cast<std::size_t>(4 * n - 10);
    const std::size_t around = static_cast<std::size_t>(4 * (n - 3));

    bsdiag::Json j;
    j["schema_version"] = bsdiag::kSchemaVersion;
    j["graph"] = graph.name();
    j["n"] = n;
    j["x"] = graph.vertex_name(gadget.x);
    j["y"] = graph.vertex_name(gadget.y);
    j["x_prime"] = graph.vertex_name(gadget.x_prime);
    j["y_prime"] = graph.vertex_name(gadget.y_prime);
    j["F1"] = bsdiag::vertex_list(graph, w.f1);
    j["F2"] = bsdiag::vertex_list(graph, w.f2);
    j["sizes"] = {w.f1.size(), w.f2.size()};
    j["expected_size"] = expected;
    j["gadget_neighborhood_size"] = w.s.size();
    j["conditional"] = c1 && c2;
    j["indistinguishable"] = indist;
    j["necessary_conditions"] = necessary;
    j["upper_bound"] = bsdiag::lemma6_bound(n);
    const bool ok = c1 && c2 && indist && necessary && w.f1.size() == expected && w.f2.size() == expected &&
                    w.s.size() == around;
    j["verified"] = ok;
    if (!ok) g_last_error = "pair-edge witness failed verification";
    return emit(dump(j), out, ok ? BSD_OK : BSD_ERR_VERIFY);
  });
}

bsd_status bsd_conditional_diagnosability_json(const bsd_graph* g, bsd_search_mode mode,
                                               const bsd_options* opts, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    bsdiag::SearchMode m;
    switch (mode) {
      case BSD_MODE_EXHAUSTIVE: m = bsdiag::SearchMode::kExhaustive; break;
      case BSD_MODE_WITNESS_ONLY: m = bsdiag::SearchMode::kWitnessOnly; break;
      case BSD_MODE_RANDOMIZED: m = bsdiag::SearchMode::kRandomized; break;
      default: bsdiag::throw_invalid("unknown search mode");
    }
    const auto report = bsdiag::conditional_diagnosability(g->graph, m, to_budget(opts));
    return emit(dump(bsdiag::report_to_json(g->graph, report, timing(opts))), out);
  });
}

bsd_status bsd_diagnosability_json(const bsd_graph* g, const bsd_options* opts, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto report = bsdiag::diagnosability(g->graph, to_budget(opts));
    return emit(dump(bsdiag::report_to_json(g->graph, report, timing(opts))), out);
  });
}

bsd_status bsd_simulate_json(const bsd_graph* g, const char* faults, bsd_strategy strategy, uint64_t seed,
                             char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const bsdiag::FaultSet f = bsdiag::parse_fault_list(g->graph, faults ? faults : "");
    bsdiag::TesterStrategy s = bsdiag::TesterStrategy::fixed_zero();
    switch (strategy) {
      case BSD_STRATEGY_ZERO: break;
      case BSD_STRATEGY_ONE: s = bsdiag::TesterStrategy::fixed_one(); break;
      case BSD_STRATEGY_RANDOM: s = bsdiag::TesterStrategy::random_seeded(seed); break;
      default: bsdiag::throw_invalid("unknown tester strategy");
    }
    return emit(dump(bsdiag::syndrome_to_json(g->graph, bsdiag::generate_syndrome(g->graph, f, s))), out);
  });
}

bsd_status bsd_diagnose_json(const bsd_graph* g, const char* syndrome_json, int t, int conditional,
                             char** out) {
  return guarded([&] {
    require(g, "graph");
    require(syndrome_json, "syndrome_json");
    require(out, "out");
    const bsdiag::Syndrome sigma =
        bsdiag::syndrome_from_json(g->graph, bsdiag::parse_json(syndrome_json));
    bsdiag::DiagnoseOptions o;
    o.t = t;
    o.conditional = conditional != 0;
    return emit(dump(bsdiag::outcome_to_json(g->graph, bsdiag::diagnose(g->graph, sigma, o))), out);
  });
}

bsd_status bsd_verify_suite(const char* suite, const bsd_options* opts, bsd_table_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    if (!suite || std::strcmp(suite, "paper") != 0) {
      bsdiag::throw_invalid(std::string("unknown suite '") + (suite ? suite : "") + "'");
    }
    bsdiag::SuiteOptions so;
    if (opts) {
      so.threads = opts->threads;
      so.seed = opts->seed;
      so.include_timing = opts->include_timing != 0;
    }
    const auto results = bsdiag::run_verify_suite(so);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    const std::string text = format == BSD_TABLE_CSV ? bsdiag::suite_to_csv(results, so.include_timing)
                                                     : dump(bsdiag::suite_to_json(results, so));
    if (!all) g_last_error = "verification suite reported failures";
    return emit(text, out, all ? BSD_OK : BSD_ERR_VERIFY);
  });
}

}  // extern "C"
