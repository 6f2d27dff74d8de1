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

#include "lemma_checks.hpp"

#include <algorithm>

#include "errors.hpp"
#include "pmc.hpp"
#include "rng.hpp"

namespace bsdiag {

bool verify_lemma4(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
  if (are_distinguishable(g, f1, f2)) throw_invalid("verify_lemma4: the pair is distinguishable");
  if (!is_conditional_fault_set(g, f1) || !is_conditional_fault_set(g, f2)) {
    throw_invalid("verify_lemma4: the pair is not conditional");
  }
  const FaultSet both = f1 | f2;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (both.contains(u)) continue;
    const auto nb = g.neighbors(u);
    if (std::all_of(nb.begin(), nb.end(), [&](VertexId w) { return both.contains(w); })) return false;
  }
  const FaultSet only1 = f1 - f2;
  const FaultSet only2 = f2 - f1;
  bool ok = true;
  (f1 ^ f2).for_each([&](VertexId v) {
    const auto nb = g.neighbors(v);
    const bool in1 = std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return only1.contains(w); });
    const bool in2 = std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return only2.contains(w); });
    ok = ok && in1 && in2;
  });
  return ok;
}

bool a2_minus_s_connected(const Graph& g, const Decomposition& d, const FaultSet& s) {
  const PartClassification c = classify_parts(d, s);
  if (c.a2.empty()) return true;
  // Remove everything outside A2, plus S.
  const FaultSet keep = union_of_parts(d, c.a2) - s;
  const FaultSet removed = keep.complement();
  return components(g, removed).size() <= 1;
}

bool a2_parts_joined_fault_free(const Graph& g, const Decomposition& d, const FaultSet& s) {
  const PartClassification c = classify_parts(d, s);
  for (std::size_t a = 0; a < c.a2.size(); ++a) {
    for (std::size_t b = a + 1; b < c.a2.size(); ++b) {
      const auto edges = cross_matching_edges(g, d, c.a2[a], c.a2[b]);
      const bool any = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return !s.contains(e.first) && !s.contains(e.second);
      });
      if (!any) return false;
    }
  }
  return true;
}

Lemma5Result verify_lemma5(const Graph& g, std::uint64_t trials, std::uint64_t seed) {
  if (!g.has_labels() || *g.dimension() < 5) throw_invalid("verify_lemma5 needs B_n with n >= 5");
  const int n = *g.dimension();
  const Decomposition d = decompose_last_symbol(g);
  const std::size_t max_s = static_cast<std::size_t>(4 * n - 13);
  Lemma5Result result;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    auto rng = stream_engine(seed, trial);
    const std::size_t size = uniform_below(rng, max_s + 1);
    const std::size_t focus_count = 1 + uniform_below(rng, 3);
    std::vector<int> focus;
    for (std::size_t k = 0; k < focus_count; ++k) focus.push_back(1 + static_cast<int>(uniform_below(rng, n)));
    FaultSet s(g.vertex_count());
    while (s.size() < size) {
      VertexId v;
      if (uniform_below(rng, 10) < 7) {
        const auto& part = d.part(focus[uniform_below(rng, focus.size())]);
        v = part[uniform_below(rng, part.size())];
      } else {
        v = static_cast<VertexId>(uniform_below(rng, g.vertex_count()));
      }
      s.insert(v);
    }
    ++result.trials;
    if (!classify_parts(d, s).a1.empty()) ++result.trials_with_a1;
    if (!a2_minus_s_connected(g, d, s)) ++result.failures;
    if (!a2_parts_joined_fault_free(g, d, s)) ++result.fault_free_join_failures;
  }
  return result;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kVerificationFailed, "B4 check: " + what);
}

}  // namespace

Theorem2Result verify_theorem2_exhaustive(const SearchBudget& budget) {
  const Graph g = build_bubble_sort(4);
  Theorem2Result out;
  out.report = conditional_diagnosability(g, SearchMode::kExhaustive, budget);
  if (out.report.value != 5) fail("t_c(B4) = " + std::to_string(out.report.value) + ", expected 5");
  const WitnessPair& w = *out.report.witness;
  if (w.max_size() != 6 || w.min_size() != 6) fail("witness sizes are not (6, 6)");
  if (are_distinguishable(g, w.f1, w.f2)) fail("witness is distinguishable");
  if (!verify_lemma4(g, w.f1, w.f2)) fail("witness violates the necessary conditions");

  std::size_t min_deg = g.vertex_count();
  w.d.for_each([&](VertexId v) {
    std::size_t deg = 0;
    for (VertexId u : g.neighbors(v)) deg += w.d.contains(u) ? 1 : 0;
    min_deg = std::min(min_deg, deg);
  });
  out.witness_d_min_degree = min_deg;
  if (min_deg < 1) fail("witness symmetric difference has an isolated vertex");

  // |S| = 3 cutting off one vertex leaves a 20-vertex component.
  const FaultSet cut = neighborhood_set(g, FaultSet(g.vertex_count(), {0}));
  const auto parts = components(g, cut);
  if (parts.size() != 2) fail("B4 - N(v) should have two components");
  out.isolated_component_size = std::min(parts[0].vertices.size(), parts[1].vertices.size());
  out.remaining_component_size = std::max(parts[0].vertices.size(), parts[1].vertices.size());
  if (out.isolated_component_size != 1 || out.remaining_component_size != 20) {
    fail("B4 - N(v) components are not of sizes 1 and 20");
  }
  return out;
}

}  // namespace bsdiag
