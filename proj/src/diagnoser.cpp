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

#include "diagnoser.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace bsdiag {

const char* to_string(DiagnosisOutcome::Kind kind) {
  switch (kind) {
    case DiagnosisOutcome::Kind::kUnique:
      return "unique";
    case DiagnosisOutcome::Kind::kAmbiguous:
      return "ambiguous";
    case DiagnosisOutcome::Kind::kInfeasible:
    default:
      return "infeasible";
  }
}

namespace {

void check_syndrome(const Graph& g, const Syndrome& sigma) {
  if (sigma.size() != g.directed_edge_count()) throw_invalid("syndrome does not match graph");
  if (!sigma.complete()) throw_invalid("partial syndrome: some adjacent pairs have no result");
}

VertexId find_root(std::vector<VertexId>& parent, VertexId v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::vector<int> component_index(const std::vector<std::vector<VertexId>>& comps, std::size_t n) {
  std::vector<int> of(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) of[v] = static_cast<int>(c);
  return of;
}

// Depth-first enumeration of unions of agreement components. Choosing a
// component drags in everything it implies: a 0 result from u on v means
// "v faulty => u faulty", since a fault-free u would have reported v.
class CandidateEnumerator {
 public:
  CandidateEnumerator(const Graph& g, const Syndrome& sigma, const DiagnoseOptions& opts)
      : g_(g), sigma_(sigma), opts_(opts) {
    comps_ = agreement_components(g, sigma);
    comp_of_ = component_index(comps_, g.vertex_count());
    const std::size_t m = comps_.size();
    requires_.resize(m);
    forced_.assign(m, 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v : g.neighbors(u)) {
        if (sigma.at(g, u, v) != kTestFaultFree) continue;
        const int cu = comp_of_[u], cv = comp_of_[v];
        if (cu != cv) requires_[cv].push_back(cu);
        // u fault-free would make v fault-free, whose 1 on u then convicts u.
        if (sigma.at(g, v, u) == kTestFaulty) forced_[cu] = 1;
      }
    }
    for (auto& r : requires_) {
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    in_union_.assign(m, 0);
    skipped_.assign(m, 0);
  }

  DiagnosisOutcome run() {
    DiagnosisOutcome out;
    const std::size_t m = comps_.size();
    const auto t = static_cast<std::size_t>(opts_.t);
    for (std::size_t c = 0; c < m; ++c) {
      if (forced_[c]) include(static_cast<int>(c));
    }
    if (size_ > t) return out;
    for (std::size_t c = 0; c < m; ++c) {
      if (in_union_[c]) continue;
      const std::size_t before = undo_.size();
      include(static_cast<int>(c));
      if (size_ <= t) eligible_.push_back(static_cast<int>(c));
      rollback(before);
    }
    dfs(0, out);
    std::sort(found_.begin(), found_.end(),
              [](const FaultSet& a, const FaultSet& b) { return lexicographically_less(a, b); });
    out.candidate_count = found_.size();
    if (found_.size() == 1) {
      out.kind = DiagnosisOutcome::Kind::kUnique;
    } else if (found_.size() > 1) {
      out.kind = DiagnosisOutcome::Kind::kAmbiguous;
    }
    const std::size_t keep = out.kind == DiagnosisOutcome::Kind::kUnique ? 1 : opts_.max_listed;
    if (found_.size() > keep) found_.resize(keep);
    out.candidates = std::move(found_);
    return out;
  }

 private:
  // Adds c and its implication closure; returns false if the closure hits a
  // component already ruled out on this branch.
  bool include(int c) {
    std::vector<int> stack{c};
    bool ok = true;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      if (in_union_[k]) continue;
      if (skipped_[k]) ok = false;
      in_union_[k] = 1;
      undo_.push_back(k);
      size_ += comps_[k].size();
      for (int r : requires_[k]) stack.push_back(r);
    }
    return ok;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const int k = undo_.back();
      undo_.pop_back();
      in_union_[k] = 0;
      size_ -= comps_[k].size();
    }
  }

  void dfs(std::size_t i, DiagnosisOutcome& out) {
    const auto t = static_cast<std::size_t>(opts_.t);
    if (i == eligible_.size()) {
      leaf(out);
      return;
    }
    const int c = eligible_[i];
    if (in_union_[c]) {
      dfs(i + 1, out);
      return;
    }
    const std::size_t mark = undo_.size();
    if (include(c) && size_ <= t) dfs(i + 1, out);
    rollback(mark);
    skipped_[c] = 1;
    dfs(i + 1, out);
    skipped_[c] = 0;
  }

  void leaf(DiagnosisOutcome& out) {
    if (++out.examined > opts_.max_examined) {
      throw_budget("diagnosis visited more than " + std::to_string(opts_.max_examined) +
                   " candidate fault sets");
    }
    FaultSet f(g_.vertex_count());
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      if (!in_union_[c]) continue;
      for (VertexId v : comps_[c]) f.insert(v);
    }
    if (!is_consistent(g_, f, sigma_)) return;
    if (opts_.conditional && !is_conditional_fault_set(g_, f)) return;
    found_.push_back(std::move(f));
  }

  const Graph& g_;
  const Syndrome& sigma_;
  const DiagnoseOptions& opts_;
  std::vector<std::vector<VertexId>> comps_;
  std::vector<int> comp_of_;
  std::vector<std::vector<int>> requires_;
  std::vector<char> forced_;
  std::vector<char> in_union_;
  std::vector<char> skipped_;
  std::vector<int> undo_;
  std::vector<int> eligible_;
  std::size_t size_ = 0;
  std::vector<FaultSet> found_;
};

}  // namespace

std::vector<std::vector<VertexId>> agreement_components(const Graph& g, const Syndrome& sigma) {
  check_syndrome(g, sigma);
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && sigma.at(g, u, v) == kTestFaultFree && sigma.at(g, v, u) == kTestFaultFree) {
        parent[find_root(parent, u)] = find_root(parent, v);
      }
    }
  }
  std::vector<int> slot(n, -1);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = find_root(parent, v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

DiagnosisOutcome diagnose(const Graph& g, const Syndrome& sigma, const DiagnoseOptions& opts) {
  if (opts.t < 0) throw_invalid("diagnose needs t >= 0");
  check_syndrome(g, sigma);
  CandidateEnumerator e(g, sigma, opts);
  return e.run();
}

}  // namespace bsdiag
