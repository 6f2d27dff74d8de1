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

// Indistinguishable-pair search.
//
// A pair (F1, F2) is indistinguishable iff N(D) ⊆ S, where D = F1 Δ F2 and
// S = F1 ∩ F2. Replacing S by N(D) keeps the pair indistinguishable, can only
// shrink both sets, and keeps both conditional (a subset of a conditional set
// is conditional). So every indistinguishable pair within a size bound
// dominates one with S = N(D), and searching over D alone is complete. The
// naive all-pairs enumeration below exists to cross-check this reduction.

#include "pair_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "pmc.hpp"
#include "rng.hpp"

namespace bsdiag {

WitnessPair WitnessPair::from_sets(FaultSet a, FaultSet b, bool conditional) {
  if (a == b) throw_invalid("witness pair needs distinct sets");
  const bool swap = a.size() < b.size() || (a.size() == b.size() && lexicographically_less(b, a));
  WitnessPair w;
  w.f1 = swap ? std::move(b) : std::move(a);
  w.f2 = swap ? std::move(a) : std::move(b);
  w.s = w.f1 & w.f2;
  w.d = w.f1 ^ w.f2;
  w.conditional = conditional;
  return w;
}

bool witness_less(const WitnessPair& a, const WitnessPair& b) {
  if (a.max_size() != b.max_size()) return a.max_size() < b.max_size();
  if (a.min_size() != b.min_size()) return a.min_size() < b.min_size();
  if (!(a.f1 == b.f1)) return lexicographically_less(a.f1, b.f1);
  return lexicographically_less(a.f2, b.f2);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  subsets_enumerated += o.subsets_enumerated;
  candidates_examined += o.candidates_examined;
  bipartitions_examined += o.bipartitions_examined;
  samples_rejected += o.samples_rejected;
  wall_ms += o.wall_ms;
  return *this;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Mask bit(std::size_t v) { return Mask{1} << v; }

// Compares two masks as sorted member lists.
bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask low = (a ^ b) & (~(a ^ b) + 1);
  const Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

struct MaskPair {
  Mask f1 = 0;  // canonical: popcount(f1) >= popcount(f2)
  Mask f2 = 0;
};

MaskPair canonical(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa < pb || (pa == pb && mask_lex_less(b, a))) return {b, a};
  return {a, b};
}

bool pair_less(const MaskPair& a, const MaskPair& b) {
  const int a1 = std::popcount(a.f1), b1 = std::popcount(b.f1);
  if (a1 != b1) return a1 < b1;
  const int a2 = std::popcount(a.f2), b2 = std::popcount(b.f2);
  if (a2 != b2) return a2 < b2;
  if (a.f1 != b.f1) return mask_lex_less(a.f1, b.f1);
  return mask_lex_less(a.f2, b.f2);
}

struct MaskGraph {
  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), nbr(n, 0), adj(n) {
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : g.neighbors(v)) {
        nbr[v] |= bit(w);
        adj[v].push_back(static_cast<int>(w));
      }
    }
  }

  bool conditional(Mask f) const {
    for (std::size_t v = 0; v < n; ++v) {
      if ((nbr[v] & ~f) == 0) return false;
    }
    return true;
  }

  Mask neighborhood(Mask d) const {
    Mask out = 0;
    for (Mask rest = d; rest; rest &= rest - 1) out |= nbr[std::countr_zero(rest)];
    return out & ~d;
  }

  std::size_t n;
  std::vector<Mask> nbr;
  std::vector<std::vector<int>> adj;
};

FaultSet to_fault_set(Mask m, std::size_t universe) {
  FaultSet s(universe);
  for (; m; m &= m - 1) s.insert(static_cast<VertexId>(std::countr_zero(m)));
  return s;
}

struct TaskResult {
  std::optional<MaskPair> best;
  SearchStats stats;
};

// D-space walk for one partition: the top bits of D are fixed to `high`,
// the low bits run through a Gray code so each step toggles one vertex and
// |N(D)| is maintained incrementally from per-vertex neighbor counts.
class DScanner {
 public:
  DScanner(const MaskGraph& mg, int t, bool conditional)
      : mg_(mg), t_(t), conditional_(conditional), cnt_(mg.n, 0) {}

  void scan(Mask high, std::size_t low_bits, TaskResult& out) {
    std::fill(cnt_.begin(), cnt_.end(), 0);
    d_ = 0;
    dsize_ = 0;
    nsize_ = 0;
    for (Mask rest = high; rest; rest &= rest - 1) toggle(std::countr_zero(rest));
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 0; i < steps; ++i) {
      if (i > 0) toggle(std::countr_zero(i));
      if (d_ == 0) continue;
      ++out.stats.subsets_enumerated;
      // max(|F1|,|F2|) >= |N(D)| + ceil(|D|/2) for any bipartition.
      if (nsize_ + (dsize_ + 1) / 2 > t_) continue;
      if (conditional_ && !min_internal_degree_two()) continue;
      ++out.stats.candidates_examined;
      examine(out);
    }
  }

 private:
  void toggle(int v) {
    const Mask b = bit(static_cast<std::size_t>(v));
    if (d_ & b) {
      d_ &= ~b;
      --dsize_;
      for (int w : mg_.adj[v]) {
        if (--cnt_[w] == 0 && !(d_ & bit(w))) --nsize_;
      }
      if (cnt_[v] > 0) ++nsize_;
    } else {
      if (cnt_[v] > 0) --nsize_;
      d_ |= b;
      ++dsize_;
      for (int w : mg_.adj[v]) {
        if (cnt_[w]++ == 0 && !(d_ & bit(w))) ++nsize_;
      }
    }
  }

  // Each v in D needs a neighbor on both sides of the bipartition.
  bool min_internal_degree_two() const {
    for (Mask rest = d_; rest; rest &= rest - 1) {
      if (cnt_[std::countr_zero(rest)] < 2) return false;
    }
    return true;
  }

  bool balanced_split(Mask d1, Mask d2) const {
    for (Mask rest = d_; rest; rest &= rest - 1) {
      const Mask inside = mg_.nbr[std::countr_zero(rest)] & d_;
      if (!(inside & d1) || !(inside & d2)) return false;
    }
    return true;
  }

  void examine(TaskResult& out) {
    const Mask s = mg_.neighborhood(d_);
    const int cap = t_ - std::popcount(s);
    const Mask lowest = d_ & (~d_ + 1);
    // Unordered bipartitions {D1, D2}: D1 always holds the lowest vertex.
    for (Mask sub = d_;; sub = (sub - 1) & d_) {
      if (sub & lowest) {
        const Mask other = d_ ^ sub;
        if (std::popcount(sub) <= cap && std::popcount(other) <= cap &&
            (!conditional_ || balanced_split(sub, other))) {
          ++out.stats.bipartitions_examined;
          const Mask f1 = s | sub;
          const Mask f2 = s | other;
          if (!conditional_ || (mg_.conditional(f1) && mg_.conditional(f2))) {
            const MaskPair p = canonical(f1, f2);
            if (!out.best || pair_less(p, *out.best)) out.best = p;
          }
        }
      }
      if (sub == 0) break;
    }
  }

  const MaskGraph& mg_;
  int t_;
  bool conditional_;
  std::vector<int> cnt_;  // neighbors in D, per vertex
  Mask d_ = 0;
  int dsize_ = 0;
  int nsize_ = 0;
};

template <class Fn>
void run_parallel(std::size_t tasks, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) fn(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

void check_exhaustive_guard(const Graph& g, const SearchBudget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > 40) throw_budget("exhaustive search is limited to 40 vertices (got " + std::to_string(n) + ")");
  if (!budget.override_guards && n > budget.max_vertices) {
    throw_budget("exhaustive search over " + std::to_string(n) + " vertices exceeds the guard of " +
                 std::to_string(budget.max_vertices));
  }
}

}  // namespace

PairSearchResult find_indistinguishable_pair(const Graph& g, int t, bool conditional,
                                             const SearchBudget& budget) {
  if (t < 1) throw_invalid("pair search needs t >= 1");
  check_exhaustive_guard(g, budget);
  const auto start = Clock::now();
  const MaskGraph mg(g);
  const std::size_t high_bits = std::min<std::size_t>(8, mg.n);
  const std::size_t low_bits = mg.n - high_bits;
  const std::size_t tasks = std::size_t{1} << high_bits;
  std::vector<TaskResult> results(tasks);
  run_parallel(tasks, resolve_threads(budget.threads), [&](std::size_t task) {
    DScanner scanner(mg, t, conditional);
    scanner.scan(static_cast<Mask>(task) << low_bits, low_bits, results[task]);
  });

  PairSearchResult out;
  std::optional<MaskPair> best;
  for (const auto& r : results) {
    out.stats += r.stats;
    if (r.best && (!best || pair_less(*r.best, *best))) best = r.best;
  }
  if (best) {
    out.witness = WitnessPair::from_sets(to_fault_set(best->f1, mg.n), to_fault_set(best->f2, mg.n),
                                         conditional);
  }
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

namespace {

struct SampleOutcome {
  std::optional<WitnessPair> witness;
  std::optional<std::size_t> size;
  bool rejected = false;
  std::uint64_t bipartitions = 0;
};

class StructuredSampler {
 public:
  StructuredSampler(const Graph& g, int t, bool conditional) : g_(g), t_(t), conditional_(conditional) {}

  SampleOutcome draw(std::uint64_t seed, std::uint64_t index) {
    SampleOutcome out;
    auto rng = stream_engine(seed, index);
    const std::size_t n = g_.vertex_count();
    std::vector<char> in_d(n, 0);
    std::vector<VertexId> d;
    auto add = [&](VertexId v) {
      in_d[v] = 1;
      d.push_back(v);
    };

    // Grow a connected vertex set of the target size.
    const std::size_t target = 4 + uniform_below(rng, 9);
    add(static_cast<VertexId>(uniform_below(rng, n)));
    std::vector<VertexId> frontier;
    while (d.size() < target) {
      frontier.clear();
      for (VertexId v : d)
        for (VertexId w : g_.neighbors(v))
          if (!in_d[w] && std::find(frontier.begin(), frontier.end(), w) == frontier.end())
            frontier.push_back(w);
      if (frontier.empty()) break;
      std::sort(frontier.begin(), frontier.end());
      add(frontier[uniform_below(rng, frontier.size())]);
    }

    if (conditional_) {
      // Close under the requirement that every vertex of D keeps two
      // neighbors inside D.
      for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
          const VertexId v = d[i];
          std::vector<VertexId> outside;
          std::size_t inside = 0;
          for (VertexId w : g_.neighbors(v)) {
            if (in_d[w]) {
              ++inside;
            } else {
              outside.push_back(w);
            }
          }
          if (inside >= 2) continue;
          if (outside.empty() || d.size() >= kMaxSampleSize) {
            out.rejected = true;
            return out;
          }
          add(outside[uniform_below(rng, outside.size())]);
          again = true;
        }
      }
    }

    std::vector<char> side(n, 0);
    bool split_ok = false;
    for (int attempt = 0; attempt < kSplitAttempts && !split_ok; ++attempt) {
      for (VertexId v : d) side[v] = static_cast<char>(1 + (rng() & 1));
      split_ok = !conditional_ || balanced_split(d, in_d, side);
    }
    if (!split_ok) {
      out.rejected = true;
      return out;
    }
    ++out.bipartitions;

    FaultSet dset(n, d);
    FaultSet f1 = neighborhood_set(g_, dset);
    FaultSet f2 = f1;
    for (VertexId v : d) (side[v] == 1 ? f1 : f2).insert(v);
    if (conditional_ && !(is_conditional_fault_set(g_, f1) && is_conditional_fault_set(g_, f2))) {
      out.rejected = true;
      return out;
    }
    const std::size_t size = std::max(f1.size(), f2.size());
    out.size = size;
    if (size <= static_cast<std::size_t>(t_)) {
      out.witness = WitnessPair::from_sets(std::move(f1), std::move(f2), conditional_);
    }
    return out;
  }

 private:
  static constexpr std::size_t kMaxSampleSize = 16;
  static constexpr int kSplitAttempts = 32;

  bool balanced_split(const std::vector<VertexId>& d, const std::vector<char>& in_d,
                    const std::vector<char>& side) const {
    for (VertexId v : d) {
      bool has1 = false, has2 = false;
      for (VertexId w : g_.neighbors(v)) {
        if (!in_d[w]) continue;
        has1 |= side[w] == 1;
        has2 |= side[w] == 2;
      }
      if (!has1 || !has2) return false;
    }
    return true;
  }

  const Graph& g_;
  int t_;
  bool conditional_;
};

}  // namespace

PairSearchResult find_indistinguishable_pair_randomized(const Graph& g, int t, bool conditional,
                                                        const SearchBudget& budget) {
  if (t < 1) throw_invalid("pair search needs t >= 1");
  if (budget.samples == 0) throw_invalid("randomized search needs at least one sample");
  const auto start = Clock::now();
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (budget.samples + kChunk - 1) / kChunk;

  struct ChunkResult {
    std::optional<WitnessPair> best;
    std::optional<std::size_t> best_size;
    SearchStats stats;
  };
  std::vector<ChunkResult> results(chunks);
  run_parallel(chunks, resolve_threads(budget.threads), [&](std::size_t c) {
    StructuredSampler sampler(g, t, conditional);
    auto& r = results[c];
    const std::uint64_t end = std::min(budget.samples, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) {
      SampleOutcome s = sampler.draw(budget.seed, i);
      ++r.stats.subsets_enumerated;
      r.stats.bipartitions_examined += s.bipartitions;
      if (s.rejected) {
        ++r.stats.samples_rejected;
        continue;
      }
      ++r.stats.candidates_examined;
      if (s.size && (!r.best_size || *s.size < *r.best_size)) r.best_size = s.size;
      if (s.witness && (!r.best || witness_less(*s.witness, *r.best))) r.best = std::move(s.witness);
    }
  });

  PairSearchResult out;
  out.exhaustive = false;
  for (auto& r : results) {
    out.stats += r.stats;
    if (r.best_size && (!out.best_sampled_size || *r.best_size < *out.best_sampled_size)) {
      out.best_sampled_size = r.best_size;
    }
    if (r.best && (!out.witness || witness_less(*r.best, *out.witness))) out.witness = std::move(r.best);
  }
  out.budget_exhausted = !out.witness.has_value();
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

std::optional<std::size_t> naive_min_pair_size(const Graph& g, bool conditional) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw_budget("naive pair enumeration is limited to 12 vertices");
  const MaskGraph mg(g);
  const Mask count = Mask{1} << n;
  std::vector<char> ok(count, 1);
  std::vector<Mask> nd(count, 0);
  for (Mask f = 0; f < count; ++f) {
    if (conditional) ok[f] = mg.conditional(f) ? 1 : 0;
    nd[f] = mg.neighborhood(f);
  }
  std::optional<std::size_t> best;
  for (Mask a = 0; a < count; ++a) {
    if (!ok[a]) continue;
    for (Mask b = a + 1; b < count; ++b) {
      if (!ok[b]) continue;
      const auto size = static_cast<std::size_t>(std::max(std::popcount(a), std::popcount(b)));
      if (best && size >= *best) continue;
      // Indistinguishable iff no vertex outside a ∪ b touches a Δ b.
      if ((nd[a ^ b] & ~(a | b)) == 0) best = size;
    }
  }
  return best;
}

}  // namespace bsdiag
