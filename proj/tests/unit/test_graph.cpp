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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "decomposition.hpp"
#include "graph.hpp"
#include "graph_metrics.hpp"
#include "permutation.hpp"
#include "test_util.hpp"

using namespace bsdiag;
using bsdiag::testing::error_code_of;
using bsdiag::testing::labels;
using bsdiag::testing::names;

TEST_CASE("rank and unrank follow lexicographic order") {
  CHECK(perm_rank(Permutation::identity(4)) == 0);
  CHECK(perm_rank(Permutation::parse("4321")) == 23);
  CHECK(perm_unrank(23, 4).label() == "4321");
  CHECK(perm_unrank(1, 4).label() == "1243");
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation p = perm_unrank(r, n);
      REQUIRE(perm_rank(p) == r);
      if (r > 0) REQUIRE(perm_unrank(r - 1, n) < p);
    }
  }
}

TEST_CASE("permutation validation") {
  CHECK(error_code_of([] { Permutation::parse("1224"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { Permutation::parse("1a3"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { Permutation::parse(""); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { perm_unrank(24, 4); }) == ErrorCode::kInvalidArgument);
  const Permutation p = Permutation::parse("3142");
  CHECK(p.at(1) == 3);
  CHECK(p.at(4) == 2);
  CHECK(p.swapped(2).label() == "3412");
  CHECK(error_code_of([&] { p.swapped(4); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { p.at(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("bubble-sort graph structure for n = 2..7") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    const Graph g = build_bubble_sort(n);
    CHECK(g.vertex_count() == factorial(n));
    CHECK(g.edge_count() == (n - 1) * factorial(n) / 2);
    for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) == static_cast<std::size_t>(n - 1));
    CHECK(g.name() == "B" + std::to_string(n));
  }
}

TEST_CASE("edges are adjacent transpositions") {
  const Graph g = build_bubble_sort(5);
  for (const auto& [u, v] : g.edges()) {
    const Permutation pu = g.label(u), pv = g.label(v);
    const auto a = pu.symbols();
    const auto b = pv.symbols();
    int diff = 0, first = -1;
    for (int i = 0; i < 5; ++i) {
      if (a[i] != b[i]) {
        if (first < 0) first = i;
        ++diff;
      }
    }
    REQUIRE(diff == 2);
    REQUIRE(a[first] == b[first + 1]);
    REQUIRE(a[first + 1] == b[first]);
  }
}

TEST_CASE("dimension guard") {
  CHECK(error_code_of([] { build_bubble_sort(1); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { build_bubble_sort(10); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("neighborhood of the identity in B4") {
  const Graph g = build_bubble_sort(4);
  const FaultSet n = neighborhood_set(g, labels(g, {"1234"}));
  CHECK(n == labels(g, {"2134", "1324", "1243"}));
  // N(X) excludes X itself.
  const FaultSet n2 = neighborhood_set(g, labels(g, {"1234", "2134"}));
  CHECK(n2 == labels(g, {"1324", "1243", "2314", "2143"}));
}

TEST_CASE("vertex names round trip") {
  const Graph g = build_bubble_sort(4);
  for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(g.parse_vertex(g.vertex_name(v)) == v);
  CHECK(error_code_of([&] { g.parse_vertex("12345"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { g.parse_vertex("1123"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("generic graph construction rejects non-simple input") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out{{0, 5}};
  CHECK(error_code_of([&] { Graph::from_edges(3, loop); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { Graph::from_edges(3, dup); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { Graph::from_edges(3, out); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("small graph builders") {
  CHECK(make_path(5).edge_count() == 4);
  CHECK(make_cycle(6).edge_count() == 6);
  CHECK(make_complete(4).edge_count() == 6);
  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
  CHECK(make_star(3).edge_count() == 3);
  const Graph r1 = make_random_graph(9, 0.5, 42);
  const Graph r2 = make_random_graph(9, 0.5, 42);
  CHECK(r1.edges() == r2.edges());
}

TEST_CASE("diameter") {
  CHECK(diameter(build_bubble_sort(4)) == 6);
  CHECK(diameter(build_bubble_sort(5)) == 10);
  CHECK(diameter(make_complete(2)) == 1);
  CHECK(diameter(make_path(5)) == 4);
  CHECK(diameter(build_bubble_sort(4), MetricMode::kAllPairs) == 6);
  CHECK(diameter(build_bubble_sort(6)) == 15);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(build_bubble_sort(4)) == 3);
  CHECK(vertex_connectivity(build_bubble_sort(5)) == 4);
  CHECK(vertex_connectivity(build_bubble_sort(4), MetricMode::kAllPairs) == 3);
  CHECK(vertex_connectivity(make_path(3)) == 1);
  CHECK(vertex_connectivity(make_cycle(6)) == 2);
  CHECK(vertex_connectivity(make_complete(5)) == 4);
  CHECK(vertex_connectivity(make_complete_bipartite(2, 3)) == 2);
}

TEST_CASE("components after removing a neighborhood in B4") {
  const Graph g = build_bubble_sort(4);
  const FaultSet removed = neighborhood_set(g, labels(g, {"1234"}));
  auto comps = components(g, removed);
  REQUIRE(comps.size() == 2);
  std::vector<std::size_t> sizes{comps[0].vertices.size(), comps[1].vertices.size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 20});
  CHECK(components(g, FaultSet(g.vertex_count())).size() == 1);
}

TEST_CASE("last-symbol decomposition") {
  const Graph g = build_bubble_sort(4);
  const Decomposition d = decompose_last_symbol(g);
  for (int i = 1; i <= 4; ++i) {
    CHECK(d.part(i).size() == 6);
    for (VertexId v : d.part(i)) REQUIRE(g.label(v).at(4) == i);
  }
  auto cross = cross_matching_edges(g, d, 3, 4);
  std::set<std::pair<std::string, std::string>> got;
  for (auto [u, v] : cross) {
    std::string a = g.vertex_name(u), b = g.vertex_name(v);
    if (b < a) std::swap(a, b);
    got.insert({a, b});
  }
  CHECK(got == std::set<std::pair<std::string, std::string>>{{"1234", "1243"}, {"2134", "2143"}});
  CHECK(error_code_of([&] { cross_matching_edges(g, d, 2, 2); }) == ErrorCode::kInvalidArgument);

  for (int n = 4; n <= 6; ++n) {
    const Graph h = build_bubble_sort(n);
    const Decomposition dh = decompose_last_symbol(h);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) REQUIRE(cross_matching_edges(h, dh, i, j).size() == factorial(n - 2));
    }
  }
}

TEST_CASE("part classification") {
  const Graph g = build_bubble_sort(5);
  const Decomposition d = decompose_last_symbol(g);
  FaultSet s(g.vertex_count());
  for (VertexId v : d.part(2)) {
    if (s.size() == 3) break;
    s.insert(v);
  }
  const PartClassification c = classify_parts(d, s);
  CHECK(c.a1 == std::vector<int>{2});
  CHECK(c.a2 == std::vector<int>{1, 3, 4, 5});
  CHECK(c.s_sizes[1] == 3);
  CHECK(union_of_parts(d, c.a2).size() == 96);
}

TEST_CASE("pair-edge gadget") {
  const Graph g = build_bubble_sort(4);
  const PairEdgeGadget gd = pair_edge_gadget(g, g.parse_vertex("1234"), g.parse_vertex("2134"));
  CHECK(g.vertex_name(gd.x_prime) == "1243");
  CHECK(g.vertex_name(gd.y_prime) == "2143");
  CHECK(is_pair_edge(g, g.parse_vertex("1234"), g.parse_vertex("2134")));
  CHECK_FALSE(is_pair_edge(g, g.parse_vertex("1234"), g.parse_vertex("1324")));
  CHECK(error_code_of([&] { pair_edge_gadget(g, g.parse_vertex("1234"), g.parse_vertex("1324")); }) ==
        ErrorCode::kInvalidArgument);
  const Graph b3 = build_bubble_sort(3);
  CHECK(error_code_of([&] { pair_edge_gadget(b3, 0, b3.parse_vertex("213")); }) ==
        ErrorCode::kInvalidArgument);
  for (int n = 4; n <= 7; ++n) {
    const Graph h = build_bubble_sort(n);
    const VertexId y = h.parse_vertex(h.label(0).swapped(1).label());
    const PairEdgeGadget p = pair_edge_gadget(h, 0, y);
    CHECK(neighborhood_set(h, p.vertices(h.vertex_count())).size() == static_cast<std::size_t>(4 * (n - 3)));
  }
}

TEST_CASE("exports") {
  const Graph g = build_bubble_sort(3);
  CHECK(export_edge_list(g) == "123 132\n123 213\n132 312\n213 231\n231 321\n312 321\n");
  const std::string dot = export_dot(g);
  CHECK(dot.rfind("graph \"B3\" {", 0) == 0);
  std::size_t edges = 0;
  for (auto pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 6);
  CHECK(dot.find("label=\"321\"") != std::string::npos);
}
