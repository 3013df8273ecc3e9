// Copyright 2026 The Dentile Authors.
//
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

#include "regions.hpp"

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "path_numbers.hpp"

using namespace dentile;

TEST_SUITE_BEGIN("regions");

TEST_CASE("aztec cell counts") {
  CHECK(build_aztec(1, {}, {}, false).cells().size() == 4);
  CHECK(build_aztec(8, {2}, {4}, false).cells().size() == 142);
  auto tiny = build_aztec(1, {1}, {1}, false);
  auto cs = tiny.cells();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].y == cs[1].y);  // one horizontal domino slot
  // closed forms for random dent sets
  std::mt19937_64 rng(5);
  for (int n : {3, 10, 25, 50}) {
    std::vector<int> sw, se;
    for (int i = 1; i <= n; ++i) {
      if (rng() % 4 == 0) sw.push_back(i);
      if (rng() % 4 == 0) se.push_back(i);
    }
    auto dented = build_aztec(n, sw, se, false);
    CHECK((long long)dented.cells().size() ==
          2LL * n * (n + 1) - (long long)(sw.size() + se.size()));
    CHECK(dented.cells().size() == (size_t)dented.cell_count());
    auto grown = build_aztec(n, sw, se, true);
    CHECK((long long)grown.cells().size() ==
          2LL * n * (n + 1) + (long long)(sw.size() + se.size()));
  }
}

TEST_CASE("dent bookkeeping errors") {
  CHECK_THROWS_AS(build_aztec(3, {4}, {1}, false), DomainError);
  CHECK_THROWS_AS(build_aztec(3, {0}, {1}, false), DomainError);
  CHECK_THROWS_AS(build_aztec(3, {2, 2}, {1, 3}, false), DomainError);
  // unbalanced dent sets are constructible but flagged
  auto r = build_aztec(3, {1}, {}, false);
  CHECK_FALSE(r.balanced());
  CHECK(dual_graph(r).white_minus_black() != 0);
}

TEST_CASE("color balance iff dent sets balanced") {
  for (int n : {1, 2, 5}) {
    CHECK(dual_graph(build_aztec(n, {}, {}, false)).white_minus_black() == 0);
    CHECK(dual_graph(build_aztec(n, {1}, {n}, false)).white_minus_black() == 0);
  }
  // removing two black sw cells and one white se cell leaves a surplus white
  CHECK(dual_graph(build_aztec(4, {1, 2}, {3}, false)).white_minus_black() == 1);
}

TEST_CASE("dual graph shapes") {
  auto g1 = dual_graph(build_aztec(1, {}, {}, false));
  CHECK(g1.n_vertices == 4);
  CHECK(g1.edges.size() == 4);
  auto g2 = dual_graph(build_aztec(2, {}, {}, false));
  CHECK(g2.n_vertices == 12);
  CHECK(g2.edges.size() == 16);  // 4 n^2 slots
  for (int n : {3, 4, 7}) {
    auto g = dual_graph(build_aztec(n, {}, {}, false));
    CHECK((long long)g.edges.size() == 4LL * n * n);
    for (auto [u, v] : g.edges) CHECK(g.colors[u] != g.colors[v]);
  }
  auto h = dual_graph(build_hexagon(1, 1, 1, {}, {}, false));
  CHECK(h.n_vertices == 6);
  CHECK(h.edges.size() == 6);
  auto h2 = dual_graph(build_hexagon(2, 3, 4, {}, {}, false));
  CHECK(h2.n_vertices == 2 * (2 * 3 + 3 * 4 + 4 * 2));
  for (auto [u, v] : h2.edges) CHECK(h2.colors[u] != h2.colors[v]);
}

TEST_CASE("hexagon dent cells and balance") {
  auto r = build_hexagon(3, 2, 2, {2}, {1}, false);
  CHECK(r.cell_count() == 2 * (6 + 4 + 6) - 2);
  CHECK(dual_graph(r).white_minus_black() == 0);
  auto opp = build_hexagon(3, 3, 3, {2}, {2}, true);
  CHECK(dual_graph(opp).white_minus_black() == 0);
  CHECK_THROWS_AS(build_hexagon(2, 2, 2, {3}, {1}, false), DomainError);
}

TEST_CASE("plain endpoint matrix is the Delannoy matrix") {
  for (int n = 1; n <= 8; ++n) {
    auto e = lgv_endpoints(build_aztec(n, {}, {}, false));
    REQUIRE(e.starts.size() == (size_t)n + 1);
    REQUIRE(e.ends.size() == (size_t)n + 1);
    auto d = delannoy_matrix(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        CHECK(pairwise_path_count(e.geometry, e.starts[i], e.ends[j]) == d(i, j));
  }
}

TEST_CASE("augmented endpoints drop one start and one end") {
  auto e = lgv_endpoints(build_aztec(2, {1}, {1}, true));
  CHECK(e.starts.size() == 2);
  CHECK(e.ends.size() == 2);
  // remaining pairwise counts form the minor of the order-3 matrix
  auto d = delannoy_matrix(3);
  CHECK(pairwise_path_count(e.geometry, e.starts[0], e.ends[0]) == d(0, 0));
  CHECK(pairwise_path_count(e.geometry, e.starts[1], e.ends[1]) == d(2, 2));
  CHECK(pairwise_path_count(e.geometry, e.starts[0], e.ends[1]) == d(0, 2));
}

TEST_CASE("dented endpoints put the dent pair first") {
  auto e = lgv_endpoints(build_aztec(8, {2}, {4}, false));
  CHECK(e.starts.size() == 9);
  CHECK(e.ends.size() == 9);
  CHECK(e.parity == 0);
}

TEST_CASE("hexagon endpoints and binomial counts") {
  auto e = lgv_endpoints(build_hexagon(2, 2, 2, {}, {}, false));
  REQUIRE(e.starts.size() == 2);
  REQUIRE(e.ends.size() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pairwise_path_count(e.geometry, e.starts[i], e.ends[j]) ==
            binomial(4, 2 - i + j));
}

TEST_CASE("region JSON carries kind, sizes, dents and cells") {
  auto j = nlohmann::json::parse(region_json(build_aztec(2, {1}, {2}, false)));
  CHECK(j["kind"] == "aztec");
  CHECK(j["n"] == 2);
  CHECK(j["dents"]["sw"][0] == 1);
  CHECK(j["cells"].size() == 10);
  auto h = nlohmann::json::parse(region_json(build_hexagon(2, 1, 1, {1}, {1}, true)));
  CHECK(h["kind"] == "hexagon_opposite");
  CHECK(h["a"] == 2);
  CHECK(h["dents"]["south"][0] == 1);
}

TEST_SUITE_END();
