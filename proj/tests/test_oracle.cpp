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

#include "oracle.hpp"

#include "doctest.h"
#include "path_numbers.hpp"

using namespace dentile;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("matching counts on tiny regions") {
  CHECK(count_matchings(dual_graph(build_aztec(1, {}, {}, false))) == 2);
  CHECK(count_matchings(dual_graph(build_aztec(1, {1}, {1}, false))) == 1);
  CHECK(count_matchings(dual_graph(build_hexagon(2, 2, 2, {}, {}, false))) == 20);
  // odd vertex count is reported as zero, not an error
  auto unbalanced = dual_graph(build_aztec(2, {1}, {}, false));
  CHECK(count_matchings(unbalanced) == 0);
}

TEST_CASE("matching counts reproduce the plain closed form") {
  for (int n = 1; n <= 5; ++n)
    CHECK(count_matchings(dual_graph(build_aztec(n, {}, {}, false))) ==
          pow2((long long)n * (n + 1) / 2));
}

TEST_CASE("step sets require a positive half-space") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  CHECK(dl.dimension() == 2);
  for (const auto& v : dl.steps()) {
    BigRat dot = 0;
    for (int d = 0; d < 2; ++d) dot += dl.certificate()[d] * v[d];
    CHECK(dot > 0);
  }
  CHECK_THROWS_AS(StepSet({{1, 0}, {-1, 0}}), DomainError);
}

TEST_CASE("path DP over all lengths") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  CHECK(count_paths_dp(dl, {1, 2}) == 5);
  CHECK(count_paths_dp(dl, {0, 0}) == 1);
  StepSet grid({{1, 0}, {0, 1}});
  CHECK(count_paths_dp(grid, {2, 2}) == 6);
  for (int k = 0; k <= 12; ++k)
    for (int l = 0; l <= 12; l += 3) CHECK(count_paths_dp(dl, {k, l}) == delannoy(k, l));
  // steps with a negative component still make every endpoint finite
  StepSet skew({{1, -1}, {1, 1}});
  CHECK(count_paths_dp(skew, {2, 0}) == 2);
  CHECK(count_paths_dp(skew, {0, 2}) == 0);
}

TEST_CASE("deviation fractions, exact") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  CHECK(deviation_fraction(dl, {1, 1}, BigRat(1, 10)).fraction() == BigRat(2, 3));
  CHECK(deviation_fraction(dl, {1, 1}, BigRat(6, 10)).fraction() == 0);
  // a tube wider than any step and endpoint catches every path
  CHECK(deviation_fraction(dl, {2, 3}, BigRat(9)).fraction() == 0);
}

TEST_CASE("deviation fraction is nonincreasing in the tube width") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  BigRat prev = -1;
  for (int num : {60, 45, 30, 20, 12, 6, 3}) {  // eps shrinking, tube narrowing
    BigRat f = deviation_fraction(dl, {7, 7}, BigRat(num, 100)).fraction();
    CHECK(f >= prev);
    CHECK(f <= 1);
    prev = f;
  }
}

TEST_CASE("decay fit: decreasing fractions and a positive slope") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  DecayFit fit = deviation_decay_fit(dl, {1, 1}, BigRat(1, 4), {6, 8, 10, 12, 14});
  REQUIRE(fit.rows.size() == 5);
  for (size_t t = 1; t < fit.rows.size(); ++t)
    CHECK(fit.rows[t].dev.fraction() < fit.rows[t - 1].dev.fraction());
  CHECK(!fit.trivially_concentrated);
  CHECK(fit.c1 > 0);
  StepSet grid({{1, 0}, {0, 1}});
  DecayFit fit2 = deviation_decay_fit(grid, {1, 1}, BigRat(1, 5), {6, 8, 10, 12});
  CHECK(fit2.c1 > 0);
}

TEST_CASE("huge tube means trivial concentration") {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  DecayFit fit = deviation_decay_fit(dl, {1, 1}, BigRat(50), {2, 3, 4});
  CHECK(fit.trivially_concentrated);
}

TEST_SUITE_END();
