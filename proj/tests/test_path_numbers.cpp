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

#include "path_numbers.hpp"

#include <set>

#include "doctest.h"

using namespace dentile;

namespace {

// independent oracle: enumerate king-like paths by depth-first walk
long long delannoy_brute(int k, int l) {
  if (k == 0 && l == 0) return 1;
  long long total = 0;
  if (k > 0) total += delannoy_brute(k - 1, l);
  if (l > 0) total += delannoy_brute(k, l - 1);
  if (k > 0 && l > 0) total += delannoy_brute(k - 1, l - 1);
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("path_numbers");

TEST_CASE("delannoy numbers match brute-force enumeration") {
  CHECK(delannoy(1, 2) == 5);
  CHECK(delannoy(2, 2) == 13);
  for (int k = 0; k <= 6; ++k) {
    CHECK(delannoy(k, 0) == 1);
    for (int l = 0; l <= 6; ++l) CHECK(delannoy(k, l) == delannoy_brute(k, l));
  }
  CHECK_THROWS_AS(delannoy(-1, 0), DomainError);
}

TEST_CASE("delannoy matrix recurrence, symmetry, border") {
  auto d = delannoy_matrix(3);
  CHECK(d(0, 0) == 1);
  CHECK(d(1, 1) == 3);
  CHECK(d(1, 2) == 5);
  CHECK(d(2, 2) == 13);
  auto big = delannoy_matrix(9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      CHECK(big(i, j) == big(j, i));
      if (i > 0 && j > 0)
        CHECK(big(i, j) == big(i - 1, j) + big(i, j - 1) + big(i - 1, j - 1));
    }
}

TEST_CASE("binomial matrix identities") {
  auto s = symmetric_pascal(2);
  CHECK(s(0, 0) == 1);
  CHECK(s(0, 1) == 1);
  CHECK(s(1, 1) == 2);
  for (int n : {1, 2, 5, 20, 50})
    CHECK(pascal_lower(n) * pascal_lower_inverse(n) == Matrix<BigInt>::identity(n));
}

TEST_CASE("factorization of the Delannoy matrix") {
  for (int n : {1, 2, 3, 5, 17, 64}) CHECK(factorization_check(n));
}

TEST_CASE("ratio series basics") {
  // single dent at the corner: geometric series 1 - 2^{-n}
  for (int n : {1, 2, 7, 30})
    CHECK(ratio_sum(n, 1, 1) == BigRat(pow2(n) - 1, pow2(n)));
  CHECK(ratio_sum(1, 1, 1) == BigRat(1, 2));
  // the order-20 ratio that sits near the integer 5
  BigRat r = ratio_sum(20, 2, 3);
  CHECK(decimal_string(r, 4) == "4.996");
  CHECK(r > BigRat(499, 100));
  CHECK(r < 5);
  CHECK_THROWS_AS(ratio_sum(4, 0, 1), DomainError);
  CHECK_THROWS_AS(ratio_sum(4, 1, 5), DomainError);
}

TEST_CASE("ratio series increases to the Delannoy limit") {
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      BigRat prev = -1;
      for (int n = std::max(i, j); n <= 60; n += 7) {
        BigRat v = ratio_sum(n, i, j);
        CHECK(v >= prev);
        CHECK(v <= BigRat(delannoy(i - 1, j - 1)));
        prev = v;
      }
      // tail bound at n = 200: error below 2^{-100}
      BigRat err = BigRat(delannoy(i - 1, j - 1)) - ratio_sum(200, i, j);
      CHECK(err >= 0);
      CHECK(err < BigRat(1, pow2(100)));
    }
}

TEST_CASE("inverse entries: closed form equals exact elimination") {
  CHECK(delannoy_inverse_entry(1, 0, 0) == 1);
  CHECK(delannoy_inverse_entry(3, 0, 0) == BigRat(7, 4));
  for (int n : {1, 2, 3, 4, 8, 14, 20}) {
    auto inv = delannoy_inverse_exact(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(inv(i, j) == delannoy_inverse_entry(n, i, j));
  }
  CHECK_THROWS_AS(delannoy_inverse_entry(3, 3, 0), DomainError);
}

TEST_CASE("inverse entries approach twice the signed Delannoy numbers") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      BigRat limit = BigRat(2 * delannoy(i, j));
      if ((i + j) % 2) limit = -limit;
      BigRat gap = delannoy_inverse_entry(160, i, j) - limit;
      if (gap < 0) gap = -gap;
      CHECK(gap < BigRat(1, pow2(60)));
    }
}

TEST_CASE("determinant of the order-(n+1) matrix is the plain tiling count") {
  for (int n = 1; n <= 30; ++n)
    CHECK(bareiss_determinant(delannoy_matrix(n + 1)) == pow2((long long)n * (n + 1) / 2));
}

TEST_SUITE_END();
