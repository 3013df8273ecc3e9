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

#include <vector>

namespace dentile {

BigInt delannoy(long long k, long long l) {
  if (k < 0 || l < 0) throw DomainError("delannoy: negative argument");
  // local DP table; row-by-row so concurrent callers share nothing
  std::vector<BigInt> prev(l + 1, 1), cur(l + 1);
  for (long long i = 1; i <= k; ++i) {
    cur[0] = 1;
    for (long long j = 1; j <= l; ++j) cur[j] = prev[j] + cur[j - 1] + prev[j - 1];
    std::swap(prev, cur);
  }
  return prev[l];
}

Matrix<BigInt> delannoy_matrix(int n) {
  if (n < 1) throw DomainError("delannoy_matrix: n must be >= 1");
  Matrix<BigInt> d(n, n);
  for (int i = 0; i < n; ++i) d(i, 0) = 1;
  for (int j = 0; j < n; ++j) d(0, j) = 1;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) d(i, j) = d(i - 1, j) + d(i, j - 1) + d(i - 1, j - 1);
  return d;
}

Matrix<BigInt> pascal_lower(int n) {
  if (n < 1) throw DomainError("pascal_lower: n must be >= 1");
  Matrix<BigInt> l(n, n);
  for (int i = 0; i < n; ++i) {
    l(i, 0) = 1;
    for (int j = 1; j <= i; ++j) l(i, j) = l(i - 1, j - 1) + (j <= i - 1 ? l(i - 1, j) : BigInt(0));
  }
  return l;
}

Matrix<BigInt> symmetric_pascal(int n) {
  auto l = pascal_lower(n);
  return l * l.transposed();
}

Matrix<BigInt> pascal_lower_inverse(int n) {
  auto l = pascal_lower(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2) l(i, j) = -l(i, j);
  return l;
}

bool factorization_check(int n) {
  auto l = pascal_lower(n);
  Matrix<BigInt> mid(n, n);
  for (int k = 0; k < n; ++k) mid(k, k) = pow2(k);
  return l * mid * l.transposed() == delannoy_matrix(n);
}

BigRat ratio_sum(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("ratio_sum: indices out of [1,n]");
  // Accumulate sum_{k<n} C(k,i-1) C(k,j-1) 2^{n-1-k} over the denominator 2^n.
  BigInt num = 0;
  BigInt bi = 0, bj = 0;  // C(k, i-1), C(k, j-1)
  for (int k = 0; k < n; ++k) {
    if (k == i - 1) bi = 1;
    else if (k > i - 1) bi = bi * k / (k - (i - 1));
    if (k == j - 1) bj = 1;
    else if (k > j - 1) bj = bj * k / (k - (j - 1));
    if (bi != 0 && bj != 0) num += bi * bj << static_cast<unsigned>(n - 1 - k);
  }
  return BigRat(num, pow2(n));
}

BigRat delannoy_inverse_entry(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw DomainError("delannoy_inverse_entry: indices out of [0,n)");
  BigRat v = 2 * ratio_sum(n, i + 1, j + 1);
  return ((i + j) % 2) ? -v : v;
}

Matrix<BigRat> delannoy_inverse_exact(int n) {
  auto d = delannoy_matrix(n);
  Matrix<BigRat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = BigRat(d(i, j));
  return exact_inverse(m);
}

}  // namespace dentile
