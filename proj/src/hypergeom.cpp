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

#include "hypergeom.hpp"

namespace dentile {

namespace {

bool is_nonpositive_integer(const BigRat& x) {
  return x <= 0 && denominator(x) == 1;
}

}  // namespace

std::optional<long long> HyperSeries::termination_index() const {
  std::optional<long long> n;
  for (const BigRat& u : upper) {
    if (!is_nonpositive_integer(u)) continue;
    long long m = (-numerator(u)).convert_to<long long>();
    if (!n || m < *n) n = m;
  }
  return n;
}

BigRat evaluate_terminating(const HyperSeries& s) {
  auto nt = s.termination_index();
  if (!nt) throw DomainError("evaluate_terminating: no nonpositive-integer upper parameter");
  const long long n = *nt;
  BigRat sum = 0, term = 1;
  for (long long k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    BigRat num = 1, den = k + 1;
    for (const BigRat& u : s.upper) num *= u + k;
    for (const BigRat& l : s.lower) den *= l + k;
    if (den == 0)
      throw DomainError("evaluate_terminating: zero lower-parameter factor before termination");
    term *= num / den;
  }
  return sum;
}

namespace {

// The transformation is stated for the full sum of n+1 terms; a zero lower
// Pochhammer anywhere in that range puts the parameters outside its domain,
// even when an upper parameter happens to truncate the series earlier.
void reject_poles_up_to(const HyperSeries& s, long long n, const char* side) {
  for (const BigRat& l : s.lower)
    if (is_nonpositive_integer(l) && -numerator(l) < n)
      throw DomainError(std::string("sears_transform_check: pole among the ") + side +
                        " lower parameters");
}

}  // namespace

bool sears_transform_check(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& e,
                           const BigRat& f, long long n) {
  if (n < 0) throw DomainError("sears_transform_check: n must be >= 0");
  BigRat mn = BigRat(-n);
  BigRat g = 1 + a + b + c - e - f + mn;
  HyperSeries lhs{{a, b, c, mn}, {e, f, g}};
  HyperSeries rhs{{mn, a, 1 + a + c - e - f + mn, 1 + a + b - e - f + mn},
                  {g, 1 + a - e + mn, 1 + a - f + mn}};
  reject_poles_up_to(lhs, n, "left");
  reject_poles_up_to(rhs, n, "right");
  BigRat den = pochhammer(e, n) * pochhammer(f, n);
  if (den == 0) throw DomainError("sears_transform_check: zero prefactor denominator");
  BigRat pref = pochhammer(e - a, n) * pochhammer(f - a, n) / den;
  return evaluate_terminating(lhs) == pref * evaluate_terminating(rhs);
}

}  // namespace dentile
