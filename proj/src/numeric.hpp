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

#ifndef DENTILE_NUMERIC_HPP
#define DENTILE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dentile {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal identity the code relies on fails (e.g. a ratio
// formula that must produce an integer does not). Always a bug, never user input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline BigInt pow2(long long k) {
  if (k < 0) throw DomainError("pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(k);
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long t = 1; t <= k; ++t) {
    r *= (n - k + t);
    r /= t;  // exact at every step
  }
  return r;
}

// x(x+1)...(x+k-1), with (x)_0 = 1.
inline BigRat pochhammer(const BigRat& x, long long k) {
  if (k < 0) throw DomainError("pochhammer: negative index");
  BigRat r = 1;
  for (long long t = 0; t < k; ++t) r *= x + t;
  return r;
}

inline double log_bigint(const BigInt& v) {
  if (v <= 0) throw DomainError("log_bigint: nonpositive argument");
  using boost::multiprecision::msb;
  unsigned bits = msb(v);
  if (bits <= 900) return std::log(v.convert_to<double>());
  BigInt top = v >> (bits - 52);
  return std::log(top.convert_to<double>()) + (double)(bits - 52) * std::log(2.0);
}

inline double log_bigrat(const BigRat& v) {
  if (v <= 0) throw DomainError("log_bigrat: nonpositive argument");
  return log_bigint(numerator(v)) - log_bigint(denominator(v));
}

inline double to_double(const BigRat& v) {
  double lo = std::abs(log_bigrat(v == 0 ? BigRat(1) : boost::multiprecision::abs(v)));
  if (v == 0) return 0.0;
  if (lo > 600) return v > 0 ? std::exp(log_bigrat(v)) : -std::exp(log_bigrat(-v));
  return v.convert_to<double>();
}

// Decimal rendering with a fixed number of significant digits, round-half-up.
inline std::string decimal_string(const BigRat& value, int digits = 12) {
  if (digits < 1) throw DomainError("decimal_string: digits must be >= 1");
  if (value == 0) return "0";
  bool neg = value < 0;
  BigRat v = neg ? BigRat(-value) : value;
  // decimal exponent e with 10^e <= v < 10^(e+1)
  long long e = 0;
  BigRat t = v;
  while (t >= 10) { t /= 10; ++e; }
  while (t < 1) { t *= 10; --e; }
  long long shift = digits - 1 - e;
  BigRat scaled = v;
  for (long long s = 0; s < shift; ++s) scaled *= 10;
  for (long long s = 0; s < -shift; ++s) scaled /= 10;
  BigInt m = (numerator(scaled) * 2 + denominator(scaled)) / (denominator(scaled) * 2);
  std::string ds = m.str();
  if ((long long)ds.size() > digits) { ++e; shift = digits - 1 - e; ds.pop_back(); }
  std::string out;
  if (e >= 0 && e < 18) {
    if ((long long)ds.size() <= e) ds.append(e + 1 - ds.size(), '0');
    out = ds.substr(0, e + 1);
    std::string frac = ds.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e < 0 && e > -7) {
    out = "0." + std::string(-e - 1, '0') + ds;
    while (out.back() == '0' && out[out.size() - 2] != '.') out.pop_back();
  } else {
    out = ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

}  // namespace dentile

#endif  // DENTILE_NUMERIC_HPP
