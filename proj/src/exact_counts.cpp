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

#include "exact_counts.hpp"

#include <sstream>

#include "hypergeom.hpp"
#include "json.hpp"
#include "matrix.hpp"
#include "path_numbers.hpp"

namespace dentile {

namespace {

BigInt rat_to_integer(const BigRat& v, const char* what) {
  if (denominator(v) != 1)
    throw InternalError(std::string(what) + ": expected an integer, got " +
                        numerator(v).str() + "/" + denominator(v).str());
  return numerator(v);
}

void check_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) throw DomainError(std::string(what) + ": index out of range");
}

}  // namespace

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::ClosedForm: return "ClosedForm";
    case CountMethod::LgvDeterminant: return "LgvDeterminant";
    case CountMethod::RatioFormula: return "RatioFormula";
    case CountMethod::Hypergeometric: return "Hypergeometric";
    case CountMethod::Oracle: return "Oracle";
  }
  return "?";
}

std::string CountResult::json() const {
  nlohmann::json j;
  j["region"] = nlohmann::json::accept(region) ? nlohmann::json::parse(region)
                                               : nlohmann::json(region);
  j["count"] = count.str();
  j["method"] = count_method_name(method);
  return j.dump();
}

BigInt count_aztec(int n) {
  if (n < 0) throw DomainError("count_aztec: order must be >= 0");
  return pow2(static_cast<long long>(n) * (n + 1) / 2);
}

BigInt count_dented_aztec(int n, int i, int j) {
  check_range(i, 1, n, "count_dented_aztec i");
  check_range(j, 1, n, "count_dented_aztec j");
  return rat_to_integer(BigRat(count_aztec(n)) * ratio_sum(n, i, j), "count_dented_aztec");
}

BigInt count_multi_dented_aztec(int n, const std::vector<int>& sw, const std::vector<int>& se) {
  if (sw.size() != se.size())
    throw DomainError("count_multi_dented_aztec: dent sets must have equal size");
  for (size_t t = 0; t < sw.size(); ++t) {
    check_range(sw[t], 1, n, "count_multi_dented_aztec sw");
    check_range(se[t], 1, n, "count_multi_dented_aztec se");
    if (t > 0 && (sw[t] <= sw[t - 1] || se[t] <= se[t - 1]))
      throw DomainError("count_multi_dented_aztec: dent indices must be strictly increasing");
  }
  const size_t k = sw.size();
  Matrix<BigRat> m(k, k);
  for (size_t s = 0; s < k; ++s)
    for (size_t t = 0; t < k; ++t) m(s, t) = ratio_sum(n, sw[s], se[t]);
  return rat_to_integer(BigRat(count_aztec(n)) * rational_determinant(m),
                        "count_multi_dented_aztec");
}

BigInt count_augmented_aztec(int n, int i, int j) {
  check_range(i, 1, n, "count_augmented_aztec i");
  check_range(j, 1, n, "count_augmented_aztec j");
  auto d = delannoy_matrix(n + 1);
  return bareiss_determinant(d.without({(std::size_t)i}, {(std::size_t)j}));
}

BigInt count_hexagon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("count_hexagon: sides must be >= 0");
  BigRat r = 1;
  for (int i = 0; i < a; ++i)
    r *= pochhammer(BigRat(b + i + 1), c) / pochhammer(BigRat(1 + i), c);
  return rat_to_integer(r, "count_hexagon");
}

BigRat dented_hexagon_ratio(int a, int b, int c, int i, int j) {
  check_range(i, 1, a, "dented_hexagon_ratio i");
  check_range(j, 1, b, "dented_hexagon_ratio j");
  BigRat pre = pochhammer(BigRat(b), a) / pochhammer(BigRat(b + c), a);
  pre *= pochhammer(BigRat(1 + c), a - i) * pochhammer(BigRat(i), j - 1) *
         pochhammer(BigRat(1 + b - j), j - 1);
  pre /= pochhammer(BigRat(1), a - i) * pochhammer(BigRat(1), j - 1) *
         pochhammer(BigRat(1 + b + c - j), j - 1);
  HyperSeries s{{BigRat(i - a), BigRat(j - b), BigRat(c)}, {BigRat(1 - a - b), BigRat(1 + c)}};
  return pre * evaluate_terminating(s);
}

BigInt count_dented_hexagon(int a, int b, int c, int i, int j) {
  return rat_to_integer(BigRat(count_hexagon(a, b, c)) * dented_hexagon_ratio(a, b, c, i, j),
                        "count_dented_hexagon");
}

BigInt count_multi_dented_hexagon(int a, int b, int c, const std::vector<int>& north,
                                  const std::vector<int>& ne) {
  if (north.size() != ne.size())
    throw DomainError("count_multi_dented_hexagon: dent sets must have equal size");
  return lgv_count(build_hexagon(a, b, c, north, ne, false));
}

// Both opposite-dent forms fold their Pochhammer prefactors into the series
// term by term, so the zero-times-pole pairs that appear when j > b or
// i + j >= a + 2 cancel exactly instead of being evaluated separately.
BigRat opposite_hexagon_ratio_first_form(int a, int b, int c, int i, int j) {
  check_range(i, 1, a, "opposite_hexagon_ratio i");
  check_range(j, 1, a, "opposite_hexagon_ratio j");
  BigRat base = pochhammer(BigRat(a), b) * pochhammer(BigRat(c), j - 1);
  base /= pochhammer(BigRat(a + c), b) * pochhammer(BigRat(1), i - 1) *
          pochhammer(BigRat(1), j - 1) * pochhammer(BigRat(1 + a + c - i), i - 1) *
          pochhammer(BigRat(1 + a + b - j), j - 1);
  const long long n = std::min(i, j) - 1;
  BigRat total = 0, term = 1;
  for (long long k = 0; k <= n; ++k) {
    BigRat t = term;
    t *= pochhammer(BigRat(1 + b - j + k), i - 1 - k);
    t *= pochhammer(BigRat(2 + a - i - j + k), i + j - 2 - k);
    total += t;
    if (k == n) break;
    BigRat num = BigRat(1 - j + k) * BigRat(1 - c - j + k) * BigRat(1 + a + b - j + k) *
                 BigRat(1 - i + k);
    BigRat den = BigRat(k + 1) * BigRat(2 - c - j + k);
    if (den == 0)
      throw InternalError("opposite_hexagon_ratio_first_form: unexpected pole");
    term *= num / den;
  }
  return base * total;
}

BigRat opposite_hexagon_ratio_second_form(int a, int b, int c, int i, int j) {
  check_range(i, 1, a, "opposite_hexagon_ratio i");
  check_range(j, 1, a, "opposite_hexagon_ratio j");
  BigRat base = pochhammer(BigRat(a), b) * pochhammer(BigRat(c), j - 1) *
                pochhammer(BigRat(1 + a - j), j - 1) * pochhammer(BigRat(b), i - 1) *
                pochhammer(BigRat(1 + a - i), i - 1);
  base /= pochhammer(BigRat(a + c), b) * pochhammer(BigRat(1), i - 1) *
          pochhammer(BigRat(1), j - 1) * pochhammer(BigRat(1 + a + c - i), i - 1) *
          pochhammer(BigRat(1 + a + b - j), j - 1);
  HyperSeries s{{BigRat(1 - i), BigRat(1 - j), BigRat(1), BigRat(1 - a - b - c)},
                {BigRat(2 - c - j), BigRat(2 - b - i), BigRat(1 - a)}};
  return base * evaluate_terminating(s);
}

BigInt count_opposite_dented_hexagon(int n, int i, int j) {
  BigRat first = opposite_hexagon_ratio_first_form(n, n, n, i, j);
  BigRat second = opposite_hexagon_ratio_second_form(n, n, n, i, j);
  if (first != second)
    throw InternalError("count_opposite_dented_hexagon: transformed series disagree");
  return rat_to_integer(BigRat(count_hexagon(n, n, n)) * first, "count_opposite_dented_hexagon");
}

BigInt lgv_count(const AztecRegion& r) {
  if (!r.balanced()) throw DomainError("lgv_count: unbalanced dent sets (untileable)");
  const int n = r.order;
  if (r.plain() || r.augmented) {
    auto e = lgv_endpoints(r);
    const size_t m = e.starts.size();
    Matrix<BigInt> pm(m, m);
    for (size_t s = 0; s < m; ++s)
      for (size_t t = 0; t < m; ++t)
        pm(s, t) = pairwise_path_count(e.geometry, e.starts[s], e.ends[t]);
    return bareiss_determinant(pm);
  }
  // Dented diamonds have no direct nonintersecting-path determinant (families
  // can sweep across the dents), but adding the dual squares one order down
  // does: the count is 2^{n-k} times the Delannoy minor with the dent rows
  // and columns deleted.
  const size_t k = r.sw_dents.size();
  if ((int)k > n) throw DomainError("lgv_count: more dents than boundary cells");
  auto d = delannoy_matrix(n);
  std::vector<std::size_t> dr, dc;
  for (int i : r.sw_dents) dr.push_back(i - 1);
  for (int j : r.se_dents) dc.push_back(j - 1);
  BigInt det = bareiss_determinant(d.without(dr, dc));
  if (det < 0) throw InternalError("lgv_count: negative minor determinant");
  return det * pow2(n - (long long)k);
}

BigInt lgv_count(const HexRegion& r) {
  if (!r.balanced()) throw DomainError("lgv_count: unbalanced dent sets (untileable)");
  auto e = lgv_endpoints(r);
  const size_t m = e.starts.size();
  Matrix<BigInt> pm(m, m);
  for (size_t s = 0; s < m; ++s)
    for (size_t t = 0; t < m; ++t)
      pm(s, t) = pairwise_path_count(e.geometry, e.starts[s], e.ends[t]);
  BigInt det = bareiss_determinant(pm);
  // endpoint interleaving along the boundary decides the sign of the
  // connecting permutation; the count is the magnitude
  return det < 0 ? BigInt(-det) : det;
}

std::string ratio_sweep_csv(const std::vector<int>& orders, int i, int j, int digits) {
  std::ostringstream out;
  out << "n,i,j,ratio\n";
  for (int n : orders) {
    if (i > n || j > n) continue;
    out << n << "," << i << "," << j << "," << decimal_string(ratio_sum(n, i, j), digits) << "\n";
  }
  return out.str();
}

}  // namespace dentile
