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

#include "verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "asymptotics.hpp"
#include "exact_counts.hpp"
#include "hypergeom.hpp"
#include "oracle.hpp"
#include "path_numbers.hpp"
#include "sampler.hpp"

namespace dentile {

namespace {

struct Collector {
  std::string suite;
  std::vector<CheckResult>& out;
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({suite, name, ok, detail});
  }
};

void suite_aztec(Collector& c) {
  bool closed_ok = true, lgv_ok = true, augmented_ok = true, relation_ok = true;
  for (int n = 1; n <= 4 && (closed_ok || lgv_ok); ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        BigInt oracle = count_matchings(dual_graph(build_aztec(n, {i}, {j}, false)));
        if (count_dented_aztec(n, i, j) != oracle) closed_ok = false;
        if (lgv_count(build_aztec(n, {i}, {j}, false)) != oracle) lgv_ok = false;
        BigInt aug = count_matchings(dual_graph(build_aztec(n, {i}, {j}, true)));
        if (count_augmented_aztec(n, i, j) != aug) augmented_ok = false;
        if (count_dented_aztec(n + 1, i + 1, j + 1) != pow2(n) * aug) relation_ok = false;
      }
  }
  c.check("dented counts = matching oracle (n<=4)", closed_ok);
  c.check("determinant route = matching oracle (n<=4)", lgv_ok);
  c.check("augmented minor = matching oracle (n<=4)", augmented_ok);
  c.check("augment/dent doubling relation (n<=4)", relation_ok);
  bool plain_ok = true;
  for (int n = 1; n <= 12; ++n)
    if (lgv_count(build_aztec(n, {}, {}, false)) != count_aztec(n)) plain_ok = false;
  c.check("plain determinant = closed form (n<=12)", plain_ok);
  bool multi_ok = true;
  for (int n = 2; n <= 4; ++n)
    for (int i2 = 2; i2 <= n; ++i2)
      for (int j2 = 2; j2 <= n; ++j2) {
        std::vector<int> I{1, i2}, J{1, j2};
        BigInt oracle = count_matchings(dual_graph(build_aztec(n, I, J, false)));
        if (count_multi_dented_aztec(n, I, J) != oracle) multi_ok = false;
        if (lgv_count(build_aztec(n, I, J, false)) != oracle) multi_ok = false;
      }
  c.check("k=2 dents, determinant and series routes = oracle (n<=4)", multi_ok);
}

void suite_hexagon(Collector& c) {
  bool plain_ok = true, dent_ok = true, lgv_ok = true, opp_ok = true;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int cc = 1; cc <= 3; ++cc) {
        if (count_hexagon(a, b, cc) !=
            count_matchings(dual_graph(build_hexagon(a, b, cc, {}, {}, false))))
          plain_ok = false;
        for (int i = 1; i <= a; ++i) {
          for (int j = 1; j <= b; ++j) {
            auto region = build_hexagon(a, b, cc, {i}, {j}, false);
            BigInt oracle = count_matchings(dual_graph(region));
            if (count_dented_hexagon(a, b, cc, i, j) != oracle) dent_ok = false;
            if (lgv_count(region) != oracle) lgv_ok = false;
          }
          for (int j = 1; j <= a; ++j) {
            auto region = build_hexagon(a, b, cc, {i}, {j}, true);
            BigInt oracle = count_matchings(dual_graph(region));
            BigRat ratio = opposite_hexagon_ratio_first_form(a, b, cc, i, j);
            if (BigRat(count_hexagon(a, b, cc)) * ratio != BigRat(oracle)) opp_ok = false;
            if (lgv_count(region) != oracle) opp_ok = false;
          }
        }
      }
  c.check("MacMahon product = matching oracle (sides<=3)", plain_ok);
  c.check("dent ratio formula = matching oracle (sides<=3)", dent_ok);
  c.check("dented determinant = matching oracle (sides<=3)", lgv_ok);
  c.check("opposite-dent forms = matching oracle (sides<=3)", opp_ok);
  bool sears_ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (opposite_hexagon_ratio_first_form(n, n, n, i, j) !=
            opposite_hexagon_ratio_second_form(n, n, n, i, j))
          sears_ok = false;
  c.check("transformed series forms agree (n<=5)", sears_ok);
}

void suite_matrices(Collector& c) {
  bool fact = true;
  for (int n : {1, 2, 3, 8, 16, 32})
    if (!factorization_check(n)) fact = false;
  c.check("Delannoy factorization (n<=32)", fact);
  bool det_ok = true;
  for (int n = 1; n <= 16; ++n)
    if (bareiss_determinant(delannoy_matrix(n + 1)) != count_aztec(n)) det_ok = false;
  c.check("det of order-(n+1) matrix = 2^{n(n+1)/2} (n<=16)", det_ok);
  bool inv_ok = true;
  for (int n : {1, 2, 3, 6, 10}) {
    auto exact = delannoy_inverse_exact(n);
    for (int i = 0; i < n && inv_ok; ++i)
      for (int j = 0; j < n && inv_ok; ++j)
        if (exact(i, j) != delannoy_inverse_entry(n, i, j)) inv_ok = false;
  }
  c.check("closed-form inverse = eliminated inverse (n<=10)", inv_ok);
  bool pasc = true;
  for (int n : {2, 5, 20, 50}) {
    auto prod = pascal_lower(n) * pascal_lower_inverse(n);
    if (!(prod == Matrix<BigInt>::identity(n))) pasc = false;
  }
  c.check("binomial matrix inverse (n<=50)", pasc);
}

void suite_hypergeom(Collector& c) {
  bool sears_ok = true;
  // integer parameter sweep, poles skipped
  int tried = 0;
  for (int a = -3; a <= 3; ++a)
    for (int e = -3; e <= 3; ++e)
      for (int f = -3; f <= 3; ++f)
        for (int n : {0, 1, 2, 3}) {
          try {
            if (!sears_transform_check(a, 1, -2, e, f, n)) sears_ok = false;
            ++tried;
          } catch (const DomainError&) {
          }
        }
  c.check("balanced transformation on integer sweep (" + std::to_string(tried) + " cases)",
          sears_ok && tried > 100);
  bool poch_ok = pochhammer(BigRat(2), 3) == 24 && pochhammer(BigRat(-2), 3) == 0 &&
                 pochhammer(BigRat(7, 2), 0) == 1;
  c.check("rising factorial basics", poch_ok);
}

void suite_asymptotics(Collector& c) {
  bool saddle_ok = true;
  for (int t = 1; t < 20; ++t) {
    double a = t / 21.0, b = 1 - t / 23.0;
    double s = std::hypot(a, b);
    if (std::abs(2 * (a + s) * (b + s) - (a + b + s) * (a + b + s)) > 1e-12) saddle_ok = false;
  }
  c.check("saddle identity to 1e-12", saddle_ok);
  bool agree_ok = true;
  for (int u = 1; u < 40; ++u)
    for (int v = 1; v < 40; ++v) {
      double a = u / 40.0, b = v / 40.0;
      if (std::abs((1 - a) * (1 - b) - 0.5) < 1e-6) continue;
      try {
        classify_aztec(a, b);
      } catch (const InternalError&) {
        agree_ok = false;
      }
    }
  c.check("algebraic vs segment-distance classification on a grid", agree_ok);
  bool cont_ok = true;
  for (int t = 1; t < 100; ++t) {
    double a = 0.5 * t / 100.0;
    double b = 1 - 0.5 / (1 - a);
    if (b <= 0 || b >= 1) continue;
    if (std::abs(aztec_log_limit_branch(a, b, true) - aztec_log_limit_branch(a, b, false)) > 1e-9)
      cont_ok = false;
  }
  c.check("branch continuity on the boundary hyperbola", cont_ok);
  bool curve_ok = true;
  for (const auto& p : critical_curve(64))
    if (std::abs(p.residual) > 1e-9) curve_ok = false;
  c.check("critical curve residuals < 1e-9", curve_ok);
  bool uv_ok = true;
  for (int t = 1; t < 10; ++t) {
    double al = t / 10.0, be = 1 - t / 11.0;
    double disc = (1 - al) * (1 - be) - (al + be);  // A=B=C=1
    if (disc >= 0) continue;
    auto coeff = hexagon_comparison_bases(1, 1, 1, al, be);
    if (!(coeff.log_v < coeff.log_u)) uv_ok = false;
  }
  c.check("crossing regime orders the comparison bases", uv_ok);
}

void suite_concentration(Collector& c) {
  StepSet dl({{1, 0}, {0, 1}, {1, 1}});
  bool dp_ok = true;
  for (int k = 0; k <= 8 && dp_ok; ++k)
    for (int l = 0; l <= 8 && dp_ok; ++l)
      if (count_paths_dp(dl, {k, l}) != delannoy(k, l)) dp_ok = false;
  c.check("path DP matches Delannoy numbers (k,l<=8)", dp_ok);
  auto f1 = deviation_fraction(dl, {1, 1}, BigRat(1, 10)).fraction();
  auto f2 = deviation_fraction(dl, {1, 1}, BigRat(6, 10)).fraction();
  c.check("unit-endpoint deviation fractions", f1 == BigRat(2, 3) && f2 == 0);
  bool mono_ok = true;
  BigRat prev = -1;
  for (int denom : {2, 3, 4, 6, 10}) {  // eps = 1/denom increasing denom -> shrinking tube
    auto f = deviation_fraction(dl, {6, 6}, BigRat(1, denom)).fraction();
    if (prev >= 0 && f < prev) mono_ok = false;
    prev = f;
  }
  c.check("fractions nonincreasing in the tube width", mono_ok);
}

void suite_sampler(Collector& c) {
  auto region = build_aztec(2, {}, {}, false);
  FlipChain chain(initial_tiling(region));
  std::mt19937_64 rng(splitmix64(11));
  std::map<std::string, int> seen;
  for (int s = 0; s < 10000; ++s) {
    chain.flip_step(rng);
    seen[chain.tiling.key()]++;
  }
  c.check("order-2 chain visits all 8 tilings in 1e4 steps", (int)seen.size() == 8);
  bool keep_ok = true;
  auto t = initial_tiling(build_aztec(4, {2}, {3}, false));
  FlipChain ch2(std::move(t));
  std::mt19937_64 rng2(splitmix64(12));
  for (int s = 0; s < 20000 && keep_ok; ++s) {
    ch2.flip_step(rng2);
    if (s % 500 == 0 && !ch2.tiling.valid()) keep_ok = false;
  }
  c.check("flips preserve the matching", keep_ok && ch2.tiling.valid());
  bool enc_ok = true;
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Tiling smp = sample(build_aztec(8, {2}, {4}, false), 20000, seed);
    PathFamily fam = encode_paths(smp);
    if (fam.paths.size() != 9) enc_ok = false;
    std::set<LatticePoint> used;
    for (const auto& p : fam.paths)
      for (const auto& pt : p)
        if (!used.insert(pt).second) enc_ok = false;
  }
  c.check("path encoding is disjoint with 9 paths on the dented order-8 diamond", enc_ok);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"aztec", "hexagon", "matrices", "hypergeom", "asymptotics", "concentration", "sampler"};
}

std::vector<CheckResult> run_verify_suite(const std::string& name) {
  std::vector<CheckResult> out;
  std::map<std::string, std::function<void(Collector&)>> suites{
      {"aztec", suite_aztec},           {"hexagon", suite_hexagon},
      {"matrices", suite_matrices},     {"hypergeom", suite_hypergeom},
      {"asymptotics", suite_asymptotics}, {"concentration", suite_concentration},
      {"sampler", suite_sampler}};
  if (name == "all") {
    for (const auto& n : verify_suite_names()) {
      Collector c{n, out};
      suites.at(n)(c);
    }
    return out;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw DomainError("unknown verify suite: " + name);
  Collector c{name, out};
  it->second(c);
  return out;
}

std::string format_check_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t w = 0;
  for (const auto& r : results) w = std::max(w, r.suite.size() + r.name.size() + 3);
  int failed = 0;
  for (const auto& r : results) {
    std::string label = r.suite + " | " + r.name;
    out << (r.passed ? "PASS  " : "FAIL  ") << label;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace dentile
