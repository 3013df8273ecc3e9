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

#include "asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "exact_counts.hpp"
#include "json.hpp"

namespace dentile {

namespace {

constexpr double kPi = 3.14159265358979323846;

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// F(x) = -x log x, the entropy building block of the hexagon limits.
double entropy_f(double x) { return -xlogx(x); }

void check_unit(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError(std::string(what) + ": parameter outside (0,1)");
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainError(std::string(what) + ": parameter must be positive");
}

Regime regime_of(double discriminant) {
  if (std::abs(discriminant) < kCriticalTolerance) return Regime::Critical;
  return discriminant > 0 ? Regime::Outside : Regime::Crossing;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Outside: return "Outside";
    case Regime::Crossing: return "Crossing";
    case Regime::Critical: return "Critical";
  }
  return "?";
}

std::string RegimeReport::json() const {
  nlohmann::json j;
  j["geometry"] = geometry == Geometry::AztecSquare ? "aztec" : "hexagon";
  j["discriminant"] = discriminant;
  j["classification"] = regime_name(classification);
  j["prediction"] = prediction;
  return j.dump();
}

double segment_to_center_distance(double a, double b) {
  // distance from (1/2, 1/2) to the segment [(a,0), (0,b)]
  const double px = 0.5, py = 0.5;
  const double dx = -a, dy = b;  // direction (a,0) -> (0,b)
  double t = ((px - a) * dx + py * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  double qx = a + t * dx, qy = t * dy;
  return std::hypot(px - qx, py - qy);
}

RegimeReport classify_aztec(double a, double b) {
  check_unit(a, "classify_aztec a");
  check_unit(b, "classify_aztec b");
  RegimeReport r;
  r.geometry = RegimeReport::Geometry::AztecSquare;
  r.discriminant = (1 - a) * (1 - b) - 0.5;
  r.classification = regime_of(r.discriminant);
  r.prediction = aztec_log_limit(a, b);
  if (r.classification != Regime::Critical) {
    bool outside_geom = segment_to_center_distance(a, b) > 0.5;
    if (outside_geom != (r.classification == Regime::Outside))
      throw InternalError("classify_aztec: algebraic and geometric tests disagree");
  }
  return r;
}

AsymptoticCoefficients aztec_saddle_coefficients(double a, double b) {
  check_unit(a, "aztec_saddle a");
  check_unit(b, "aztec_saddle b");
  AsymptoticCoefficients c{};
  double s = std::hypot(a, b);
  c.t0 = a + b + s;
  c.d = -xlogx(a) - xlogx(b) + b * std::log(a + s) + a * std::log(b + s);
  c.e = -s / (c.t0 * c.t0);
  c.f = s / (c.t0 * c.t0);
  return c;
}

double aztec_ratio_asymptotic_log(long long n, double a, double b) {
  check_unit(a, "aztec_ratio_asymptotic a");
  check_unit(b, "aztec_ratio_asymptotic b");
  double disc = (1 - a) * (1 - b) - 0.5;
  if (std::abs(disc) < kCriticalTolerance)
    throw DomainError("aztec_ratio_asymptotic: no closed form in the critical regime");
  double s = std::hypot(a, b);
  if (disc > 0) {
    // exponential base log: (a+s)^b (b+s)^a / (a^a b^b)
    double rate = b * std::log(a + s) + a * std::log(b + s) - xlogx(a) - xlogx(b);
    return std::log(a + b + s) - std::log(2.0) - 0.5 * std::log(2 * kPi * n) -
           0.5 * std::log(a * b * s) + n * rate;
  }
  double rate = -(std::log(2.0) + xlogx(a) + xlogx(b) + xlogx(1 - a) + xlogx(1 - b));
  return 0.5 * std::log((1 - a) * (1 - b)) - std::log(4 * kPi * n) - 0.5 * std::log(a * b) -
         std::log(0.5 - (1 - a) * (1 - b)) + n * rate;
}

double aztec_log_limit_branch(double a, double b, bool outside_branch) {
  if (outside_branch) {
    double s = std::hypot(a, b);
    return b * std::log(a / b + s / b) + a * std::log(b / a + s / a);
  }
  return -(std::log(2.0) + xlogx(a) + xlogx(b) + xlogx(1 - a) + xlogx(1 - b));
}

double aztec_log_limit(double a, double b) {
  check_unit(a, "aztec_log_limit a");
  check_unit(b, "aztec_log_limit b");
  double disc = (1 - a) * (1 - b) - 0.5;
  return aztec_log_limit_branch(a, b, disc > 0);
}

std::vector<CurvePoint> critical_curve(int samples) {
  if (samples < 2) throw DomainError("critical_curve: samples must be >= 2");
  std::vector<CurvePoint> pts;
  auto h = [](double x) { return xlogx(x) + xlogx(1 - x); };  // log(x^x (1-x)^{1-x})
  auto residual = [&](double a, double b) { return std::log(2.0) + h(a) + h(b); };
  // the two axis segments
  for (int t = 0; t < samples; ++t) {
    double v = 0.5 * t / (samples - 1);
    pts.push_back({v, 0.0, 0.0});
    pts.push_back({0.0, v, 0.0});
  }
  // curvilinear part: for a in (1/2, 1), solve log 2 + h(a) + h(b) = 0 on
  // b in (0, 1/2]; h is decreasing there, so bisection brackets cleanly.
  for (int t = 0; t < samples; ++t) {
    double a = 0.5 + 0.5 * (t + 0.5) / samples;
    double target = -(std::log(2.0) + h(a));
    double lo = 1e-15, hi = 0.5;
    if (h(lo) < target) continue;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (h(mid) >= target ? lo : hi) = mid;
      if (hi - lo < 1e-12) break;
    }
    double b = 0.5 * (lo + hi);
    pts.push_back({a, b, residual(a, b)});
    pts.push_back({a, 1 - b, residual(a, 1 - b)});
    pts.push_back({b, a, residual(b, a)});
    pts.push_back({1 - b, a, residual(1 - b, a)});
  }
  return pts;
}

std::string critical_curve_csv(int samples) {
  std::ostringstream out;
  out << "a,b,residual\n";
  for (const auto& p : critical_curve(samples))
    out << p.a << "," << p.b << "," << p.residual << "\n";
  return out.str();
}

std::vector<GridRow> log_limit_grid(int resolution) {
  if (resolution < 8) throw DomainError("log_limit_grid: resolution must be >= 8");
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      double a = (i + 0.5) / resolution, b = (j + 0.5) / resolution;
      double disc = (1 - a) * (1 - b) - 0.5;
      rows.push_back({a, b, aztec_log_limit(a, b), regime_of(disc)});
    }
  return rows;
}

std::string log_limit_grid_csv(int resolution) {
  std::ostringstream out;
  out << "a,b,f,regime\n";
  for (const auto& r : log_limit_grid(resolution))
    out << r.a << "," << r.b << "," << r.f << "," << regime_name(r.regime) << "\n";
  return out.str();
}

namespace {

void check_dent_fractions(const std::vector<double>& alphas, const std::vector<double>& betas,
                          const char* what) {
  if (alphas.size() != betas.size() || alphas.empty())
    throw DomainError(std::string(what) + ": dent fraction lists must be nonempty, equal size");
  for (size_t t = 0; t < alphas.size(); ++t) {
    check_unit(alphas[t], what);
    check_unit(betas[t], what);
    if (t > 0 && (alphas[t] <= alphas[t - 1] || betas[t] <= betas[t - 1]))
      throw DomainError(std::string(what) + ": dent fractions must be strictly increasing");
  }
}

}  // namespace

double multi_dent_aztec_asymptotic_log(long long n, const std::vector<double>& alphas,
                                       const std::vector<double>& betas) {
  check_dent_fractions(alphas, betas, "multi_dent_aztec_asymptotic");
  const size_t k = alphas.size();
  for (double a : alphas)
    for (double b : betas)
      if ((1 - a) * (1 - b) - 0.5 > -kCriticalTolerance)
        throw DomainError(
            "multi_dent_aztec_asymptotic: every dent pair must be in the Crossing regime");
  double v = -0.5 * k * (k - 1) * std::log(2.0) - double(k) * std::log(4 * kPi * n);
  for (size_t t = 0; t < k; ++t) {
    double a = alphas[t], b = betas[t];
    v += 0.5 * (std::log(1 / a - 1) + std::log(1 / b - 1));
    v -= n * (std::log(2.0) + xlogx(a) + xlogx(1 - a) + xlogx(b) + xlogx(1 - b));
  }
  for (size_t s = 0; s < k; ++s)
    for (size_t t = s + 1; t < k; ++t)
      v += std::log(alphas[t] - alphas[s]) + std::log(betas[t] - betas[s]);
  for (size_t s = 0; s < k; ++s)
    for (size_t t = 0; t < k; ++t)
      v -= std::log(0.5 - (1 - alphas[s]) * (1 - betas[t]));
  return v;
}

double aztec_entropy_diff(const std::vector<double>& alphas, const std::vector<double>& betas) {
  check_dent_fractions(alphas, betas, "aztec_entropy_diff");
  double v = 0;
  for (size_t t = 0; t < alphas.size(); ++t) {
    double a = alphas[t], b = betas[t];
    if ((1 - a) * (1 - b) - 0.5 > -kCriticalTolerance)
      throw DomainError("aztec_entropy_diff: every dent pair must be in the Crossing regime");
    v -= std::log(2.0) + xlogx(a) + xlogx(1 - a) + xlogx(b) + xlogx(1 - b);
  }
  return v;
}

RegimeReport classify_hexagon(double A, double B, double C, double alpha, double beta) {
  check_positive(A, "classify_hexagon A");
  check_positive(B, "classify_hexagon B");
  check_positive(C, "classify_hexagon C");
  check_unit(alpha, "classify_hexagon alpha");
  check_unit(beta, "classify_hexagon beta");
  RegimeReport r;
  r.geometry = RegimeReport::Geometry::Hexagon;
  r.discriminant = (1 - alpha) * (1 - beta) * A * B - (alpha * A + beta * B) * C;
  r.classification = regime_of(r.discriminant);
  r.prediction = hexagon_log_limit(A, B, C, alpha, beta);
  return r;
}

AsymptoticCoefficients hexagon_comparison_bases(double A, double B, double C, double alpha,
                                                double beta) {
  AsymptoticCoefficients c{};
  double aA = alpha * A, bB = beta * B;
  c.log_u = xlogx((1 - alpha) * A) + xlogx((1 - beta) * B) + xlogx(A + B + C) + xlogx(C) -
            xlogx(A + B) - xlogx((1 - alpha) * A + C) - xlogx((1 - beta) * B + C);
  c.log_v = xlogx(aA + B) + xlogx(A + bB) - xlogx(A + B) - xlogx(aA + bB);
  return c;
}

double hexagon_ratio_asymptotic_log(long long n, double A, double B, double C, double alpha,
                                    double beta) {
  RegimeReport rep = classify_hexagon(A, B, C, alpha, beta);
  if (rep.classification == Regime::Critical)
    throw DomainError("hexagon_ratio_asymptotic: no closed form in the critical regime");
  double aA = alpha * A, bB = beta * B;
  if (rep.classification == Regime::Outside) {
    double rate = xlogx(aA + bB) - xlogx(aA) - xlogx(bB);
    return -0.5 * std::log(2 * kPi * n) + 0.5 * std::log(aA * bB / std::pow(aA + bB, 3)) +
           n * rate;
  }
  double pA = (1 - alpha) * A, pB = (1 - beta) * B;
  double rate = xlogx(pA + C) + xlogx(pB + C) + xlogx(aA + B) + xlogx(A + bB) - xlogx(aA) -
                xlogx(pA) - xlogx(bB) - xlogx(pB) - xlogx(A + B + C) - xlogx(C);
  double pref = -std::log(2 * kPi * n) - std::log((aA + bB) * C - pA * pB) +
                0.5 * std::log(aA * bB * (pA + C) * (pB + C) * (A + B + C) * C /
                               (pA * pB * (aA + B) * (A + bB)));
  return pref + n * rate;
}

double binomial_asymptotic_log(long long n, double x, double y) {
  check_positive(x, "binomial_asymptotic x");
  check_positive(y, "binomial_asymptotic y");
  double rate = xlogx(x + y) - xlogx(x) - xlogx(y);
  return -0.5 * std::log(2 * kPi * n) + 0.5 * std::log(x * y / std::pow(x + y, 3)) + n * rate;
}

double hexagon_log_limit(double A, double B, double C, double alpha, double beta) {
  double aA = alpha * A, bB = beta * B;
  double disc = (1 - alpha) * (1 - beta) * A * B - (aA + bB) * C;
  if (disc > 0) return entropy_f(aA) + entropy_f(bB) - entropy_f(aA + bB);
  // crossing branch, written through F(x) = -x log x over the perimeter
  // distances from each dent to its four nearest corners
  double pA = (1 - alpha) * A, pB = (1 - beta) * B;
  return entropy_f(A + B + C) + entropy_f(C) + entropy_f(aA) + entropy_f(pA) + entropy_f(bB) +
         entropy_f(pB) - entropy_f(aA + B) - entropy_f(pA + C) - entropy_f(A + bB) -
         entropy_f(pB + C);
}

double hexagon_multi_dent_log(long long n, double A, double B, double C,
                              const std::vector<double>& alphas,
                              const std::vector<double>& betas) {
  check_dent_fractions(alphas, betas, "hexagon_multi_dent");
  const size_t k = alphas.size();
  for (double al : alphas)
    for (double be : betas)
      if ((1 - al) * (1 - be) * A * B - (al * A + be * B) * C > -kCriticalTolerance)
        throw DomainError("hexagon_multi_dent: every dent pair must be in the Crossing regime");
  double v = -double(k) * std::log(2 * kPi * n);
  v += 0.5 * k * std::log((A + B + C) * C);
  v -= double(n) * k * (xlogx(A + B + C) + xlogx(C));
  for (size_t s = 0; s < k; ++s) {
    double aA = alphas[s] * A, pA = (1 - alphas[s]) * A;
    v += 0.5 * std::log(aA * (pA + C) / (pA * (aA + B)));
    v += n * (xlogx(pA + C) + xlogx(aA + B) - xlogx(aA) - xlogx(pA));
  }
  for (size_t t = 0; t < k; ++t) {
    double bB = betas[t] * B, pB = (1 - betas[t]) * B;
    v += 0.5 * std::log(bB * (pB + C) / (pB * (A + bB)));
    v += n * (xlogx(pB + C) + xlogx(A + bB) - xlogx(bB) - xlogx(pB));
  }
  // Cauchy-style determinant of 1/((a_s A + b_t B)C - (1-a_s)(1-b_t)AB)
  v -= double(k) * std::log(A * B);
  v += (0.5 * k * (k - 1)) * std::log(C * (A + B + C) / (A * B));
  for (size_t s = 0; s < k; ++s)
    for (size_t t = s + 1; t < k; ++t)
      v += std::log(alphas[t] - alphas[s]) + std::log(betas[t] - betas[s]);
  for (size_t s = 0; s < k; ++s)
    for (size_t t = 0; t < k; ++t) {
      double q = (alphas[s] * A + betas[t] * B) * C - (1 - alphas[s]) * (1 - betas[t]) * A * B;
      v -= std::log(q / (A * B));
    }
  return v;
}

double hexagon_entropy_diff(double A, double B, double C, const std::vector<double>& alphas,
                            const std::vector<double>& betas) {
  check_dent_fractions(alphas, betas, "hexagon_entropy_diff");
  double v = 0;
  for (size_t s = 0; s < alphas.size(); ++s) {
    double aA = alphas[s] * A, pA = (1 - alphas[s]) * A;
    double bB = betas[s] * B, pB = (1 - betas[s]) * B;
    if ((1 - alphas[s]) * (1 - betas[s]) * A * B - (aA + bB) * C > -kCriticalTolerance)
      throw DomainError("hexagon_entropy_diff: dent pairs must be in the Crossing regime");
    v += xlogx(pA + C) + xlogx(pB + C) + xlogx(aA + B) + xlogx(A + bB) - xlogx(aA) - xlogx(pA) -
         xlogx(bB) - xlogx(pB) - xlogx(A + B + C) - xlogx(C);
  }
  return v;
}

std::vector<double> tem_limit_check(const std::vector<int>& n_list) {
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 2) throw DomainError("tem_limit_check: n must be >= 2");
    int m = n / 2;
    BigRat adjacent = dented_hexagon_ratio(n, n, n, m, m);
    BigRat opposite = opposite_hexagon_ratio_first_form(n, n, n, m, m);
    out.push_back(std::exp(log_bigrat(adjacent) - log_bigrat(opposite)));
  }
  return out;
}

}  // namespace dentile
