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

#ifndef DENTILE_ASYMPTOTICS_HPP
#define DENTILE_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "numeric.hpp"

namespace dentile {

enum class Regime { Outside, Crossing, Critical };

const char* regime_name(Regime r);

// |discriminant| below this is reported Critical, and the asymptotic-formula
// operations refuse: no closed form applies on the boundary itself.
inline constexpr double kCriticalTolerance = 1e-9;

struct RegimeReport {
  enum class Geometry { AztecSquare, Hexagon } geometry;
  double discriminant = 0.0;
  Regime classification = Regime::Critical;
  double prediction = 0.0;  // log-limit value at the given parameters
  std::string json() const;
};

// Aztec dichotomy: Outside iff (1-a)(1-b) > 1/2, equivalently the segment
// [(a,0),(0,b)] avoids the circle inscribed in the unit square. Both tests
// are computed; they must agree outside the critical band.
RegimeReport classify_aztec(double a, double b);
double segment_to_center_distance(double a, double b);

// Saddle data for the ratio series (exponential rate d, linear and quadratic
// Gaussian coefficients e and f, saddle location t0) plus the two comparison
// bases of the hexagon dichotomy proof in log form.
struct AsymptoticCoefficients {
  double d, e, f, t0;
  double log_u = 0.0, log_v = 0.0;
};
AsymptoticCoefficients aztec_saddle_coefficients(double a, double b);
AsymptoticCoefficients hexagon_comparison_bases(double A, double B, double C, double alpha,
                                                double beta);

// log of the two-regime ratio asymptotic at finite n (prefactor included).
double aztec_ratio_asymptotic_log(long long n, double a, double b);

// Entropy-difference surface f(a,b); branch chosen by regime, either at the
// boundary. aztec_log_limit_branch evaluates a specific branch for the
// continuity checks.
double aztec_log_limit(double a, double b);
double aztec_log_limit_branch(double a, double b, bool outside_branch);

struct CurvePoint {
  double a, b, residual;
};
// The level curve along which dented and plain diamonds share log-asymptotics:
// the two axis segments plus the bisection solutions of
// 2 a^a b^b (1-a)^{1-a} (1-b)^{1-b} = 1 with a > 1/2 or b > 1/2.
std::vector<CurvePoint> critical_curve(int samples);
std::string critical_curve_csv(int samples);

struct GridRow {
  double a, b, f;
  Regime regime;
};
std::vector<GridRow> log_limit_grid(int resolution);
std::string log_limit_grid_csv(int resolution);

// Multi-dent product asymptotics (log) and the entropy difference
// -sum_i log 2 a_i^{a_i} (1-a_i)^{1-a_i} b_i^{b_i} (1-b_i)^{1-b_i}.
// Requires every dent pair in the Crossing regime.
double multi_dent_aztec_asymptotic_log(long long n, const std::vector<double>& alphas,
                                       const std::vector<double>& betas);
double aztec_entropy_diff(const std::vector<double>& alphas, const std::vector<double>& betas);

// Hexagon side: scaled sides A,B,C with dent fractions alpha, beta.
RegimeReport classify_hexagon(double A, double B, double C, double alpha, double beta);
double hexagon_ratio_asymptotic_log(long long n, double A, double B, double C, double alpha,
                                    double beta);
// log asymptotic of the binomial C(i+j-2, i-1) under the same scaling.
double binomial_asymptotic_log(long long n, double x, double y);
double hexagon_log_limit(double A, double B, double C, double alpha, double beta);
double hexagon_multi_dent_log(long long n, double A, double B, double C,
                              const std::vector<double>& alphas, const std::vector<double>& betas);
double hexagon_entropy_diff(double A, double B, double C, const std::vector<double>& alphas,
                            const std::vector<double>& betas);

// Exact adjacent-over-opposite middle-dent ratios on regular hexagons.
std::vector<double> tem_limit_check(const std::vector<int>& n_list);

}  // namespace dentile

#endif  // DENTILE_ASYMPTOTICS_HPP
