/* Copyright 2026 The Dentile Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* dentile: exact enumeration and asymptotics of domino tilings of dented
 * Aztec diamonds and lozenge tilings of dented hexagons.
 *
 * All functions return a status code:
 *   0  success
 *   2  domain error (bad parameters, untileable region)
 *   3  internal invariant violation
 * On failure dentile_last_error() describes the problem (thread local).
 * Strings returned through out-parameters are heap allocated; release them
 * with dentile_free(). Counts are decimal strings, never truncated integers.
 */

#ifndef DENTILE_H
#define DENTILE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DENTILE_OK 0
#define DENTILE_ERR_DOMAIN 2
#define DENTILE_ERR_INTERNAL 3

typedef struct dentile_region dentile_region;

const char* dentile_last_error(void);
void dentile_free(void* ptr);

/* ---- regions ------------------------------------------------------- */

/* Aztec diamond of the given order; dents are 1-based boundary positions
 * counted bottom to top on the southwestern (sw) and southeastern (se)
 * sides. augmented != 0 builds the square-adding variant instead. */
int dentile_region_aztec(int order, const int* sw, size_t n_sw, const int* se, size_t n_se,
                         int augmented, dentile_region** out);

/* Hexagon with sides a,b,c (clockwise from the top). Dents: north side
 * counted right to left; second side is the northeastern side counted top to
 * bottom, or the bottom side counted right to left when opposite != 0. */
int dentile_region_hexagon(int a, int b, int c, const int* north, size_t n_north,
                           const int* second, size_t n_second, int opposite,
                           dentile_region** out);

void dentile_region_release(dentile_region* r);

/* JSON document {kind, n|a,b,c, dents, cells}. */
int dentile_region_json(const dentile_region* r, char** out_json);

/* Dual graph summary. */
int dentile_region_dual_size(const dentile_region* r, long long* out_vertices,
                             long long* out_edges);

/* ---- exact counts --------------------------------------------------- */

typedef enum {
  DENTILE_METHOD_CLOSED_FORM = 0, /* product / ratio formulas */
  DENTILE_METHOD_LGV = 1,         /* nonintersecting-path determinant route */
  DENTILE_METHOD_ORACLE = 2       /* brute-force matching enumeration */
} dentile_count_method;

/* Exact tiling count of the region by the chosen method, as a JSON document
 * {region, count, method} with the count in decimal. */
int dentile_count_json(const dentile_region* r, dentile_count_method method, char** out_json);

/* Exact dented-to-plain ratio for the order-n Aztec diamond, rendered with
 * the given number of significant digits, plus the exact fraction. */
int dentile_aztec_ratio(int n, int i, int j, int digits, char** out_decimal,
                        char** out_fraction);

/* Delannoy number D(k,l) as a decimal string. */
int dentile_delannoy(long long k, long long l, char** out_decimal);

/* ---- regime classification and asymptotics -------------------------- */

typedef enum {
  DENTILE_REGIME_OUTSIDE = 0,
  DENTILE_REGIME_CROSSING = 1,
  DENTILE_REGIME_CRITICAL = 2
} dentile_regime;

int dentile_classify_aztec(double a, double b, dentile_regime* out_regime,
                           double* out_discriminant, double* out_log_limit);
int dentile_classify_hexagon(double A, double B, double C, double alpha, double beta,
                             dentile_regime* out_regime, double* out_discriminant,
                             double* out_log_limit);

/* log of the finite-n ratio asymptotics (refuses in the critical regime). */
int dentile_aztec_ratio_asymptotic_log(long long n, double a, double b, double* out_log);
int dentile_hexagon_ratio_asymptotic_log(long long n, double A, double B, double C, double alpha,
                                         double beta, double* out_log);

/* Entropy-difference surfaces and multi-dent entropy sums. */
int dentile_aztec_log_limit(double a, double b, double* out_f);
int dentile_aztec_entropy_diff(const double* alphas, const double* betas, size_t k,
                               double* out_value);
int dentile_hexagon_entropy_diff(double A, double B, double C, const double* alphas,
                                 const double* betas, size_t k, double* out_value);

/* CSV exports: the log-limit surface grid (a,b,f,regime) and the critical
 * curve (a,b,residual). */
int dentile_log_limit_grid_csv(int resolution, char** out_csv);
int dentile_critical_curve_csv(int samples, char** out_csv);

/* Exact middle-dent ratio sequence on regular hexagons (adjacent over
 * opposite dent placement), one double per requested order. */
int dentile_tem_ratios(const int* n_list, size_t count, double* out_ratios);

/* ---- concentration experiments -------------------------------------- */

/* steps: n_steps x dim row-major matrix. eps is a rational eps_num/eps_den.
 * CSV rows: k, |w|, fraction_num, fraction_den, log_fraction. The fitted
 * decay slope is written to out_c1 (0 when every fraction is zero). */
int dentile_concentration_csv(const long long* steps, size_t n_steps, size_t dim,
                              const long long* direction, const long long* k_values,
                              size_t n_k, long long eps_num, long long eps_den, char** out_csv,
                              double* out_c1);

/* ---- sampling -------------------------------------------------------- */

/* Random tiling by the two-by-two rotation chain; deterministic in
 * (region, flips, seed). SVG includes the seed in metadata; show_paths
 * overlays the nonintersecting-path encoding. */
int dentile_sample_svg(const dentile_region* r, uint64_t flips, uint64_t seed, int show_paths,
                       char** out_svg);

/* Frozen-region statistics of a sampled tiling: JSON with per-corner-sector
 * match fractions outside the given radius (as a fraction of the order). */
int dentile_frozen_stats_json(const dentile_region* r, uint64_t flips, uint64_t seed,
                              double radius_fraction, char** out_json);

/* ---- verification ----------------------------------------------------- */

/* Runs a named verify suite ("all", "aztec", "hexagon", "matrices",
 * "hypergeom", "asymptotics", "concentration", "sampler"); returns the
 * pass/fail table as text and the number of failed checks. */
int dentile_verify(const char* suite, char** out_report, int* out_failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DENTILE_H */
