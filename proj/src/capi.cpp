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

#include "dentile.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "asymptotics.hpp"
#include "exact_counts.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "path_numbers.hpp"
#include "sampler.hpp"
#include "verify.hpp"

using namespace dentile;

struct dentile_region {
  std::variant<AztecRegion, HexRegion> rep;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return DENTILE_OK;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return DENTILE_ERR_DOMAIN;
  } catch (const InternalError& e) {
    g_last_error = e.what();
    return DENTILE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DENTILE_ERR_INTERNAL;
  }
}

dentile_regime to_c_regime(Regime r) {
  switch (r) {
    case Regime::Outside: return DENTILE_REGIME_OUTSIDE;
    case Regime::Crossing: return DENTILE_REGIME_CROSSING;
    default: return DENTILE_REGIME_CRITICAL;
  }
}

}  // namespace

extern "C" {

const char* dentile_last_error(void) { return g_last_error.c_str(); }

void dentile_free(void* ptr) { std::free(ptr); }

int dentile_region_aztec(int order, const int* sw, size_t n_sw, const int* se, size_t n_se,
                         int augmented, dentile_region** out) {
  return guarded([&] {
    auto r = build_aztec(order, std::vector<int>(sw, sw + n_sw),
                         std::vector<int>(se, se + n_se), augmented != 0);
    *out = new dentile_region{std::move(r)};
  });
}

int dentile_region_hexagon(int a, int b, int c, const int* north, size_t n_north,
                           const int* second, size_t n_second, int opposite,
                           dentile_region** out) {
  return guarded([&] {
    auto r = build_hexagon(a, b, c, std::vector<int>(north, north + n_north),
                           std::vector<int>(second, second + n_second), opposite != 0);
    *out = new dentile_region{std::move(r)};
  });
}

void dentile_region_release(dentile_region* r) { delete r; }

int dentile_region_json(const dentile_region* r, char** out_json) {
  return guarded([&] {
    *out_json = copy_string(
        std::visit([](const auto& reg) { return region_json(reg); }, r->rep));
  });
}

int dentile_region_dual_size(const dentile_region* r, long long* out_vertices,
                             long long* out_edges) {
  return guarded([&] {
    DualGraph g = std::visit([](const auto& reg) { return dual_graph(reg); }, r->rep);
    *out_vertices = g.n_vertices;
    *out_edges = static_cast<long long>(g.edges.size());
  });
}

int dentile_count_json(const dentile_region* r, dentile_count_method method, char** out_json) {
  return guarded([&] {
    CountResult res;
    const bool is_aztec = std::holds_alternative<AztecRegion>(r->rep);
    if (method == DENTILE_METHOD_ORACLE) {
      DualGraph g = std::visit([](const auto& reg) { return dual_graph(reg); }, r->rep);
      res.count = count_matchings(g);
      res.method = CountMethod::Oracle;
    } else if (method == DENTILE_METHOD_LGV) {
      res.count = std::visit([](const auto& reg) { return lgv_count(reg); }, r->rep);
      res.method = CountMethod::LgvDeterminant;
    } else if (is_aztec) {
      const auto& reg = std::get<AztecRegion>(r->rep);
      if (reg.augmented) {
        if (reg.sw_dents.size() != 1)
          throw DomainError("closed-form count: augmented regions take one dent pair");
        res.count = count_augmented_aztec(reg.order, reg.sw_dents[0], reg.se_dents[0]);
      } else if (reg.plain()) {
        res.count = count_aztec(reg.order);
      } else if (reg.sw_dents.size() == 1) {
        res.count = count_dented_aztec(reg.order, reg.sw_dents[0], reg.se_dents[0]);
      } else {
        res.count = count_multi_dented_aztec(reg.order, reg.sw_dents, reg.se_dents);
      }
      res.method = reg.plain() ? CountMethod::ClosedForm : CountMethod::RatioFormula;
    } else {
      const auto& reg = std::get<HexRegion>(r->rep);
      if (reg.plain()) {
        res.count = count_hexagon(reg.a, reg.b, reg.c);
        res.method = CountMethod::ClosedForm;
      } else if (reg.opposite_variant) {
        if (reg.a != reg.b || reg.b != reg.c || reg.north_dents.size() != 1)
          throw DomainError(
              "closed-form count: opposite dents need equal sides and one dent pair");
        res.count = count_opposite_dented_hexagon(reg.a, reg.north_dents[0], reg.ne_dents[0]);
        res.method = CountMethod::Hypergeometric;
      } else if (reg.north_dents.size() == 1) {
        res.count = count_dented_hexagon(reg.a, reg.b, reg.c, reg.north_dents[0], reg.ne_dents[0]);
        res.method = CountMethod::Hypergeometric;
      } else {
        res.count = count_multi_dented_hexagon(reg.a, reg.b, reg.c, reg.north_dents, reg.ne_dents);
        res.method = CountMethod::LgvDeterminant;
      }
    }
    nlohmann::json desc = nlohmann::json::parse(
        std::visit([](const auto& reg) { return region_json(reg); }, r->rep));
    desc.erase("cells");
    res.region = desc.dump();
    *out_json = copy_string(res.json());
  });
}

int dentile_aztec_ratio(int n, int i, int j, int digits, char** out_decimal,
                        char** out_fraction) {
  return guarded([&] {
    BigRat r = ratio_sum(n, i, j);
    if (out_decimal) *out_decimal = copy_string(decimal_string(r, digits));
    if (out_fraction)
      *out_fraction = copy_string(numerator(r).str() + "/" + denominator(r).str());
  });
}

int dentile_delannoy(long long k, long long l, char** out_decimal) {
  return guarded([&] { *out_decimal = copy_string(delannoy(k, l).str()); });
}

int dentile_classify_aztec(double a, double b, dentile_regime* out_regime,
                           double* out_discriminant, double* out_log_limit) {
  return guarded([&] {
    RegimeReport rep = classify_aztec(a, b);
    if (out_regime) *out_regime = to_c_regime(rep.classification);
    if (out_discriminant) *out_discriminant = rep.discriminant;
    if (out_log_limit) *out_log_limit = rep.prediction;
  });
}

int dentile_classify_hexagon(double A, double B, double C, double alpha, double beta,
                             dentile_regime* out_regime, double* out_discriminant,
                             double* out_log_limit) {
  return guarded([&] {
    RegimeReport rep = classify_hexagon(A, B, C, alpha, beta);
    if (out_regime) *out_regime = to_c_regime(rep.classification);
    if (out_discriminant) *out_discriminant = rep.discriminant;
    if (out_log_limit) *out_log_limit = rep.prediction;
  });
}

int dentile_aztec_ratio_asymptotic_log(long long n, double a, double b, double* out_log) {
  return guarded([&] { *out_log = aztec_ratio_asymptotic_log(n, a, b); });
}

int dentile_hexagon_ratio_asymptotic_log(long long n, double A, double B, double C, double alpha,
                                         double beta, double* out_log) {
  return guarded([&] { *out_log = hexagon_ratio_asymptotic_log(n, A, B, C, alpha, beta); });
}

int dentile_aztec_log_limit(double a, double b, double* out_f) {
  return guarded([&] { *out_f = aztec_log_limit(a, b); });
}

int dentile_aztec_entropy_diff(const double* alphas, const double* betas, size_t k,
                               double* out_value) {
  return guarded([&] {
    *out_value = aztec_entropy_diff(std::vector<double>(alphas, alphas + k),
                                    std::vector<double>(betas, betas + k));
  });
}

int dentile_hexagon_entropy_diff(double A, double B, double C, const double* alphas,
                                 const double* betas, size_t k, double* out_value) {
  return guarded([&] {
    *out_value = hexagon_entropy_diff(A, B, C, std::vector<double>(alphas, alphas + k),
                                      std::vector<double>(betas, betas + k));
  });
}

int dentile_log_limit_grid_csv(int resolution, char** out_csv) {
  return guarded([&] { *out_csv = copy_string(log_limit_grid_csv(resolution)); });
}

int dentile_critical_curve_csv(int samples, char** out_csv) {
  return guarded([&] { *out_csv = copy_string(critical_curve_csv(samples)); });
}

int dentile_tem_ratios(const int* n_list, size_t count, double* out_ratios) {
  return guarded([&] {
    auto v = tem_limit_check(std::vector<int>(n_list, n_list + count));
    for (size_t i = 0; i < count; ++i) out_ratios[i] = v[i];
  });
}

int dentile_concentration_csv(const long long* steps, size_t n_steps, size_t dim,
                              const long long* direction, const long long* k_values,
                              size_t n_k, long long eps_num, long long eps_den, char** out_csv,
                              double* out_c1) {
  return guarded([&] {
    std::vector<std::vector<long long>> sv(n_steps);
    for (size_t s = 0; s < n_steps; ++s)
      sv[s] = std::vector<long long>(steps + s * dim, steps + (s + 1) * dim);
    StepSet set(std::move(sv));
    std::vector<long long> dir(direction, direction + dim);
    std::vector<long long> ks(k_values, k_values + n_k);
    if (eps_den <= 0 || eps_num <= 0) throw DomainError("concentration: eps must be positive");
    DecayFit fit = deviation_decay_fit(set, dir, BigRat(eps_num, eps_den), ks);
    std::string csv = "k,w_norm,fraction_num,fraction_den,log_fraction\n";
    for (const auto& row : fit.rows) {
      BigRat f = row.dev.fraction();
      csv += std::to_string(row.k) + "," + std::to_string(row.w_norm) + "," +
             numerator(f).str() + "," + denominator(f).str() + ",";
      csv += (f == 0 ? std::string("-inf") : std::to_string(log_bigrat(f))) + "\n";
    }
    if (out_c1) *out_c1 = fit.trivially_concentrated ? 0.0 : fit.c1;
    *out_csv = copy_string(csv);
  });
}

int dentile_sample_svg(const dentile_region* r, uint64_t flips, uint64_t seed, int show_paths,
                       char** out_svg) {
  return guarded([&] {
    const auto* reg = std::get_if<AztecRegion>(&r->rep);
    if (!reg) throw DomainError("sampling is implemented for Aztec regions");
    Tiling t = sample(*reg, flips, seed);
    SvgOptions opts;
    opts.show_paths = show_paths != 0;
    opts.seed = seed;
    opts.flips = flips;
    *out_svg = copy_string(render_svg(t, opts));
  });
}

int dentile_frozen_stats_json(const dentile_region* r, uint64_t flips, uint64_t seed,
                              double radius_fraction, char** out_json) {
  return guarded([&] {
    const auto* reg = std::get_if<AztecRegion>(&r->rep);
    if (!reg) throw DomainError("sampling is implemented for Aztec regions");
    Tiling t = sample(*reg, flips, seed);
    *out_json = copy_string(frozen_stats(t, radius_fraction).json());
  });
}

int dentile_verify(const char* suite, char** out_report, int* out_failures) {
  return guarded([&] {
    auto results = run_verify_suite(suite ? suite : "all");
    int failed = 0;
    for (const auto& r : results)
      if (!r.passed) ++failed;
    if (out_report) *out_report = copy_string(format_check_table(results));
    if (out_failures) *out_failures = failed;
  });
}

}  // extern "C"
