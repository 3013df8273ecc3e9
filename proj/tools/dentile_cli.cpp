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

// Command line front end; every computation goes through the C API in
// dentile.h. Exit codes: 0 success, 2 domain error, 3 internal error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dentile.h"

namespace {

struct Freer {
  void operator()(char* p) const { dentile_free(p); }
};
using CStr = std::unique_ptr<char, Freer>;

struct RegionFreer {
  void operator()(dentile_region* r) const { dentile_region_release(r); }
};
using Region = std::unique_ptr<dentile_region, RegionFreer>;

int fail(int code) {
  std::cerr << "error: " << dentile_last_error() << "\n";
  return code;
}

// Atomic write: temp file in the same directory, then rename over the target.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
  }
  fs::rename(tmp, target);
}

Region make_region(const std::string& kind, int n, int a, int b, int c,
                   const std::vector<int>& d1, const std::vector<int>& d2, bool augmented,
                   bool opposite, int& err) {
  dentile_region* raw = nullptr;
  if (kind == "aztec")
    err = dentile_region_aztec(n, d1.data(), d1.size(), d2.data(), d2.size(), augmented, &raw);
  else
    err = dentile_region_hexagon(a, b, c, d1.data(), d1.size(), d2.data(), d2.size(), opposite,
                                 &raw);
  return Region(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dentile: exact tiling counts, asymptotic regimes and random tilings\n"
               "of dented Aztec diamonds and hexagons"};
  app.require_subcommand(1);
  std::string out_path = "-";
  app.add_option("-o,--out", out_path, "output file (default stdout)")->capture_default_str();

  // ---- count ----
  auto* count = app.add_subcommand("count", "exact tiling count of a region");
  std::string c_kind = "aztec";
  int c_n = 1, c_a = 1, c_b = 1, c_c = 1;
  std::vector<int> c_d1, c_d2;
  bool c_aug = false, c_opp = false, c_dump = false;
  std::string c_method = "closed";
  count->add_option("kind", c_kind, "aztec | hexagon")->check(CLI::IsMember({"aztec", "hexagon"}));
  count->add_option("--n", c_n, "Aztec order");
  count->add_option("--a", c_a)->group("hexagon");
  count->add_option("--b", c_b)->group("hexagon");
  count->add_option("--c", c_c)->group("hexagon");
  count->add_option("--dents-sw", c_d1, "sw (aztec) / north (hexagon) dent indices")
      ->delimiter(',');
  count->add_option("--dents-se", c_d2, "se (aztec) / ne or south (hexagon) dent indices")
      ->delimiter(',');
  count->add_flag("--augmented", c_aug, "square-adding Aztec variant");
  count->add_flag("--opposite", c_opp, "hexagon dents on opposite sides");
  count->add_option("--method", c_method, "closed | lgv | oracle")
      ->check(CLI::IsMember({"closed", "lgv", "oracle"}));
  count->add_flag("--dump-region", c_dump, "emit the region JSON instead of the count");

  // ---- ratio ----
  auto* ratio = app.add_subcommand("ratio", "exact dented/plain Aztec ratio");
  int r_n = 1, r_i = 1, r_j = 1, r_digits = 12;
  bool r_fraction = false;
  std::string r_kind = "aztec";
  ratio->add_option("kind", r_kind)->check(CLI::IsMember({"aztec"}));
  ratio->add_option("--n", r_n)->required();
  ratio->add_option("--i", r_i)->required();
  ratio->add_option("--j", r_j)->required();
  ratio->add_option("--digits", r_digits, "significant digits");
  ratio->add_flag("--fraction", r_fraction, "also print the exact fraction");

  // ---- classify ----
  auto* classify = app.add_subcommand("classify", "regime of scaled dent positions");
  std::string cl_kind = "aztec";
  double cl_a = 0.5, cl_b = 0.5, cl_A = 1, cl_B = 1, cl_C = 1, cl_alpha = 0.5, cl_beta = 0.5;
  classify->add_option("kind", cl_kind)->check(CLI::IsMember({"aztec", "hexagon"}));
  classify->add_option("--a", cl_a, "sw dent fraction (aztec)");
  classify->add_option("--b", cl_b, "se dent fraction (aztec)");
  classify->add_option("--A", cl_A)->group("hexagon");
  classify->add_option("--B", cl_B)->group("hexagon");
  classify->add_option("--C", cl_C)->group("hexagon");
  classify->add_option("--alpha", cl_alpha)->group("hexagon");
  classify->add_option("--beta", cl_beta)->group("hexagon");

  // ---- asympt ----
  auto* asym = app.add_subcommand("asympt", "closed-form asymptotics (log scale)");
  std::string as_kind = "aztec";
  long long as_n = 100;
  double as_a = 0.3, as_b = 0.3, as_A = 1, as_B = 1, as_C = 1, as_alpha = 0.5, as_beta = 0.5;
  std::vector<double> as_alphas, as_betas;
  bool as_entropy = false;
  asym->add_option("kind", as_kind)->check(CLI::IsMember({"aztec", "hexagon"}));
  asym->add_option("--n", as_n, "scaling order");
  asym->add_option("--a", as_a);
  asym->add_option("--b", as_b);
  asym->add_option("--A", as_A)->group("hexagon");
  asym->add_option("--B", as_B)->group("hexagon");
  asym->add_option("--C", as_C)->group("hexagon");
  asym->add_option("--alpha", as_alpha)->group("hexagon");
  asym->add_option("--beta", as_beta)->group("hexagon");
  asym->add_option("--alphas", as_alphas, "multi-dent fractions")->delimiter(',');
  asym->add_option("--betas", as_betas, "multi-dent fractions")->delimiter(',');
  asym->add_flag("--entropy-diff", as_entropy, "entropy difference instead of finite-n log");

  // ---- helmet ----
  auto* helmet = app.add_subcommand("helmet", "CSV grid of the log-limit surface f(a,b)");
  int h_res = 64;
  helmet->add_option("--resolution", h_res)->capture_default_str();

  // ---- critical-curve ----
  auto* curve = app.add_subcommand("critical-curve", "CSV of the equal-entropy curve");
  int cc_samples = 128;
  curve->add_option("--samples", cc_samples)->capture_default_str();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "cross-method verification suites");
  std::string v_suite = "all";
  verify->add_option("--suite", v_suite,
                     "all | aztec | hexagon | matrices | hypergeom | asymptotics | "
                     "concentration | sampler")
      ->capture_default_str();

  // ---- concentration ----
  auto* conc = app.add_subcommand("concentration", "path-deviation fractions and decay fit");
  std::string co_steps = "1 0,0 1,1 1";
  std::string co_dir = "1 1";
  long long co_kmin = 6, co_kmax = 24;
  long long co_eps_num = 1, co_eps_den = 4;
  conc->add_option("--steps", co_steps, "comma-separated steps, e.g. \"1 0,0 1,1 1\"")
      ->capture_default_str();
  conc->add_option("--direction", co_dir)->capture_default_str();
  conc->add_option("--k-min", co_kmin)->capture_default_str();
  conc->add_option("--k-max", co_kmax)->capture_default_str();
  conc->add_option("--eps-num", co_eps_num, "deviation threshold numerator")
      ->capture_default_str();
  conc->add_option("--eps-den", co_eps_den, "deviation threshold denominator")
      ->capture_default_str();

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "random tiling of an Aztec region (SVG)");
  int s_n = 16;
  std::vector<int> s_d1, s_d2;
  std::uint64_t s_flips = 0, s_seed = 1;
  bool s_paths = false, s_stats = false;
  double s_radius = 0.7;
  sample->add_option("--n", s_n)->required();
  sample->add_option("--dents-sw", s_d1)->delimiter(',');
  sample->add_option("--dents-se", s_d2)->delimiter(',');
  sample->add_option("--flips", s_flips, "chain length (default 200*cells^2)");
  sample->add_option("--seed", s_seed)->capture_default_str();
  sample->add_flag("--paths", s_paths, "overlay the path encoding");
  sample->add_flag("--frozen-stats", s_stats, "emit frozen-sector JSON instead of SVG");
  sample->add_option("--radius", s_radius, "sector radius as a fraction of the order")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      int err = 0;
      Region reg = make_region(c_kind, c_n, c_a, c_b, c_c, c_d1, c_d2, c_aug, c_opp, err);
      if (err) return fail(err);
      char* raw = nullptr;
      if (c_dump)
        err = dentile_region_json(reg.get(), &raw);
      else {
        dentile_count_method m = c_method == "oracle"  ? DENTILE_METHOD_ORACLE
                                 : c_method == "lgv"   ? DENTILE_METHOD_LGV
                                                       : DENTILE_METHOD_CLOSED_FORM;
        err = dentile_count_json(reg.get(), m, &raw);
      }
      if (err) return fail(err);
      CStr s(raw);
      write_output(out_path, std::string(s.get()) + "\n");
    } else if (*ratio) {
      char *dec = nullptr, *frac = nullptr;
      int err = dentile_aztec_ratio(r_n, r_i, r_j, r_digits, &dec, r_fraction ? &frac : nullptr);
      if (err) return fail(err);
      CStr d(dec), f(frac);
      std::ostringstream os;
      os << "{\"n\":" << r_n << ",\"i\":" << r_i << ",\"j\":" << r_j << ",\"ratio\":\"" << d.get()
         << "\"";
      if (frac) os << ",\"fraction\":\"" << f.get() << "\"";
      os << "}\n";
      write_output(out_path, os.str());
    } else if (*classify) {
      dentile_regime rg;
      double disc = 0, pred = 0;
      int err = cl_kind == "aztec"
                    ? dentile_classify_aztec(cl_a, cl_b, &rg, &disc, &pred)
                    : dentile_classify_hexagon(cl_A, cl_B, cl_C, cl_alpha, cl_beta, &rg, &disc,
                                               &pred);
      if (err) return fail(err);
      const char* names[] = {"Outside", "Crossing", "Critical"};
      std::ostringstream os;
      os << "{\"classification\":\"" << names[rg] << "\",\"discriminant\":" << disc
         << ",\"log_limit\":" << pred << "}\n";
      write_output(out_path, os.str());
    } else if (*asym) {
      double v = 0;
      int err;
      std::string label;
      if (!as_alphas.empty() || as_entropy) {
        if (as_alphas.empty()) {
          as_alphas = {as_kind == "aztec" ? as_a : as_alpha};
          as_betas = {as_kind == "aztec" ? as_b : as_beta};
        }
        err = as_kind == "aztec"
                  ? dentile_aztec_entropy_diff(as_alphas.data(), as_betas.data(),
                                               as_alphas.size(), &v)
                  : dentile_hexagon_entropy_diff(as_A, as_B, as_C, as_alphas.data(),
                                                 as_betas.data(), as_alphas.size(), &v);
        label = "entropy_diff";
      } else {
        err = as_kind == "aztec"
                  ? dentile_aztec_ratio_asymptotic_log(as_n, as_a, as_b, &v)
                  : dentile_hexagon_ratio_asymptotic_log(as_n, as_A, as_B, as_C, as_alpha,
                                                         as_beta, &v);
        label = "log_ratio_asymptotic";
      }
      if (err) return fail(err);
      std::ostringstream os;
      os.precision(15);
      os << "{\"" << label << "\":" << v << "}\n";
      write_output(out_path, os.str());
    } else if (*helmet) {
      char* raw = nullptr;
      int err = dentile_log_limit_grid_csv(h_res, &raw);
      if (err) return fail(err);
      CStr s(raw);
      write_output(out_path, s.get());
    } else if (*curve) {
      char* raw = nullptr;
      int err = dentile_critical_curve_csv(cc_samples, &raw);
      if (err) return fail(err);
      CStr s(raw);
      write_output(out_path, s.get());
    } else if (*verify) {
      char* raw = nullptr;
      int failures = 0;
      int err = dentile_verify(v_suite.c_str(), &raw, &failures);
      if (err) return fail(err);
      CStr s(raw);
      write_output(out_path, s.get());
      if (failures) return 1;
    } else if (*conc) {
      auto parse_vecs = [](const std::string& text) {
        std::vector<long long> flat;
        size_t dim = 0;
        std::stringstream groups(text);
        std::string group;
        while (std::getline(groups, group, ',')) {
          std::stringstream nums(group);
          long long v;
          size_t d = 0;
          while (nums >> v) {
            flat.push_back(v);
            ++d;
          }
          if (dim && d != dim) throw std::runtime_error("inconsistent step dimensions");
          dim = d;
        }
        return std::pair{flat, dim};
      };
      auto [steps, dim] = parse_vecs(co_steps);
      auto [dir, ddim] = parse_vecs(co_dir);
      if (dim == 0 || ddim != dim) throw std::runtime_error("direction dimension mismatch");
      std::vector<long long> ks;
      for (long long k = co_kmin; k <= co_kmax; ++k) ks.push_back(k);
      char* raw = nullptr;
      double c1 = 0;
      int err = dentile_concentration_csv(steps.data(), steps.size() / dim, dim, dir.data(),
                                          ks.data(), ks.size(), co_eps_num, co_eps_den, &raw,
                                          &c1);
      if (err) return fail(err);
      CStr s(raw);
      std::ostringstream os;
      os << s.get() << "# fitted_c1," << c1 << "\n";
      write_output(out_path, os.str());
    } else if (*sample) {
      int err = 0;
      Region reg = make_region("aztec", s_n, 0, 0, 0, s_d1, s_d2, false, false, err);
      if (err) return fail(err);
      if (s_flips == 0) {
        long long cells = 2LL * s_n * (s_n + 1) - (long long)(s_d1.size() + s_d2.size());
        s_flips = 200ULL * cells * cells;
      }
      char* raw = nullptr;
      err = s_stats ? dentile_frozen_stats_json(reg.get(), s_flips, s_seed, s_radius, &raw)
                    : dentile_sample_svg(reg.get(), s_flips, s_seed, s_paths, &raw);
      if (err) return fail(err);
      CStr s(raw);
      write_output(out_path, std::string(s.get()) + (s_stats ? "\n" : ""));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
