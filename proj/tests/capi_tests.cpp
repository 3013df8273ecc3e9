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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "dentile.h"
#include "json.hpp"

namespace {

struct CStr {
  char* p = nullptr;
  ~CStr() { dentile_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Region {
  dentile_region* r = nullptr;
  ~Region() { dentile_region_release(r); }
};

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("counts round-trip through JSON as decimal strings") {
  Region reg;
  REQUIRE(dentile_region_aztec(3, nullptr, 0, nullptr, 0, 0, &reg.r) == DENTILE_OK);
  CStr out;
  REQUIRE(dentile_count_json(reg.r, DENTILE_METHOD_CLOSED_FORM, &out.p) == DENTILE_OK);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["count"] == "64");
  CStr lgv, oracle;
  REQUIRE(dentile_count_json(reg.r, DENTILE_METHOD_LGV, &lgv.p) == DENTILE_OK);
  REQUIRE(dentile_count_json(reg.r, DENTILE_METHOD_ORACLE, &oracle.p) == DENTILE_OK);
  CHECK(nlohmann::json::parse(lgv.str())["count"] == "64");
  CHECK(nlohmann::json::parse(oracle.str())["count"] == "64");
}

TEST_CASE("dented hexagon counts and errors") {
  Region reg;
  int north[] = {1};
  int ne[] = {1};
  REQUIRE(dentile_region_hexagon(2, 2, 2, north, 1, ne, 1, 0, &reg.r) == DENTILE_OK);
  CStr out;
  REQUIRE(dentile_count_json(reg.r, DENTILE_METHOD_CLOSED_FORM, &out.p) == DENTILE_OK);
  CHECK(nlohmann::json::parse(out.str())["count"] == "14");
  // domain error surfaces as code 2 with a message
  dentile_region* bad = nullptr;
  int too_big[] = {9};
  CHECK(dentile_region_aztec(3, too_big, 1, too_big, 1, 0, &bad) == DENTILE_ERR_DOMAIN);
  CHECK(std::strlen(dentile_last_error()) > 0);
}

TEST_CASE("ratio, delannoy and classification") {
  CStr dec, frac;
  REQUIRE(dentile_aztec_ratio(20, 2, 3, 4, &dec.p, &frac.p) == DENTILE_OK);
  CHECK(dec.str() == "4.996");
  CHECK(frac.str().find('/') != std::string::npos);
  CStr d;
  REQUIRE(dentile_delannoy(1, 2, &d.p) == DENTILE_OK);
  CHECK(d.str() == "5");
  dentile_regime rg;
  double disc = 0, pred = 0;
  REQUIRE(dentile_classify_aztec(0.5, 0.5, &rg, &disc, &pred) == DENTILE_OK);
  CHECK(rg == DENTILE_REGIME_CROSSING);
  REQUIRE(dentile_classify_hexagon(1, 1, 1, 0.5, 0.5, &rg, &disc, &pred) == DENTILE_OK);
  CHECK(rg == DENTILE_REGIME_CROSSING);
  CHECK(dentile_classify_aztec(-0.5, 0.5, &rg, &disc, &pred) == DENTILE_ERR_DOMAIN);
}

TEST_CASE("asymptotic surfaces and grids") {
  double f = 0;
  REQUIRE(dentile_aztec_log_limit(0.5, 0.5, &f) == DENTILE_OK);
  CHECK(f > 0.69);
  CHECK(f < 0.70);
  CStr grid;
  REQUIRE(dentile_log_limit_grid_csv(8, &grid.p) == DENTILE_OK);
  CHECK(grid.str().rfind("a,b,f,regime", 0) == 0);
  CStr curve;
  REQUIRE(dentile_critical_curve_csv(16, &curve.p) == DENTILE_OK);
  CHECK(curve.str().rfind("a,b,residual", 0) == 0);
  double log_asym = 0;
  CHECK(dentile_aztec_ratio_asymptotic_log(100, 0.3, 0.3, &log_asym) == DENTILE_OK);
  double ratios[2] = {0, 0};
  int ns[2] = {4, 8};
  REQUIRE(dentile_tem_ratios(ns, 2, ratios) == DENTILE_OK);
  CHECK(ratios[0] > 1.5);
}

TEST_CASE("concentration CSV") {
  long long steps[] = {1, 0, 0, 1, 1, 1};
  long long dir[] = {1, 1};
  long long ks[] = {4, 6, 8};
  CStr csv;
  double c1 = 0;
  REQUIRE(dentile_concentration_csv(steps, 3, 2, dir, ks, 3, 1, 4, &csv.p, &c1) == DENTILE_OK);
  CHECK(csv.str().rfind("k,w_norm,fraction_num,fraction_den,log_fraction", 0) == 0);
  CHECK(c1 > 0);
}

TEST_CASE("sampling and frozen stats") {
  Region reg;
  int sw[] = {2};
  int se[] = {4};
  REQUIRE(dentile_region_aztec(8, sw, 1, se, 1, 0, &reg.r) == DENTILE_OK);
  CStr svg;
  REQUIRE(dentile_sample_svg(reg.r, 10000, 5, 1, &svg.p) == DENTILE_OK);
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(svg.str().find("seed 5") != std::string::npos);
  CStr stats;
  REQUIRE(dentile_frozen_stats_json(reg.r, 10000, 5, 0.5, &stats.p) == DENTILE_OK);
  auto j = nlohmann::json::parse(stats.str());
  CHECK(j["sectors"].contains("N"));
}

TEST_CASE("verify suite runs clean") {
  CStr report;
  int failures = -1;
  REQUIRE(dentile_verify("matrices", &report.p, &failures) == DENTILE_OK);
  CHECK(failures == 0);
  CHECK(report.str().find("PASS") != std::string::npos);
  CHECK(dentile_verify("nope", &report.p, &failures) == DENTILE_ERR_DOMAIN);
}

TEST_CASE("region JSON and dual sizes") {
  Region reg;
  REQUIRE(dentile_region_aztec(2, nullptr, 0, nullptr, 0, 0, &reg.r) == DENTILE_OK);
  long long v = 0, e = 0;
  REQUIRE(dentile_region_dual_size(reg.r, &v, &e) == DENTILE_OK);
  CHECK(v == 12);
  CHECK(e == 16);
  CStr js;
  REQUIRE(dentile_region_json(reg.r, &js.p) == DENTILE_OK);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["kind"] == "aztec");
  CHECK(j["cells"].size() == 12);
}

TEST_SUITE_END();
