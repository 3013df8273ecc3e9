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

#ifndef DENTILE_VERIFY_HPP
#define DENTILE_VERIFY_HPP

#include <string>
#include <vector>

namespace dentile {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

// Desk-scale cross-method equalities, grouped in suites:
//   aztec, hexagon, matrices, hypergeom, asymptotics, concentration, sampler.
// "all" runs everything.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& name);

std::string format_check_table(const std::vector<CheckResult>& results);

}  // namespace dentile

#endif  // DENTILE_VERIFY_HPP
