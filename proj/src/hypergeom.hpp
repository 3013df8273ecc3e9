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

#ifndef DENTILE_HYPERGEOM_HPP
#define DENTILE_HYPERGEOM_HPP

#include <optional>
#include <vector>

#include "numeric.hpp"

namespace dentile {

// Terminating hypergeometric series at unit argument. Evaluable only when
// some upper parameter is a nonpositive integer; the termination index is the
// smallest such -parameter. A zero lower-parameter Pochhammer at or before
// the termination index is an error; later zeros are irrelevant.
struct HyperSeries {
  std::vector<BigRat> upper;
  std::vector<BigRat> lower;

  std::optional<long long> termination_index() const;
};

BigRat evaluate_terminating(const HyperSeries& s);

// Balanced-series transformation check: both sides of
//   F(a,b,c,-N; e,f,1+a+b+c-e-f-N)
//     = (e-a)_N (f-a)_N / ((e)_N (f)_N)
//       * F(-N,a,1+a+c-e-f-N,1+a+b-e-f-N; 1+a+b+c-e-f-N,1+a-e-N,1+a-f-N)
// evaluated exactly; true iff equal.
bool sears_transform_check(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& e,
                           const BigRat& f, long long n);

}  // namespace dentile

#endif  // DENTILE_HYPERGEOM_HPP
