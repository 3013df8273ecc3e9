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

#ifndef DENTILE_EXACT_COUNTS_HPP
#define DENTILE_EXACT_COUNTS_HPP

#include <string>
#include <vector>

#include "numeric.hpp"
#include "regions.hpp"

namespace dentile {

enum class CountMethod { ClosedForm, LgvDeterminant, RatioFormula, Hypergeometric, Oracle };

struct CountResult {
  std::string region;
  BigInt count;
  CountMethod method;
  std::string json() const;
};

const char* count_method_name(CountMethod m);

// Plain Aztec diamond: 2^{n(n+1)/2}.
BigInt count_aztec(int n);

// Single dent pair: count_aztec(n) * ratio_sum(n,i,j); exact integer, or an
// InternalError if the product fails to be integral.
BigInt count_dented_aztec(int n, int i, int j);

// k dents per side via the determinant of ratio-series entries.
BigInt count_multi_dented_aztec(int n, const std::vector<int>& sw, const std::vector<int>& se);

// Aztec diamond with two squares added: minor determinant of the order-(n+1)
// Delannoy matrix with row i and column j deleted.
BigInt count_augmented_aztec(int n, int i, int j);

// MacMahon box product.
BigInt count_hexagon(int a, int b, int c);

// Exact dented-to-plain hexagon ratios; both are integers after multiplying
// by count_hexagon.
BigRat dented_hexagon_ratio(int a, int b, int c, int i, int j);
BigInt count_dented_hexagon(int a, int b, int c, int i, int j);

BigInt count_multi_dented_hexagon(int a, int b, int c, const std::vector<int>& north,
                                  const std::vector<int>& ne);

// Hexagon with dents in two opposite sides (top and bottom, both counted
// from the right); evaluated through two hypergeometric routes that are
// asserted equal.
BigRat opposite_hexagon_ratio_first_form(int a, int b, int c, int i, int j);
BigRat opposite_hexagon_ratio_second_form(int a, int b, int c, int i, int j);
BigInt count_opposite_dented_hexagon(int n, int i, int j);

// Determinant route for any region: the nonintersecting-path determinant of
// the region itself where that applies (plain/augmented Aztec, hexagons), or
// the equivalent minor determinant one order down for dented Aztec regions.
BigInt lgv_count(const AztecRegion& r);
BigInt lgv_count(const HexRegion& r);

// CSV sweep of (n, i, j, ratio) rows for fixed dents across orders.
std::string ratio_sweep_csv(const std::vector<int>& orders, int i, int j, int digits);

}  // namespace dentile

#endif  // DENTILE_EXACT_COUNTS_HPP
