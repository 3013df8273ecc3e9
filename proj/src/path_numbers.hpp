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

#ifndef DENTILE_PATH_NUMBERS_HPP
#define DENTILE_PATH_NUMBERS_HPP

#include "matrix.hpp"
#include "numeric.hpp"

namespace dentile {

// D(k,l): lattice paths (0,0) -> (k,l) with steps E, N, NE.
BigInt delannoy(long long k, long long l);

// (D(i,j)) for 0 <= i,j < n.
Matrix<BigInt> delannoy_matrix(int n);

// Lower-triangular binomial matrix (C(i,j)) and the symmetric Pascal matrix.
Matrix<BigInt> pascal_lower(int n);
Matrix<BigInt> symmetric_pascal(int n);

// Entrywise inverse of pascal_lower: (-1)^{i+j} C(i,j).
Matrix<BigInt> pascal_lower_inverse(int n);

// True iff D_n equals L_n diag(1,2,...,2^{n-1}) L_n^T in exact arithmetic.
bool factorization_check(int n);

// Partial series sum_{k=0}^{n-1} C(k,i-1) C(k,j-1) / 2^{k+1}, the exact
// dented-to-plain tiling ratio for a single dent pair (1-based i, j).
BigRat ratio_sum(int n, int i, int j);

// Closed form for entry (i,j) of the inverse Delannoy matrix (0-based):
// 2 (-1)^{i+j} sum_{k<n} C(k,i) C(k,j) / 2^{k+1}.
BigRat delannoy_inverse_entry(int n, int i, int j);

// Exact inverse computed by elimination; the oracle for the closed form above.
Matrix<BigRat> delannoy_inverse_exact(int n);

}  // namespace dentile

#endif  // DENTILE_PATH_NUMBERS_HPP
