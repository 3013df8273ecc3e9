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

#ifndef DENTILE_MATRIX_HPP
#define DENTILE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace dentile {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  static Matrix identity(std::size_t n) {
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = T(1);
    return r;
  }

  // Submatrix with the given rows/columns deleted (sorted 0-based indices).
  Matrix without(const std::vector<std::size_t>& del_rows,
                 const std::vector<std::size_t>& del_cols) const {
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t i = 0; i < rows_; ++i)
      if (std::find(del_rows.begin(), del_rows.end(), i) == del_rows.end()) keep_r.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (std::find(del_cols.begin(), del_cols.end(), j) == del_cols.end()) keep_c.push_back(j);
    Matrix r(keep_r.size(), keep_c.size());
    for (std::size_t i = 0; i < keep_r.size(); ++i)
      for (std::size_t j = 0; j < keep_c.size(); ++j) r(i, j) = (*this)(keep_r[i], keep_c[j]);
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant over the integers. All intermediate
// entries are minors of the input, so nothing leaves Z.
inline BigInt bareiss_determinant(Matrix<BigInt> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("determinant: matrix not square");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = v / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline BigRat rational_determinant(const Matrix<BigRat>& m) {
  // Clear denominators column-wise, then run Bareiss on the integer matrix.
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant: matrix not square");
  if (n == 0) return 1;
  Matrix<BigInt> a(n, n);
  BigRat scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    BigInt l = 1;
    for (std::size_t i = 0; i < n; ++i) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (std::size_t i = 0; i < n; ++i)
      a(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    scale /= l;
  }
  return BigRat(bareiss_determinant(std::move(a))) * scale;
}

// Exact inverse via fraction-free forward elimination plus rational back
// substitution on the augmented system [A | I].
inline Matrix<BigRat> exact_inverse(const Matrix<BigRat>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse: matrix not square");
  Matrix<BigRat> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw DomainError("inverse: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(p, j));
    BigRat inv = BigRat(1) / a(k, k);
    for (std::size_t j = k; j < 2 * n; ++j) a(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      BigRat f = a(i, k);
      for (std::size_t j = k; j < 2 * n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  Matrix<BigRat> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

}  // namespace dentile

#endif  // DENTILE_MATRIX_HPP
