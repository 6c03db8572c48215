// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand/matrix.hpp"

#include <string>
#include <utility>

#include "estimand/error.hpp"

namespace estimand {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("ragged matrix: row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return {view.begin(), view.end()};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& lhs = a(i, k);
      if (is_zero(lhs)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(i, j) += lhs * b(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) {
    throw DimensionError("matrix-vector product: matrix has " + std::to_string(a.cols()) +
                         " columns, vector has length " + std::to_string(v.size()));
  }
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_zero(a(i, j))) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

std::size_t rank(RationalMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t pick = pivot_row;
    while (pick < m.rows() && is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != pivot_row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pick, c), m(pivot_row, c));
    }
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      Rational factor = m(r, col) / m(pivot_row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace estimand
