/*
 * Copyright 2026 The roabp-order Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "roabp/linalg.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace roabp {

namespace {

constexpr std::size_t kParallelThreshold = 1 << 14;

// Row reduction works on the orientation with fewer rows: rank is transpose invariant
// and the elimination cost is rows^2 * cols.
Matrix short_side(Matrix m) {
  if (m.rows() > m.cols()) return m.transposed();
  return m;
}

// Returns the row index of the pivot for column c among rows [from, rows), or rows().
std::size_t find_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m.at(r, c).value != 0) return r;
  }
  return m.rows();
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

// row_r[c..] -= factor * row_p[c..]
void eliminate_row(Matrix& m, std::size_t r, std::size_t pivot_row, std::size_t c,
                   FieldElement pivot_inv, const PrimeField& field) {
  auto target = m.row(r);
  if (target[c].value == 0) return;
  const auto source = m.row(pivot_row);
  FieldElement factor = field.mul(target[c], pivot_inv);
  target[c] = field.zero();
  for (std::size_t j = c + 1; j < m.cols(); ++j) {
    if (source[j].value == 0) continue;
    target[j] = field.sub(target[j], field.mul(factor, source[j]));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = {1};
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FieldElement aik = a.at(i, k);
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = field.add(out.at(i, j), field.mul(aik, b.at(k, j)));
    }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b, const PrimeField& field) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = field.mul(a.at(i, j), b.at(k, l));
  return out;
}

std::size_t rank_serial(Matrix m, const PrimeField& field) {
  m = short_side(std::move(m));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = find_pivot(m, rank, c);
    if (p == m.rows()) continue;
    swap_rows(m, rank, p);
    FieldElement pivot_inv = *field.inv(m.at(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) eliminate_row(m, r, rank, c, pivot_inv, field);
    ++rank;
  }
  return rank;
}

std::size_t rank_parallel(Matrix m, const PrimeField& field) {
  m = short_side(std::move(m));
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols() && rank < rows; ++c) {
    std::size_t p = find_pivot(m, rank, c);
    if (p == rows) continue;
    swap_rows(m, rank, p);
    FieldElement pivot_inv = *field.inv(m.at(rank, c));
    const std::size_t pivot_row = rank;
#pragma omp parallel for schedule(static)
    for (std::size_t r = pivot_row + 1; r < rows; ++r) eliminate_row(m, r, pivot_row, c, pivot_inv, field);
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const Matrix& m, const PrimeField& field) {
#ifdef _OPENMP
  if (m.rows() * m.cols() >= kParallelThreshold && omp_get_max_threads() > 1) return rank_parallel(m, field);
#endif
  return rank_serial(m, field);
}

}  // namespace roabp
