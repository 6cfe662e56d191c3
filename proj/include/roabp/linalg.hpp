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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roabp/ffield.hpp"

namespace roabp {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field);
Matrix kronecker(const Matrix& a, const Matrix& b, const PrimeField& field);

// Rank by row reduction. The pivot in each column is the first nonzero entry among the
// unreduced rows (lowest row index wins). rank_serial is the reference; rank_parallel
// splits the row updates of each elimination step across OpenMP threads and must agree
// with it on every input.
std::size_t rank_serial(Matrix m, const PrimeField& field);
std::size_t rank_parallel(Matrix m, const PrimeField& field);

/// Picks the parallel kernel once the matrix is large enough to amortize thread startup.
std::size_t exact_rank(const Matrix& m, const PrimeField& field);

}  // namespace roabp
