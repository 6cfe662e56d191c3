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

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "roabp/ffield.hpp"

namespace roabp {

inline constexpr std::uint64_t kDefaultExpansionBudget = std::uint64_t{1} << 24;

/// (d+1)^n, or BudgetExceeded when it is larger than `budget`.
std::uint64_t grid_size(int n, std::uint64_t d, std::uint64_t budget, const std::string& what = "dense grid");

using ExponentVector = std::vector<std::uint64_t>;

/// Coefficient grid of an n-variate polynomial with individual degree at most d. The entry
/// at linear index sum_i e_i (d+1)^(i-1) is the coefficient of x_1^e_1 ... x_n^e_n, so
/// variable 1 is the least significant digit.
class DensePoly {
 public:
  DensePoly(PrimeField field, int n, std::uint64_t d, std::uint64_t budget = kDefaultExpansionBudget);
  DensePoly(PrimeField field, int n, std::uint64_t d, std::vector<FieldElement> coeffs);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return n_; }
  std::uint64_t degree() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const FieldElement> coeffs() const { return coeffs_; }
  std::span<FieldElement> coeffs() { return coeffs_; }

  FieldElement coeff(std::size_t linear) const { return coeffs_[linear]; }
  FieldElement coeff(const ExponentVector& e) const { return coeffs_[linear_index(e)]; }
  void set(const ExponentVector& e, FieldElement c) { coeffs_[linear_index(e)] = c; }

  std::size_t linear_index(const ExponentVector& e) const;
  ExponentVector exponents(std::size_t linear) const;

  bool is_zero() const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  PrimeField field_;
  int n_;
  std::uint64_t d_;
  std::vector<FieldElement> coeffs_;
};

struct SparseTerm {
  ExponentVector exponents;
  FieldElement coeff;
  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

/// Monomial list. Exponent vectors are pairwise distinct and coefficients nonzero.
class SparsePoly {
 public:
  /// Throws InputError on a duplicate exponent vector, an exponent above d, a length
  /// mismatch or a zero coefficient.
  SparsePoly(PrimeField field, int n, std::uint64_t d, std::vector<SparseTerm> terms);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return n_; }
  std::uint64_t degree() const { return d_; }
  const std::vector<SparseTerm>& terms() const { return terms_; }

 private:
  PrimeField field_;
  int n_;
  std::uint64_t d_;
  std::vector<SparseTerm> terms_;
};

FieldElement dense_eval(const DensePoly& f, std::span<const FieldElement> point);
FieldElement sparse_eval(const SparsePoly& f, std::span<const FieldElement> point);

DensePoly sparse_to_dense(const SparsePoly& f, std::uint64_t budget = kDefaultExpansionBudget);
/// Nonzero terms in ascending linear-index order.
SparsePoly dense_to_sparse(const DensePoly& f);

enum class Provenance { dense_backed, roabp_backed, tensor_composite, sparse_backed, other };
std::string to_string(Provenance p);

/// Black-box evaluation of an n-variate polynomial with declared individual degree d.
/// Evaluation is deterministic and re-entrant, so an oracle may be queried from several
/// threads at once.
class PolyOracle {
 public:
  using EvalFn = std::function<FieldElement(std::span<const FieldElement>)>;

  PolyOracle(PrimeField field, int n, std::uint64_t d, Provenance provenance, EvalFn fn,
             std::shared_ptr<const DensePoly> backing = nullptr);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return n_; }
  std::uint64_t degree() const { return d_; }
  Provenance provenance() const { return provenance_; }

  /// Throws InputError on a dimension mismatch.
  FieldElement eval(std::span<const FieldElement> point) const;
  FieldElement operator()(std::span<const FieldElement> point) const { return eval(point); }

  /// The coefficient grid when the oracle wraps one.
  const std::shared_ptr<const DensePoly>& dense_backing() const { return backing_; }

 private:
  PrimeField field_;
  int n_;
  std::uint64_t d_;
  Provenance provenance_;
  EvalFn fn_;
  std::shared_ptr<const DensePoly> backing_;
};

PolyOracle dense_oracle(DensePoly f);
PolyOracle sparse_oracle(SparsePoly f);

/// x -> f(x_1^((d+1)^j), ..., x_n^((d+1)^j)); declared degree d (d+1)^j.
PolyOracle power_substituted_oracle(const PolyOracle& f, unsigned j);

/// Recovers the coefficient grid from (d+1)^n evaluations on {0..d}^n. Requires p >= d+2.
DensePoly interpolate_dense(const PolyOracle& f, std::uint64_t budget = kDefaultExpansionBudget);

/// The backing grid if present, otherwise interpolate_dense.
DensePoly expand_oracle(const PolyOracle& f, std::uint64_t budget = kDefaultExpansionBudget);

}  // namespace roabp
