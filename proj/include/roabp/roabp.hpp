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
#include <span>
#include <string>
#include <vector>

#include "roabp/ffield.hpp"
#include "roabp/linalg.hpp"
#include "roabp/poly.hpp"
#include "roabp/subset.hpp"

namespace roabp {

/// A permutation of {1, ..., n} listed as sigma(1), ..., sigma(n).
class Order {
 public:
  Order() = default;
  /// Throws InputError unless `sigma` is a permutation of 1..n.
  explicit Order(std::vector<int> sigma);

  static Order identity(int n);
  /// Parses "3,1,4,2" or whitespace-separated values.
  static Order parse(const std::string& text);

  int size() const { return static_cast<int>(sigma_.size()); }
  /// 1-based position i -> variable sigma(i).
  int at(int position) const { return sigma_[position - 1]; }
  const std::vector<int>& values() const { return sigma_; }

  Order inverse() const;
  Order reversed() const;
  /// {sigma(1), ..., sigma(len)}.
  VarSubset prefix(int len) const;

  std::string to_string() const;

  friend bool operator==(const Order&, const Order&) = default;
  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  std::vector<int> sigma_;
};

/// ROABP in matrix view. Layer i (1-based position) reads variable order.at(i) and holds
/// coefficient matrices A_{i,0..d} of shape widths[i-1] x widths[i], with
/// widths[0] = widths[n] = 1. The computed polynomial is the single entry of
/// prod_i (sum_j A_{i,j} x_{order(i)}^j).
class Roabp {
 public:
  /// layers[i-1][j] = A_{i,j}. Throws InputError when the shape chain is broken.
  Roabp(PrimeField field, std::uint64_t d, Order order, std::vector<std::vector<Matrix>> layers);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return order_.size(); }
  std::uint64_t degree() const { return d_; }
  const Order& order() const { return order_; }
  const std::vector<std::size_t>& widths() const { return widths_; }
  std::size_t width() const;
  const Matrix& coefficient(int layer, std::uint64_t j) const { return layers_[layer - 1][j]; }

  FieldElement eval(std::span<const FieldElement> point) const;

  friend bool operator==(const Roabp&, const Roabp&) = default;

 private:
  PrimeField field_;
  std::uint64_t d_;
  Order order_;
  std::vector<std::size_t> widths_;
  std::vector<std::vector<Matrix>> layers_;
};

inline FieldElement roabp_eval(const Roabp& r, std::span<const FieldElement> point) { return r.eval(point); }

/// All A_{i,j} are drawn as w x w matrices with i.i.d. uniform entries (layer by layer,
/// j ascending, row-major); the first layer keeps row 1 and the last keeps column 1.
Roabp sample_random_roabp(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const Order& order,
                          Rng& rng);

DensePoly roabp_to_dense(const Roabp& r, std::uint64_t budget = kDefaultExpansionBudget);

PolyOracle roabp_oracle(Roabp r);

}  // namespace roabp
