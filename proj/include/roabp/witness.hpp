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
#include <string>
#include <utility>
#include <vector>

#include "roabp/errors.hpp"
#include "roabp/poly.hpp"
#include "roabp/roabp.hpp"
#include "roabp/subset.hpp"

namespace roabp {

/// A witness hypothesis failed; condition() names it.
class WitnessRejected : public InputError {
 public:
  WitnessRejected(std::string condition, const std::string& detail)
      : InputError("witness rejected (" + condition + "): " + detail), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// k = floor(log_{d+1} w) + 1, i.e. the least k with (d+1)^k > w.
int witness_pair_count(std::uint64_t d, std::size_t w);

/// Pairs (i_l, j_l) with every i_l in T and every j_l outside it. The first pair lies
/// entirely to the left of the second, so no prefix of the identity splits both.
struct PairSelection {
  int k = 0;
  std::vector<std::pair<int, int>> pairs;

  bool left_of() const;
  bool distinct() const;
  /// Pairs with exactly one endpoint in `prefix`.
  int split_by(const VarSubset& prefix) const;
};

/// i_1 = min T, j_1 = min of the complement, i_2 = max T, j_2 = max of the complement, then
/// the remaining members of each side in ascending order. Needs k >= 2, |T| >= k,
/// n - |T| >= k, and neither T nor its complement a prefix of the identity.
PairSelection select_pairs(const VarSubset& t, int k);

/// prod_l (1 + x_i x_j + (x_i x_j)^2 + ... + (x_i x_j)^d) over the pairs.
DensePoly pair_product_poly(const PrimeField& field, int n, std::uint64_t d, const PairSelection& selection);

/// Width at most w along the identity order with Nisan rank (d+1)^k > w at T. T must have
/// k <= |T| <= n/2, be left-heavy and not be a prefix of the identity; also n >= 3 log_{d+1} w
/// and w >= d+1.
DensePoly witness_for_id(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const VarSubset& t);

/// Same guarantee for an arbitrary order sigma: T is renamed into positions of sigma,
/// complemented when larger than n/2, reflected when right-heavy, and the pairs are
/// mapped back. Needs k <= |T| <= n-k and neither T nor its complement a prefix of sigma.
DensePoly witness_general(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const VarSubset& t,
                          const Order& sigma);

}  // namespace roabp
