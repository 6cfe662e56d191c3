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
#include <vector>

#include "roabp/linalg.hpp"
#include "roabp/poly.hpp"
#include "roabp/roabp.hpp"
#include "roabp/subset.hpp"

namespace roabp {

/// Coefficient matrix of f with rows indexed by monomials over x_T and columns by monomials
/// over the complement. Both sides use the mixed-radix index of their variables in ascending
/// order, smallest variable least significant.
Matrix nisan_matrix(const DensePoly& f, const VarSubset& t);

std::size_t nisan_rank(const DensePoly& f, const VarSubset& t);

enum class Verdict { at_most_w, exceeds_w };
const char* to_string(Verdict v);

/// Outcome of the randomized rank-threshold test. exceeds_w is certified by a nonzero
/// determinant; at_most_w may be wrong with probability at most failure_bound().
struct RankTestReport {
  VarSubset subset;
  std::size_t threshold = 0;
  Verdict verdict = Verdict::at_most_w;
  int trials = 0;
  std::vector<bool> trial_nonzero;  // one flag per evaluated determinant
  bool trivial = false;  // threshold at least (d+1)^min(|T|, n-|T|): no sampling needed
  u128 bound_numerator = 0;  // n d (w+1)^2 trials
  u64 bound_denominator = 1;  // p

  double failure_bound() const {
    return static_cast<double>(bound_numerator) / static_cast<double>(bound_denominator);
  }
};

inline constexpr int kDefaultTrials = 3;

/// Builds (w+1) x (w+1) evaluation matrices E[i][j] = f(x_T = alpha_i, x_rest = beta_j) from
/// uniform field points and reports exceeds_w as soon as one has nonzero determinant.
/// Throws InputError when n d (w+1)^2 trials >= p, since the bound would be vacuous.
RankTestReport prob_rank_at_most(const PolyOracle& f, const VarSubset& t, std::size_t w, int trials, Rng& rng);

struct LayerWidths {
  std::size_t width = 1;  // max(1, per_layer...): the end layers have width 1
  std::vector<std::size_t> per_layer;  // rank of the prefix of length i, i = 1..n-1
};

LayerWidths exact_width_in_order(const DensePoly& f, const Order& order);

/// Nisan rank of every subset of [n], indexed by mask. Subsets and their complements share
/// one computation. The parallel builder distributes subsets over OpenMP threads; the
/// serial one is the reference it is tested against.
class SubsetRankTable {
 public:
  SubsetRankTable(int n, std::vector<std::size_t> ranks) : n_(n), ranks_(std::move(ranks)) {}

  int num_vars() const { return n_; }
  std::size_t rank(std::uint64_t mask) const { return ranks_[mask]; }
  std::size_t rank(const VarSubset& t) const { return ranks_[t.mask()]; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }

  LayerWidths widths_in_order(const Order& order) const;

  friend bool operator==(const SubsetRankTable&, const SubsetRankTable&) = default;

 private:
  int n_;
  std::vector<std::size_t> ranks_;
};

SubsetRankTable subset_rank_table(const DensePoly& f);
SubsetRankTable subset_rank_table_serial(const DensePoly& f);

}  // namespace roabp
