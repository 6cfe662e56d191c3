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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "roabp/nisan.hpp"
#include "roabp/poly.hpp"
#include "roabp/roabp.hpp"

namespace roabp {

struct SearchOptions {
  std::uint64_t subset_budget = 1'000'000;  // rank tests per populate_graph run
  int trials = kDefaultTrials;
  std::uint64_t expansion_budget = kDefaultExpansionBudget;
  bool verify = true;
  bool parallel = true;
};

/// L_0, ..., L_{n-1}: the sets that passed the rank test, grouped by size. reports[k][i]
/// is the test that admitted levels[k][i]; L_0 = {empty set} needs none.
struct GoodSetLists {
  int n = 0;
  std::vector<std::vector<VarSubset>> levels;
  std::vector<std::vector<RankTestReport>> reports;
  std::uint64_t tests = 0;

  bool contains(const VarSubset& t) const;
  std::size_t total_size() const;
};

/// Thrown by populate_graph when the next level would exceed the subset-test budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(GoodSetLists partial, std::uint64_t budget);
  const GoodSetLists& partial() const { return partial_; }

 private:
  GoodSetLists partial_;
};

/// Level-by-level extension: every T0 in L_{k-1} is grown by each i not in T0 (FIFO over
/// L_{k-1}, ascending i); new sets are deduplicated before testing and kept when the
/// randomized test says rank <= w. Each candidate draws from its own stream split off a
/// base seed taken from `rng`, so the result does not depend on the thread count.
GoodSetLists populate_graph(const PolyOracle& f, std::size_t w, Rng& rng, const SearchOptions& options = {});

enum class Verification { exact, probabilistic, none };
const char* to_string(Verification v);

struct OrderResult {
  Order tau;
  std::size_t claimed_width = 0;
  Verification verification = Verification::none;
  std::vector<std::size_t> per_layer;  // exact prefix ranks along tau, when verification is exact
  std::uint64_t tests = 0;
  GoodSetLists lists;
};

enum class FailureKind { no_path, budget, verification };
const char* to_string(FailureKind k);

struct NoPathFailure {
  FailureKind kind = FailureKind::no_path;
  std::string detail;
  GoodSetLists lists;
};

using FindOrderOutcome = std::variant<OrderResult, NoPathFailure>;

/// Runs populate_graph, then a depth-first search from the empty set to [n] through the
/// admitted sets (the full set is always admitted). tau(i) is the element added at step i.
/// `expanded` may supply the coefficient grid for exact verification.
FindOrderOutcome find_order(const PolyOracle& f, std::size_t w, Rng& rng, const SearchOptions& options = {},
                            const DensePoly* expanded = nullptr);

struct MinWidthFailure {
  FailureKind kind = FailureKind::budget;
  std::size_t bracket_lo = 0;  // largest width known to fail
  std::size_t bracket_hi = 0;  // smallest width known to succeed, 0 if none
  std::string detail;
};

using MinWidthOutcome = std::variant<OrderResult, MinWidthFailure>;

/// Doubling over w = 1, 2, 4, ... until find_order succeeds, then binary search on the
/// bracket. A failed attempt is retried once with fresh randomness before it counts.
MinWidthOutcome min_width_search(const PolyOracle& f, Rng& rng, const SearchOptions& options = {});

inline constexpr int kDefaultBruteForceCap = 8;

struct BruteForceResult {
  std::size_t width = 1;
  Order tau;
};

/// Calls fn on every permutation of 1..n in lexicographic order.
void for_each_order(int n, const std::function<void(const Order&)>& fn);

/// Exhaustive minimum of the exact width over all n! orders; ties go to the
/// lexicographically least order.
BruteForceResult brute_force_best_order(const DensePoly& f, int cap = kDefaultBruteForceCap);
BruteForceResult best_order_from_table(const SubsetRankTable& table);

/// Every order attaining the minimum width.
std::vector<Order> optimal_orders(const SubsetRankTable& table);

}  // namespace roabp
