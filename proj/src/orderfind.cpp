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

#include "roabp/orderfind.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

#include "roabp/errors.hpp"

namespace roabp {

bool GoodSetLists::contains(const VarSubset& t) const {
  const auto k = static_cast<std::size_t>(t.size());
  if (k >= levels.size()) return false;
  return std::find(levels[k].begin(), levels[k].end(), t) != levels[k].end();
}

std::size_t GoodSetLists::total_size() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

BudgetExhausted::BudgetExhausted(GoodSetLists partial, std::uint64_t budget)
    : std::runtime_error("subset-test budget of " + std::to_string(budget) + " exhausted after " +
                         std::to_string(partial.tests) + " tests at level " +
                         std::to_string(partial.levels.size())),
      partial_(std::move(partial)) {}

GoodSetLists populate_graph(const PolyOracle& f, std::size_t w, Rng& rng, const SearchOptions& options) {
  const int n = f.num_vars();
  if (w < 1) throw InputError("populate_graph needs w >= 1");
  if (options.subset_budget < static_cast<std::uint64_t>(n)) throw InputError("subset budget must be at least n");

  // Surface a vacuous failure bound here rather than from inside the parallel loop.
  const u128 side = static_cast<u128>(w) + 1;
  if (static_cast<u128>(n) * f.degree() * side * side * static_cast<u128>(options.trials) >=
      f.field().modulus()) {
    throw InputError("Schwartz-Zippel bound n*d*(w+1)^2*trials is not below p; use a larger prime");
  }

  const Rng base(rng.next());
  GoodSetLists lists;
  lists.n = n;
  lists.levels.push_back({VarSubset::empty(n)});
  lists.reports.emplace_back();

  for (int k = 1; k < n; ++k) {
    std::vector<VarSubset> candidates;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& t0 : lists.levels[k - 1]) {
      for (int i = 1; i <= n; ++i) {
        if (t0.contains(i)) continue;
        VarSubset t = t0.with(i);
        if (seen.insert(t.mask()).second) candidates.push_back(t);
      }
    }
    if (lists.tests + candidates.size() > options.subset_budget) throw BudgetExhausted(lists, options.subset_budget);

    std::vector<RankTestReport> results(candidates.size());
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (std::int64_t c = 0; c < count; ++c) {
      try {
        Rng stream = base.split(candidates[c].mask());
        results[c] = prob_rank_at_most(f, candidates[c], w, options.trials, stream);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    lists.tests += candidates.size();

    std::vector<VarSubset> level;
    std::vector<RankTestReport> reports;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (results[c].verdict == Verdict::at_most_w) {
        level.push_back(candidates[c]);
        reports.push_back(std::move(results[c]));
      }
    }
    lists.levels.push_back(std::move(level));
    lists.reports.push_back(std::move(reports));
  }
  return lists;
}

const char* to_string(Verification v) {
  switch (v) {
    case Verification::exact: return "exact";
    case Verification::probabilistic: return "probabilistic";
    case Verification::none: return "none";
  }
  return "none";
}

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::no_path: return "no-path";
    case FailureKind::budget: return "budget";
    case FailureKind::verification: return "verification";
  }
  return "no-path";
}

namespace {

class PathSearch {
 public:
  explicit PathSearch(const GoodSetLists& lists) : lists_(lists), n_(lists.n) {
    for (const auto& level : lists.levels)
      for (const auto& t : level) good_.insert(t.mask());
  }

  std::optional<Order> run() {
    std::vector<int> path;
    if (!visit(0, path)) return std::nullopt;
    return Order(path);
  }

 private:
  bool admitted(std::uint64_t mask, int size) const {
    return size == n_ || good_.count(mask) != 0;
  }

  bool visit(std::uint64_t mask, std::vector<int>& path) {
    const int size = static_cast<int>(path.size());
    if (size == n_) return true;
    for (int t = 1; t <= n_; ++t) {
      const std::uint64_t bit = std::uint64_t{1} << (t - 1);
      if (mask & bit) continue;
      const std::uint64_t next = mask | bit;
      if (!admitted(next, size + 1) || dead_.count(next)) continue;
      path.push_back(t);
      if (visit(next, path)) return true;
      path.pop_back();
      dead_.insert(next);
    }
    return false;
  }

  const GoodSetLists& lists_;
  int n_;
  std::unordered_set<std::uint64_t> good_;
  std::unordered_set<std::uint64_t> dead_;
};

bool fits(const PolyOracle& f, std::uint64_t budget) {
  try {
    grid_size(f.num_vars(), f.degree(), budget);
    return true;
  } catch (const BudgetExceeded&) {
    return false;
  }
}

}  // namespace

FindOrderOutcome find_order(const PolyOracle& f, std::size_t w, Rng& rng, const SearchOptions& options,
                            const DensePoly* expanded) {
  GoodSetLists lists;
  try {
    lists = populate_graph(f, w, rng, options);
  } catch (const BudgetExhausted& e) {
    return NoPathFailure{FailureKind::budget, e.what(), e.partial()};
  }

  auto tau = PathSearch(lists).run();
  if (!tau) {
    return NoPathFailure{FailureKind::no_path, "no chain from the empty set to [n] at width " + std::to_string(w),
                         std::move(lists)};
  }

  OrderResult result;
  result.tau = *tau;
  result.claimed_width = w;
  result.tests = lists.tests;

  if (options.verify && (expanded != nullptr || fits(f, options.expansion_budget))) {
    LayerWidths widths = expanded ? exact_width_in_order(*expanded, result.tau)
                                  : exact_width_in_order(expand_oracle(f, options.expansion_budget), result.tau);
    if (widths.width > w) {
      return NoPathFailure{FailureKind::verification,
                           "order " + result.tau.to_string() + " has exact width " + std::to_string(widths.width),
                           std::move(lists)};
    }
    result.verification = Verification::exact;
    result.per_layer = std::move(widths.per_layer);
  } else if (options.verify) {
    Rng fresh(rng.next());
    for (int i = 1; i < f.num_vars(); ++i) {
      auto report = prob_rank_at_most(f, result.tau.prefix(i), w, options.trials, fresh);
      if (report.verdict == Verdict::exceeds_w) {
        return NoPathFailure{FailureKind::verification,
                             "prefix " + result.tau.prefix(i).to_string() + " certified above width " +
                                 std::to_string(w),
                             std::move(lists)};
      }
    }
    result.verification = Verification::probabilistic;
  }
  result.lists = std::move(lists);
  return result;
}

MinWidthOutcome min_width_search(const PolyOracle& f, Rng& rng, const SearchOptions& options) {
  const int n = f.num_vars();
  // Every Nisan rank is at most (d+1)^floor(n/2), so that width always succeeds.
  u128 ceiling = 1;
  for (int i = 0; i < n / 2 && ceiling < (u128{1} << 62); ++i) ceiling *= static_cast<u128>(f.degree()) + 1;
  const auto w_max = static_cast<std::size_t>(std::max<u128>(ceiling, 1));

  std::optional<DensePoly> expanded;
  if (options.verify) {
    try {
      expanded = expand_oracle(f, options.expansion_budget);
    } catch (const BudgetExceeded&) {
    }
  }
  const DensePoly* grid = expanded ? &*expanded : nullptr;

  std::optional<NoPathFailure> budget_failure;
  auto attempt = [&](std::size_t w) -> std::optional<OrderResult> {
    for (int round = 0; round < 2; ++round) {
      auto outcome = find_order(f, w, rng, options, grid);
      if (auto* ok = std::get_if<OrderResult>(&outcome)) return std::move(*ok);
      auto& failure = std::get<NoPathFailure>(outcome);
      if (failure.kind == FailureKind::budget) {
        budget_failure = std::move(failure);
        return std::nullopt;
      }
    }
    return std::nullopt;
  };

  std::size_t lo = 0;
  std::size_t hi = 0;
  std::optional<OrderResult> best;
  for (std::size_t w = 1;; w = std::min(2 * w, w_max)) {
    best = attempt(w);
    if (budget_failure) return MinWidthFailure{FailureKind::budget, lo, hi, budget_failure->detail};
    if (best) {
      hi = w;
      break;
    }
    lo = w;
    if (w >= w_max) return MinWidthFailure{FailureKind::no_path, lo, hi, "no width up to the trivial bound succeeded"};
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto result = attempt(mid);
    if (budget_failure) return MinWidthFailure{FailureKind::budget, lo, hi, budget_failure->detail};
    if (result) {
      hi = mid;
      best = std::move(result);
    } else {
      lo = mid;
    }
  }
  return std::move(*best);
}

void for_each_order(int n, const std::function<void(const Order&)>& fn) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    fn(Order(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

BruteForceResult best_order_from_table(const SubsetRankTable& table) {
  BruteForceResult best;
  bool have = false;
  for_each_order(table.num_vars(), [&](const Order& order) {
    const std::size_t w = table.widths_in_order(order).width;
    if (!have || w < best.width) {
      best = {w, order};
      have = true;
    }
  });
  return best;
}

BruteForceResult brute_force_best_order(const DensePoly& f, int cap) {
  if (f.num_vars() > cap) {
    throw InputError("brute-force order search is capped at n = " + std::to_string(cap) + " (got n = " +
                     std::to_string(f.num_vars()) + ")");
  }
  return best_order_from_table(subset_rank_table(f));
}

std::vector<Order> optimal_orders(const SubsetRankTable& table) {
  const std::size_t best = best_order_from_table(table).width;
  std::vector<Order> out;
  for_each_order(table.num_vars(), [&](const Order& order) {
    if (table.widths_in_order(order).width == best) out.push_back(order);
  });
  return out;
}

}  // namespace roabp
