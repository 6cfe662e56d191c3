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

#include <doctest.h>

#include <omp.h>

#include <set>

#include "roabp/errors.hpp"
#include "roabp/orderfind.hpp"
#include "roabp/reduction.hpp"
#include "support.hpp"

using namespace roabp;
using namespace roabp::testing;

namespace {

std::set<std::uint64_t> masks(const std::vector<VarSubset>& level) {
  std::set<std::uint64_t> out;
  for (const auto& t : level) out.insert(t.mask());
  return out;
}

DensePoly monomial(int n) {
  PrimeField f;
  DensePoly g(f, n, 1);
  g.set(ExponentVector(n, 1), f.one());
  return g;
}

}  // namespace

TEST_CASE("monomial admits every subset") {
  Rng rng(1);
  auto lists = populate_graph(dense_oracle(monomial(3)), 1, rng);
  REQUIRE(lists.levels.size() == 3);
  CHECK(lists.levels[0].size() == 1);
  CHECK(lists.levels[1].size() == 3);
  CHECK(lists.levels[2].size() == 3);
}

TEST_CASE("split product lists at width 2") {
  Rng rng(2);
  auto lists = populate_graph(dense_oracle(z_product()), 2, rng);
  REQUIRE(lists.levels.size() == 4);
  CHECK(masks(lists.levels[1]) == std::set<std::uint64_t>{1, 2, 4, 8});
  CHECK(masks(lists.levels[2]) == std::set<std::uint64_t>{0b0011, 0b1100});
  CHECK(masks(lists.levels[3]) == std::set<std::uint64_t>{0b0111, 0b1011, 0b1101, 0b1110});
  // 4 singletons, 6 pairs, 4 triples
  CHECK(lists.tests == 14);
}

TEST_CASE("split product lists at width 1") {
  Rng rng(3);
  auto z = dense_oracle(z_product());
  auto lists = populate_graph(z, 1, rng);
  CHECK(lists.levels[1].empty());
  auto outcome = find_order(z, 1, rng);
  REQUIRE(std::holds_alternative<NoPathFailure>(outcome));
  CHECK(std::get<NoPathFailure>(outcome).kind == FailureKind::no_path);
}

TEST_CASE("find_order on the split product") {
  Rng rng(4);
  auto g = z_product();
  auto outcome = find_order(dense_oracle(g), 2, rng);
  REQUIRE(std::holds_alternative<OrderResult>(outcome));
  const auto& r = std::get<OrderResult>(outcome);
  CHECK(r.verification == Verification::exact);
  CHECK(exact_width_in_order(g, r.tau).width == 2);
  auto first_two = r.tau.prefix(2).mask();
  CHECK((first_two == 0b0011 || first_two == 0b1100));
  // the valid orders: first pair {1,2} or {3,4}, either internal order, then the other pair
  CHECK(optimal_orders(subset_rank_table(g)).size() == 8);
}

TEST_CASE("find_order on a monomial returns some order") {
  Rng rng(5);
  auto outcome = find_order(dense_oracle(monomial(3)), 1, rng);
  REQUIRE(std::holds_alternative<OrderResult>(outcome));
  CHECK(std::get<OrderResult>(outcome).per_layer == std::vector<std::size_t>{1, 1});
}

TEST_CASE("min_width_search examples") {
  Rng rng(6);
  auto width_of = [&](const DensePoly& g) {
    auto out = min_width_search(dense_oracle(g), rng);
    REQUIRE(std::holds_alternative<OrderResult>(out));
    return std::get<OrderResult>(out).claimed_width;
  };
  CHECK(width_of(monomial(3)) == 1);
  CHECK(width_of(z_product()) == 2);
  CHECK(width_of(sparse_to_dense(build_gadget_poly(Graph::complete(3)))) == 4);
}

TEST_CASE("brute force examples") {
  auto pairs = brute_force_best_order(interleaved_pairs(2));
  CHECK(pairs.width == 2);
  CHECK(pairs.tau == Order::parse("1,2,3,4"));

  PrimeField f;
  DensePoly constant(f, 3, 2);
  constant.set({0, 0, 0}, f.make(5));
  auto c = brute_force_best_order(constant);
  CHECK(c.width == 1);
  CHECK(c.tau == Order::identity(3));

  CHECK(brute_force_best_order(sparse_to_dense(build_gadget_poly(Graph::path(3)))).width == 3);
  CHECK_THROWS_AS(brute_force_best_order(DensePoly(f, 9, 1)), InputError);
}

TEST_CASE("enumerating orders") {
  int count = 0;
  Order previous;
  for_each_order(4, [&](const Order& o) {
    if (count++ > 0) CHECK(previous < o);
    previous = o;
  });
  CHECK(count == 24);
}

TEST_CASE("returned orders are sound") {
  PrimeField f;
  for (u64 seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    auto g = random_sparse_dense(f, 5, 1, rng);
    const std::size_t w = 1 + seed % 4;
    auto outcome = find_order(dense_oracle(g), w, rng);
    if (auto* r = std::get_if<OrderResult>(&outcome)) {
      REQUIRE(r->verification == Verification::exact);
      for (auto rank : r->per_layer) CHECK(rank <= w);
      CHECK(r->per_layer == exact_width_in_order(g, r->tau).per_layer);
    } else {
      CHECK(brute_force_best_order(g).width > w);
    }
  }
}

TEST_CASE("min_width_search matches brute force") {
  PrimeField f;
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 5;
    const u64 d = n <= 4 ? 1 + i % 2 : 1;
    auto g = random_sparse_dense(f, n, d, rng);
    auto out = min_width_search(dense_oracle(g), rng);
    REQUIRE(std::holds_alternative<OrderResult>(out));
    const auto& r = std::get<OrderResult>(out);
    CHECK(r.claimed_width == brute_force_best_order(g).width);
    CHECK(exact_width_in_order(g, r.tau).width <= r.claimed_width);
  }
}

TEST_CASE("prefix chains of the order and its reverse are admitted") {
  PrimeField f;
  for (u64 seed = 0; seed < 20; ++seed) {
    Rng rng(seed + 100);
    std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    Order sigma(perm);
    auto r = sample_random_roabp(f, 7, 2, 3, sigma, rng);
    auto lists = populate_graph(roabp_oracle(r), 3, rng);
    for (int i = 1; i < 7; ++i) {
      CHECK(lists.contains(sigma.prefix(i)));
      CHECK(lists.contains(sigma.reversed().prefix(i)));
    }
  }
}

TEST_CASE("random ROABP lists stay small") {
  PrimeField f;
  int large = 0;
  for (u64 seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    auto r = sample_random_roabp(f, 10, 2, 3, Order(perm), rng);
    auto lists = populate_graph(roabp_oracle(r), 3, rng);
    bool big = false;
    for (int level = 2; level <= 8; ++level) big = big || lists.levels[level].size() > 2;
    large += big;
  }
  CHECK(large <= 5);
}

TEST_CASE("results do not depend on the thread count") {
  PrimeField f;
  Rng make(8);
  auto r = sample_random_roabp(f, 7, 2, 3, Order::parse("5,2,7,1,3,6,4"), make);
  auto oracle = roabp_oracle(r);
  SearchOptions serial;
  serial.parallel = false;
  Rng a(9), b(9), c(9);
  auto s = populate_graph(oracle, 3, a, serial);
  auto p = populate_graph(oracle, 3, b);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  auto q = populate_graph(oracle, 3, c);
  omp_set_num_threads(saved);
  CHECK(s.levels == p.levels);
  CHECK(s.levels == q.levels);
  CHECK(s.tests == q.tests);
}

TEST_CASE("budget exhaustion") {
  Rng rng(10);
  SearchOptions tight;
  tight.subset_budget = 5;
  auto z = dense_oracle(z_product());
  try {
    populate_graph(z, 2, rng, tight);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.partial().levels.size() == 2);
    CHECK(e.partial().tests == 4);
  }
  auto outcome = find_order(z, 2, rng, tight);
  REQUIRE(std::holds_alternative<NoPathFailure>(outcome));
  CHECK(std::get<NoPathFailure>(outcome).kind == FailureKind::budget);
  auto mw = min_width_search(z, rng, tight);
  REQUIRE(std::holds_alternative<MinWidthFailure>(mw));
  CHECK(std::get<MinWidthFailure>(mw).kind == FailureKind::budget);
}

TEST_CASE("probabilistic verification beyond the expansion budget") {
  PrimeField f;
  Rng rng(11);
  auto r = sample_random_roabp(f, 6, 2, 2, Order::parse("2,4,6,1,3,5"), rng);
  SearchOptions opts;
  opts.expansion_budget = 100;
  auto outcome = find_order(roabp_oracle(r), 2, rng, opts);
  REQUIRE(std::holds_alternative<OrderResult>(outcome));
  const auto& res = std::get<OrderResult>(outcome);
  CHECK(res.verification == Verification::probabilistic);
  CHECK(res.per_layer.empty());
  CHECK(exact_width_in_order(roabp_to_dense(r), res.tau).width <= 2);
}

TEST_CASE("invalid search arguments") {
  Rng rng(12);
  auto z = dense_oracle(z_product());
  CHECK_THROWS_AS(populate_graph(z, 0, rng), InputError);
  PrimeField small(101);
  CHECK_THROWS_AS(populate_graph(dense_oracle(z_product(small)), 3, rng), InputError);
}
