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

#include "roabp/errors.hpp"
#include "roabp/poly.hpp"
#include "roabp/reduction.hpp"
#include "support.hpp"

using namespace roabp;
using roabp::testing::from_terms;
using roabp::testing::random_sparse_dense;

namespace {

std::vector<FieldElement> pt(std::initializer_list<u64> v) {
  std::vector<FieldElement> out;
  for (u64 x : v) out.push_back({x});
  return out;
}

}  // namespace

TEST_CASE("dense evaluation") {
  PrimeField f7(7);
  auto f = from_terms(f7, 2, 1, {{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(dense_eval(f, pt({2, 3})).value == 0);
  CHECK(dense_eval(DensePoly(f7, 3, 2), pt({1, 5, 6})).value == 0);
  PrimeField big;
  auto edge = from_terms(big, 2, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}});
  CHECK(dense_eval(edge, pt({1, 1})).value == 3);
  CHECK(sparse_eval(dense_to_sparse(edge), pt({1, 1})).value == 3);
  CHECK_THROWS_AS(dense_eval(edge, pt({1})), InputError);
}

TEST_CASE("sparse to dense placement") {
  PrimeField f;
  CHECK(sparse_to_dense(SparsePoly(f, 2, 1, {})).is_zero());
  auto g = sparse_to_dense(SparsePoly(f, 2, 1, {{{1, 1}, f.one()}}));
  REQUIRE(g.size() == 4);
  CHECK(g.coeff(0).value == 0);
  CHECK(g.coeff(1).value == 0);
  CHECK(g.coeff(2).value == 0);
  CHECK(g.coeff(3).value == 1);
  auto p3 = sparse_to_dense(build_gadget_poly(Graph::path(3), f));
  CHECK(std::count_if(p3.coeffs().begin(), p3.coeffs().end(), [](auto c) { return c.value != 0; }) == 5);
}

TEST_CASE("sparse validation") {
  PrimeField f;
  CHECK_THROWS_AS(SparsePoly(f, 2, 1, {{{1, 1}, f.one()}, {{1, 1}, f.one()}}), InputError);
  CHECK_THROWS_AS(SparsePoly(f, 2, 1, {{{2, 0}, f.one()}}), InputError);
  CHECK_THROWS_AS(SparsePoly(f, 2, 1, {{{1}, f.one()}}), InputError);
  CHECK_THROWS_AS(SparsePoly(f, 2, 1, {{{1, 0}, f.zero()}}), InputError);
}

TEST_CASE("linear index layout") {
  PrimeField f;
  DensePoly g(f, 3, 2);
  CHECK(g.size() == 27);
  CHECK(g.linear_index({1, 0, 0}) == 1);
  CHECK(g.linear_index({0, 1, 0}) == 3);
  CHECK(g.linear_index({2, 1, 2}) == 2 + 3 + 18);
  CHECK(g.exponents(23) == ExponentVector{2, 1, 2});
  CHECK_THROWS_AS(DensePoly(f, 30, 2, 1000), BudgetExceeded);
  CHECK_THROWS_AS(DensePoly(f, 2, 1, std::vector<FieldElement>(3)), InputError);
}

TEST_CASE("dense-sparse round trip") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    PrimeField f(i % 2 ? 101 : kMersenne61);
    auto g = random_sparse_dense(f, 1 + rng.next() % 4, rng.next() % 4, rng);
    CHECK(sparse_to_dense(dense_to_sparse(g)) == g);
  }
}

TEST_CASE("dense oracle agrees with dense_eval on the full grid") {
  Rng rng(4);
  PrimeField f;
  for (int n = 1; n <= 3; ++n) {
    for (u64 d = 0; d <= 2; ++d) {
      auto g = random_sparse_dense(f, n, d, rng);
      auto oracle = dense_oracle(g);
      auto sparse = dense_to_sparse(g);
      for (std::size_t idx = 0; idx < g.size(); ++idx) {
        std::vector<FieldElement> point;
        for (u64 e : g.exponents(idx)) point.push_back({e});
        CHECK(oracle(point) == dense_eval(g, point));
        CHECK(sparse_eval(sparse, point) == dense_eval(g, point));
      }
    }
  }
}

TEST_CASE("power substitution") {
  PrimeField f7(7);
  auto x1 = dense_oracle(from_terms(f7, 1, 1, {{{1}, 1}}));
  auto sq = power_substituted_oracle(x1, 1);
  CHECK(sq.degree() == 2);
  CHECK(sq(pt({3})).value == 2);
  auto g = dense_oracle(from_terms(f7, 2, 1, {{{0, 0}, 1}, {{1, 1}, 1}}));
  CHECK(power_substituted_oracle(g, 1)(pt({2, 3})).value == 2);
  CHECK(power_substituted_oracle(g, 2).degree() == 4);

  PrimeField f;
  Rng rng(2);
  auto h = dense_oracle(random_sparse_dense(f, 3, 2, rng));
  auto same = power_substituted_oracle(h, 0);
  for (int i = 0; i < 100; ++i) {
    auto p = f.sample_uniform(rng, 3);
    CHECK(same(p) == h(p));
  }
}

TEST_CASE("interpolation recovers the grid") {
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    PrimeField f(i % 3 == 0 ? 7 : kMersenne61);
    const u64 d = rng.next() % 4;
    auto g = random_sparse_dense(f, 1 + rng.next() % 3, d, rng);
    auto evaluator = g;  // strip the backing so the oracle is a true black box
    PolyOracle black(f, g.num_vars(), d, Provenance::other,
                     [evaluator](std::span<const FieldElement> x) { return dense_eval(evaluator, x); });
    CHECK(interpolate_dense(black) == g);
    CHECK(expand_oracle(dense_oracle(g)) == g);
  }
  PrimeField f5(5);
  auto g = DensePoly(f5, 1, 4);
  CHECK_THROWS_AS(interpolate_dense(
                      PolyOracle(f5, 1, 4, Provenance::other, [](std::span<const FieldElement>) { return FieldElement{}; })),
                  InputError);
}
