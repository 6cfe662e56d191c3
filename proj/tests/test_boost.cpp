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

#include <cmath>

#include "roabp/boost.hpp"
#include "roabp/errors.hpp"
#include "roabp/orderfind.hpp"
#include "support.hpp"

using namespace roabp;
using namespace roabp::testing;

namespace {

std::size_t int_pow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("k = 1 leaves the polynomial unchanged") {
  PrimeField f;
  Rng rng(1);
  auto base = dense_oracle(random_dense(f, 3, 2, rng));
  auto g = tensor_power_oracle({base, 1});
  CHECK(g.degree() == 2);
  for (int i = 0; i < 100; ++i) {
    auto p = f.sample_uniform(rng, 3);
    CHECK(g(p) == base(p));
  }
}

TEST_CASE("square of 1 + x1 x2") {
  PrimeField f;
  auto base = from_terms(f, 2, 1, {{{0, 0}, 1}, {{1, 1}, 1}});
  auto g = tensor_power_dense(base, 2);
  auto expected = from_terms(f, 2, 3, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}});
  CHECK(g == expected);
  CHECK(interpolate_dense(tensor_power_oracle({dense_oracle(base), 2})) == expected);
  CHECK(nisan_rank(g, VarSubset::from_indices(2, {1})) == 4);
}

TEST_CASE("square of the split product") {
  auto g = tensor_power_dense(z_product(), 2);
  auto lw = exact_width_in_order(g, Order::identity(4));
  CHECK(lw.width == 4);
  CHECK(lw.per_layer == std::vector<std::size_t>{4, 1, 4});
}

TEST_CASE("dense and oracle routes agree") {
  PrimeField f;
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    auto base = random_sparse_dense(f, 2 + i % 2, 1, rng);
    const unsigned k = 2 + i % 2;
    CHECK(tensor_power_dense(base, k) == interpolate_dense(tensor_power_oracle({dense_oracle(base), k})));
  }
}

TEST_CASE("lifted partitions") {
  CHECK(lifted_partition(VarSubset::empty(3), 2) == VarSubset::empty(6));
  CHECK(lifted_partition(VarSubset::from_indices(2, {1}), 2) == VarSubset::from_indices(4, {1, 2}));
  CHECK(lifted_partition(VarSubset::from_indices(3, {2}), 3) == VarSubset::from_indices(9, {4, 5, 6}));
}

TEST_CASE("block tensor equals Kronecker power") {
  PrimeField f;
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto base = random_sparse_dense(f, 2, 1, rng);
    VarSubset a(2, rng.next() & 3);
    auto h = block_tensor_dense(base, 2);
    auto lifted = lifted_partition(a, 2);
    const auto m = nisan_matrix(base, a);
    const auto r = nisan_rank(base, a);
    CHECK(nisan_rank(h, lifted) == r * r);
    CHECK(rank_serial(kronecker(m, m, f), f) == r * r);
  }
  auto base = from_terms(f, 2, 1, {{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(nisan_rank(block_tensor_dense(base, 2), lifted_partition(VarSubset::from_indices(2, {1}), 2)) == 4);
}

TEST_CASE("tensoring raises every rank to the k-th power") {
  PrimeField f;
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto base = random_sparse_dense(f, 2 + i % 3, 1, rng);
    const unsigned k = 2 + i % 2;
    auto g = tensor_power_dense(base, k);
    auto tf = subset_rank_table(base);
    auto tg = subset_rank_table(g);
    for (u64 mask = 0; mask < tf.ranks().size(); ++mask) CHECK(tg.rank(mask) == int_pow(tf.rank(mask), k));
    if (i < 20) CHECK(optimal_orders(tf) == optimal_orders(tg));
  }
}

TEST_CASE("ptas power and integer roots") {
  CHECK(ptas_power(2, 1) == 1);
  CHECK(ptas_power(2, 0.5) == 2);
  CHECK(ptas_power(2, 0.25) == 4);
  CHECK(ptas_power(4, 1) == 2);
  CHECK_THROWS_AS(ptas_power(1, 0.5), InputError);
  CHECK_THROWS_AS(ptas_power(2, 0), InputError);
  CHECK(kth_root_ceil(16, 4) == 2);
  CHECK(kth_root_ceil(17, 4) == 3);
  CHECK(kth_root_ceil(1, 3) == 1);
  CHECK(kth_root_ceil(0, 3) == 0);
  CHECK(kth_root_ceil((u64{1} << 62) + 1, 2) == (u64{1} << 31) + 1);
  for (u64 x = 1; x < 2000; ++x) {
    for (unsigned k = 1; k <= 4; ++k) {
      const u64 r = kth_root_ceil(x, k);
      CHECK(int_pow(r, k) >= x);
      CHECK(int_pow(r - 1, k) < x);
    }
  }
}

TEST_CASE("ptas with k = 1 calls the inner finder once on f") {
  PrimeField f;
  Rng rng(5);
  auto base = dense_oracle(random_sparse_dense(f, 3, 1, rng));
  int calls = 0;
  ApproxOracle spy{"spy", 2.0, [&](const PolyOracle& g) {
                     ++calls;
                     CHECK(g.degree() == 1);
                     auto best = brute_force_best_order(expand_oracle(g));
                     return ApproxResult{best.tau, best.width};
                   }};
  auto out = width_ptas(base, 1.0, spy);
  CHECK(calls == 1);
  CHECK(out.k == 1);
}

TEST_CASE("ptas with exact inner finder is exact") {
  PrimeField f;
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    auto g = random_sparse_dense(f, 2 + i % 3, 1 + i % 2, rng);
    auto out = width_ptas(dense_oracle(g), 0.5, brute_force_approx());
    const auto opt = brute_force_best_order(g).width;
    CHECK(out.width_estimate == opt);
    CHECK(exact_width_in_order(g, out.order).width == opt);
  }
}

TEST_CASE("mock oracle stays within twice the optimum") {
  PrimeField f;
  Rng rng(7);
  auto mock = mock_double_approx();
  for (int i = 0; i < 20; ++i) {
    auto g = random_sparse_dense(f, 3 + i % 2, 1, rng);
    auto r = mock.run(dense_oracle(g));
    const auto opt = brute_force_best_order(g).width;
    CHECK(r.width <= 2 * opt);
    CHECK(r.width >= opt);
    CHECK(exact_width_in_order(g, r.order).width == r.width);
  }
}

TEST_CASE("ptas over the mock oracle") {
  PrimeField f;
  Rng rng(8);
  auto mock = mock_double_approx();
  for (int i = 0; i < 10; ++i) {
    auto g = random_sparse_dense(f, 3, 1, rng);
    auto out = width_ptas(dense_oracle(g), 0.25, mock);
    CHECK(out.k == 4);
    const auto opt = brute_force_best_order(g).width;
    CHECK(exact_width_in_order(g, out.order).width <= static_cast<std::size_t>(std::ceil(1.25 * opt)));
    CHECK(out.width_estimate >= opt);
  }
}
