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
#include <string>

#include "roabp/nisan.hpp"
#include "roabp/poly.hpp"
#include "roabp/roabp.hpp"

namespace roabp {

/// g(x) = prod_{j<k} f(x_1^((d+1)^j), ..., x_n^((d+1)^j)), of individual degree (d+1)^k - 1.
struct TensorSpec {
  PolyOracle base;
  unsigned k = 1;

  std::uint64_t tensored_degree() const;
};

PolyOracle tensor_power_oracle(const TensorSpec& spec);

/// The same g built directly on the coefficient grid: the coefficient at exponents E is the
/// product over j of f's coefficient at the j-th base-(d+1) digits of E.
DensePoly tensor_power_dense(const DensePoly& f, unsigned k, std::uint64_t budget = kDefaultExpansionBudget);

/// h_k(Y) = prod_{l=1..k} f(y_{1,l}, ..., y_{n,l}) on n k variables; y_{i,l} is variable
/// (i-1) k + l, so block Y_i is contiguous.
DensePoly block_tensor_dense(const DensePoly& f, unsigned k, std::uint64_t budget = kDefaultExpansionBudget);

/// Union of the blocks Y_i for i in `a`, as a subset of the n k block variables.
VarSubset lifted_partition(const VarSubset& a, unsigned k);

/// Least k >= 1 with (1+epsilon)^k >= alpha.
unsigned ptas_power(double alpha, double epsilon);

/// Least r with r^k >= x.
std::uint64_t kth_root_ceil(std::uint64_t x, unsigned k);

struct ApproxResult {
  Order order;
  std::uint64_t width = 0;
};

/// An order finder with a declared approximation ratio alpha > 1.
struct ApproxOracle {
  std::string name;
  double alpha = 2.0;
  std::function<ApproxResult(const PolyOracle&)> run;
};

/// Expands the input and returns an exact optimum; declared ratio `alpha`.
ApproxOracle brute_force_approx(double alpha = 1.01, std::uint64_t budget = kDefaultExpansionBudget);

/// Expands the input and returns the worst order whose width is still within twice the
/// optimum (lexicographically least among ties); declared ratio 2.
ApproxOracle mock_double_approx(std::uint64_t budget = kDefaultExpansionBudget);

struct PtasResult {
  Order order;
  std::uint64_t width_estimate = 0;  // ceil((w*)^(1/k))
  unsigned k = 1;
  std::uint64_t tensored_width = 0;  // w* reported by the inner oracle
};

/// Runs `approx` on the k-th tensor power of f, k = ceil(log alpha / log(1+epsilon)), and
/// returns its order unchanged together with the k-th root of its width.
PtasResult width_ptas(const PolyOracle& f, double epsilon, const ApproxOracle& approx);

}  // namespace roabp
