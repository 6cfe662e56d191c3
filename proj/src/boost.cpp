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

#include "roabp/boost.hpp"

#include <cmath>
#include <vector>

#include "roabp/errors.hpp"
#include "roabp/orderfind.hpp"

namespace roabp {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned k) {
  u128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= base;
    if (r > (u128{1} << 63)) throw InputError("tensor power degree overflows");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t TensorSpec::tensored_degree() const { return checked_pow(base.degree() + 1, k) - 1; }

PolyOracle tensor_power_oracle(const TensorSpec& spec) {
  if (spec.k < 1) throw InputError("tensor power needs k >= 1");
  const std::uint64_t degree = spec.tensored_degree();
  std::vector<PolyOracle> factors;
  for (unsigned j = 0; j < spec.k; ++j) factors.push_back(power_substituted_oracle(spec.base, j));
  const PrimeField field = spec.base.field();
  return PolyOracle(field, spec.base.num_vars(), degree, Provenance::tensor_composite,
                    [factors, field](std::span<const FieldElement> x) {
                      FieldElement value = field.one();
                      for (const auto& factor : factors) value = field.mul(value, factor.eval(x));
                      return value;
                    });
}

DensePoly tensor_power_dense(const DensePoly& f, unsigned k, std::uint64_t budget) {
  if (k < 1) throw InputError("tensor power needs k >= 1");
  const int n = f.num_vars();
  const std::uint64_t radix = f.degree() + 1;
  const std::uint64_t degree = checked_pow(radix, k) - 1;
  DensePoly g(f.field(), n, degree, budget);
  const auto& field = f.field();
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    ExponentVector big = g.exponents(idx);
    FieldElement value = field.one();
    for (unsigned j = 0; j < k && value.value != 0; ++j) {
      ExponentVector digit(n);
      for (int i = 0; i < n; ++i) {
        digit[i] = big[i] % radix;
        big[i] /= radix;
      }
      value = field.mul(value, f.coeff(digit));
    }
    g.coeffs()[idx] = value;
  }
  return g;
}

DensePoly block_tensor_dense(const DensePoly& f, unsigned k, std::uint64_t budget) {
  if (k < 1) throw InputError("tensor power needs k >= 1");
  const int n = f.num_vars();
  if (static_cast<long>(n) * k > VarSubset::kMaxVars) throw InputError("too many block variables");
  const int nk = n * static_cast<int>(k);
  DensePoly h(f.field(), nk, f.degree(), budget);
  const auto& field = f.field();
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    const ExponentVector e = h.exponents(idx);
    FieldElement value = field.one();
    for (unsigned l = 0; l < k && value.value != 0; ++l) {
      ExponentVector slice(n);
      for (int i = 0; i < n; ++i) slice[i] = e[i * k + l];
      value = field.mul(value, f.coeff(slice));
    }
    h.coeffs()[idx] = value;
  }
  return h;
}

VarSubset lifted_partition(const VarSubset& a, unsigned k) {
  if (k < 1) throw InputError("lifted partition needs k >= 1");
  const int nk = a.ambient() * static_cast<int>(k);
  std::vector<int> members;
  for (int i : a.elements())
    for (unsigned l = 1; l <= k; ++l) members.push_back((i - 1) * static_cast<int>(k) + static_cast<int>(l));
  return VarSubset::from_indices(nk, members);
}

unsigned ptas_power(double alpha, double epsilon) {
  if (!(alpha > 1.0)) throw InputError("approximation ratio must exceed 1");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  const double ratio = std::log(alpha) / std::log1p(epsilon);
  // absorb rounding when the ratio is an exact integer, e.g. log 2 / log 2
  const double k = std::ceil(ratio - 1e-9);
  return k < 1.0 ? 1u : static_cast<unsigned>(k);
}

std::uint64_t kth_root_ceil(std::uint64_t x, unsigned k) {
  if (k == 0) throw InputError("root index must be positive");
  if (x <= 1) return x;
  auto at_least = [&](std::uint64_t r) {
    u128 p = 1;
    for (unsigned i = 0; i < k; ++i) {
      p *= r;
      if (p >= x) return true;
    }
    return p >= x;
  };
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / k)));
  if (r == 0) r = 1;
  while (r > 1 && at_least(r - 1)) --r;
  while (!at_least(r)) ++r;
  return r;
}

ApproxOracle brute_force_approx(double alpha, std::uint64_t budget) {
  return {"brute", alpha, [budget](const PolyOracle& g) {
            const auto table = subset_rank_table(expand_oracle(g, budget));
            const auto best = best_order_from_table(table);
            return ApproxResult{best.tau, best.width};
          }};
}

ApproxOracle mock_double_approx(std::uint64_t budget) {
  return {"mock2", 2.0, [budget](const PolyOracle& g) {
            const auto table = subset_rank_table(expand_oracle(g, budget));
            const std::size_t opt = best_order_from_table(table).width;
            ApproxResult worst{Order::identity(g.num_vars()), 0};
            for_each_order(g.num_vars(), [&](const Order& order) {
              const std::size_t w = table.widths_in_order(order).width;
              if (w <= 2 * opt && w > worst.width) worst = {order, w};
            });
            return worst;
          }};
}

PtasResult width_ptas(const PolyOracle& f, double epsilon, const ApproxOracle& approx) {
  PtasResult out;
  out.k = ptas_power(approx.alpha, epsilon);
  const PolyOracle g = out.k == 1 ? f : tensor_power_oracle({f, out.k});
  ApproxResult inner = approx.run(g);
  out.order = inner.order;
  out.tensored_width = inner.width;
  out.width_estimate = kth_root_ceil(inner.width, out.k);
  return out;
}

}  // namespace roabp
