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

#include "roabp/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "roabp/errors.hpp"
#include "roabp/linalg.hpp"

namespace roabp {

std::uint64_t grid_size(int n, std::uint64_t d, std::uint64_t budget, const std::string& what) {
  if (n < 0) throw InputError("negative variable count");
  u128 size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<u128>(d) + 1;
    if (size > budget) {
      // report the saturated requirement rather than overflowing
      u128 full = 1;
      for (int k = 0; k < n && full <= ~std::uint64_t{0} / (d + 1); ++k) full *= static_cast<u128>(d) + 1;
      throw BudgetExceeded(what, static_cast<std::uint64_t>(std::min<u128>(full, ~std::uint64_t{0})), budget);
    }
  }
  return static_cast<std::uint64_t>(size);
}

DensePoly::DensePoly(PrimeField field, int n, std::uint64_t d, std::uint64_t budget)
    : field_(field), n_(n), d_(d), coeffs_(grid_size(n, d, budget)) {}

DensePoly::DensePoly(PrimeField field, int n, std::uint64_t d, std::vector<FieldElement> coeffs)
    : field_(field), n_(n), d_(d), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_size(n, d, ~std::uint64_t{0})) {
    throw InputError("dense grid has " + std::to_string(coeffs_.size()) + " entries, expected (d+1)^n");
  }
  for (auto& c : coeffs_) c = field_.make(c.value);
}

std::size_t DensePoly::linear_index(const ExponentVector& e) const {
  if (e.size() != static_cast<std::size_t>(n_)) throw InputError("exponent vector length mismatch");
  std::size_t index = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    if (e[i] > d_) throw InputError("exponent exceeds individual degree");
    index = index * (d_ + 1) + e[i];
  }
  return index;
}

ExponentVector DensePoly::exponents(std::size_t linear) const {
  ExponentVector e(n_);
  for (int i = 0; i < n_; ++i) {
    e[i] = linear % (d_ + 1);
    linear /= (d_ + 1);
  }
  return e;
}

bool DensePoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.value == 0; });
}

SparsePoly::SparsePoly(PrimeField field, int n, std::uint64_t d, std::vector<SparseTerm> terms)
    : field_(field), n_(n), d_(d), terms_(std::move(terms)) {
  std::set<ExponentVector> seen;
  for (auto& t : terms_) {
    if (t.exponents.size() != static_cast<std::size_t>(n)) throw InputError("term has wrong number of exponents");
    for (auto e : t.exponents)
      if (e > d) throw InputError("term exponent " + std::to_string(e) + " exceeds d = " + std::to_string(d));
    t.coeff = field_.make(t.coeff.value);
    if (t.coeff.value == 0) throw InputError("sparse term with zero coefficient");
    if (!seen.insert(t.exponents).second) throw InputError("duplicate exponent vector in sparse polynomial");
  }
}

FieldElement dense_eval(const DensePoly& f, std::span<const FieldElement> point) {
  if (point.size() != static_cast<std::size_t>(f.num_vars())) throw InputError("evaluation point dimension mismatch");
  const auto& field = f.field();
  const std::size_t radix = f.degree() + 1;
  std::vector<FieldElement> work(f.coeffs().begin(), f.coeffs().end());
  std::size_t len = work.size();
  // Horner on the least significant variable, collapsing one digit per pass.
  for (int i = 0; i < f.num_vars(); ++i) {
    const FieldElement x = point[i];
    const std::size_t next_len = len / radix;
    for (std::size_t block = 0; block < next_len; ++block) {
      FieldElement acc = field.zero();
      for (std::size_t k = radix; k-- > 0;) acc = field.add(field.mul(acc, x), work[block * radix + k]);
      work[block] = acc;
    }
    len = next_len;
  }
  return work[0];
}

FieldElement sparse_eval(const SparsePoly& f, std::span<const FieldElement> point) {
  if (point.size() != static_cast<std::size_t>(f.num_vars())) throw InputError("evaluation point dimension mismatch");
  const auto& field = f.field();
  FieldElement sum = field.zero();
  for (const auto& t : f.terms()) {
    FieldElement term = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0) term = field.mul(term, field.pow(point[i], t.exponents[i]));
    sum = field.add(sum, term);
  }
  return sum;
}

DensePoly sparse_to_dense(const SparsePoly& f, std::uint64_t budget) {
  DensePoly out(f.field(), f.num_vars(), f.degree(), budget);
  for (const auto& t : f.terms()) out.set(t.exponents, t.coeff);
  return out;
}

SparsePoly dense_to_sparse(const DensePoly& f) {
  std::vector<SparseTerm> terms;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.coeff(i).value != 0) terms.push_back({f.exponents(i), f.coeff(i)});
  return SparsePoly(f.field(), f.num_vars(), f.degree(), std::move(terms));
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::dense_backed: return "dense-backed";
    case Provenance::roabp_backed: return "roabp-backed";
    case Provenance::tensor_composite: return "tensor-composite";
    case Provenance::sparse_backed: return "sparse-backed";
    case Provenance::other: return "other";
  }
  return "other";
}

PolyOracle::PolyOracle(PrimeField field, int n, std::uint64_t d, Provenance provenance, EvalFn fn,
                       std::shared_ptr<const DensePoly> backing)
    : field_(field), n_(n), d_(d), provenance_(provenance), fn_(std::move(fn)), backing_(std::move(backing)) {}

FieldElement PolyOracle::eval(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(n_)) throw InputError("oracle query dimension mismatch");
  return fn_(point);
}

PolyOracle dense_oracle(DensePoly f) {
  auto shared = std::make_shared<const DensePoly>(std::move(f));
  return PolyOracle(
      shared->field(), shared->num_vars(), shared->degree(), Provenance::dense_backed,
      [shared](std::span<const FieldElement> x) { return dense_eval(*shared, x); }, shared);
}

PolyOracle sparse_oracle(SparsePoly f) {
  auto shared = std::make_shared<const SparsePoly>(std::move(f));
  return PolyOracle(shared->field(), shared->num_vars(), shared->degree(), Provenance::sparse_backed,
                    [shared](std::span<const FieldElement> x) { return sparse_eval(*shared, x); });
}

PolyOracle power_substituted_oracle(const PolyOracle& f, unsigned j) {
  u128 exponent = 1;
  for (unsigned i = 0; i < j; ++i) {
    exponent *= static_cast<u128>(f.degree()) + 1;
    if (exponent > (~std::uint64_t{0}) / (f.degree() + 1)) throw InputError("power substitution exponent overflows");
  }
  const std::uint64_t e = static_cast<std::uint64_t>(exponent);
  if (e == 1) return f;
  const PrimeField field = f.field();
  return PolyOracle(
      field, f.num_vars(), f.degree() * e, Provenance::tensor_composite,
      [f, e, field](std::span<const FieldElement> x) {
        std::vector<FieldElement> powered(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) powered[i] = field.pow(x[i], e);
        return f.eval(powered);
      });
}

namespace {

// Inverse of the Vandermonde matrix V[a][k] = a^k for the nodes a = 0..d.
Matrix inverse_vandermonde(std::uint64_t d, const PrimeField& field) {
  const std::size_t m = d + 1;
  Matrix aug(m, 2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < m; ++k) aug.at(a, k) = field.pow(field.make(a), k);
    aug.at(a, m + a) = field.one();
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (aug.at(p, c).value == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * m; ++j) std::swap(aug.at(p, j), aug.at(c, j));
    FieldElement inv = *field.inv(aug.at(c, c));
    for (std::size_t j = 0; j < 2 * m; ++j) aug.at(c, j) = field.mul(aug.at(c, j), inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || aug.at(r, c).value == 0) continue;
      FieldElement factor = aug.at(r, c);
      for (std::size_t j = 0; j < 2 * m; ++j)
        aug.at(r, j) = field.sub(aug.at(r, j), field.mul(factor, aug.at(c, j)));
    }
  }
  Matrix inv(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) inv.at(r, c) = aug.at(r, m + c);
  return inv;
}

}  // namespace

DensePoly interpolate_dense(const PolyOracle& f, std::uint64_t budget) {
  const auto& field = f.field();
  const std::uint64_t d = f.degree();
  field.require_degree(d);
  const int n = f.num_vars();
  const std::uint64_t size = grid_size(n, d, budget, "oracle interpolation");
  const std::uint64_t radix = d + 1;

  std::vector<FieldElement> values(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
    std::vector<FieldElement> point(n);
    std::uint64_t rest = static_cast<std::uint64_t>(idx);
    for (int i = 0; i < n; ++i) {
      point[i] = field.make(rest % radix);
      rest /= radix;
    }
    values[idx] = f.eval(point);
  }

  // Apply V^{-1} along every axis.
  const Matrix vinv = inverse_vandermonde(d, field);
  std::vector<FieldElement> fibre(radix);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    for (std::uint64_t base = 0; base < size; ++base) {
      if ((base / stride) % radix != 0) continue;
      for (std::uint64_t a = 0; a < radix; ++a) fibre[a] = values[base + a * stride];
      for (std::uint64_t k = 0; k < radix; ++k) {
        FieldElement acc = field.zero();
        for (std::uint64_t a = 0; a < radix; ++a) acc = field.add(acc, field.mul(vinv.at(k, a), fibre[a]));
        values[base + k * stride] = acc;
      }
    }
    stride *= radix;
  }
  return DensePoly(field, n, d, std::move(values));
}

DensePoly expand_oracle(const PolyOracle& f, std::uint64_t budget) {
  if (const auto& backing = f.dense_backing()) {
    grid_size(backing->num_vars(), backing->degree(), budget, "dense expansion");
    return *backing;
  }
  return interpolate_dense(f, budget);
}

}  // namespace roabp
