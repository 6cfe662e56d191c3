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

#include "roabp/nisan.hpp"

#include <algorithm>

#include "roabp/errors.hpp"

namespace roabp {

Matrix nisan_matrix(const DensePoly& f, const VarSubset& t) {
  const int n = f.num_vars();
  if (t.ambient() != n) throw InputError("subset ambient size differs from the polynomial's variable count");
  const std::size_t radix = f.degree() + 1;
  // Per-variable place value on the row side or the column side.
  std::vector<std::size_t> row_place(n, 0), col_place(n, 0);
  std::size_t rows = 1, cols = 1;
  for (int i = 1; i <= n; ++i) {
    if (t.contains(i)) {
      row_place[i - 1] = rows;
      rows *= radix;
    } else {
      col_place[i - 1] = cols;
      cols *= radix;
    }
  }
  Matrix m(rows, cols);
  std::vector<std::size_t> digits(n, 0);
  std::size_t r = 0, c = 0;
  for (std::size_t linear = 0; linear < f.size(); ++linear) {
    m.at(r, c) = f.coeff(linear);
    // odometer step, least significant variable first
    for (int i = 0; i < n; ++i) {
      if (++digits[i] < radix) {
        r += row_place[i];
        c += col_place[i];
        break;
      }
      digits[i] = 0;
      r -= row_place[i] * (radix - 1);
      c -= col_place[i] * (radix - 1);
    }
  }
  return m;
}

std::size_t nisan_rank(const DensePoly& f, const VarSubset& t) { return exact_rank(nisan_matrix(f, t), f.field()); }

const char* to_string(Verdict v) { return v == Verdict::at_most_w ? "at_most_w" : "exceeds_w"; }

namespace {

bool trivially_small(std::uint64_t d, int side, std::size_t w) {
  u128 rows = 1;
  for (int i = 0; i < side && rows <= w; ++i) rows *= static_cast<u128>(d) + 1;
  return rows <= w;
}

}  // namespace

RankTestReport prob_rank_at_most(const PolyOracle& f, const VarSubset& t, std::size_t w, int trials, Rng& rng) {
  const int n = f.num_vars();
  if (t.ambient() != n) throw InputError("subset ambient size differs from the oracle's variable count");
  if (trials < 1) throw InputError("rank test needs at least one trial");
  const auto& field = f.field();

  RankTestReport report;
  report.subset = t;
  report.threshold = w;
  report.bound_denominator = field.modulus();

  const int k = t.size();
  if (trivially_small(f.degree(), std::min(k, n - k), w)) {
    report.trivial = true;
    return report;
  }

  const u128 side = static_cast<u128>(w) + 1;
  report.bound_numerator = static_cast<u128>(n) * f.degree() * side * side * static_cast<u128>(trials);
  if (report.bound_numerator >= report.bound_denominator) {
    throw InputError("Schwartz-Zippel bound n*d*(w+1)^2*trials is not below p; use a larger prime");
  }

  const std::vector<int> in_t = t.elements();
  const std::vector<int> out_t = t.complement().elements();
  const std::size_t dim = w + 1;
  std::vector<FieldElement> point(n);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<FieldElement>> alpha(dim), beta(dim);
    for (auto& a : alpha) a = field.sample_uniform(rng, in_t.size());
    for (auto& b : beta) b = field.sample_uniform(rng, out_t.size());
    Matrix e(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t q = 0; q < in_t.size(); ++q) point[in_t[q] - 1] = alpha[i][q];
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t q = 0; q < out_t.size(); ++q) point[out_t[q] - 1] = beta[j][q];
        e.at(i, j) = f.eval(point);
      }
    }
    ++report.trials;
    const bool nonzero = rank_serial(std::move(e), field) == dim;
    report.trial_nonzero.push_back(nonzero);
    if (nonzero) {
      report.verdict = Verdict::exceeds_w;
      break;
    }
  }
  return report;
}

LayerWidths exact_width_in_order(const DensePoly& f, const Order& order) {
  if (order.size() != f.num_vars()) throw InputError("order length differs from the polynomial's variable count");
  LayerWidths out;
  for (int i = 1; i < order.size(); ++i) {
    out.per_layer.push_back(nisan_rank(f, order.prefix(i)));
    out.width = std::max(out.width, out.per_layer.back());
  }
  return out;
}

LayerWidths SubsetRankTable::widths_in_order(const Order& order) const {
  LayerWidths out;
  std::uint64_t mask = 0;
  for (int i = 1; i < order.size(); ++i) {
    mask |= std::uint64_t{1} << (order.at(i) - 1);
    out.per_layer.push_back(ranks_[mask]);
    out.width = std::max(out.width, ranks_[mask]);
  }
  return out;
}

namespace {

void check_table_size(const DensePoly& f) {
  if (f.num_vars() > 24) throw InputError("subset rank table limited to 24 variables");
}

}  // namespace

SubsetRankTable subset_rank_table_serial(const DensePoly& f) {
  check_table_size(f);
  const int n = f.num_vars();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t all = count - 1;
  std::vector<std::size_t> ranks(count, 0);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (mask > (all ^ mask)) continue;
    ranks[mask] = rank_serial(nisan_matrix(f, VarSubset(n, mask)), f.field());
    ranks[all ^ mask] = ranks[mask];
  }
  return SubsetRankTable(n, std::move(ranks));
}

SubsetRankTable subset_rank_table(const DensePoly& f) {
  check_table_size(f);
  const int n = f.num_vars();
  const std::int64_t count = std::int64_t{1} << n;
  const std::uint64_t all = static_cast<std::uint64_t>(count) - 1;
  std::vector<std::size_t> ranks(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t m = 0; m < count; ++m) {
    const auto mask = static_cast<std::uint64_t>(m);
    if (mask > (all ^ mask)) continue;
    const std::size_t r = rank_serial(nisan_matrix(f, VarSubset(n, mask)), f.field());
    ranks[mask] = r;
    ranks[all ^ mask] = r;
  }
  return SubsetRankTable(n, std::move(ranks));
}

}  // namespace roabp
