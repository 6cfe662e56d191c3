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

#include "roabp/roabp.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "roabp/errors.hpp"

namespace roabp {

Order::Order(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  const int n = static_cast<int>(sigma_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma_) {
    if (v < 1 || v > n || seen[v]) throw InputError("order is not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Order Order::identity(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return Order(std::move(s));
}

Order Order::parse(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::logic_error&) {
      throw InputError("bad order entry '" + token + "'");
    }
    if (used != token.size()) throw InputError("bad order entry '" + token + "'");
    values.push_back(v);
  }
  return Order(std::move(values));
}

Order Order::inverse() const {
  std::vector<int> inv(sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i] - 1] = static_cast<int>(i) + 1;
  return Order(std::move(inv));
}

Order Order::reversed() const { return Order(std::vector<int>(sigma_.rbegin(), sigma_.rend())); }

VarSubset Order::prefix(int len) const {
  std::uint64_t mask = 0;
  for (int i = 0; i < len; ++i) mask |= std::uint64_t{1} << (sigma_[i] - 1);
  return VarSubset(size(), mask);
}

std::string Order::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sigma_[i]);
  }
  return out;
}

Roabp::Roabp(PrimeField field, std::uint64_t d, Order order, std::vector<std::vector<Matrix>> layers)
    : field_(field), d_(d), order_(std::move(order)), layers_(std::move(layers)) {
  const int n = order_.size();
  if (n < 1) throw InputError("ROABP needs at least one variable");
  if (layers_.size() != static_cast<std::size_t>(n)) throw InputError("ROABP layer count differs from n");
  widths_.assign(n + 1, 0);
  widths_[0] = 1;
  for (int i = 0; i < n; ++i) {
    if (layers_[i].size() != d_ + 1) throw InputError("layer " + std::to_string(i + 1) + " needs d+1 matrices");
    const std::size_t rows = layers_[i][0].rows();
    const std::size_t cols = layers_[i][0].cols();
    if (rows != widths_[i]) throw InputError("shape chain broken entering layer " + std::to_string(i + 1));
    for (auto& m : layers_[i]) {
      if (m.rows() != rows || m.cols() != cols)
        throw InputError("coefficient matrices of layer " + std::to_string(i + 1) + " differ in shape");
      for (std::size_t r = 0; r < rows; ++r)
        for (auto& e : m.row(r)) e = field_.make(e.value);
    }
    widths_[i + 1] = cols;
  }
  if (widths_[n] != 1) throw InputError("last ROABP layer must have a single column");
}

std::size_t Roabp::width() const { return *std::max_element(widths_.begin(), widths_.end()); }

FieldElement Roabp::eval(std::span<const FieldElement> point) const {
  const int n = num_vars();
  if (point.size() != static_cast<std::size_t>(n)) throw InputError("evaluation point dimension mismatch");
  std::vector<FieldElement> vec{field_.one()};
  for (int i = 1; i <= n; ++i) {
    const FieldElement x = point[order_.at(i) - 1];
    const std::size_t cols = widths_[i];
    std::vector<FieldElement> next(cols, field_.zero());
    FieldElement xj = field_.one();
    for (std::uint64_t j = 0; j <= d_; ++j) {
      const Matrix& a = layers_[i - 1][j];
      for (std::size_t r = 0; r < vec.size(); ++r) {
        FieldElement s = field_.mul(vec[r], xj);
        if (s.value == 0) continue;
        for (std::size_t c = 0; c < cols; ++c) next[c] = field_.add(next[c], field_.mul(s, a.at(r, c)));
      }
      xj = field_.mul(xj, x);
    }
    vec = std::move(next);
  }
  return vec[0];
}

Roabp sample_random_roabp(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const Order& order,
                          Rng& rng) {
  if (n < 1 || w < 1) throw InputError("random ROABP needs n >= 1 and w >= 1");
  if (order.size() != n) throw InputError("order length differs from n");
  std::vector<std::vector<Matrix>> layers(n);
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j <= d; ++j) {
      Matrix full(w, w);
      for (std::size_t r = 0; r < w; ++r)
        for (auto& e : full.row(r)) e = field.random(rng);
      const std::size_t rows = i == 0 ? 1 : w;
      const std::size_t cols = i == n - 1 ? 1 : w;
      Matrix trimmed(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) trimmed.at(r, c) = full.at(r, c);
      layers[i].push_back(std::move(trimmed));
    }
  }
  return Roabp(field, d, order, std::move(layers));
}

namespace {

struct Expander {
  const Roabp& r;
  DensePoly& out;
  std::vector<std::size_t> place;  // (d+1)^(sigma(i)-1) per layer

  void walk(int layer, const std::vector<FieldElement>& prefix, std::size_t index) {
    const auto& field = r.field();
    const int n = r.num_vars();
    if (layer > n) {
      out.coeffs()[index] = prefix[0];
      return;
    }
    const std::size_t cols = r.widths()[layer];
    for (std::uint64_t j = 0; j <= r.degree(); ++j) {
      const Matrix& a = r.coefficient(layer, j);
      std::vector<FieldElement> next(cols, field.zero());
      for (std::size_t row = 0; row < prefix.size(); ++row) {
        if (prefix[row].value == 0) continue;
        for (std::size_t c = 0; c < cols; ++c) next[c] = field.add(next[c], field.mul(prefix[row], a.at(row, c)));
      }
      walk(layer + 1, next, index + j * place[layer - 1]);
    }
  }
};

}  // namespace

DensePoly roabp_to_dense(const Roabp& r, std::uint64_t budget) {
  const int n = r.num_vars();
  DensePoly out(r.field(), n, r.degree(), budget);
  std::vector<std::size_t> strides(n);
  std::size_t s = 1;
  for (int v = 0; v < n; ++v, s *= r.degree() + 1) strides[v] = s;
  Expander ex{r, out, {}};
  for (int i = 1; i <= n; ++i) ex.place.push_back(strides[r.order().at(i) - 1]);
  ex.walk(1, {r.field().one()}, 0);
  return out;
}

PolyOracle roabp_oracle(Roabp r) {
  auto shared = std::make_shared<const Roabp>(std::move(r));
  return PolyOracle(shared->field(), shared->num_vars(), shared->degree(), Provenance::roabp_backed,
                    [shared](std::span<const FieldElement> x) { return shared->eval(x); });
}

}  // namespace roabp
