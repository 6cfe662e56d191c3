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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "roabp/ffield.hpp"
#include "roabp/linalg.hpp"
#include "roabp/nisan.hpp"
#include "roabp/poly.hpp"
#include "roabp/reduction.hpp"
#include "roabp/roabp.hpp"

namespace roabp::testing {

inline DensePoly random_dense(const PrimeField& field, int n, std::uint64_t d, Rng& rng) {
  DensePoly f(field, n, d);
  for (auto& c : f.coeffs()) c = field.random(rng);
  return f;
}

// Each coefficient nonzero with probability 1/2, so small grids have varied ranks.
inline DensePoly random_sparse_dense(const PrimeField& field, int n, std::uint64_t d, Rng& rng) {
  DensePoly f(field, n, d);
  for (auto& c : f.coeffs())
    if (rng.next() & 1) c = field.random(rng);
  return f;
}

inline DensePoly from_terms(const PrimeField& field, int n, std::uint64_t d,
                            const std::vector<std::pair<ExponentVector, std::uint64_t>>& terms) {
  DensePoly f(field, n, d);
  for (const auto& [e, c] : terms) f.set(e, field.add(f.coeff(e), field.make(c)));
  return f;
}

// (z1 + z2)(z3 + z4), multilinear.
inline DensePoly z_product(const PrimeField& field = PrimeField()) {
  return from_terms(field, 4, 1,
                    {{{1, 0, 1, 0}, 1}, {{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}, {{0, 1, 0, 1}, 1}});
}

// prod_{i<=m} (x_i + y_i) with x_i = variable 2i-1 and y_i = variable 2i.
inline DensePoly interleaved_pairs(int m, const PrimeField& field = PrimeField()) {
  DensePoly f(field, 2 * m, 1);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    ExponentVector e = f.exponents(idx);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = e[2 * i] + e[2 * i + 1] == 1;
    if (ok) f.set(e, field.one());
  }
  return f;
}

inline FieldElement det_leibniz(const std::vector<std::vector<FieldElement>>& a, const PrimeField& field) {
  const std::size_t k = a.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = field.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    FieldElement term = field.one();
    for (std::size_t i = 0; i < k; ++i) term = field.mul(term, a[i][perm[i]]);
    total = (inversions % 2) ? field.sub(total, term) : field.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor. Exponential; keep matrices at most 5 x 5.
inline std::size_t rank_by_minors(const Matrix& m, const PrimeField& field) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<FieldElement>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < c; ++j)
            if (csel[j]) sub.back().push_back(m.at(i, j));
        }
        if (det_leibniz(sub, field).value != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// Nisan matrix built from exponent vectors directly (no odometer).
inline Matrix nisan_by_exponents(const DensePoly& f, const VarSubset& t) {
  const int n = f.num_vars();
  const std::size_t radix = f.degree() + 1;
  std::size_t rows = 1, cols = 1;
  for (int i = 1; i <= n; ++i) (t.contains(i) ? rows : cols) *= radix;
  Matrix m(rows, cols);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const ExponentVector e = f.exponents(idx);
    std::size_t r = 0, c = 0, rp = 1, cp = 1;
    for (int i = 1; i <= n; ++i) {
      if (t.contains(i)) {
        r += e[i - 1] * rp;
        rp *= radix;
      } else {
        c += e[i - 1] * cp;
        cp *= radix;
      }
    }
    m.at(r, c) = f.coeff(idx);
  }
  return m;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < all.size(); ++b)
      if ((mask >> b) & 1) edges.push_back(all[b]);
    // union-find connectivity
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
      int a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline Graph random_graph(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.next() & 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace roabp::testing
