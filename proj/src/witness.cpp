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

#include "roabp/witness.hpp"

#include <algorithm>
#include <set>

namespace roabp {

int witness_pair_count(std::uint64_t d, std::size_t w) {
  int k = 0;
  u128 power = 1;
  while (power <= w) {
    power *= static_cast<u128>(d) + 1;
    ++k;
  }
  return k;
}

bool PairSelection::left_of() const {
  if (pairs.size() < 2) return true;
  return std::max(pairs[0].first, pairs[0].second) < std::min(pairs[1].first, pairs[1].second);
}

bool PairSelection::distinct() const {
  std::set<int> seen;
  for (auto [i, j] : pairs) {
    if (!seen.insert(i).second || !seen.insert(j).second) return false;
  }
  return true;
}

int PairSelection::split_by(const VarSubset& prefix) const {
  int split = 0;
  for (auto [i, j] : pairs)
    if (prefix.contains(i) != prefix.contains(j)) ++split;
  return split;
}

namespace {

bool is_id_prefix(const VarSubset& t) { return t.mask() == VarSubset::full_mask(t.size()); }

bool left_heavy(const VarSubset& t) {
  const int half = t.ambient() / 2;
  int left = 0, right = 0;
  for (int i : t.elements()) (i <= half ? left : right)++;
  return left >= right;
}

void check_common(int n, std::uint64_t d, std::size_t w, int k) {
  // n >= 3 log_{d+1} w  <=>  (d+1)^n >= w^3
  u128 lhs = 1;
  const u128 rhs = static_cast<u128>(w) * w * w;
  for (int i = 0; i < n && lhs < rhs; ++i) lhs *= static_cast<u128>(d) + 1;
  if (lhs < rhs) throw WitnessRejected("n-too-small", "need n >= 3 log_{d+1} w");
  // A single pair is split by some prefix of every order.
  if (k < 2) throw WitnessRejected("width-below-degree", "need w >= d+1 so that at least two pairs exist");
}

VarSubset reflect(const VarSubset& t) {
  const int n = t.ambient();
  std::vector<int> out;
  for (int i : t.elements()) out.push_back(n + 1 - i);
  return VarSubset::from_indices(n, out);
}

}  // namespace

PairSelection select_pairs(const VarSubset& t, int k) {
  const std::vector<int> inside = t.elements();
  const std::vector<int> outside = t.complement().elements();
  if (k < 2 || static_cast<int>(inside.size()) < k || static_cast<int>(outside.size()) < k) {
    throw WitnessRejected("size", "need k >= 2 members on each side of the partition");
  }
  PairSelection sel;
  sel.k = k;
  sel.pairs.emplace_back(inside.front(), outside.front());
  sel.pairs.emplace_back(inside.back(), outside.back());
  for (int l = 0; l < k - 2; ++l) sel.pairs.emplace_back(inside[1 + l], outside[1 + l]);
  if (!sel.left_of()) throw WitnessRejected("prefix", "the set or its complement is a prefix of the identity");
  return sel;
}

DensePoly pair_product_poly(const PrimeField& field, int n, std::uint64_t d, const PairSelection& selection) {
  DensePoly f(field, n, d);
  // Each factor contributes e_l to both x_i and x_j; iterate over (e_1, ..., e_k).
  const auto k = selection.pairs.size();
  std::vector<std::uint64_t> digits(k, 0);
  while (true) {
    ExponentVector e(n, 0);
    for (std::size_t l = 0; l < k; ++l) {
      e[selection.pairs[l].first - 1] = digits[l];
      e[selection.pairs[l].second - 1] = digits[l];
    }
    f.set(e, field.one());
    std::size_t l = 0;
    while (l < k && ++digits[l] > d) digits[l++] = 0;
    if (l == k) break;
  }
  return f;
}

DensePoly witness_for_id(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const VarSubset& t) {
  if (t.ambient() != n) throw InputError("subset ambient size differs from n");
  const int k = witness_pair_count(d, w);
  check_common(n, d, w, k);
  if (t.size() < k || 2 * t.size() > n) throw WitnessRejected("size", "need k <= |T| <= n/2");
  if (!left_heavy(t)) throw WitnessRejected("left-heavy", "T has more members in the right half");
  if (is_id_prefix(t)) throw WitnessRejected("prefix", "T is a prefix of the identity");
  return pair_product_poly(field, n, d, select_pairs(t, k));
}

DensePoly witness_general(const PrimeField& field, int n, std::uint64_t d, std::size_t w, const VarSubset& t,
                          const Order& sigma) {
  if (t.ambient() != n || sigma.size() != n) throw InputError("subset or order size differs from n");
  const int k = witness_pair_count(d, w);
  check_common(n, d, w, k);
  if (t.size() < k || t.size() > n - k) throw WitnessRejected("size", "need k <= |T| <= n-k");

  // Positions of T's members along sigma.
  const Order pos = sigma.inverse();
  std::vector<int> positions;
  for (int v : t.elements()) positions.push_back(pos.at(v));
  VarSubset p = VarSubset::from_indices(n, positions);
  if (is_id_prefix(p)) throw WitnessRejected("prefix", "T is a prefix of the order");
  if (is_id_prefix(p.complement())) throw WitnessRejected("prefix", "the complement of T is a prefix of the order");

  if (2 * p.size() > n) p = p.complement();
  const bool reflected = !left_heavy(p);
  if (reflected) p = reflect(p);

  PairSelection sel = select_pairs(p, k);
  for (auto& [i, j] : sel.pairs) {
    if (reflected) {
      i = n + 1 - i;
      j = n + 1 - j;
    }
    i = sigma.at(i);
    j = sigma.at(j);
  }
  return pair_product_poly(field, n, d, sel);
}

}  // namespace roabp
