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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace roabp {

/// A subset T of the variable indices {1, ..., n}, stored as a bitmask (bit i-1 for index i).
class VarSubset {
 public:
  static constexpr int kMaxVars = 63;

  VarSubset() = default;
  /// Throws InputError if n exceeds kMaxVars or mask has bits at or above n.
  VarSubset(int n, std::uint64_t mask);

  static VarSubset empty(int n) { return VarSubset(n, 0); }
  static VarSubset full(int n);
  /// From 1-based indices; duplicates and out-of-range indices are rejected.
  static VarSubset from_indices(int n, const std::vector<int>& indices);
  /// Parses "1,3,4"; the empty string is the empty set.
  static VarSubset parse(int n, const std::string& text);

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1) != 0; }

  VarSubset complement() const { return VarSubset(n_, ~mask_ & full_mask(n_)); }
  VarSubset with(int i) const { return VarSubset(n_, mask_ | (std::uint64_t{1} << (i - 1))); }

  /// Ascending 1-based members.
  std::vector<int> elements() const;
  std::string to_string() const;

  friend bool operator==(const VarSubset&, const VarSubset&) = default;

  static std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

}  // namespace roabp
