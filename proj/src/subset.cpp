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

#include "roabp/subset.hpp"

#include <sstream>

#include "roabp/errors.hpp"

namespace roabp {

VarSubset::VarSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxVars) throw InputError("variable count " + std::to_string(n) + " out of range");
  if ((mask & ~full_mask(n)) != 0) throw InputError("subset mask has indices beyond n = " + std::to_string(n));
}

VarSubset VarSubset::full(int n) { return VarSubset(n, full_mask(n)); }

VarSubset VarSubset::from_indices(int n, const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > n) throw InputError("subset index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (mask & bit) throw InputError("subset index " + std::to_string(i) + " repeated");
    mask |= bit;
  }
  return VarSubset(n, mask);
}

VarSubset VarSubset::parse(int n, const std::string& text) {
  std::vector<int> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw InputError("bad subset entry '" + item + "'");
      indices.push_back(value);
    } catch (const std::logic_error&) {
      throw InputError("bad subset entry '" + item + "'");
    }
  }
  return from_indices(n, indices);
}

std::vector<int> VarSubset::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string VarSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace roabp
