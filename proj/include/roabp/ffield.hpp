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
#include <optional>
#include <random>
#include <vector>

namespace roabp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

struct FieldElement {
  u64 value = 0;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class ArithOp { add, sub, mul, div, pow };

/// Seeded 64-bit random stream. Independent sub-streams are derived with split().
class Rng {
 public:
  explicit Rng(u64 seed) : seed_(seed), engine_(seed) {}

  u64 next() { return engine_(); }
  u64 seed() const { return seed_; }
  std::mt19937_64& engine() { return engine_; }

  /// Stream keyed on (seed, stream_id); does not advance *this.
  Rng split(u64 stream_id) const;

 private:
  u64 seed_;
  std::mt19937_64 engine_;
};

u64 splitmix64(u64 x);

/// Integers modulo an odd prime p < 2^64. Values are immutable and cheap to copy.
class PrimeField {
 public:
  /// Throws InputError unless p is an odd prime.
  explicit PrimeField(u64 p = kMersenne61);

  u64 modulus() const { return p_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement make(u64 v) const { return {v % p_}; }
  FieldElement from_signed(std::int64_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    u64 s = a.value + b.value;  // p < 2^64, but a+b may wrap for p > 2^63
    if (s < a.value || s >= p_) s -= p_;
    return {s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + (p_ - b.value)};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_raw(a.value, b.value)}; }
  FieldElement pow(FieldElement a, u64 e) const;

  /// Empty for a = 0.
  std::optional<FieldElement> inv(FieldElement a) const;
  /// Empty for b = 0.
  std::optional<FieldElement> div(FieldElement a, FieldElement b) const;

  /// Empty only for division by zero. For pow, b.value is the exponent.
  std::optional<FieldElement> arith(FieldElement a, FieldElement b, ArithOp op) const;

  FieldElement random(Rng& rng) const;
  std::vector<FieldElement> sample_uniform(Rng& rng, std::size_t count) const;

  /// Interpolating a degree-d univariate needs d+1 distinct points; enforces p >= d+2.
  void require_degree(u64 d) const;

  u64 mul_raw(u64 a, u64 b) const {
    u128 x = static_cast<u128>(a) * b;
    if (mersenne_) {
      u64 r = static_cast<u64>(x & kMersenne61) + static_cast<u64>(x >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= kMersenne61 ? r - kMersenne61 : r;
    }
    return static_cast<u64>(x % p_);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
  bool mersenne_;
};

}  // namespace roabp
