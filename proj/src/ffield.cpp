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

#include "roabp/ffield.hpp"

#include <string>

#include "roabp/errors.hpp"

namespace roabp {

namespace {

u64 powmod(u64 a, u64 e, u64 m) {
  u128 result = 1 % m;
  u128 base = a % m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<u64>(result);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a witness set for every n < 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::split(u64 stream_id) const { return Rng(splitmix64(seed_ ^ splitmix64(stream_id))); }

PrimeField::PrimeField(u64 p) : p_(p), mersenne_(p == kMersenne61) {
  if (p == 2 || !is_prime_u64(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not an odd prime");
  }
}

FieldElement PrimeField::from_signed(std::int64_t v) const {
  if (v >= 0) return make(static_cast<u64>(v));
  u64 mag = static_cast<u64>(-(v + 1)) + 1;
  return neg(make(mag));
}

FieldElement PrimeField::pow(FieldElement a, u64 e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::optional<FieldElement> PrimeField::inv(FieldElement a) const {
  if (a.value == 0) return std::nullopt;
  return pow(a, p_ - 2);
}

std::optional<FieldElement> PrimeField::div(FieldElement a, FieldElement b) const {
  auto b_inv = inv(b);
  if (!b_inv) return std::nullopt;
  return mul(a, *b_inv);
}

std::optional<FieldElement> PrimeField::arith(FieldElement a, FieldElement b, ArithOp op) const {
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
    case ArithOp::pow: return pow(a, b.value);
  }
  return std::nullopt;
}

FieldElement PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  return {dist(rng.engine())};
}

std::vector<FieldElement> PrimeField::sample_uniform(Rng& rng, std::size_t count) const {
  std::vector<FieldElement> out;
  out.reserve(count);
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back({dist(rng.engine())});
  return out;
}

void PrimeField::require_degree(u64 d) const {
  if (d > p_ - 2) {
    throw InputError("field of size " + std::to_string(p_) + " too small for individual degree " +
                     std::to_string(d) + " (need p >= d + 2)");
  }
}

}  // namespace roabp
