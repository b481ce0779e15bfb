// Copyright 2026 The cagekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cagekit {

// Element of GF(p^n). The value packs the polynomial coefficients in base p:
// value = c0 + c1*p + ... + c_{n-1}*p^{n-1}. 0 and 1 are the identities.
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  // n+1 base-p coefficients, constant term first, leading coefficient 1.
  std::vector<std::uint32_t> modulus;
};

// Immutable finite field GF(q). Copies share the same arithmetic tables.
//
// The modulus is the lexicographically smallest monic irreducible polynomial
// of degree n, comparing coefficient vectors (c0, c1, ..., c_{n-1}) with c0
// as the most significant key. For n = 1 the field is plain arithmetic mod p
// and the modulus is reported as x.
class Field {
 public:
  // Largest order for which q*q addition/multiplication tables are built.
  static constexpr std::uint32_t kTableLimit = 512;
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Throws NotPrimePower when q < 2, q is not a prime power, or q > kMaxOrder.
  explicit Field(std::uint32_t q);

  const FieldSpec& spec() const noexcept;
  std::uint32_t p() const noexcept { return spec().p; }
  std::uint32_t n() const noexcept { return spec().n; }
  std::uint32_t q() const noexcept { return spec().q; }
  bool uses_tables() const noexcept;

  static constexpr FieldElem zero() noexcept { return {0}; }
  static constexpr FieldElem one() noexcept { return {1}; }

  // Checked conversion; throws IndexOutOfRange when v >= q.
  FieldElem element(std::uint32_t v) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  // Throws DivisionByZero for a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  // k * 1 in the prime subfield, e.g. small(2) for the "2" in 2ab.
  FieldElem small(std::uint32_t k) const noexcept;

  // All q elements in encoding order 0..q-1.
  std::vector<FieldElem> elements() const;

  // Human-readable modulus, e.g. "x^2+x+1".
  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.spec().q == b.spec().q;
  }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

inline Field make_field(std::uint32_t q) { return Field(q); }

// Prime-power factorization helper: returns {p, n} with q = p^n, or {0, 0}.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
};
PrimePower prime_power(std::uint64_t q) noexcept;
inline bool is_prime_power(std::uint64_t q) noexcept {
  return prime_power(q).p != 0;
}

// Polynomials over F_p with coefficients constant-term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace cagekit
