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

#include "cagekit/field.hpp"

#include <algorithm>
#include <sstream>

#include "cagekit/error.hpp"

namespace cagekit {

namespace {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, so Fermat is fine.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over F_p (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`.
Poly monic_from_index(std::uint32_t index, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[deg] = 1;
  return f;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- != 0) r *= b;
  return r;
}

}  // namespace

PrimePower prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1 || !is_prime(p)) return {};
  return {static_cast<std::uint32_t>(p), n};
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint32_t count = ipow(p, d);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

struct Field::Impl {
  FieldSpec spec;
  bool tables = false;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> inv_table;
  // p^i for i in [0, n].
  std::vector<std::uint32_t> place;

  std::uint32_t digit(std::uint32_t v, std::uint32_t i) const {
    return v / place[i] % spec.p;
  }

  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
    if (spec.n == 1) return (a + b) % spec.p;
    if (spec.p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
      r += (digit(a, i) + digit(b, i)) % spec.p * place[i];
    }
    return r;
  }

  std::uint32_t slow_neg(std::uint32_t a) const {
    if (spec.n == 1) return (spec.p - a) % spec.p;
    if (spec.p == 2) return a;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
      r += (spec.p - digit(a, i)) % spec.p * place[i];
    }
    return r;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec.p;
    const std::uint32_t n = spec.n;
    if (n == 1) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    }
    if (p == 2) {
      // Carry-less product with on-the-fly reduction.
      std::uint32_t low = 0;
      for (std::uint32_t i = 0; i < n; ++i) low |= spec.modulus[i] << i;
      std::uint32_t r = 0;
      for (; b != 0; b >>= 1) {
        if (b & 1u) r ^= a;
        a <<= 1;
        if (a & (1u << n)) a = (a ^ (1u << n)) ^ low;
      }
      return r;
    }
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t ai = digit(a, i);
      if (ai == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{ai} * digit(b, j)) % p;
      }
    }
    // x^n = -(c0 + ... + c_{n-1} x^{n-1}); modulus is monic.
    for (std::size_t k = prod.size(); k-- > n;) {
      const std::uint64_t top = prod[k];
      if (top == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t sub = top * spec.modulus[i] % p;
        prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
      }
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      r += static_cast<std::uint32_t>(prod[i]) * place[i];
    }
    return r;
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1u) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

Field::Field(std::uint32_t q) {
  const PrimePower pp = prime_power(q);
  if (pp.p == 0) {
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxOrder) {
    throw NotPrimePower("field order " + std::to_string(q) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxOrder));
  }
  auto impl = std::make_shared<Impl>();
  impl->spec.p = pp.p;
  impl->spec.n = pp.n;
  impl->spec.q = q;
  impl->place.resize(pp.n + 1);
  impl->place[0] = 1;
  for (std::uint32_t i = 1; i <= pp.n; ++i) {
    impl->place[i] = impl->place[i - 1] * pp.p;
  }

  if (pp.n == 1) {
    impl->spec.modulus = {0, 1};
  } else {
    // Enumerate (c0, ..., c_{n-1}) lexicographically, c0 most significant.
    const std::uint32_t count = ipow(pp.p, pp.n);
    for (std::uint32_t rank = 0; rank < count; ++rank) {
      Poly f(pp.n + 1, 0);
      std::uint32_t r = rank;
      for (std::uint32_t i = pp.n; i-- > 0;) {
        f[i] = r % pp.p;
        r /= pp.p;
      }
      f[pp.n] = 1;
      if (f[0] != 0 && is_irreducible(f, pp.p)) {
        impl->spec.modulus = std::move(f);
        break;
      }
    }
    if (impl->spec.modulus.empty()) {
      throw ConstructionError("no irreducible polynomial found for q=" +
                              std::to_string(q));
    }
  }

  impl->neg_table.resize(q);
  impl->inv_table.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) impl->neg_table[a] = impl->slow_neg(a);

  if (q <= kTableLimit) {
    impl->tables = true;
    impl->add_table.resize(std::size_t{q} * q);
    impl->mul_table.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::size_t at = std::size_t{a} * q + b;
        impl->add_table[at] = static_cast<std::uint16_t>(impl->slow_add(a, b));
        impl->mul_table[at] = static_cast<std::uint16_t>(impl->slow_mul(a, b));
        if (impl->mul_table[at] == 1) impl->inv_table[a] = b;
      }
    }
  } else {
    for (std::uint32_t a = 1; a < q; ++a) {
      impl->inv_table[a] = impl->slow_pow(a, q - 2);
    }
  }
  impl_ = std::move(impl);
}

const FieldSpec& Field::spec() const noexcept { return impl_->spec; }

bool Field::uses_tables() const noexcept { return impl_->tables; }

FieldElem Field::element(std::uint32_t v) const {
  if (v >= q()) {
    throw IndexOutOfRange("field element " + std::to_string(v) +
                          " out of range for q=" + std::to_string(q()));
  }
  return {v};
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (impl_->tables) return {impl_->add_table[std::size_t{a.value} * q() + b.value]};
  return {impl_->slow_add(a.value, b.value)};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  return {impl_->neg_table[a.value]};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept {
  return add(a, neg(b));
}

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (impl_->tables) return {impl_->mul_table[std::size_t{a.value} * q() + b.value]};
  return {impl_->slow_mul(a.value, b.value)};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw DivisionByZero("inverse of zero");
  return {impl_->inv_table[a.value]};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem r = one();
  while (e != 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem Field::small(std::uint32_t k) const noexcept {
  return {k % p()};
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(q());
  for (std::uint32_t v = 0; v < q(); ++v) out[v] = {v};
  return out;
}

std::string Field::modulus_string() const {
  const auto& m = spec().modulus;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || m[i] != 1) os << m[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace cagekit
