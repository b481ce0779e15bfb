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

#include <random>
#include <set>

#include "cagekit/error.hpp"
#include "cagekit/field.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using cagekit::Field;
using cagekit::FieldElem;

namespace {

const std::vector<std::uint32_t> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

std::vector<std::uint32_t> low_coefficients(const Field& f) {
  const auto& m = f.spec().modulus;
  return {m.begin(), m.end() - 1};
}

// A quotient ring F_p[x]/(f) is a field iff it has no zero divisors.
bool quotient_is_field(std::uint32_t p, std::uint32_t n, const testing::Poly& low) {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = a; b < q; ++b) {
      if (testing::slow_mul(a, b, p, n, low) == 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree n with c0 as the most significant key.
testing::Poly reference_modulus(std::uint32_t p, std::uint32_t n) {
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint32_t k = 0; k < count; ++k) {
    testing::Poly low(n);
    std::uint32_t rest = k;
    for (std::uint32_t i = n; i-- > 0; rest /= p) low[i] = rest % p;
    if (quotient_is_field(p, n, low)) return low;
  }
  return {};
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("documented moduli") {
    CHECK(Field(4).modulus_string() == "x^2+x+1");
    CHECK(Field(9).modulus_string() == "x^2+1");
    CHECK(Field(8).modulus_string() == "x^3+x^2+1");
    CHECK(Field(7).modulus_string() == "x");
    CHECK(Field(4).spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field(9).spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  }

  TEST_CASE("modulus matches the zero-divisor scan") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u}) {
      CAPTURE(q);
      const Field f(q);
      CHECK(low_coefficients(f) == reference_modulus(f.p(), f.n()));
    }
  }

  TEST_CASE("single products") {
    const Field f4(4);
    CHECK(f4.mul(FieldElem{2}, FieldElem{2}) == FieldElem{3});
    CHECK(f4.mul(FieldElem{2}, FieldElem{3}) == FieldElem{1});
    const Field f5(5);
    CHECK(f5.inv(FieldElem{2}) == FieldElem{3});
    const Field f9(9);
    // x * x = -1 = 2
    CHECK(f9.mul(FieldElem{3}, FieldElem{3}) == FieldElem{2});
  }

  TEST_CASE("arithmetic agrees with schoolbook products") {
    for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u}) {
      CAPTURE(q);
      const Field f(q);
      const auto low = low_coefficients(f);
      for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
          REQUIRE(f.mul(FieldElem{a}, FieldElem{b}).value ==
                  testing::slow_mul(a, b, f.p(), f.n(), low));
        }
      }
    }
  }

  TEST_CASE("untabled orders agree with schoolbook products") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {625u, 729u, 1024u, 2401u, 4096u, 65536u}) {
      CAPTURE(q);
      const Field f(q);
      CHECK_FALSE(f.uses_tables());
      const auto low = low_coefficients(f);
      for (int i = 0; i < 2000; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng() % q);
        const std::uint32_t b = static_cast<std::uint32_t>(rng() % q);
        REQUIRE(f.mul(FieldElem{a}, FieldElem{b}).value ==
                testing::slow_mul(a, b, f.p(), f.n(), low));
        const std::uint32_t sum = testing::pack(
            [&] {
              auto x = testing::unpack(a, f.p(), f.n());
              const auto y = testing::unpack(b, f.p(), f.n());
              for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] + y[k]) % f.p();
              return x;
            }(),
            f.p());
        REQUIRE(f.add(FieldElem{a}, FieldElem{b}).value == sum);
      }
    }
    CHECK(Field(512).uses_tables());
  }

  TEST_CASE("field axioms, exhaustive for small orders") {
    for (std::uint32_t q : kSmallOrders) {
      CAPTURE(q);
      const Field f(q);
      const auto all = f.elements();
      REQUIRE(all.size() == q);
      for (FieldElem a : all) {
        CHECK(f.add(a, Field::zero()) == a);
        CHECK(f.mul(a, Field::one()) == a);
        CHECK(f.add(a, f.neg(a)) == Field::zero());
        CHECK(f.sub(a, a) == Field::zero());
        if (a != Field::zero()) CHECK(f.mul(a, f.inv(a)) == Field::one());
        for (FieldElem b : all) {
          CHECK(f.add(a, b) == f.add(b, a));
          CHECK(f.mul(a, b) == f.mul(b, a));
          CHECK(f.sub(f.add(a, b), b) == a);
          for (FieldElem c : all) {
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          }
        }
      }
    }
  }

  TEST_CASE("every nonzero element satisfies a^(q-1) = 1") {
    for (std::uint32_t q : {64u, 81u, 125u, 243u, 729u, 1024u, 65536u}) {
      CAPTURE(q);
      const Field f(q);
      for (std::uint32_t v = 1; v < q; ++v) {
        REQUIRE(f.pow(FieldElem{v}, q - 1) == Field::one());
      }
      CHECK(f.pow(Field::zero(), 0) == Field::one());
      CHECK(f.pow(Field::zero(), 5) == Field::zero());
    }
  }

  TEST_CASE("Frobenius is an automorphism fixing the prime field") {
    for (std::uint32_t q : kSmallOrders) {
      CAPTURE(q);
      const Field f(q);
      std::set<std::uint32_t> image;
      std::size_t fixed = 0;
      for (FieldElem a : f.elements()) {
        const FieldElem fa = f.pow(a, f.p());
        image.insert(fa.value);
        fixed += fa == a ? 1 : 0;
        for (FieldElem b : f.elements()) {
          CHECK(f.pow(f.add(a, b), f.p()) == f.add(fa, f.pow(b, f.p())));
          CHECK(f.pow(f.mul(a, b), f.p()) == f.mul(fa, f.pow(b, f.p())));
        }
      }
      CHECK(image.size() == q);
      CHECK(fixed == f.p());
    }
  }

  TEST_CASE("subfield of F_16 fixed by a -> a^4 has four elements") {
    const Field f(16);
    std::size_t fixed = 0;
    for (FieldElem a : f.elements()) fixed += f.pow(a, 4) == a ? 1 : 0;
    CHECK(fixed == 4);
  }

  TEST_CASE("prime-subfield constants") {
    for (std::uint32_t q : kSmallOrders) {
      const Field f(q);
      CHECK(f.small(0) == Field::zero());
      CHECK(f.small(1) == Field::one());
      CHECK(f.small(2) == f.add(Field::one(), Field::one()));
      CHECK(f.small(f.p()) == Field::zero());
    }
  }

  TEST_CASE("construction is deterministic") {
    for (std::uint32_t q : {16u, 81u, 1024u}) {
      const Field a(q);
      const Field b(q);
      CHECK(a.spec().modulus == b.spec().modulus);
      for (std::uint32_t v = 0; v < std::min(q, 64u); ++v) {
        for (std::uint32_t w = 0; w < std::min(q, 64u); ++w) {
          CHECK(a.mul(FieldElem{v}, FieldElem{w}) == b.mul(FieldElem{v}, FieldElem{w}));
        }
      }
    }
  }

  TEST_CASE("prime power detection") {
    CHECK(cagekit::prime_power(2).p == 2);
    CHECK(cagekit::prime_power(2).n == 1);
    CHECK(cagekit::prime_power(729).p == 3);
    CHECK(cagekit::prime_power(729).n == 6);
    for (std::uint64_t bad : {0ull, 1ull, 6ull, 12ull, 100ull, 1000ull}) {
      CAPTURE(bad);
      CHECK_FALSE(cagekit::is_prime_power(bad));
    }
    CHECK(cagekit::is_irreducible({1, 1, 1}, 2));
    CHECK_FALSE(cagekit::is_irreducible({1, 0, 1}, 2));
    CHECK(cagekit::is_irreducible({1, 0, 1}, 3));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Field(6), cagekit::NotPrimePower);
    CHECK_THROWS_AS(Field(0), cagekit::NotPrimePower);
    CHECK_THROWS_AS(Field(1), cagekit::NotPrimePower);
    CHECK_THROWS_AS(Field(65537), cagekit::NotPrimePower);
    CHECK_THROWS_AS(Field(1u << 17), cagekit::NotPrimePower);
    const Field f(7);
    CHECK_THROWS_AS(f.inv(Field::zero()), cagekit::DivisionByZero);
    CHECK_THROWS_AS(f.element(7), cagekit::IndexOutOfRange);
    CHECK(f.element(6) == FieldElem{6});
  }
}
