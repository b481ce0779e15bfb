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

#include <set>

#include "cagekit/construct.hpp"
#include "cagekit/error.hpp"
#include "cagekit/verify.hpp"
#include "doctest.h"

using cagekit::BipartiteGraph;
using cagekit::Coord;
using cagekit::FieldElem;
using cagekit::Label;
using cagekit::Stage;

namespace {

Coord e(std::uint32_t v) { return Coord(FieldElem{v}); }
const Coord kRho = Coord::rho();

Label L(std::uint8_t side, Coord a, Coord b, Coord c) {
  return cagekit::make_label(side, a, b, c);
}

std::set<std::string> neighbor_names(const BipartiteGraph& g, const Label& l) {
  std::set<std::string> out;
  for (auto w : g.neighbors(g.vertex(l))) out.insert(cagekit::to_string(g.label(w)));
  return out;
}

std::set<std::pair<std::string, std::string>> labeled_edges(const BipartiteGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    auto a = cagekit::to_string(g.label(u));
    auto b = cagekit::to_string(g.label(v));
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

// Gamma_p for prime p from the side-1 rule in plain modular arithmetic.
std::set<std::pair<std::string, std::string>> prime_gamma_edges(std::uint32_t p) {
  std::set<std::pair<std::string, std::string>> out;
  const auto add = [&](const Label& x, const Label& y) {
    auto a = cagekit::to_string(x);
    auto b = cagekit::to_string(y);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  };
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        const Label v = L(1, e(a), e(b), e(c));
        for (std::uint32_t w = 0; w < p; ++w) {
          add(v, L(0, e(w), e((a * w + b) % p), e((a * a * w + 2 * a * b + c) % p)));
        }
        add(v, L(0, kRho, e(a), e(c)));
      }
    }
  }
  for (std::uint32_t b = 0; b < p; ++b) {
    for (std::uint32_t c = 0; c < p; ++c) {
      const Label v = L(1, kRho, e(b), e(c));
      for (std::uint32_t w = 0; w < p; ++w) add(v, L(0, e(c), e(b), e(w)));
      add(v, L(0, kRho, kRho, e(c)));
    }
  }
  for (std::uint32_t c = 0; c < p; ++c) {
    const Label v = L(1, kRho, kRho, e(c));
    for (std::uint32_t w = 0; w < p; ++w) add(v, L(0, kRho, e(c), e(w)));
    add(v, L(0, kRho, kRho, kRho));
  }
  const Label top = L(1, kRho, kRho, kRho);
  for (std::uint32_t w = 0; w < p; ++w) add(top, L(0, kRho, kRho, e(w)));
  add(top, L(0, kRho, kRho, kRho));
  return out;
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("neighbors of (0,0,0)_1 in Gamma_2") {
    const auto g = cagekit::build_gamma(2);
    CHECK(neighbor_names(g, L(1, e(0), e(0), e(0))) ==
          std::set<std::string>{"(0,0,0)_0", "(1,0,0)_0", "(rho,0,0)_0"});
  }

  TEST_CASE("neighbors of (1,1,1)_1 in Gamma_3") {
    const cagekit::Field f(3);
    std::set<std::string> rule;
    for (const auto& l : cagekit::gamma_neighbors_side1(f, L(1, e(1), e(1), e(1)))) {
      rule.insert(cagekit::to_string(l));
    }
    const std::set<std::string> want{"(0,1,0)_0", "(1,2,1)_0", "(2,0,2)_0", "(rho,1,1)_0"};
    CHECK(rule == want);
    CHECK(neighbor_names(cagekit::build_gamma(f), L(1, e(1), e(1), e(1))) == want);
  }

  TEST_CASE("side-0 rule at (rho,1,1)_0 in Gamma_3") {
    const cagekit::Field f(3);
    std::set<std::string> rule;
    for (const auto& l : cagekit::gamma_neighbors_side0(f, L(0, kRho, e(1), e(1)))) {
      rule.insert(cagekit::to_string(l));
    }
    const std::set<std::string> want{"(1,0,1)_1", "(1,1,1)_1", "(1,2,1)_1", "(rho,rho,1)_1"};
    CHECK(rule == want);
    CHECK(neighbor_names(cagekit::build_gamma(f), L(0, kRho, e(1), e(1))) == want);
  }

  TEST_CASE("Gamma_p matches a modular-arithmetic transcription") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      CAPTURE(p);
      CHECK(labeled_edges(cagekit::build_gamma(p)) == prime_gamma_edges(p));
    }
  }

  TEST_CASE("Gamma_q is a Moore graph") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      CAPTURE(q);
      const auto g = cagekit::build_gamma(q);
      CHECK(g.order() == cagekit::moore_bound(q + 1));
      CHECK(cagekit::degree_profile(g) ==
            cagekit::DegreeHistogram{{q + 1, g.order()}});
      CHECK(cagekit::is_bipartite_consistent(g));
      CHECK(cagekit::girth(g) == cagekit::Extent{8});
      if (q <= 5) CHECK(cagekit::diameter(g) == cagekit::Extent{4});
    }
  }

  TEST_CASE("both formulations produce the same graph") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
      CAPTURE(q);
      const cagekit::Field f(q);
      CHECK(cagekit::build_gamma(f) == cagekit::build_gamma_dual(f));
      CHECK_NOTHROW(cagekit::require_formulations_agree(f));
    }
  }

  TEST_CASE("first_edge_mismatch finds a removed edge") {
    const auto g = cagekit::build_gamma(3);
    CHECK_FALSE(cagekit::first_edge_mismatch(g, g).has_value());
    const auto [u, v] = g.edges()[17];
    const auto cut = cagekit::with_edge_removed(g, u, v);
    const auto diff = cagekit::first_edge_mismatch(g, cut);
    REQUIRE(diff.has_value());
    CHECK(((diff->first == g.label(u) && diff->second == g.label(v)) ||
           (diff->first == g.label(v) && diff->second == g.label(u))));
  }

  TEST_CASE("B_q and H_q") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
      CAPTURE(q);
      const auto bq = cagekit::build_bq(q);
      const auto hq = cagekit::build_hq(q);
      CHECK(bq.order() == 2ull * q * q * q);
      CHECK(bq.size() == 1ull * q * q * q * q);
      CHECK(cagekit::degree_profile(bq) == cagekit::DegreeHistogram{{q, bq.order()}});
      CHECK(cagekit::degree_profile(hq) == cagekit::DegreeHistogram{{q, hq.order()}});
      CHECK(cagekit::check_isomorphism(q));
      CHECK(bq == cagekit::build_staged(q, Stage::kBq));
    }
    CHECK(cagekit::build_bq(2) == cagekit::build_hq(2));
    CHECK(cagekit::build_bq(4) == cagekit::build_hq(4));
    CHECK_FALSE(same_edges(cagekit::build_bq(3), cagekit::build_hq(3)));
  }

  TEST_CASE("sigma") {
    const cagekit::Field f(3);
    CHECK(cagekit::sigma(f, L(1, e(1), e(2), e(1))) == L(1, e(1), e(2), e(2)));
    CHECK(cagekit::sigma(f, L(0, e(1), e(2), e(1))) == L(0, e(1), e(2), e(1)));
    CHECK_THROWS_AS(cagekit::sigma(f, L(1, kRho, e(2), e(1))), cagekit::InvalidLabel);
  }

  TEST_CASE("isomorphism check rejects wrong pairs") {
    const cagekit::Field f(3);
    const auto bq = cagekit::build_bq(f);
    const auto hq = cagekit::build_hq(f);
    CHECK(cagekit::check_isomorphism(f, bq, hq));
    CHECK_FALSE(cagekit::check_isomorphism(f, bq, bq));
    const auto [u, v] = hq.edges().front();
    CHECK_FALSE(cagekit::check_isomorphism(f, bq, cagekit::with_edge_removed(hq, u, v)));
    const auto [x, y] = bq.edges().back();
    CHECK_FALSE(cagekit::check_isomorphism(f, cagekit::with_edge_removed(bq, x, y), hq));
  }

  TEST_CASE("stage orders") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      CAPTURE(q);
      const std::uint64_t q2 = q * q, q3 = q2 * q;
      CHECK(cagekit::build_staged(q, Stage::kBq).order() == 2 * q3);
      CHECK(cagekit::build_staged(q, Stage::kBqPrime).order() == 2 * q3 + q2);
      CHECK(cagekit::build_staged(q, Stage::kBqDoublePrime).order() == 2 * q3 + 2 * q2 + q);
      CHECK(cagekit::build_staged(q, Stage::kBqTriplePrime).order() ==
            2 * q3 + 2 * q2 + 2 * q + 1);
      CHECK(cagekit::build_staged(q, Stage::kGamma) == cagekit::build_gamma(q));
    }
    CHECK(cagekit::build_staged(3, Stage::kBqPrime).order() == 63);
    CHECK(cagekit::build_staged(3, Stage::kBqDoublePrime).order() == 75);
  }

  TEST_CASE("stages are nested and keep girth 8") {
    const std::vector<Stage> chain = {Stage::kBq, Stage::kBqPrime, Stage::kBqDoublePrime,
                                      Stage::kBqTriplePrime, Stage::kGamma};
    const cagekit::LabelCodec codec(4);
    for (std::uint32_t i = 0; i < codec.size(); ++i) {
      const Label l = codec.decode(i);
      for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        if (cagekit::stage_contains(chain[s], l)) REQUIRE(cagekit::stage_contains(chain[s + 1], l));
      }
    }
    for (Stage s : chain) {
      CHECK(cagekit::girth(cagekit::build_staged(4, s)) == cagekit::Extent{8});
    }
  }

  TEST_CASE("stage names") {
    for (Stage s : {Stage::kBq, Stage::kBqPrime, Stage::kBqDoublePrime, Stage::kBqTriplePrime,
                    Stage::kGamma}) {
      CHECK(cagekit::parse_stage(cagekit::to_string(s)) == s);
    }
    CHECK(cagekit::to_string(Stage::kBqDoublePrime) == "bq-double-prime");
    CHECK_FALSE(cagekit::parse_stage("bq-quadruple-prime").has_value());
  }

  TEST_CASE("unsupported orders") {
    CHECK_THROWS_AS(cagekit::build_gamma(6), cagekit::NotPrimePower);
    CHECK_THROWS_AS(cagekit::build_bq(10), cagekit::NotPrimePower);
  }
}
