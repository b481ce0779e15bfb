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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cagekit/field.hpp"
#include "cagekit/graph.hpp"
#include "cagekit/verify.hpp"

namespace cagekit {

// N[A] = A together with every neighbor of A.
VertexSet closed_neighborhood(const BipartiteGraph& g, const VertexSet& a);

// Vertices at distance exactly 2 from v.
VertexSet second_neighborhood(const BipartiteGraph& g, VertexId v);

// Intersection of second_neighborhood(a) over a in A; throws EmptySeed.
VertexSet common_second_neighborhood(const BipartiteGraph& g, const VertexSet& a);

// 1 + u + u^2
FieldElem seed_poly(const Field& f, FieldElem u);

enum class PdsVariant { kEvenGe8, kQ4Special };

std::string_view to_string(PdsVariant v) noexcept;

// Seed sets in Gamma_q for even q:
//   Q  = {(rho,j,0)_0 : j} + (rho,rho,0)_0             (q >= 8)
//   Q' = {(rho,j,x)_0 : j} + (rho,rho,0)_0, x != 0,1  (q = 4)
//   S  = {(u,u,1+u+u^2)_1 : u} + (rho,1,1)_1
struct SeedSets {
  PdsVariant variant = PdsVariant::kEvenGe8;
  std::optional<FieldElem> x;
  std::vector<Label> q_seeds;
  std::vector<Label> s_seeds;
};

// Throws UnsupportedQ unless q is even and >= 4. `x` is only meaningful for
// q = 4 and defaults to the smaller admissible encoding.
SeedSets make_seed_sets(const Field& f, std::optional<FieldElem> x = std::nullopt);

struct PdsCertificate {
  VertexSet pds;
  std::size_t cardinality = 0;
  // Every vertex outside pds has exactly one neighbor inside.
  bool perfect = false;
  // First outside vertex violating perfection and its neighbor-in-set count.
  std::optional<VertexId> witness;
  std::uint32_t witness_hits = 0;
  // |N(v) ∩ pds| -> number of outside vertices v with that count.
  std::map<std::uint32_t, std::uint64_t> outside_hits;
  DegreeHistogram induced_degrees;
  Extent induced_diameter;
};

// Checks the perfection condition and measures the induced subgraph.
// Failures are reported in the certificate, never thrown.
PdsCertificate verify_pds(const BipartiteGraph& g, const VertexSet& u,
                          unsigned threads = 1);

struct AlternateChoice {
  FieldElem x;
  std::size_t cardinality = 0;
  bool perfect = false;
};

struct PdsConstruction {
  std::uint32_t q = 0;
  SeedSets seeds;
  VertexSet q_set, s_set;
  VertexSet i_q, i_s;
  VertexSet d_q, d_s;
  // D_Q ∩ D_S
  VertexSet overlap;
  std::uint64_t expected_cardinality = 0;
  PdsCertificate certificate;
  // q = 4 only: the other admissible x, checked as well.
  std::vector<AlternateChoice> alternates;

  bool disjoint() const noexcept { return overlap.empty(); }
  // Perfect, D_Q and D_S disjoint, and of the expected cardinality.
  bool passed() const noexcept {
    return certificate.perfect && disjoint() &&
           certificate.cardinality == expected_cardinality;
  }
};

// 70 for q = 4, 2(q^2 + 4q + 3) otherwise.
std::uint64_t expected_pds_cardinality(std::uint32_t q) noexcept;
// 2(q^3 - 3q - 2)
std::uint64_t expected_residual_order(std::uint32_t q) noexcept;

// D = N[Q] ∪ I_Q ∪ N[S] ∪ I_S on `gamma` (which must be build_gamma(f)),
// re-verified. Throws UnsupportedQ for odd q or q = 2, PerfectionFailure
// when the set is not perfect. A D_Q/D_S overlap is recorded, not thrown.
PdsConstruction build_pds(const Field& f, const BipartiteGraph& gamma,
                          std::optional<FieldElem> x = std::nullopt,
                          unsigned threads = 1);
PdsConstruction build_pds(std::uint32_t q, unsigned threads = 1);

BipartiteGraph remove_pds(const BipartiteGraph& gamma, const PdsConstruction& pds);
BipartiteGraph remove_pds(std::uint32_t q);

// One pairing D_Q ∩ V_1 -> D_S ∩ V_0 together with the D_S vertex whose
// neighborhood is claimed to contain the target. `to` is empty when the
// closed-form solution does not exist (it needs p(a) != 0).
struct MatchedPair {
  std::string rule;
  Label from;
  std::optional<Label> to;
  Label via;
};

// Throws UnsupportedQ unless q is even and >= 8.
std::vector<MatchedPair> matching_pairs(const Field& f);

struct MatchingCheck {
  bool ok = false;
  std::size_t pairs = 0;
  std::vector<std::string> problems;
};

MatchingCheck check_matching(const BipartiteGraph& gamma, const PdsConstruction& pds,
                             const std::vector<MatchedPair>& pairs);
bool check_matching(std::uint32_t q);

}  // namespace cagekit
