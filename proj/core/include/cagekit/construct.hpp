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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cagekit/field.hpp"
#include "cagekit/graph.hpp"
#include "cagekit/label.hpp"

namespace cagekit {

// Neighbor rules of the Moore (q+1,8)-graph Gamma_q, written over labels.
//
// Side-1 rule, for a in F_q or rho and b, c in F_q:
//   (a,b,c)_1, a in F_q -> (w, aw+b, a^2 w + 2ab + c)_0 for w in F_q, (rho,a,c)_0
//   (rho,b,c)_1          -> (c, b, w)_0,                          (rho,rho,c)_0
//   (rho,rho,c)_1        -> (rho, c, w)_0,                        (rho,rho,rho)_0
//   (rho,rho,rho)_1      -> (rho, rho, w)_0,                      (rho,rho,rho)_0
//
// Side-0 rule, for i in F_q or rho and j, k in F_q:
//   (i,j,k)_0, i in F_q  -> (w, j - wi, w^2 i - 2wj + k)_1,       (rho,j,i)_1
//   (rho,j,k)_0          -> (j, w, k)_1,                          (rho,rho,j)_1
//   (rho,rho,k)_0        -> (rho, w, k)_1,                        (rho,rho,rho)_1
//   (rho,rho,rho)_0      -> (rho, rho, w)_1,                      (rho,rho,rho)_1
//
// Both return q+1 labels in generation order. The "2" factors are field
// constants, so they vanish in characteristic 2.
std::vector<Label> gamma_neighbors_side1(const Field& f, const Label& v);
std::vector<Label> gamma_neighbors_side0(const Field& f, const Label& v);

// (a,b,c)_1 -> (w, aw+b, a^2 w + 2ab + c)_0 for w in F_q.
std::vector<Label> bq_neighbors(const Field& f, const Label& v);
// (a,b,c)_1 -> (w, aw+b, a^2 w + c)_0 for w in F_q.
std::vector<Label> hq_neighbors(const Field& f, const Label& v);

// Gamma_q from the side-1 rule; 2(q^3+q^2+q+1) vertices in codec order.
BipartiteGraph build_gamma(const Field& f);
BipartiteGraph build_gamma(std::uint32_t q);

// Gamma_q from the side-0 rule, used as an independent cross-check.
BipartiteGraph build_gamma_dual(const Field& f);
BipartiteGraph build_gamma_dual(std::uint32_t q);

BipartiteGraph build_bq(const Field& f);
BipartiteGraph build_bq(std::uint32_t q);
BipartiteGraph build_hq(const Field& f);
BipartiteGraph build_hq(std::uint32_t q);

// Nested stages of the augmentation B_q -> Gamma_q.
enum class Stage { kBq, kBqPrime, kBqDoublePrime, kBqTriplePrime, kGamma };

std::string_view to_string(Stage stage) noexcept;
std::optional<Stage> parse_stage(std::string_view name) noexcept;

// Whether a Gamma_q label is a vertex of the given stage.
bool stage_contains(Stage stage, const Label& label) noexcept;

// Induced subgraph of Gamma_q on the stage's labels.
BipartiteGraph build_staged(const Field& f, Stage stage);
BipartiteGraph build_staged(std::uint32_t q, Stage stage);

// B_q -> H_q: (a,b,c)_1 -> (a,b,2ab+c)_1, side-0 labels fixed.
// Throws InvalidLabel if a coordinate is rho.
Label sigma(const Field& f, const Label& label);

// True iff sigma is a bijection V(bq) -> V(hq) preserving adjacency in both
// directions.
bool check_isomorphism(const Field& f, const BipartiteGraph& bq,
                       const BipartiteGraph& hq);
bool check_isomorphism(std::uint32_t q);

// First labeled edge present in exactly one of the graphs, if any.
std::optional<std::pair<Label, Label>> first_edge_mismatch(const BipartiteGraph& a,
                                                           const BipartiteGraph& b);

// Builds both formulations of Gamma_q and throws ConstructionError naming
// the first mismatching vertex pair when they differ.
void require_formulations_agree(const Field& f);

}  // namespace cagekit
