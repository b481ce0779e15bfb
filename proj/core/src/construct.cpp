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

#include "cagekit/construct.hpp"

#include <algorithm>
#include <functional>

#include "cagekit/error.hpp"

namespace cagekit {

namespace {

constexpr Coord kRho = Coord::rho();

using Rule = std::function<std::vector<Label>(const Field&, const Label&)>;

// All valid labels on one side, in codec order.
std::vector<Label> side_labels(const Field& f, std::uint8_t side, bool affine_only) {
  const LabelCodec codec(f.q());
  const std::uint32_t count = affine_only ? f.q() * f.q() * f.q() : codec.stride();
  std::vector<Label> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    out.push_back(codec.decode(side * codec.stride() + i));
  }
  return out;
}

// Materializes a graph on `vertices` (sorted by codec index) whose edges are
// produced by applying `rule` to every vertex on `generating_side`.
BipartiteGraph build_from_rule(const Field& f, const std::vector<Label>& vertices,
                               std::uint8_t generating_side, const Rule& rule,
                               std::size_t expected_degree) {
  const LabelCodec codec(f.q());
  LabelMap map{codec, {}};
  map.codec_index.reserve(vertices.size());
  std::vector<std::uint8_t> sides;
  sides.reserve(vertices.size());
  for (const Label& l : vertices) {
    map.codec_index.push_back(codec.encode(l));
    sides.push_back(l.side);
  }
  const auto lookup = [&](const Label& l) -> VertexId {
    const std::uint32_t key = codec.encode(l);
    const auto it = std::lower_bound(map.codec_index.begin(), map.codec_index.end(), key);
    if (it == map.codec_index.end() || *it != key) {
      throw ConstructionError("rule produced " + to_string(l) +
                              ", which is not a vertex");
    }
    return static_cast<VertexId>(it - map.codec_index.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(vertices.size() * expected_degree / 2);
  std::vector<VertexId> nb;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (vertices[v].side != generating_side) continue;
    const auto labels = rule(f, vertices[v]);
    nb.clear();
    for (const Label& l : labels) {
      if (l.side == generating_side) {
        throw ConstructionError("rule kept " + to_string(vertices[v]) + " on its side");
      }
      nb.push_back(lookup(l));
    }
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw ConstructionError("duplicate neighbor " + to_string(vertices[*dup]) +
                              " of " + to_string(vertices[v]));
    }
    if (nb.size() != expected_degree) {
      throw ConstructionError("rule gave " + std::to_string(nb.size()) +
                              " neighbors for " + to_string(vertices[v]));
    }
    for (VertexId u : nb) edges.emplace_back(v, u);
  }
  return BipartiteGraph::from_edges(vertices.size(), std::move(sides), std::move(edges),
                                    std::move(map));
}

std::vector<Label> all_gamma_labels(const Field& f) {
  auto out = side_labels(f, 0, false);
  auto one = side_labels(f, 1, false);
  out.insert(out.end(), one.begin(), one.end());
  return out;
}

std::vector<Label> all_affine_labels(const Field& f) {
  auto out = side_labels(f, 0, true);
  auto one = side_labels(f, 1, true);
  out.insert(out.end(), one.begin(), one.end());
  return out;
}

void require_affine_side1(const Label& v) {
  if (v.side != 1 || !v.is_affine()) {
    throw InvalidLabel("expected an affine side-1 label, got " + to_string(v));
  }
}

}  // namespace

std::vector<Label> gamma_neighbors_side1(const Field& f, const Label& v) {
  if (v.side != 1 || !v.has_valid_shape()) {
    throw InvalidLabel("not a side-1 label: " + to_string(v));
  }
  std::vector<Label> out;
  out.reserve(f.q() + 1);
  if (!v.a.is_rho()) {
    const FieldElem a = v.a.elem(), b = v.b.elem(), c = v.c.elem();
    const FieldElem a2 = f.mul(a, a);
    const FieldElem shift = f.add(f.mul(f.small(2), f.mul(a, b)), c);
    for (FieldElem w : f.elements()) {
      out.push_back({0, w, f.add(f.mul(a, w), b), f.add(f.mul(a2, w), shift)});
    }
    out.push_back({0, kRho, v.a, v.c});
  } else if (!v.b.is_rho()) {
    for (FieldElem w : f.elements()) out.push_back({0, v.c, v.b, w});
    out.push_back({0, kRho, kRho, v.c});
  } else if (!v.c.is_rho()) {
    for (FieldElem w : f.elements()) out.push_back({0, kRho, v.c, w});
    out.push_back({0, kRho, kRho, kRho});
  } else {
    for (FieldElem w : f.elements()) out.push_back({0, kRho, kRho, w});
    out.push_back({0, kRho, kRho, kRho});
  }
  return out;
}

std::vector<Label> gamma_neighbors_side0(const Field& f, const Label& v) {
  if (v.side != 0 || !v.has_valid_shape()) {
    throw InvalidLabel("not a side-0 label: " + to_string(v));
  }
  std::vector<Label> out;
  out.reserve(f.q() + 1);
  if (!v.a.is_rho()) {
    const FieldElem i = v.a.elem(), j = v.b.elem(), k = v.c.elem();
    const FieldElem two = f.small(2);
    for (FieldElem w : f.elements()) {
      const FieldElem y = f.sub(j, f.mul(w, i));
      const FieldElem z = f.add(f.sub(f.mul(f.mul(w, w), i), f.mul(two, f.mul(w, j))), k);
      out.push_back({1, w, y, z});
    }
    out.push_back({1, kRho, v.b, v.a});
  } else if (!v.b.is_rho()) {
    for (FieldElem w : f.elements()) out.push_back({1, v.b, w, v.c});
    out.push_back({1, kRho, kRho, v.b});
  } else if (!v.c.is_rho()) {
    for (FieldElem w : f.elements()) out.push_back({1, kRho, w, v.c});
    out.push_back({1, kRho, kRho, kRho});
  } else {
    for (FieldElem w : f.elements()) out.push_back({1, kRho, kRho, w});
    out.push_back({1, kRho, kRho, kRho});
  }
  return out;
}

std::vector<Label> bq_neighbors(const Field& f, const Label& v) {
  require_affine_side1(v);
  const FieldElem a = v.a.elem(), b = v.b.elem(), c = v.c.elem();
  const FieldElem a2 = f.mul(a, a);
  const FieldElem shift = f.add(f.mul(f.small(2), f.mul(a, b)), c);
  std::vector<Label> out;
  out.reserve(f.q());
  for (FieldElem j : f.elements()) {
    out.push_back({0, j, f.add(f.mul(a, j), b), f.add(f.mul(a2, j), shift)});
  }
  return out;
}

std::vector<Label> hq_neighbors(const Field& f, const Label& v) {
  require_affine_side1(v);
  const FieldElem a = v.a.elem(), b = v.b.elem(), c = v.c.elem();
  const FieldElem a2 = f.mul(a, a);
  std::vector<Label> out;
  out.reserve(f.q());
  for (FieldElem w : f.elements()) {
    out.push_back({0, w, f.add(f.mul(a, w), b), f.add(f.mul(a2, w), c)});
  }
  return out;
}

BipartiteGraph build_gamma(const Field& f) {
  return build_from_rule(f, all_gamma_labels(f), 1, gamma_neighbors_side1, f.q() + 1);
}
BipartiteGraph build_gamma(std::uint32_t q) { return build_gamma(Field(q)); }

BipartiteGraph build_gamma_dual(const Field& f) {
  return build_from_rule(f, all_gamma_labels(f), 0, gamma_neighbors_side0, f.q() + 1);
}
BipartiteGraph build_gamma_dual(std::uint32_t q) { return build_gamma_dual(Field(q)); }

BipartiteGraph build_bq(const Field& f) {
  return build_from_rule(f, all_affine_labels(f), 1, bq_neighbors, f.q());
}
BipartiteGraph build_bq(std::uint32_t q) { return build_bq(Field(q)); }

BipartiteGraph build_hq(const Field& f) {
  return build_from_rule(f, all_affine_labels(f), 1, hq_neighbors, f.q());
}
BipartiteGraph build_hq(std::uint32_t q) { return build_hq(Field(q)); }

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::kBq: return "bq";
    case Stage::kBqPrime: return "bq-prime";
    case Stage::kBqDoublePrime: return "bq-double-prime";
    case Stage::kBqTriplePrime: return "bq-triple-prime";
    case Stage::kGamma: return "gamma";
  }
  return "unknown";
}

std::optional<Stage> parse_stage(std::string_view name) noexcept {
  for (Stage s : {Stage::kBq, Stage::kBqPrime, Stage::kBqDoublePrime,
                  Stage::kBqTriplePrime, Stage::kGamma}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

bool stage_contains(Stage stage, const Label& l) noexcept {
  if (!l.has_valid_shape()) return false;
  const bool all_rho = l.a.is_rho() && l.b.is_rho() && l.c.is_rho();
  const bool double_rho = l.a.is_rho() && l.b.is_rho();
  switch (stage) {
    case Stage::kBq:
      return l.is_affine();
    case Stage::kBqPrime:
      // Side 1 gains (rho,b,c)_1.
      return l.is_affine() || (l.side == 1 && !double_rho);
    case Stage::kBqDoublePrime:
      // Side 0 gains (rho,a,c)_0 with a in F_q or rho.
      if (l.side == 0) return !all_rho;
      return !double_rho;
    case Stage::kBqTriplePrime:
      // Side 1 gains (rho,rho,a)_1 with a in F_q or rho.
      return l.side == 1 || !all_rho;
    case Stage::kGamma:
      return true;
  }
  return false;
}

BipartiteGraph build_staged(const Field& f, Stage stage) {
  const BipartiteGraph gamma = build_gamma(f);
  if (stage == Stage::kGamma) return gamma;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < gamma.order(); ++v) {
    if (stage_contains(stage, gamma.label(v))) keep.push_back(v);
  }
  return induced_subgraph(gamma, VertexSet(std::move(keep)));
}
BipartiteGraph build_staged(std::uint32_t q, Stage stage) {
  return build_staged(Field(q), stage);
}

Label sigma(const Field& f, const Label& label) {
  if (!label.is_affine() || label.side > 1) {
    throw InvalidLabel("sigma is defined on F_q^3 labels only, got " + to_string(label));
  }
  if (label.side == 0) return label;
  const FieldElem a = label.a.elem(), b = label.b.elem(), c = label.c.elem();
  return {1, a, b, f.add(f.mul(f.small(2), f.mul(a, b)), c)};
}

bool check_isomorphism(const Field& f, const BipartiteGraph& bq, const BipartiteGraph& hq) {
  if (bq.order() != hq.order() || bq.size() != hq.size() || !bq.has_labels() ||
      !hq.has_labels()) {
    return false;
  }
  const std::size_t n = bq.order();
  std::vector<VertexId> image(n);
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    const auto target = hq.find(sigma(f, bq.label(v)));
    if (!target || hit[*target]) return false;
    hit[*target] = true;
    image[v] = *target;
  }
  // sigma is a bijection here, so the inverse exists.
  std::vector<VertexId> preimage(n);
  for (VertexId v = 0; v < n; ++v) preimage[image[v]] = v;
  for (const auto& [u, v] : bq.edges()) {
    if (!hq.has_edge(image[u], image[v])) return false;
  }
  for (const auto& [u, v] : hq.edges()) {
    if (!bq.has_edge(preimage[u], preimage[v])) return false;
  }
  return true;
}

bool check_isomorphism(std::uint32_t q) {
  const Field f(q);
  return check_isomorphism(f, build_bq(f), build_hq(f));
}

std::optional<std::pair<Label, Label>> first_edge_mismatch(const BipartiteGraph& a,
                                                           const BipartiteGraph& b) {
  const auto labeled = [](const BipartiteGraph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const auto& idx = g.label_map()->codec_index;
    for (const auto& [u, v] : g.edges()) out.emplace_back(idx[u], idx[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (!a.has_labels() || !b.has_labels() || a.label_map()->codec != b.label_map()->codec) {
    throw InvalidLabel("edge comparison needs graphs labeled over the same field");
  }
  const auto ea = labeled(a), eb = labeled(b);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> diff;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  const LabelCodec& codec = a.label_map()->codec;
  return std::make_pair(codec.decode(diff.front().first), codec.decode(diff.front().second));
}

void require_formulations_agree(const Field& f) {
  if (auto bad = first_edge_mismatch(build_gamma(f), build_gamma_dual(f))) {
    throw ConstructionError("side-0 and side-1 rules disagree at q=" +
                            std::to_string(f.q()) + " on edge " + to_string(bad->first) +
                            " ~ " + to_string(bad->second));
  }
}

}  // namespace cagekit
