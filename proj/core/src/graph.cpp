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

#include "cagekit/graph.hpp"

#include <algorithm>
#include <string>

#include "cagekit/error.hpp"

namespace cagekit {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

bool VertexSet::contains(VertexId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<VertexId> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  std::vector<VertexId> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t order,
                                          std::vector<std::uint8_t> sides,
                                          std::vector<Edge> edges,
                                          std::optional<LabelMap> labels) {
  if (sides.size() != order) {
    throw ConstructionError("side assignment has " + std::to_string(sides.size()) +
                            " entries for " + std::to_string(order) + " vertices");
  }
  if (labels) {
    const auto& idx = labels->codec_index;
    if (idx.size() != order) {
      throw ConstructionError("label map size does not match vertex count");
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= labels->codec.size() || (i > 0 && idx[i] <= idx[i - 1])) {
        throw ConstructionError("label map is not strictly increasing");
      }
    }
  }

  std::vector<std::uint32_t> degree(order + 1, 0);
  for (auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ConstructionError("edge endpoint out of range");
    }
    if (u == v) {
      throw ConstructionError("self-loop at vertex " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }

  BipartiteGraph g;
  g.offsets_.assign(order + 1, 0);
  for (std::size_t v = 0; v < order; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.neighbors_.resize(g.offsets_[order]);
  std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto first = g.neighbors_.begin() + g.offsets_[v];
    auto last = g.neighbors_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw ConstructionError("duplicate edge " + std::to_string(v) + "-" +
                              std::to_string(*dup));
    }
  }
  g.sides_ = std::move(sides);
  g.labels_ = std::move(labels);
  return g;
}

bool BipartiteGraph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= order() || v >= order()) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Label BipartiteGraph::label(VertexId v) const {
  if (!labels_) throw InvalidLabel("graph carries no labels");
  if (v >= order()) {
    throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
  }
  return labels_->codec.decode(labels_->codec_index[v]);
}

std::optional<VertexId> BipartiteGraph::find(const Label& label) const {
  if (!labels_) return std::nullopt;
  std::uint32_t key = 0;
  try {
    key = labels_->codec.encode(label);
  } catch (const InvalidLabel&) {
    return std::nullopt;
  }
  const auto& idx = labels_->codec_index;
  const auto it = std::lower_bound(idx.begin(), idx.end(), key);
  if (it == idx.end() || *it != key) return std::nullopt;
  return static_cast<VertexId>(it - idx.begin());
}

VertexId BipartiteGraph::vertex(const Label& label) const {
  if (auto v = find(label)) return *v;
  throw InvalidLabel("label " + to_string(label) + " is not a vertex");
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& keep) {
  constexpr VertexId kDropped = ~VertexId{0};
  std::vector<VertexId> renumber(g.order(), kDropped);
  std::vector<std::uint8_t> sides;
  sides.reserve(keep.size());
  std::optional<LabelMap> labels;
  if (g.has_labels()) labels = LabelMap{g.label_map()->codec, {}};
  VertexId next = 0;
  for (VertexId v : keep) {
    if (v >= g.order()) {
      throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
    renumber[v] = next++;
    sides.push_back(g.side(v));
    if (labels) labels->codec_index.push_back(g.label_map()->codec_index[v]);
  }
  std::vector<Edge> edges;
  for (VertexId u : keep) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && renumber[v] != kDropped) edges.emplace_back(renumber[u], renumber[v]);
    }
  }
  return BipartiteGraph::from_edges(keep.size(), std::move(sides), std::move(edges),
                                    std::move(labels));
}

BipartiteGraph remove_vertices(const BipartiteGraph& g, const VertexSet& drop) {
  std::vector<VertexId> keep;
  keep.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!drop.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

namespace {

std::vector<std::uint8_t> copy_sides(const BipartiteGraph& g) {
  return {g.sides().begin(), g.sides().end()};
}

}  // namespace

BipartiteGraph with_edge_added(const BipartiteGraph& g, VertexId u, VertexId v) {
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return BipartiteGraph::from_edges(g.order(), copy_sides(g), std::move(edges),
                                    g.label_map());
}

BipartiteGraph with_edge_removed(const BipartiteGraph& g, VertexId u, VertexId v) {
  auto edges = g.edges();
  const Edge target{std::min(u, v), std::max(u, v)};
  const auto it = std::find(edges.begin(), edges.end(), target);
  if (it == edges.end()) {
    throw ConstructionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " not present");
  }
  edges.erase(it);
  return BipartiteGraph::from_edges(g.order(), copy_sides(g), std::move(edges),
                                    g.label_map());
}

}  // namespace cagekit
