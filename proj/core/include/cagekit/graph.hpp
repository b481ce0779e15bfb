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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cagekit/label.hpp"

namespace cagekit {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members);

  bool contains(VertexId v) const noexcept;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::span<const VertexId> members() const noexcept { return members_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

// Ties each vertex to its label: vertex v carries codec.decode(codec_index[v]).
// codec_index is strictly increasing, so vertex order is codec order.
struct LabelMap {
  LabelCodec codec{1};
  std::vector<std::uint32_t> codec_index;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

// Immutable simple graph in compressed sparse row form with a declared side
// (0 or 1) per vertex. Bipartiteness with respect to the declared sides is a
// checked property, not a construction invariant, so corrupted graphs can be
// represented for negative controls.
class BipartiteGraph {
 public:
  BipartiteGraph() : offsets_{0} {}

  // Edges may come in any order and orientation. Throws ConstructionError on
  // self-loops, duplicate edges, out-of-range endpoints, or size mismatches.
  static BipartiteGraph from_edges(std::size_t order,
                                   std::vector<std::uint8_t> sides,
                                   std::vector<Edge> edges,
                                   std::optional<LabelMap> labels = std::nullopt);

  std::size_t order() const noexcept { return sides_.size(); }
  std::size_t size() const noexcept { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::uint8_t side(VertexId v) const noexcept { return sides_[v]; }
  std::span<const std::uint8_t> sides() const noexcept { return sides_; }
  std::span<const std::uint32_t> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> adjacency() const noexcept { return neighbors_; }

  bool has_edge(VertexId u, VertexId v) const noexcept;
  // Every edge once as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return labels_.has_value(); }
  const std::optional<LabelMap>& label_map() const noexcept { return labels_; }
  // Requires has_labels().
  Label label(VertexId v) const;
  std::optional<VertexId> find(const Label& label) const;
  // Like find() but throws InvalidLabel when the label is not a vertex.
  VertexId vertex(const Label& label) const;

  // Same vertex count and identical adjacency.
  friend bool same_edges(const BipartiteGraph& a, const BipartiteGraph& b) noexcept {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }
  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::uint8_t> sides_;
  std::optional<LabelMap> labels_;
};

// Subgraph induced on `keep`, renumbered in increasing vertex order. Labels
// and sides carry over.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& keep);
BipartiteGraph remove_vertices(const BipartiteGraph& g, const VertexSet& drop);

// Copies with a single edge inserted or deleted (negative controls).
BipartiteGraph with_edge_added(const BipartiteGraph& g, VertexId u, VertexId v);
BipartiteGraph with_edge_removed(const BipartiteGraph& g, VertexId u, VertexId v);

}  // namespace cagekit
