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
#include <span>
#include <string>
#include <vector>

#include "cagekit/graph.hpp"

namespace cagekit {

// Length-like quantity that may be infinite (nullopt).
using Extent = std::optional<std::uint32_t>;

// degree -> number of vertices with that degree
using DegreeHistogram = std::map<std::uint32_t, std::uint64_t>;

// Exact girth: BFS from every root, recording the shortest cycle closed
// through the root, abandoning a root once no shorter cycle is reachable.
// Roots are split across `threads` workers (0 = hardware concurrency);
// the result does not depend on the split.
Extent girth(const BipartiteGraph& g, unsigned threads = 1);

// Exact diameter by BFS from every vertex; nullopt when disconnected.
// The empty graph has diameter 0.
Extent diameter(const BipartiteGraph& g, unsigned threads = 1);

DegreeHistogram degree_profile(const BipartiteGraph& g);

// BFS distance; throws IndexOutOfRange on invalid vertices.
Extent distance(const BipartiteGraph& g, VertexId u, VertexId v);

// True iff every edge joins a side-0 vertex to a side-1 vertex.
bool is_bipartite_consistent(const BipartiteGraph& g) noexcept;

// 2(1 + (k-1) + (k-1)^2 + (k-1)^3); throws InvalidDegree for k < 2.
std::uint64_t moore_bound(std::uint64_t k);

// Smallest distance between two distinct members, provided it is below
// `cap`; nullopt when all pairs are at distance >= cap.
Extent min_pairwise_distance(const BipartiteGraph& g,
                             std::span<const VertexId> members,
                             std::uint32_t cap);

struct CheckTiming {
  std::string check;
  double millis = 0.0;
};

struct VerifyOptions {
  unsigned threads = 1;
  bool compute_diameter = true;
};

struct VerifyReport {
  std::uint64_t order = 0;
  std::uint64_t size = 0;
  DegreeHistogram degrees;
  bool bipartite = false;
  Extent girth;
  bool diameter_computed = false;
  Extent diameter;
  std::vector<CheckTiming> timings;

  // Single degree shared by every vertex, if any.
  std::optional<std::uint32_t> regular_degree() const;
};

VerifyReport verify(const BipartiteGraph& g, const VerifyOptions& options = {});

// Workers to use for a requested count (0 = hardware concurrency).
unsigned resolve_threads(unsigned requested) noexcept;

}  // namespace cagekit
