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

#include "cagekit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cagekit::oracle {

Extent girth_by_edge_deletion(const BipartiteGraph& g) {
  const std::size_t n = g.order();
  Extent best;
  for (const auto& [s, t] : g.edges()) {
    std::vector<long> dist(n, -1);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty() && dist[t] < 0) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if ((x == s && y == t) || (x == t && y == s)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[t] >= 0) {
      const auto len = static_cast<std::uint32_t>(dist[t] + 1);
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

Extent diameter_by_floyd_warshall(const BipartiteGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0u;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;
  std::vector<std::uint32_t> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const auto& [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  const std::uint32_t worst = *std::max_element(d.begin(), d.end());
  if (worst >= kInf) return std::nullopt;
  return worst;
}

}  // namespace cagekit::oracle
