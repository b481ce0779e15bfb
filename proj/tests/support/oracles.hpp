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

// Reference computations used only by the tests. Nothing here calls into the
// library kernels they are compared against.

#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cagekit/graph.hpp"

namespace testing {

// Polynomials over F_p, coefficient i multiplies x^i.
using Poly = std::vector<std::uint32_t>;

inline Poly unpack(std::uint32_t v, std::uint32_t p, std::uint32_t n) {
  Poly out(n, 0);
  for (std::uint32_t i = 0; i < n; ++i, v /= p) out[i] = v % p;
  return out;
}

inline std::uint32_t pack(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

// Schoolbook product reduced by the monic modulus x^n + sum m_i x^i.
inline std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t n,
                              const Poly& low_modulus) {
  const Poly x = unpack(a, p, n);
  const Poly y = unpack(b, p, n);
  Poly prod(2 * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::uint32_t d = 2 * n - 1; d >= n; --d) {
    const std::uint32_t lead = prod[d];
    prod[d] = 0;
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] + (p - lead) * low_modulus[i]) % p;
    }
  }
  prod.resize(n);
  return pack(prod, p);
}

// True when the monic polynomial with the given low coefficients has a root
// in F_p. Only decisive for irreducibility in degrees 2 and 3.
inline bool has_root_mod_p(const Poly& low, std::uint32_t p) {
  const std::size_t n = low.size();
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 1;
    for (std::size_t i = n; i-- > 0;) acc = (acc * x + low[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

using Adjacency = std::vector<std::vector<cagekit::VertexId>>;

inline Adjacency adjacency_of(const cagekit::BipartiteGraph& g) {
  Adjacency adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Girth from powers of the non-backtracking (Hashimoto) operator: the
// shortest closed non-backtracking walk whose last arc can be followed by
// its first arc is a cycle. Dense and cubic, so small graphs only.
inline std::optional<std::uint32_t> nonbacktracking_girth(const cagekit::BipartiteGraph& g) {
  std::vector<std::pair<cagekit::VertexId, cagekit::VertexId>> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  const std::size_t m = arcs.size();
  if (m == 0) return std::nullopt;
  // step[i][j] = arc j may follow arc i
  std::vector<std::vector<char>> step(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      step[i][j] = arcs[i].second == arcs[j].first && arcs[j].second != arcs[i].first;
    }
  }
  // reach[i][j]: a walk of `len` arcs starts with arc i and ends with arc j
  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) reach[i][i] = 1;
  for (std::size_t len = 1; len <= g.order(); ++len) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (reach[i][j] && step[j][i]) return static_cast<std::uint32_t>(len);
      }
    }
    std::vector<std::vector<char>> next(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!reach[i][k]) continue;
        for (std::size_t j = 0; j < m; ++j) next[i][j] |= step[k][j];
      }
    }
    reach = std::move(next);
  }
  return std::nullopt;
}

inline std::vector<std::int64_t> bfs_distances(const Adjacency& adj, cagekit::VertexId s) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::queue<cagekit::VertexId> todo;
  dist[s] = 0;
  todo.push(s);
  while (!todo.empty()) {
    const auto u = todo.front();
    todo.pop();
    for (auto w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        todo.push(w);
      }
    }
  }
  return dist;
}

// Random graph with sides 0 / 1 alternating by parity of the id. When
// `bipartite` is false intra-side edges are allowed too.
inline cagekit::BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t n, double density,
                                            bool bipartite) {
  std::vector<std::uint8_t> sides(n);
  for (std::size_t v = 0; v < n; ++v) sides[v] = static_cast<std::uint8_t>(v % 2);
  std::bernoulli_distribution coin(density);
  std::vector<cagekit::Edge> edges;
  for (cagekit::VertexId u = 0; u < n; ++u) {
    for (cagekit::VertexId v = u + 1; v < n; ++v) {
      if (bipartite && sides[u] == sides[v]) continue;
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return cagekit::BipartiteGraph::from_edges(n, sides, edges);
}

}  // namespace testing
