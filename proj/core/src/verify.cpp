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

#include "cagekit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "cagekit/error.hpp"

namespace cagekit {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Runs body(worker, root) for every root, roots striped across workers.
template <typename Body>
void for_each_root(std::size_t n, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads),
                                                        std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t r = 0; r < n; ++r) body(0u, static_cast<VertexId>(r));
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < n; r += threads) body(w, static_cast<VertexId>(r));
    });
  }
  for (auto& t : pool) t.join();
}

// Per-worker BFS scratch, reset lazily through the visit list.
struct BfsScratch {
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> parent;
  std::vector<VertexId> queue;

  explicit BfsScratch(std::size_t n) : dist(n, kUnseen), parent(n, 0) {
    queue.reserve(n);
  }
  void reset() {
    for (VertexId v : queue) dist[v] = kUnseen;
    queue.clear();
  }
};

// Shortest cycle closed through `root` that is shorter than `best`, else
// `best` unchanged.
std::uint32_t shortest_cycle_through(const BipartiteGraph& g, VertexId root,
                                     std::uint32_t best, BfsScratch& s) {
  s.reset();
  s.dist[root] = 0;
  s.parent[root] = root;
  s.queue.push_back(root);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const VertexId u = s.queue[head];
    const std::uint32_t du = s.dist[u];
    // Anything closed from here on has length >= 2*du + 1.
    if (2 * du + 1 >= best) break;
    for (VertexId w : g.neighbors(u)) {
      if (s.dist[w] == kUnseen) {
        s.dist[w] = du + 1;
        s.parent[w] = u;
        s.queue.push_back(w);
      } else if (w != s.parent[u]) {
        best = std::min(best, du + s.dist[w] + 1);
      }
    }
  }
  return best;
}

}  // namespace

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

Extent girth(const BipartiteGraph& g, unsigned threads) {
  const std::size_t n = g.order();
  std::atomic<std::uint32_t> best{kUnseen};
  const unsigned workers = resolve_threads(threads);
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);

  for_each_root(n, workers, [&](unsigned w, VertexId root) {
    const std::uint32_t current = best.load(std::memory_order_relaxed);
    const std::uint32_t found = shortest_cycle_through(g, root, current, scratch[w]);
    std::uint32_t seen = best.load(std::memory_order_relaxed);
    while (found < seen && !best.compare_exchange_weak(seen, found)) {
    }
  });
  const std::uint32_t result = best.load();
  if (result == kUnseen) return std::nullopt;
  return result;
}

Extent diameter(const BipartiteGraph& g, unsigned threads) {
  const std::size_t n = g.order();
  if (n == 0) return 0u;
  const unsigned workers = resolve_threads(threads);
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);
  std::atomic<std::uint32_t> ecc_max{0};
  std::atomic<bool> disconnected{false};

  for_each_root(n, workers, [&](unsigned w, VertexId root) {
    if (disconnected.load(std::memory_order_relaxed)) return;
    BfsScratch& s = scratch[w];
    s.reset();
    s.dist[root] = 0;
    s.queue.push_back(root);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
      const VertexId u = s.queue[head];
      for (VertexId v : g.neighbors(u)) {
        if (s.dist[v] == kUnseen) {
          s.dist[v] = s.dist[u] + 1;
          s.queue.push_back(v);
        }
      }
    }
    if (s.queue.size() != n) {
      disconnected.store(true);
      return;
    }
    const std::uint32_t ecc = s.dist[s.queue.back()];
    std::uint32_t seen = ecc_max.load(std::memory_order_relaxed);
    while (ecc > seen && !ecc_max.compare_exchange_weak(seen, ecc)) {
    }
  });
  if (disconnected.load()) return std::nullopt;
  return ecc_max.load();
}

DegreeHistogram degree_profile(const BipartiteGraph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.order(); ++v) {
    ++h[static_cast<std::uint32_t>(g.degree(v))];
  }
  return h;
}

Extent distance(const BipartiteGraph& g, VertexId u, VertexId v) {
  if (u >= g.order() || v >= g.order()) {
    throw IndexOutOfRange("vertex out of range in distance query");
  }
  if (u == v) return 0u;
  BfsScratch s(g.order());
  s.dist[u] = 0;
  s.queue.push_back(u);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const VertexId x = s.queue[head];
    for (VertexId y : g.neighbors(x)) {
      if (s.dist[y] != kUnseen) continue;
      s.dist[y] = s.dist[x] + 1;
      if (y == v) return s.dist[y];
      s.queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool is_bipartite_consistent(const BipartiteGraph& g) noexcept {
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (g.side(u) == g.side(v)) return false;
    }
  }
  return true;
}

std::uint64_t moore_bound(std::uint64_t k) {
  if (k < 2) throw InvalidDegree("Moore bound needs degree k >= 2");
  const std::uint64_t d = k - 1;
  return 2 * (1 + d + d * d + d * d * d);
}

Extent min_pairwise_distance(const BipartiteGraph& g,
                             std::span<const VertexId> members,
                             std::uint32_t cap) {
  std::vector<bool> is_member(g.order(), false);
  for (VertexId m : members) {
    if (m >= g.order()) throw IndexOutOfRange("member vertex out of range");
    is_member[m] = true;
  }
  Extent best;
  BfsScratch s(g.order());
  for (VertexId src : members) {
    const std::uint32_t limit = best ? *best : cap;
    s.reset();
    s.dist[src] = 0;
    s.queue.push_back(src);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
      const VertexId x = s.queue[head];
      if (s.dist[x] + 1 >= limit) break;
      for (VertexId y : g.neighbors(x)) {
        if (s.dist[y] != kUnseen) continue;
        s.dist[y] = s.dist[x] + 1;
        s.queue.push_back(y);
        if (is_member[y] && (!best || s.dist[y] < *best)) best = s.dist[y];
      }
    }
  }
  return best;
}

std::optional<std::uint32_t> VerifyReport::regular_degree() const {
  if (degrees.size() != 1) return std::nullopt;
  return degrees.begin()->first;
}

VerifyReport verify(const BipartiteGraph& g, const VerifyOptions& options) {
  using clock = std::chrono::steady_clock;
  VerifyReport r;
  const auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    const std::chrono::duration<double, std::milli> dt = clock::now() - t0;
    r.timings.push_back({name, dt.count()});
  };
  r.order = g.order();
  r.size = g.size();
  timed("degrees", [&] { r.degrees = degree_profile(g); });
  timed("bipartite", [&] { r.bipartite = is_bipartite_consistent(g); });
  timed("girth", [&] { r.girth = girth(g, options.threads); });
  if (options.compute_diameter) {
    timed("diameter", [&] { r.diameter = diameter(g, options.threads); });
    r.diameter_computed = true;
  }
  return r;
}

}  // namespace cagekit
