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

#include "cagekit/dominating.hpp"

#include <algorithm>

#include "cagekit/construct.hpp"
#include "cagekit/error.hpp"

namespace cagekit {

namespace {

constexpr Coord kRho = Coord::rho();

void require_even_q(const Field& f, std::uint32_t minimum) {
  if (f.p() != 2 || f.q() < minimum) {
    throw UnsupportedQ("q=" + std::to_string(f.q()) +
                       " unsupported: need an even prime power >= " +
                       std::to_string(minimum));
  }
}

VertexSet vertices_of(const BipartiteGraph& g, const std::vector<Label>& labels) {
  std::vector<VertexId> out;
  out.reserve(labels.size());
  for (const Label& l : labels) out.push_back(g.vertex(l));
  return VertexSet(std::move(out));
}

struct Dominated {
  VertexSet seeds, closed, common, all;
};

Dominated dominate(const BipartiteGraph& g, const std::vector<Label>& seeds) {
  Dominated d;
  d.seeds = vertices_of(g, seeds);
  d.closed = closed_neighborhood(g, d.seeds);
  d.common = common_second_neighborhood(g, d.seeds);
  d.all = d.closed.united(d.common);
  return d;
}

}  // namespace

VertexSet closed_neighborhood(const BipartiteGraph& g, const VertexSet& a) {
  std::vector<VertexId> out(a.begin(), a.end());
  for (VertexId v : a) {
    const auto nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return VertexSet(std::move(out));
}

VertexSet second_neighborhood(const BipartiteGraph& g, VertexId v) {
  if (v >= g.order()) throw IndexOutOfRange("vertex out of range");
  const auto first = g.neighbors(v);
  std::vector<VertexId> out;
  for (VertexId u : first) {
    for (VertexId w : g.neighbors(u)) {
      if (w != v && !std::binary_search(first.begin(), first.end(), w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet common_second_neighborhood(const BipartiteGraph& g, const VertexSet& a) {
  if (a.empty()) throw EmptySeed("common second neighborhood of an empty set");
  auto it = a.begin();
  VertexSet acc = second_neighborhood(g, *it);
  for (++it; it != a.end() && !acc.empty(); ++it) {
    acc = acc.intersected(second_neighborhood(g, *it));
  }
  return acc;
}

FieldElem seed_poly(const Field& f, FieldElem u) {
  return f.add(f.add(Field::one(), u), f.mul(u, u));
}

std::string_view to_string(PdsVariant v) noexcept {
  return v == PdsVariant::kQ4Special ? "q4-special" : "even-ge8";
}

SeedSets make_seed_sets(const Field& f, std::optional<FieldElem> x) {
  require_even_q(f, 4);
  SeedSets s;
  const Coord zero = Field::zero();
  if (f.q() == 4) {
    s.variant = PdsVariant::kQ4Special;
    const FieldElem chosen = x.value_or(FieldElem{2});
    if (chosen.value < 2 || chosen.value >= f.q()) {
      throw UnsupportedQ("q=4 seed needs x outside {0,1}");
    }
    s.x = chosen;
    for (FieldElem j : f.elements()) s.q_seeds.push_back({0, kRho, j, chosen});
  } else {
    s.variant = PdsVariant::kEvenGe8;
    for (FieldElem j : f.elements()) s.q_seeds.push_back({0, kRho, j, zero});
  }
  s.q_seeds.push_back({0, kRho, kRho, zero});
  for (FieldElem u : f.elements()) s.s_seeds.push_back({1, u, u, seed_poly(f, u)});
  s.s_seeds.push_back({1, kRho, Field::one(), Field::one()});
  return s;
}

PdsCertificate verify_pds(const BipartiteGraph& g, const VertexSet& u, unsigned threads) {
  PdsCertificate c;
  c.pds = u;
  c.cardinality = u.size();
  c.perfect = true;
  std::vector<bool> inside(g.order(), false);
  for (VertexId v : u) {
    if (v >= g.order()) throw IndexOutOfRange("set member out of range");
    inside[v] = true;
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (inside[v]) continue;
    std::uint32_t hits = 0;
    for (VertexId w : g.neighbors(v)) hits += inside[w] ? 1 : 0;
    ++c.outside_hits[hits];
    if (hits != 1 && c.perfect) {
      c.perfect = false;
      c.witness = v;
      c.witness_hits = hits;
    }
  }
  const BipartiteGraph h = induced_subgraph(g, u);
  c.induced_degrees = degree_profile(h);
  c.induced_diameter = diameter(h, threads);
  return c;
}

std::uint64_t expected_pds_cardinality(std::uint32_t q) noexcept {
  if (q == 4) return 70;
  const std::uint64_t qq = q;
  return 2 * (qq * qq + 4 * qq + 3);
}

std::uint64_t expected_residual_order(std::uint32_t q) noexcept {
  const std::uint64_t qq = q;
  return 2 * (qq * qq * qq - 3 * qq - 2);
}

namespace {

PdsConstruction construct(const Field& f, const BipartiteGraph& gamma,
                          std::optional<FieldElem> x, unsigned threads) {
  PdsConstruction out;
  out.q = f.q();
  out.seeds = make_seed_sets(f, x);
  const Dominated dq = dominate(gamma, out.seeds.q_seeds);
  const Dominated ds = dominate(gamma, out.seeds.s_seeds);
  out.q_set = dq.seeds;
  out.s_set = ds.seeds;
  out.i_q = dq.common;
  out.i_s = ds.common;
  out.d_q = dq.all;
  out.d_s = ds.all;
  out.overlap = dq.all.intersected(ds.all);
  out.expected_cardinality = expected_pds_cardinality(f.q());
  out.certificate = verify_pds(gamma, dq.all.united(ds.all), threads);
  return out;
}

}  // namespace

PdsConstruction build_pds(const Field& f, const BipartiteGraph& gamma,
                          std::optional<FieldElem> x, unsigned threads) {
  require_even_q(f, 4);
  PdsConstruction out = construct(f, gamma, x, threads);
  if (!out.certificate.perfect) {
    const VertexId w = *out.certificate.witness;
    throw PerfectionFailure("vertex " + to_string(gamma.label(w)) + " has " +
                                std::to_string(out.certificate.witness_hits) +
                                " neighbors in the dominating set",
                            w);
  }
  if (out.seeds.variant == PdsVariant::kQ4Special) {
    for (FieldElem other : {FieldElem{2}, FieldElem{3}}) {
      if (other == *out.seeds.x) continue;
      const PdsConstruction alt = construct(f, gamma, other, threads);
      out.alternates.push_back({other, alt.certificate.cardinality, alt.certificate.perfect});
    }
  }
  return out;
}

PdsConstruction build_pds(std::uint32_t q, unsigned threads) {
  const Field f(q);
  return build_pds(f, build_gamma(f), std::nullopt, threads);
}

BipartiteGraph remove_pds(const BipartiteGraph& gamma, const PdsConstruction& pds) {
  return remove_vertices(gamma, pds.certificate.pds);
}

BipartiteGraph remove_pds(std::uint32_t q) {
  const Field f(q);
  const BipartiteGraph gamma = build_gamma(f);
  return remove_pds(gamma, build_pds(f, gamma));
}

std::vector<MatchedPair> matching_pairs(const Field& f) {
  require_even_q(f, 8);
  const Coord zero = Field::zero();
  const Coord one = Field::one();
  const Label rho01{1, kRho, zero, one};
  const Label rho11{1, kRho, one, one};
  std::vector<MatchedPair> out;
  for (FieldElem u : f.elements()) {
    const FieldElem pu = seed_poly(f, u);
    out.push_back({"(rho,rho,u)_1 ~ (rho,u,p(u))_0", {1, kRho, kRho, u},
                   Label{0, kRho, u, pu}, {1, u, u, pu}});
  }
  out.push_back({"(rho,rho,rho)_1 ~ (rho,rho,1)_0", {1, kRho, kRho, kRho},
                 Label{0, kRho, kRho, one}, rho11});
  for (FieldElem t : f.elements()) {
    const FieldElem pt = seed_poly(f, t);
    out.push_back({"(rho,t,0)_1 ~ (0,t,p(t))_0", {1, kRho, t, zero}, Label{0, zero, t, pt},
                   {1, t, t, pt}});
  }
  for (FieldElem a : f.elements()) {
    const FieldElem a2 = f.mul(a, a);
    out.push_back({"(a,a,0)_1 ~ (1,0,a^2)_0", {1, a, a, zero}, Label{0, one, zero, a2}, rho01});
    out.push_back({"(a,a+1,0)_1 ~ (1,1,a^2)_0", {1, a, f.add(a, Field::one()), zero},
                   Label{0, one, one, a2}, rho11});
  }
  for (FieldElem a : f.elements()) {
    const FieldElem pa = seed_poly(f, a);
    for (FieldElem t : f.elements()) {
      if (t.value < 2) continue;
      MatchedPair m;
      m.rule = "(a,a+t,0)_1 ~ (x,ax+a+t,a^2x)_0";
      m.from = {1, a, f.add(a, t), zero};
      if (pa == Field::zero()) {
        // (t+1)(u+a) = p(a) = 0 forces u = a, then (x+1)(u+a) = t = 0.
        m.via = {1, a, a, pa};
        out.push_back(m);
        continue;
      }
      const FieldElem t1 = f.add(t, Field::one());
      const FieldElem u = f.add(a, f.mul(f.inv(t1), pa));
      const FieldElem x = f.add(Field::one(), f.mul(f.mul(t, t1), f.inv(pa)));
      m.to = Label{0, x, f.add(f.add(f.mul(a, x), a), t), f.mul(f.mul(a, a), x)};
      m.via = {1, u, u, seed_poly(f, u)};
      out.push_back(m);
    }
  }
  return out;
}

MatchingCheck check_matching(const BipartiteGraph& gamma, const PdsConstruction& pds,
                             const std::vector<MatchedPair>& pairs) {
  MatchingCheck r;
  r.pairs = pairs.size();
  const auto problem = [&](const MatchedPair& m, const std::string& what) {
    r.problems.push_back(m.rule + " at " + to_string(m.from) + ": " + what);
  };
  std::vector<VertexId> sources, targets;
  for (const MatchedPair& m : pairs) {
    if (!m.to) {
      problem(m, "no closed-form partner (p(a) = 0)");
      continue;
    }
    const auto from = gamma.find(m.from);
    const auto to = gamma.find(*m.to);
    const auto via = gamma.find(m.via);
    if (!from || !to || !via) {
      problem(m, "label is not a vertex");
      continue;
    }
    if (m.from.side != 1 || !pds.d_q.contains(*from)) problem(m, "source not in D_Q ∩ V_1");
    if (m.to->side != 0 || !pds.d_s.contains(*to)) problem(m, "target not in D_S ∩ V_0");
    if (!gamma.has_edge(*from, *to)) problem(m, "pair is not an edge");
    if (!gamma.has_edge(*to, *via)) problem(m, "target not adjacent to " + to_string(m.via));
    sources.push_back(*from);
    targets.push_back(*to);
  }
  const auto count_distinct = [](std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  if (count_distinct(targets) != targets.size()) {
    r.problems.push_back("matching is not injective");
  }
  std::size_t dq_side1 = 0;
  for (VertexId v : pds.d_q) dq_side1 += gamma.side(v) == 1 ? 1 : 0;
  if (count_distinct(sources) != dq_side1 || sources.size() != dq_side1) {
    r.problems.push_back("matching covers " + std::to_string(count_distinct(sources)) +
                         " of " + std::to_string(dq_side1) + " vertices of D_Q ∩ V_1");
  }
  r.ok = r.problems.empty();
  return r;
}

bool check_matching(std::uint32_t q) {
  const Field f(q);
  require_even_q(f, 8);
  const BipartiteGraph gamma = build_gamma(f);
  const PdsConstruction pds = build_pds(f, gamma);
  return check_matching(gamma, pds, matching_pairs(f)).ok;
}

}  // namespace cagekit
