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

#include "cagekit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cagekit/construct.hpp"
#include "cagekit/dominating.hpp"
#include "cagekit/error.hpp"
#include "cagekit/io.hpp"
#include "cagekit/oracle.hpp"
#include "cagekit/verify.hpp"

namespace cagekit {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Coord kRho = Coord::rho();
constexpr std::size_t kMaxReportedFailures = 12;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string extent_text(const Extent& e) { return e ? std::to_string(*e) : "inf"; }

std::string histogram_text(const DegreeHistogram& h) {
  std::string out = "{";
  for (const auto& [d, c] : h) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(d) + ":" + std::to_string(c);
  }
  return out + "}";
}

class Criterion {
 public:
  Criterion(int id, std::string name) : t0_(Clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
  }

  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failed_;
      if (result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(what);
    }
    return ok;
  }

  void note(const std::string& text) {
    if (!result_.summary.empty()) result_.summary += "; ";
    result_.summary += text;
  }

  // Runs body, turning library errors into failures.
  void guarded(const std::string& context, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, context + ": " + e.what());
    }
  }

  CriterionResult finish() {
    if (failed_ > result_.failures.size()) {
      result_.failures.push_back("... " + std::to_string(failed_ - result_.failures.size()) +
                                 " more");
    }
    result_.passed = failed_ == 0;
    result_.seconds = seconds_since(t0_);
    return std::move(result_);
  }

 private:
  Clock::time_point t0_;
  std::size_t failed_ = 0;
  CriterionResult result_;
};

std::vector<std::uint32_t> limited(std::initializer_list<std::uint32_t> qs, std::uint32_t q_max) {
  std::vector<std::uint32_t> out;
  for (auto q : qs) {
    if (q <= q_max) out.push_back(q);
  }
  return out;
}

std::string qlabel(std::uint32_t q) { return "q=" + std::to_string(q); }

// ---- 1 ------------------------------------------------------------------

CriterionResult moore_cages(const SelftestOptions& opt) {
  Criterion c(1, "Moore-cage reproduction");
  for (std::uint32_t q : limited({2, 3, 4, 5, 7, 8, 9, 11, 13, 16}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const auto t0 = Clock::now();
      const BipartiteGraph g = build_gamma(q);
      VerifyOptions vo;
      vo.threads = opt.threads;
      vo.compute_diameter = !(opt.quick && q >= 11);
      const VerifyReport r = verify(g, vo);
      const double dt = seconds_since(t0);
      const std::string tag = qlabel(q) + ": ";
      const std::uint64_t qq = q;
      c.expect(r.order == 2 * (qq * qq * qq + qq * qq + qq + 1) && r.order == moore_bound(q + 1),
               tag + "order " + std::to_string(r.order));
      c.expect(r.regular_degree() == q + 1, tag + "degrees " + histogram_text(r.degrees));
      c.expect(r.bipartite, tag + "not bipartite-consistent");
      c.expect(r.girth == 8u, tag + "girth " + extent_text(r.girth));
      if (r.diameter_computed) {
        c.expect(r.diameter == 4u, tag + "diameter " + extent_text(r.diameter));
      }
      if (q <= 9) c.expect(dt < 1.0, tag + "took " + std::to_string(dt) + " s (> 1 s)");
      if (q == 16) c.expect(dt < 60.0, tag + "took " + std::to_string(dt) + " s (> 60 s)");
      std::ostringstream os;
      os << "q=" << q << " n=" << r.order << (r.diameter_computed ? "" : " (no diam)") << " "
         << std::fixed << std::setprecision(2) << dt << "s";
      c.note(os.str());
    });
  }
  return c.finish();
}

// ---- 2 ------------------------------------------------------------------

CriterionResult dual_equivalence(const SelftestOptions& opt) {
  Criterion c(2, "Dual-formulation equivalence");
  std::size_t checked = 0;
  for (std::uint32_t q : limited({2, 3, 4, 5, 7, 8, 9, 11, 13, 16}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      const auto bad = first_edge_mismatch(build_gamma(f), build_gamma_dual(f));
      c.expect(!bad, qlabel(q) + ": edge " + (bad ? to_string(bad->first) + " ~ " +
                                                        to_string(bad->second)
                                                  : std::string()) +
                         " in only one formulation");
      ++checked;
    });
  }
  c.note(std::to_string(checked) + " field orders");
  return c.finish();
}

// ---- 3 ------------------------------------------------------------------

CriterionResult bq_hq(const SelftestOptions& opt) {
  Criterion c(3, "B_q/H_q order, regularity, girth, isomorphism");
  for (std::uint32_t q : limited({3, 4, 5, 7, 8, 9}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      const BipartiteGraph bq = build_bq(f);
      const BipartiteGraph hq = build_hq(f);
      const std::uint64_t n = 2ull * q * q * q;
      for (const auto* g : {&bq, &hq}) {
        const std::string tag = qlabel(q) + (g == &bq ? " B_q: " : " H_q: ");
        const VerifyReport r = verify(*g, {opt.threads, false});
        c.expect(r.order == n, tag + "order " + std::to_string(r.order));
        c.expect(r.regular_degree() == q, tag + "degrees " + histogram_text(r.degrees));
        c.expect(r.bipartite, tag + "not bipartite-consistent");
        c.expect(r.girth == 8u, tag + "girth " + extent_text(r.girth));
      }
      c.expect(check_isomorphism(f, bq, hq), qlabel(q) + ": sigma is not an isomorphism");
    });
  }
  // Measured, not asserted.
  c.guarded("q=2", [&] {
    c.note("girth(B_2)=" + extent_text(girth(build_bq(2))) +
           " girth(H_2)=" + extent_text(girth(build_hq(2))));
  });
  return c.finish();
}

// ---- 4 ------------------------------------------------------------------

std::uint32_t expected_stage_degree(Stage stage, const Label& l, std::uint32_t q) {
  switch (stage) {
    case Stage::kBq: return q;
    case Stage::kBqPrime: return l.side == 0 ? q + 1 : q;
    case Stage::kBqDoublePrime: return (l.side == 0 && l.a.is_rho()) ? q : q + 1;
    case Stage::kBqTriplePrime:
      return (l.side == 1 && l.a.is_rho() && l.b.is_rho()) ? q : q + 1;
    case Stage::kGamma: return q + 1;
  }
  return 0;
}

bool labeled_subgraph(const BipartiteGraph& small, const BipartiteGraph& big) {
  for (VertexId v = 0; v < small.order(); ++v) {
    if (!big.find(small.label(v))) return false;
  }
  for (const auto& [u, v] : small.edges()) {
    const auto bu = big.find(small.label(u));
    const auto bv = big.find(small.label(v));
    if (!big.has_edge(*bu, *bv)) return false;
  }
  return true;
}

CriterionResult stage_ledger(const SelftestOptions& opt) {
  Criterion c(4, "Stage ledger B'/B''/B'''");
  constexpr Stage kStages[] = {Stage::kBq, Stage::kBqPrime, Stage::kBqDoublePrime,
                               Stage::kBqTriplePrime, Stage::kGamma};
  for (std::uint32_t q : limited({2, 3, 4, 5}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      const std::uint64_t q1 = q, q2 = q1 * q1, q3 = q2 * q1, q4 = q3 * q1;
      const std::uint64_t orders[] = {2 * q3, 2 * q3 + q2, 2 * q3 + 2 * q2 + q1,
                                      2 * q3 + 2 * q2 + 2 * q1 + 1,
                                      2 * (q3 + q2 + q1 + 1)};
      const std::uint64_t sizes[] = {q4, q4 + q3, q4 + 2 * q3 + q2,
                                     q4 + 2 * q3 + 2 * q2 + q1,
                                     (q1 + 1) * (q3 + q2 + q1 + 1)};
      std::vector<BipartiteGraph> graphs;
      for (Stage s : kStages) graphs.push_back(build_staged(f, s));
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const BipartiteGraph& g = graphs[i];
        const std::string tag = qlabel(q) + " " + std::string(to_string(kStages[i])) + ": ";
        c.expect(g.order() == orders[i], tag + "order " + std::to_string(g.order()));
        c.expect(g.size() == sizes[i], tag + "size " + std::to_string(g.size()));
        std::size_t off = 0;
        for (VertexId v = 0; v < g.order(); ++v) {
          if (g.degree(v) != expected_stage_degree(kStages[i], g.label(v), q)) ++off;
        }
        c.expect(off == 0, tag + std::to_string(off) + " vertices off the degree ledger");
        const Extent gi = girth(g, opt.threads);
        c.expect(gi == 8u, tag + "girth " + extent_text(gi));
        if (i + 1 < graphs.size()) {
          c.expect(labeled_subgraph(g, graphs[i + 1]),
                   tag + "not a labeled subgraph of the next stage");
        }
      }
      c.expect(!first_edge_mismatch(graphs[0], build_bq(f)),
               qlabel(q) + ": first stage differs from B_q");
      c.expect(same_edges(graphs.back(), build_gamma(f)),
               qlabel(q) + ": last stage differs from Gamma_q");
    });
  }
  return c.finish();
}

// ---- 5 ------------------------------------------------------------------

struct DistanceClaim {
  std::string name;
  Stage host;
  std::uint32_t at_least;
  std::function<std::vector<std::vector<Label>>(const Field&)> families;
};

std::vector<Coord> with_rho(const Field& f) {
  std::vector<Coord> out;
  for (FieldElem e : f.elements()) out.emplace_back(e);
  out.push_back(kRho);
  return out;
}

std::vector<DistanceClaim> distance_claims() {
  std::vector<DistanceClaim> claims;
  claims.push_back({"same a, side 1, >=4 in B_q", Stage::kBq, 4, [](const Field& f) {
                      std::vector<std::vector<Label>> out;
                      for (FieldElem a : f.elements()) {
                        auto& fam = out.emplace_back();
                        for (FieldElem b : f.elements())
                          for (FieldElem cc : f.elements()) fam.push_back({1, a, b, cc});
                      }
                      return out;
                    }});
  claims.push_back({"same i, side 0, >=4 in B_q", Stage::kBq, 4, [](const Field& f) {
                      std::vector<std::vector<Label>> out;
                      for (FieldElem i : f.elements()) {
                        auto& fam = out.emplace_back();
                        for (FieldElem j : f.elements())
                          for (FieldElem k : f.elements()) fam.push_back({0, i, j, k});
                      }
                      return out;
                    }});
  claims.push_back({"(x,y,*)_0 >=6 in B_q", Stage::kBq, 6, [](const Field& f) {
                      std::vector<std::vector<Label>> out;
                      for (FieldElem x : f.elements())
                        for (FieldElem y : f.elements()) {
                          auto& fam = out.emplace_back();
                          for (FieldElem j : f.elements()) fam.push_back({0, x, y, j});
                        }
                      return out;
                    }});
  claims.push_back({"(a,*,c)_1 >=6 in B'", Stage::kBqPrime, 6, [](const Field& f) {
                      std::vector<std::vector<Label>> out;
                      for (Coord a : with_rho(f))
                        for (FieldElem cc : f.elements()) {
                          auto& fam = out.emplace_back();
                          for (FieldElem t : f.elements()) fam.push_back({1, a, t, cc});
                        }
                      return out;
                    }});
  claims.push_back({"(rho,a,*)_0 >=6 in B''", Stage::kBqDoublePrime, 6, [](const Field& f) {
                      std::vector<std::vector<Label>> out;
                      for (Coord a : with_rho(f)) {
                        auto& fam = out.emplace_back();
                        for (FieldElem j : f.elements()) fam.push_back({0, kRho, a, j});
                      }
                      return out;
                    }});
  return claims;
}

CriterionResult distance_claims_check(const SelftestOptions& opt) {
  Criterion c(5, "Distance claims");
  constexpr std::size_t kSamples = 500;
  std::mt19937_64 rng(opt.seed);
  const auto claims = distance_claims();
  std::size_t exhaustive_sets = 0, sampled_pairs = 0;
  for (std::uint32_t q : limited({2, 3, 4, 5, 7, 8, 9}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      for (const DistanceClaim& claim : claims) {
        const BipartiteGraph host =
            claim.host == Stage::kBq ? build_bq(f) : build_staged(f, claim.host);
        const auto families = claim.families(f);
        const std::string tag = qlabel(q) + " " + claim.name + ": ";
        if (q <= 5) {
          for (const auto& fam : families) {
            std::vector<VertexId> members;
            for (const Label& l : fam) members.push_back(host.vertex(l));
            const Extent d = min_pairwise_distance(host, members, claim.at_least);
            c.expect(!d, tag + "pair at distance " + extent_text(d) + " in set containing " +
                             to_string(fam.front()));
            ++exhaustive_sets;
          }
        } else {
          for (std::size_t s = 0; s < kSamples; ++s) {
            const auto& fam = families[rng() % families.size()];
            const std::size_t i = rng() % fam.size();
            std::size_t j = rng() % (fam.size() - 1);
            if (j >= i) ++j;
            const Extent d = distance(host, host.vertex(fam[i]), host.vertex(fam[j]));
            c.expect(!d || *d >= claim.at_least,
                     tag + to_string(fam[i]) + " and " + to_string(fam[j]) + " at distance " +
                         extent_text(d));
            ++sampled_pairs;
          }
        }
      }
    });
  }
  c.note(std::to_string(exhaustive_sets) + " sets exhaustive, " +
         std::to_string(sampled_pairs) + " sampled pairs");
  return c.finish();
}

// ---- 6 ------------------------------------------------------------------

VertexSet closed_form_iq(const BipartiteGraph& g, const Field& f) {
  std::vector<VertexId> out;
  for (FieldElem t : f.elements()) out.push_back(g.vertex({0, Field::zero(), t, Field::zero()}));
  out.push_back(g.vertex({0, kRho, kRho, kRho}));
  return VertexSet(std::move(out));
}

VertexSet closed_form_is(const BipartiteGraph& g, const Field& f) {
  std::vector<VertexId> out;
  for (FieldElem u : f.elements()) {
    out.push_back(g.vertex({1, u, f.add(Field::one(), u), seed_poly(f, u)}));
  }
  out.push_back(g.vertex({1, kRho, Field::zero(), Field::one()}));
  return VertexSet(std::move(out));
}

CriterionResult perfect_dominating_set(const SelftestOptions& opt) {
  Criterion c(6, "Perfect dominating set");
  for (std::uint32_t q : limited({8, 16}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      const BipartiteGraph gamma = build_gamma(f);
      const PdsConstruction pds = build_pds(f, gamma, std::nullopt, opt.threads);
      const PdsCertificate& cert = pds.certificate;
      const std::string tag = qlabel(q) + ": ";
      const std::uint64_t q1 = q;
      c.expect(cert.perfect, tag + "not perfect");
      c.expect(cert.cardinality == 2 * (q1 * q1 + 4 * q1 + 3),
               tag + "cardinality " + std::to_string(cert.cardinality) + ", expected " +
                   std::to_string(2 * (q1 * q1 + 4 * q1 + 3)));
      c.expect(pds.disjoint(), tag + "D_Q and D_S share " + std::to_string(pds.overlap.size()) +
                                   " vertices, e.g. " +
                                   (pds.overlap.empty() ? std::string()
                                                        : to_string(gamma.label(
                                                              *pds.overlap.begin()))));
      c.expect(pds.i_q == closed_form_iq(gamma, f), tag + "I_Q differs from its closed form");
      c.expect(pds.i_s == closed_form_is(gamma, f), tag + "I_S differs from its closed form");
      const std::uint64_t block = (q1 + 1) * (q1 + 1) + 2 * (q1 + 1);
      c.expect(closed_neighborhood(gamma, pds.q_set).size() + pds.i_q.size() == block,
               tag + "|N[Q]|+|I_Q| != (q+1)^2+2(q+1)");
      c.expect(closed_neighborhood(gamma, pds.s_set).size() + pds.i_s.size() == block,
               tag + "|N[S]|+|I_S| != (q+1)^2+2(q+1)");
      const std::uint64_t outside = gamma.order() - cert.cardinality;
      c.expect(outside == expected_residual_order(q) &&
                   outside == 2 * (q1 - 2) * (q1 + 1) * (q1 + 1),
               tag + std::to_string(outside) + " outside vertices, expected " +
                   std::to_string(expected_residual_order(q)));
      bool degrees_ok = true;
      for (const auto& [d, n] : cert.induced_degrees) degrees_ok &= (d == 3 || d == q + 1);
      c.expect(degrees_ok, tag + "induced degrees " + histogram_text(cert.induced_degrees));
      c.expect(cert.induced_diameter == 5u,
               tag + "induced diameter " + extent_text(cert.induced_diameter));
      const MatchingCheck m = check_matching(gamma, pds, matching_pairs(f));
      c.expect(m.ok, tag + "matching: " + std::to_string(m.problems.size()) + " problems" +
                         (m.problems.empty() ? std::string() : ", first: " + m.problems.front()));
      c.note(qlabel(q) + " |D|=" + std::to_string(cert.cardinality));
    });
  }
  if (opt.q_max >= 4) {
    c.guarded("q=4", [&] {
      const PdsConstruction pds = build_pds(4, opt.threads);
      c.expect(pds.certificate.perfect, "q=4: Q' variant not perfect");
      c.expect(pds.certificate.cardinality == 70,
               "q=4: cardinality " + std::to_string(pds.certificate.cardinality));
      std::string alt;
      for (const auto& a : pds.alternates) {
        alt += " x=" + std::to_string(a.x.value) + (a.perfect ? " perfect" : " imperfect");
      }
      c.note("q=4 |D|=" + std::to_string(pds.certificate.cardinality) + " x=" +
             std::to_string(pds.seeds.x->value) + ", induced diameter " +
             extent_text(pds.certificate.induced_diameter) + ";" + alt);
    });
  }
  return c.finish();
}

// ---- 7 ------------------------------------------------------------------

CriterionResult residual_graphs(const SelftestOptions& opt) {
  Criterion c(7, "q-regular girth-8 graphs by deletion");
  const std::map<std::uint32_t, std::uint64_t> expected{{4, 100}, {8, 972}, {16, 8092}};
  for (std::uint32_t q : limited({4, 8, 16}, opt.q_max)) {
    c.guarded(qlabel(q), [&] {
      const Field f(q);
      const BipartiteGraph gamma = build_gamma(f);
      const BipartiteGraph rest = remove_pds(gamma, build_pds(f, gamma, std::nullopt, opt.threads));
      const VerifyReport r = verify(rest, {opt.threads, false});
      const std::string tag = qlabel(q) + ": ";
      c.expect(r.order == expected.at(q) && r.order == expected_residual_order(q),
               tag + "order " + std::to_string(r.order) + ", expected " +
                   std::to_string(expected.at(q)));
      c.expect(r.regular_degree() == q, tag + "degrees " + histogram_text(r.degrees));
      c.expect(r.girth == 8u, tag + "girth " + extent_text(r.girth));
      c.note(qlabel(q) + " n=" + std::to_string(r.order));
    });
  }
  return c.finish();
}

// ---- 8 ------------------------------------------------------------------

// Random simple graph on up to 200 vertices. Mostly bipartite with a
// density spread that yields girths 4..inf; every fifth graph is general.
BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t index) {
  std::uniform_int_distribution<std::size_t> order_dist(2, 200);
  const std::size_t n = order_dist(rng);
  std::vector<std::uint8_t> sides(n);
  for (auto& s : sides) s = static_cast<std::uint8_t>(rng() & 1u);
  const bool bipartite = index % 5 != 0;
  // Expected degree between ~0.8 and ~6.
  const double avg_degree = 0.8 + 5.2 * std::uniform_real_distribution<double>(0, 1)(rng);
  const double p = std::min(1.0, avg_degree / static_cast<double>(n));
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (bipartite && sides[u] == sides[v]) continue;
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return BipartiteGraph::from_edges(n, std::move(sides), std::move(edges));
}

CriterionResult verifier_soundness(const SelftestOptions& opt) {
  Criterion c(8, "Verifier soundness");
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  std::map<std::string, int> girths;
  for (std::size_t i = 0; i < 50; ++i) {
    const BipartiteGraph g = random_graph(rng, i);
    const Extent fast = girth(g, 1);
    const Extent slow = oracle::girth_by_edge_deletion(g);
    c.expect(fast == slow, "random graph " + std::to_string(i) + " (n=" +
                               std::to_string(g.order()) + "): kernel " + extent_text(fast) +
                               " vs oracle " + extent_text(slow));
    c.expect(girth(g, 4) == fast, "random graph " + std::to_string(i) + ": threaded girth differs");
    ++girths[extent_text(slow)];
  }
  std::string spread;
  for (const auto& [k, v] : girths) spread += " " + k + "x" + std::to_string(v);
  c.note("50 random graphs, girths:" + spread);

  if (opt.q_max >= 5) {
    c.guarded("gamma_5 corruption", [&] {
      const BipartiteGraph g5 = build_gamma(5);
      const auto detected = [&](const BipartiteGraph& g) {
        return !is_bipartite_consistent(g) || degree_profile(g).size() != 1 ||
               degree_profile(g).begin()->first != 6 || girth(g, opt.threads) != 8u;
      };
      c.expect(!detected(g5), "uncorrupted Gamma_5 flagged");
      const std::size_t n = g5.order();
      std::size_t trials = 0;
      for (int kind = 0; kind < 3; ++kind) {
        for (int rep = 0; rep < 8; ++rep) {
          const VertexId u = static_cast<VertexId>(rng() % n);
          BipartiteGraph bad;
          std::string what;
          if (kind == 2) {
            const auto nb = g5.neighbors(u);
            const VertexId v = nb[rng() % nb.size()];
            bad = with_edge_removed(g5, u, v);
            what = "removed edge";
          } else {
            VertexId v = u;
            while (v == u || g5.has_edge(u, v) ||
                   (kind == 0) != (g5.side(u) == g5.side(v))) {
              v = static_cast<VertexId>(rng() % n);
            }
            bad = with_edge_added(g5, u, v);
            what = kind == 0 ? "intra-side edge" : "cross edge";
          }
          c.expect(detected(bad), "undetected " + what + " at vertex " + std::to_string(u));
          ++trials;
        }
      }
      c.note(std::to_string(trials) + " Gamma_5 corruptions detected");
    });
  }
  return c.finish();
}

// ---- 9 ------------------------------------------------------------------

CriterionResult io_round_trip(const SelftestOptions& opt) {
  Criterion c(9, "I/O round trips");
  std::vector<std::pair<std::string, std::function<BipartiteGraph()>>> subjects;
  subjects.emplace_back("Gamma_3", [] { return build_gamma(3); });
  if (opt.q_max >= 4) subjects.emplace_back("remove_pds(4)", [] { return remove_pds(4); });
  for (const auto& [name, make] : subjects) {
    c.guarded(name, [&] {
      const BipartiteGraph g = make();
      for (GraphFormat fmt : {GraphFormat::kGraph6, GraphFormat::kDimacsEdge,
                              GraphFormat::kEdgeList, GraphFormat::kLabeledJson}) {
        const std::string tag = name + " " + std::string(to_string(fmt)) + ": ";
        const std::string bytes = serialize(g, fmt);
        const BipartiteGraph back = parse_graph(bytes, fmt);
        c.expect(same_edges(g, back), tag + "adjacency changed");
        c.expect(serialize(back, fmt) == bytes, tag + "re-serialization differs");
        c.expect(serialize(g, fmt) == bytes, tag + "serialization not deterministic");
        if (fmt == GraphFormat::kLabeledJson) c.expect(back == g, tag + "labels or sides changed");
      }
    });
  }
  c.note(std::to_string(subjects.size()) + " graphs x 4 formats");
  return c.finish();
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
  using Runner = CriterionResult (*)(const SelftestOptions&);
  constexpr Runner kRunners[] = {moore_cages,          dual_equivalence,   bq_hq,
                                 stage_ledger,         distance_claims_check,
                                 perfect_dominating_set, residual_graphs,
                                 verifier_soundness,   io_round_trip};
  std::vector<CriterionResult> results;
  int id = 0;
  for (Runner run : kRunners) {
    ++id;
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    results.push_back(run(options));
    if (options.log) *options.log << format_result(results.back()) << std::flush;
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << std::fixed
     << std::setprecision(2) << r.seconds << " s)";
  if (!r.summary.empty()) os << "  " << r.summary;
  os << '\n';
  for (const auto& f : r.failures) os << "        - " << f << '\n';
  return os.str();
}

}  // namespace cagekit
