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

// cagekit: build and certify girth-8 cages and their perfect-dominating-set
// reductions.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cagekit/construct.hpp"
#include "cagekit/dominating.hpp"
#include "cagekit/error.hpp"
#include "cagekit/io.hpp"
#include "cagekit/selftest.hpp"
#include "cagekit/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

// Raised for argument problems found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("CAGEKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CAGEKIT_THREADS='" << env << "'\n";
  }
  return 1;
}

void require_prime_power(std::uint32_t q) {
  if (!cagekit::is_prime_power(q) || q > cagekit::Field::kMaxOrder) {
    throw UsageError("q=" + std::to_string(q) + " is not a prime power");
  }
}

cagekit::GraphFormat format_or_usage(const std::string& name) {
  if (auto f = cagekit::parse_format(name)) return *f;
  throw UsageError("unknown format '" + name +
                   "' (graph6, dimacs-edge, edge-list, labeled-json)");
}

void emit(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty() || out_path == "-") {
    std::cout << bytes;
  } else {
    cagekit::write_text_file(out_path, bytes);
  }
}

std::string extension_for(cagekit::GraphFormat f) {
  switch (f) {
    case cagekit::GraphFormat::kGraph6: return ".g6";
    case cagekit::GraphFormat::kDimacsEdge: return ".dimacs";
    case cagekit::GraphFormat::kEdgeList: return ".edges";
    case cagekit::GraphFormat::kLabeledJson: return ".json";
  }
  return "";
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
  std::uint32_t q = 0;
  std::string kind = "gamma";
  std::string format = "edge-list";
  std::string out;
};

int run_build(const BuildArgs& a) {
  require_prime_power(a.q);
  const auto fmt = format_or_usage(a.format);
  std::optional<cagekit::Stage> stage;
  if (a.kind.rfind("stage:", 0) == 0) {
    stage = cagekit::parse_stage(a.kind.substr(6));
    if (!stage) throw UsageError("unknown stage '" + a.kind.substr(6) + "'");
  } else if (a.kind != "gamma" && a.kind != "gamma-dual" && a.kind != "bq" && a.kind != "hq") {
    throw UsageError("unknown kind '" + a.kind + "'");
  }

  const cagekit::Field f(a.q);
  cagekit::BipartiteGraph g;
  if (stage) {
    g = cagekit::build_staged(f, *stage);
  } else if (a.kind == "gamma") {
    g = cagekit::build_gamma(f);
  } else if (a.kind == "gamma-dual") {
    g = cagekit::build_gamma_dual(f);
  } else if (a.kind == "bq") {
    g = cagekit::build_bq(f);
  } else {
    g = cagekit::build_hq(f);
  }
  emit(a.out, cagekit::serialize(g, fmt));
  std::cerr << "built " << a.kind << " q=" << a.q << ": order=" << g.order()
            << " size=" << g.size() << " field=GF(" << f.p() << "^" << f.n()
            << ") modulus=" << f.modulus_string() << '\n';
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::string format;
  std::optional<std::uint32_t> girth, regular, diameter;
  std::optional<std::uint64_t> order;
  bool bipartite = false;
  bool no_diameter = false;
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& a) {
  std::optional<cagekit::GraphFormat> fmt;
  if (!a.format.empty()) fmt = format_or_usage(a.format);
  const cagekit::BipartiteGraph g = cagekit::read_graph_file(a.path, fmt);

  cagekit::VerifyOptions vo;
  vo.threads = a.threads;
  vo.compute_diameter = !a.no_diameter || a.diameter.has_value();
  const cagekit::VerifyReport r = cagekit::verify(g, vo);

  ordered_json doc = ordered_json::parse(cagekit::report_to_json(r));
  ordered_json checks = ordered_json::array();
  bool pass = true;
  const auto check = [&](const char* name, const ordered_json& expected,
                         const ordered_json& actual, bool ok) {
    checks.push_back({{"check", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
    pass &= ok;
  };
  const auto ext = [](const cagekit::Extent& e) {
    return e ? ordered_json(*e) : ordered_json("inf");
  };
  if (a.order) check("order", *a.order, r.order, r.order == *a.order);
  if (a.regular) {
    const auto d = r.regular_degree();
    check("regular", *a.regular, d ? ordered_json(*d) : ordered_json(nullptr),
          d == *a.regular);
  }
  if (a.girth) check("girth", *a.girth, ext(r.girth), r.girth == *a.girth);
  if (a.diameter) check("diameter", *a.diameter, ext(r.diameter), r.diameter == *a.diameter);
  if (a.bipartite) check("bipartite", true, r.bipartite, r.bipartite);
  doc["expectations"] = checks;
  doc["pass"] = pass;
  std::cout << doc.dump(2) << '\n';
  return pass ? kOk : kPropertyFailure;
}

// ---- pds ------------------------------------------------------------------

struct PdsArgs {
  std::uint32_t q = 0;
  bool remove = false;
  std::string out;
  std::string format = "edge-list";
  unsigned threads = 1;
};

int run_pds(const PdsArgs& a) {
  require_prime_power(a.q);
  if (a.q % 2 != 0 || a.q < 4) {
    throw UsageError("pds needs an even prime power q >= 4, got q=" + std::to_string(a.q));
  }
  const auto fmt = format_or_usage(a.format);
  const cagekit::Field f(a.q);
  const cagekit::BipartiteGraph gamma = cagekit::build_gamma(f);
  const cagekit::PdsConstruction pds = cagekit::build_pds(f, gamma, std::nullopt, a.threads);

  ordered_json doc = ordered_json::parse(cagekit::pds_to_json(gamma, pds));
  if (!a.out.empty()) {
    cagekit::write_text_file(a.out + ".labels",
                             cagekit::label_list(gamma, pds.certificate.pds));
  }
  bool residual_ok = true;
  if (a.remove) {
    const cagekit::BipartiteGraph rest = cagekit::remove_pds(gamma, pds);
    const cagekit::VerifyReport r = cagekit::verify(rest, {a.threads, false});
    residual_ok = r.order == cagekit::expected_residual_order(a.q) &&
                  r.regular_degree() == a.q && r.girth == 8u;
    ordered_json res = ordered_json::parse(cagekit::report_to_json(r));
    res.erase("diameter");
    res["pass"] = residual_ok;
    doc["residual"] = res;
    if (!a.out.empty()) {
      cagekit::write_text_file(a.out + ".residual" + extension_for(fmt),
                               cagekit::serialize(rest, fmt));
    }
    std::cerr << "residual q=" << a.q << ": order=" << r.order << " size=" << r.size << '\n';
  }
  std::cout << doc.dump(2) << '\n';
  return pds.passed() && residual_ok ? kOk : kPropertyFailure;
}

// ---- selftest / stats -----------------------------------------------------

struct SelftestArgs {
  std::uint32_t q_max = 9;
  bool quick = false;
  unsigned threads = 1;
  std::uint64_t seed = cagekit::SelftestOptions{}.seed;
  std::vector<int> only;
};

int run_selftest(const SelftestArgs& a) {
  cagekit::SelftestOptions opt;
  opt.q_max = a.q_max;
  opt.quick = a.quick;
  opt.threads = a.threads;
  opt.seed = a.seed;
  opt.only = a.only;
  opt.log = &std::cout;
  const auto results = cagekit::run_selftest(opt);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed (q <= " << a.q_max
            << (a.quick ? ", quick" : "") << ")\n";
  return passed == results.size() ? kOk : kPropertyFailure;
}

int run_stats(std::uint32_t q) {
  require_prime_power(q);
  const cagekit::Field f(q);
  ordered_json doc;
  doc["field"] = ordered_json::parse(cagekit::field_to_json(f));
  const std::uint64_t q1 = q;
  doc["gamma"] = {{"order", cagekit::moore_bound(q1 + 1)},
                  {"size", (q1 + 1) * (q1 * q1 * q1 + q1 * q1 + q1 + 1)},
                  {"degree", q1 + 1}};
  doc["bq_order"] = 2 * q1 * q1 * q1;
  if (q % 2 == 0 && q >= 4) {
    doc["pds_cardinality"] = cagekit::expected_pds_cardinality(q);
    doc["residual_order"] = cagekit::expected_residual_order(q);
  }
  std::cout << doc.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cagekit: Moore (q+1,8)-cages from finite-field coordinates"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a graph and write it out");
  build_cmd->add_option("--q", build.q, "Field order (prime power)")->required();
  build_cmd->add_option("--kind", build.kind,
                        "gamma | gamma-dual | bq | hq | stage:<bq|bq-prime|bq-double-prime|"
                        "bq-triple-prime|gamma>")
      ->capture_default_str();
  build_cmd->add_option("--format", build.format, "graph6 | dimacs-edge | edge-list | labeled-json")
      ->capture_default_str();
  build_cmd->add_option("--out", build.out, "Output path (default stdout)");

  VerifyArgs verify;
  verify.threads = default_threads();
  auto* verify_cmd = app.add_subcommand("verify", "Measure a graph file and check expectations");
  verify_cmd->add_option("path", verify.path, "Graph file")->required();
  verify_cmd->add_option("--format", verify.format, "Override the format inferred from the extension");
  verify_cmd->add_option("--expect-girth", verify.girth);
  verify_cmd->add_option("--expect-regular", verify.regular);
  verify_cmd->add_option("--expect-order", verify.order);
  verify_cmd->add_option("--expect-diameter", verify.diameter);
  verify_cmd->add_flag("--expect-bipartite", verify.bipartite);
  verify_cmd->add_flag("--no-diameter", verify.no_diameter, "Skip the all-pairs diameter pass");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  PdsArgs pds;
  pds.threads = default_threads();
  auto* pds_cmd = app.add_subcommand("pds", "Build and certify the perfect dominating set");
  pds_cmd->add_option("--q", pds.q, "Even prime power >= 4")->required();
  pds_cmd->add_flag("--remove", pds.remove, "Also delete the set and certify the residual graph");
  pds_cmd->add_option("--out", pds.out, "Output prefix for <prefix>.labels and the residual graph");
  pds_cmd->add_option("--format", pds.format, "Residual graph format")->capture_default_str();
  pds_cmd->add_option("--threads", pds.threads)->capture_default_str();

  SelftestArgs selftest;
  selftest.threads = default_threads();
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance battery");
  selftest_cmd->add_option("--q-max", selftest.q_max, "Largest field order to include")
      ->capture_default_str();
  selftest_cmd->add_flag("--quick", selftest.quick, "Skip diameters for q >= 11");
  selftest_cmd->add_option("--threads", selftest.threads)->capture_default_str();
  selftest_cmd->add_option("--seed", selftest.seed)->capture_default_str();
  selftest_cmd->add_option("--only", selftest.only, "Criterion ids to run")
      ->check(CLI::Range(1, 9));

  std::uint32_t stats_q = 0;
  auto* stats_cmd = app.add_subcommand("stats", "Print field modulus and expected graph sizes");
  stats_cmd->add_option("--q", stats_q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*verify_cmd) return run_verify(verify);
    if (*pds_cmd) return run_pds(pds);
    if (*selftest_cmd) return run_selftest(selftest);
    if (*stats_cmd) return run_stats(stats_q);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cagekit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cagekit::NotPrimePower& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cagekit::PerfectionFailure& e) {
    std::cerr << "property failure: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kUsageError;
}
