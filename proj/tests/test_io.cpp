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

#include <algorithm>
#include <filesystem>
#include <random>

#include "cagekit/construct.hpp"
#include "cagekit/error.hpp"
#include "cagekit/io.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/oracles.hpp"

using cagekit::BipartiteGraph;
using cagekit::Edge;
using cagekit::GraphFormat;

namespace {

constexpr GraphFormat kAll[] = {GraphFormat::kGraph6, GraphFormat::kDimacsEdge,
                                GraphFormat::kEdgeList, GraphFormat::kLabeledJson};

std::size_t parse_error_line(std::string_view text, GraphFormat fmt) {
  try {
    cagekit::parse_graph(text, fmt);
  } catch (const cagekit::ParseError& e) {
    return e.line();
  }
  return 0;
}

BipartiteGraph graph_of(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::uint8_t> sides(n, 0);
  return BipartiteGraph::from_edges(n, sides, std::move(edges));
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph6 reference strings") {
    // 5 vertices, edges 0-2 0-4 1-3 3-4
    const auto g = graph_of(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(cagekit::serialize(g, GraphFormat::kGraph6) == "DQc\n");
    std::vector<Edge> k4;
    for (cagekit::VertexId u = 0; u < 4; ++u) {
      for (cagekit::VertexId v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
    }
    CHECK(cagekit::serialize(graph_of(4, k4), GraphFormat::kGraph6) == "C~\n");
    CHECK(cagekit::serialize(graph_of(1, {}), GraphFormat::kGraph6) == "@\n");
  }

  TEST_CASE("graph6 long order form") {
    const std::string text = cagekit::serialize(graph_of(63, {}), GraphFormat::kGraph6);
    CHECK(text.rfind("~??~", 0) == 0);
    CHECK(text.size() == 4 + (63 * 62 / 2 + 5) / 6 + 1);
    const auto back = cagekit::parse_graph(text, GraphFormat::kGraph6);
    CHECK(back.order() == 63);
    const std::string short_form = cagekit::serialize(graph_of(62, {}), GraphFormat::kGraph6);
    CHECK(short_form.front() == '}');
  }

  TEST_CASE("graph6 parsing") {
    const auto g = cagekit::parse_graph(">>graph6<<DQc", GraphFormat::kGraph6);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(cagekit::is_bipartite_consistent(g));
    CHECK(parse_error_line("D\x01" "c\n", GraphFormat::kGraph6) == 1);
    CHECK(parse_error_line("DQ\n", GraphFormat::kGraph6) == 1);
    // nonzero padding bits
    CHECK(parse_error_line("DQd\n", GraphFormat::kGraph6) == 1);
    CHECK(parse_error_line("DQc\nDQc\n", GraphFormat::kGraph6) == 2);
  }

  TEST_CASE("DIMACS and edge list text") {
    const auto g = cagekit::build_gamma(2);
    const std::string dimacs = cagekit::serialize(g, GraphFormat::kDimacsEdge);
    CHECK(dimacs.rfind("p edge 30 45\n", 0) == 0);
    CHECK(dimacs.find("\ne 1 ") != std::string::npos);
    const std::string list = cagekit::serialize(g, GraphFormat::kEdgeList);
    CHECK(std::count(list.begin(), list.end(), '\n') == 45);
    const auto [u, v] = g.edges().front();
    CHECK(list.rfind(std::to_string(u) + " " + std::to_string(v) + "\n", 0) == 0);

    const auto parsed = cagekit::parse_graph("c hello\np edge 3 2\ne 1 2\nc mid\ne 2 3\n",
                                             GraphFormat::kDimacsEdge);
    CHECK(parsed.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(cagekit::parse_graph("0 1\n\n1 2\n", GraphFormat::kEdgeList).size() == 2);
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("p edge 3 2\ne 1 2\ne 2 x\n", GraphFormat::kDimacsEdge) == 3);
    CHECK(parse_error_line("p edge 3 2\ne 1 2\n", GraphFormat::kDimacsEdge) > 0);
    CHECK(parse_error_line("e 1 2\n", GraphFormat::kDimacsEdge) == 1);
    CHECK(parse_error_line("p edge 3 1\ne 1 4\n", GraphFormat::kDimacsEdge) == 2);
    CHECK(parse_error_line("0 1\n1 two\n", GraphFormat::kEdgeList) == 2);
    CHECK(parse_error_line("0 1\n1 1\n", GraphFormat::kEdgeList) == 2);
    CHECK(parse_error_line("0 1\n2 3\n1 0\n", GraphFormat::kEdgeList) == 3);
    CHECK(parse_error_line("p edge 3 2\ne 1 2\ne 2 1\n", GraphFormat::kDimacsEdge) == 3);
    CHECK(parse_error_line("p edge 99999999999 0\n", GraphFormat::kDimacsEdge) == 1);
    CHECK(parse_error_line("{\n  \"format\": 3\n", GraphFormat::kLabeledJson) > 0);
  }

  TEST_CASE("labeled JSON carries labels and sides") {
    const auto g = cagekit::build_gamma(3);
    const std::string text = cagekit::serialize(g, GraphFormat::kLabeledJson);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["format"] == "cagekit-labeled-graph");
    CHECK(doc["order"] == g.order());
    CHECK(doc["size"] == g.size());
    CHECK(text.find("\"rho\"") != std::string::npos);
    const auto back = cagekit::parse_graph(text, GraphFormat::kLabeledJson);
    CHECK(back == g);
    CHECK(back.label(5) == g.label(5));
  }

  TEST_CASE("labeled JSON errors point at the offending line") {
    std::string text = cagekit::serialize(cagekit::build_gamma(2), GraphFormat::kLabeledJson);
    const auto pos = text.find("\"rho\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"bad\"");
    const std::string_view before = std::string_view(text).substr(0, pos);
    const auto line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
    CHECK(parse_error_line(text, GraphFormat::kLabeledJson) == line);
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(17);
    std::vector<BipartiteGraph> subjects = {cagekit::build_gamma(2), cagekit::build_gamma(4),
                                            cagekit::build_hq(3)};
    for (int i = 0; i < 12; ++i) {
      subjects.push_back(testing::random_graph(rng, 1 + rng() % 80, 0.1, true));
    }
    for (const auto& g : subjects) {
      for (GraphFormat fmt : kAll) {
        if (fmt == GraphFormat::kLabeledJson && !g.has_labels()) continue;
        CAPTURE(cagekit::to_string(fmt));
        const std::string bytes = cagekit::serialize(g, fmt);
        const auto back = cagekit::parse_graph(bytes, fmt);
        CHECK(back.edges() == g.edges());
        CHECK(cagekit::serialize(back, fmt) == bytes);
        if (fmt != GraphFormat::kEdgeList || (g.order() > 0 && g.degree(g.order() - 1) > 0)) {
          CHECK(same_edges(back, g));
        }
      }
    }
  }

  TEST_CASE("edge lists cannot carry trailing isolated vertices") {
    const auto g = graph_of(5, {{0, 1}, {1, 2}});
    const auto back = cagekit::parse_graph(cagekit::serialize(g, GraphFormat::kEdgeList),
                                           GraphFormat::kEdgeList);
    CHECK(back.order() == 3);
    CHECK(back.edges() == g.edges());
  }

  TEST_CASE("unlabeled formats recover sides by 2-coloring") {
    const auto g = cagekit::build_gamma(3);
    const auto back = cagekit::parse_graph(cagekit::serialize(g, GraphFormat::kGraph6),
                                           GraphFormat::kGraph6);
    CHECK(cagekit::is_bipartite_consistent(back));
    CHECK(back.side(0) == 0);
  }

  TEST_CASE("format names and extensions") {
    for (GraphFormat fmt : kAll) CHECK(cagekit::parse_format(cagekit::to_string(fmt)) == fmt);
    CHECK_FALSE(cagekit::parse_format("graphml").has_value());
    CHECK(cagekit::format_from_extension("a.g6") == GraphFormat::kGraph6);
    CHECK(cagekit::format_from_extension("a.col") == GraphFormat::kDimacsEdge);
    CHECK(cagekit::format_from_extension("a.dimacs") == GraphFormat::kDimacsEdge);
    CHECK(cagekit::format_from_extension("a.edges") == GraphFormat::kEdgeList);
    CHECK(cagekit::format_from_extension("a.json") == GraphFormat::kLabeledJson);
    CHECK_FALSE(cagekit::format_from_extension("a.bin").has_value());
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "cagekit-test-io";
    std::filesystem::create_directories(dir);
    const auto g = cagekit::build_gamma(3);
    const auto path = dir / "g3.json";
    cagekit::write_text_file(path, cagekit::serialize(g, GraphFormat::kLabeledJson));
    CHECK(cagekit::read_graph_file(path) == g);
    CHECK_THROWS_AS(cagekit::read_graph_file(dir / "missing.g6"), cagekit::Error);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("report JSON spells infinite girth") {
    cagekit::VerifyReport r;
    r.order = 2;
    r.size = 1;
    r.girth = std::nullopt;
    const auto doc = nlohmann::json::parse(cagekit::report_to_json(r));
    CHECK(doc["girth"] == "inf");
    CHECK(doc["order"] == 2);
  }
}
