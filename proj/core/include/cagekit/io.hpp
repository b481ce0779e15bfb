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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cagekit/dominating.hpp"
#include "cagekit/field.hpp"
#include "cagekit/graph.hpp"
#include "cagekit/verify.hpp"

namespace cagekit {

enum class GraphFormat { kGraph6, kDimacsEdge, kEdgeList, kLabeledJson };

std::string_view to_string(GraphFormat format) noexcept;
// Accepts "graph6", "dimacs-edge", "edge-list", "labeled-json".
std::optional<GraphFormat> parse_format(std::string_view name) noexcept;
// .g6, .dimacs/.col, .edges/.txt, .json
std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path);

// Serializations are byte-deterministic; vertices appear in index order,
// which for constructed graphs is label-codec order.
//
//   graph6        standard graph6 line (short and long order forms)
//   dimacs-edge   "p edge n m" then 1-based "e u v", u < v, ascending
//   edge-list     "u v" per line, 0-based, u < v, ascending
//   labeled-json  vertices with side and (a,b,c) label, rho as "rho"
std::string serialize(const BipartiteGraph& g, GraphFormat format);

// Throws ParseError (with 1-based line number) on malformed input. Formats
// without side information get sides from a BFS 2-coloring started at the
// lowest-numbered vertex of each component.
BipartiteGraph parse_graph(std::string_view text, GraphFormat format);

BipartiteGraph read_graph_file(const std::filesystem::path& path,
                               std::optional<GraphFormat> format = std::nullopt);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

// Stable-key JSON documents.
std::string field_to_json(const Field& f);
std::string report_to_json(const VerifyReport& report);
std::string pds_to_json(const BipartiteGraph& gamma, const PdsConstruction& pds);

// One "(a,b,c)_i" label per line, in vertex order.
std::string label_list(const BipartiteGraph& g, const VertexSet& vertices);

}  // namespace cagekit
