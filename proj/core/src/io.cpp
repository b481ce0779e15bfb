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

#include "cagekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cagekit/error.hpp"
#include "json.hpp"

namespace cagekit {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kJsonFormatTag = "cagekit-labeled-graph";

// Sides from a BFS 2-coloring; on odd cycles the first color assigned wins,
// which the bipartite check then reports.
std::vector<std::uint8_t> two_color(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(n, kUnset);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] != kUnset) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId v : adj[u]) {
        if (side[v] == kUnset) {
          side[v] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push_back(v);
        }
      }
    }
  }
  return side;
}

BipartiteGraph assemble(std::size_t n, std::vector<Edge> edges, std::size_t line) {
  auto sides = two_color(n, edges);
  try {
    return BipartiteGraph::from_edges(n, std::move(sides), std::move(edges));
  } catch (const ConstructionError& e) {
    throw ParseError(e.what(), line);
  }
}

// Splits on '\n', dropping a trailing '\r'.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (word.empty() || ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(word) + "'",
                     line);
  }
  return v;
}

// ---- graph6 -------------------------------------------------------------

void append_order(std::string& out, std::uint64_t n) {
  const auto push_bits = [&](std::uint64_t v, int groups) {
    for (int g = groups - 1; g >= 0; --g) {
      out.push_back(static_cast<char>(((v >> (6 * g)) & 0x3f) + 63));
    }
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    push_bits(n, 3);
  } else {
    out += "~~";
    push_bits(n, 6);
  }
}

std::string to_graph6(const BipartiteGraph& g) {
  const std::uint64_t n = g.order();
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  std::vector<bool> x(bits, false);
  for (const auto& [i, j] : g.edges()) {
    x[std::uint64_t{j} * (j - 1) / 2 + i] = true;
  }
  std::string out;
  append_order(out, n);
  for (std::uint64_t k = 0; k < bits; k += 6) {
    int v = 0;
    for (std::uint64_t b = k; b < k + 6; ++b) {
      v = (v << 1) | (b < bits && x[b] ? 1 : 0);
    }
    out.push_back(static_cast<char>(v + 63));
  }
  out.push_back('\n');
  return out;
}

BipartiteGraph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.find('\n') != std::string_view::npos) {
    throw ParseError("graph6 input holds more than one graph", 2);
  }
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("invalid graph6 character", 1);
  }
  std::size_t pos = 0;
  const auto take = [&](int groups) {
    if (pos + groups > text.size()) throw ParseError("truncated graph6 order", 1);
    std::uint64_t v = 0;
    for (int g = 0; g < groups; ++g) v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return v;
  };
  if (text.empty()) throw ParseError("empty graph6 input", 1);
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > (1u << 24)) throw ParseError("graph6 order too large", 1);
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(groups),
                     1);
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  VertexId i = 0, j = 1;
  for (std::uint64_t gi = 0; gi < groups; ++gi) {
    const int v = text[pos + gi] - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (v >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("nonzero graph6 padding", 1);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return assemble(n, std::move(edges), 1);
}

// ---- DIMACS / edge list --------------------------------------------------

std::string to_dimacs(const BipartiteGraph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

BipartiteGraph from_dimacs(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<std::uint64_t> n, m;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto words = split_words(lines[ln]);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (n) throw ParseError("duplicate problem line", line_no);
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
        throw ParseError("expected 'p edge <n> <m>'", line_no);
      }
      n = parse_uint(words[2], line_no);
      m = parse_uint(words[3], line_no);
      if (*n >= (1u << 24)) throw ParseError("vertex count too large", line_no);
      header_line = line_no;
      continue;
    }
    if (words[0] == "e") {
      if (!n) throw ParseError("edge before problem line", line_no);
      if (words.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no);
      const auto u = parse_uint(words[1], line_no);
      const auto v = parse_uint(words[2], line_no);
      if (u < 1 || v < 1 || u > *n || v > *n) {
        throw ParseError("vertex out of range 1.." + std::to_string(*n), line_no);
      }
      if (u == v) throw ParseError("self-loop", line_no);
      if (!seen.insert(std::min(u, v) << 32 | std::max(u, v)).second) {
        throw ParseError("duplicate edge", line_no);
      }
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      continue;
    }
    throw ParseError("unknown line type '" + std::string(words[0]) + "'", line_no);
  }
  if (!n) throw ParseError("missing problem line", lines.size() + 1);
  if (edges.size() != *m) {
    throw ParseError("header declares " + std::to_string(*m) + " edges, found " +
                         std::to_string(edges.size()),
                     header_line);
  }
  return assemble(*n, std::move(edges), header_line);
}

std::string to_edge_list(const BipartiteGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

BipartiteGraph from_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t n = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto words = split_words(lines[ln]);
    if (words.empty()) continue;
    if (words.size() != 2) throw ParseError("expected '<u> <v>'", ln + 1);
    const auto u = parse_uint(words[0], ln + 1);
    const auto v = parse_uint(words[1], ln + 1);
    if (std::max(u, v) >= (1u << 24)) throw ParseError("vertex index too large", ln + 1);
    if (u == v) throw ParseError("self-loop", ln + 1);
    if (!seen.insert(std::min(u, v) << 32 | std::max(u, v)).second) {
      throw ParseError("duplicate edge", ln + 1);
    }
    n = std::max(n, std::max(u, v) + 1);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return assemble(n, std::move(edges), 0);
}

// ---- labeled JSON -------------------------------------------------------

std::string coord_json(Coord c) {
  return c.is_rho() ? std::string("\"rho\"") : std::to_string(c.elem().value);
}

std::string to_labeled_json(const BipartiteGraph& g) {
  std::string out = "{\n  \"format\": \"" + std::string(kJsonFormatTag) + "\",\n";
  out += "  \"version\": 1,\n";
  if (g.has_labels()) {
    const Field f(g.label_map()->codec.q());
    out += "  \"q\": " + std::to_string(f.q()) + ",\n";
    out += "  \"field\": " + ordered_json::parse(field_to_json(f)).dump() + ",\n";
  } else {
    out += "  \"q\": null,\n";
  }
  out += "  \"order\": " + std::to_string(g.order()) + ",\n";
  out += "  \"size\": " + std::to_string(g.size()) + ",\n";
  out += "  \"vertices\": [";
  for (VertexId v = 0; v < g.order(); ++v) {
    out += v == 0 ? "\n    " : ",\n    ";
    out += "{\"side\": " + std::to_string(g.side(v));
    if (g.has_labels()) {
      const Label l = g.label(v);
      out += ", \"label\": [" + coord_json(l.a) + ", " + coord_json(l.b) + ", " +
             coord_json(l.c) + "]";
    }
    out += "}";
  }
  out += g.order() == 0 ? "],\n" : "\n  ],\n";
  out += "  \"edges\": [";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    out += "[" + std::to_string(u) + ", " + std::to_string(v) + "]";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

Coord coord_from_json(const ordered_json& j, std::uint32_t q) {
  if (j.is_string() && j.get<std::string>() == "rho") return Coord::rho();
  if (!j.is_number_unsigned()) throw InvalidLabel("coordinate must be an integer or \"rho\"");
  const auto v = j.get<std::uint64_t>();
  if (v >= q) throw InvalidLabel("coordinate " + std::to_string(v) + " not below q");
  return Coord(FieldElem{static_cast<std::uint32_t>(v)});
}

BipartiteGraph from_labeled_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_byte(text, e.byte));
  }
  // Structural errors are reported against the vertex/edge entry's line.
  const auto locate = [&](std::string_view needle, std::size_t nth) -> std::size_t {
    std::size_t pos = 0;
    for (std::size_t k = 0; k <= nth; ++k) {
      pos = text.find(needle, k == 0 ? 0 : pos + 1);
      if (pos == std::string_view::npos) return 0;
    }
    return line_of_byte(text, pos);
  };
  try {
    if (!doc.is_object() || doc.value("format", "") != kJsonFormatTag) {
      throw ParseError("not a labeled graph document", 1);
    }
    const auto& vertices = doc.at("vertices");
    const auto& edges_json = doc.at("edges");
    if (!vertices.is_array() || !edges_json.is_array()) {
      throw ParseError("'vertices' and 'edges' must be arrays", 1);
    }
    const std::size_t n = vertices.size();
    std::optional<LabelMap> labels;
    if (!doc.at("q").is_null()) {
      const auto q = doc.at("q").get<std::uint32_t>();
      if (!is_prime_power(q)) throw ParseError("q is not a prime power", locate("\"q\"", 0));
      labels = LabelMap{LabelCodec(q), {}};
      labels->codec_index.reserve(n);
    }
    std::vector<std::uint8_t> sides;
    sides.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      try {
        const auto& entry = vertices[v];
        const auto side = entry.at("side").get<std::uint32_t>();
        if (side > 1) throw InvalidLabel("side must be 0 or 1");
        sides.push_back(static_cast<std::uint8_t>(side));
        if (labels) {
          const auto& lab = entry.at("label");
          if (!lab.is_array() || lab.size() != 3) {
            throw InvalidLabel("label must have three coordinates");
          }
          const std::uint32_t q = labels->codec.q();
          const Label l{static_cast<std::uint8_t>(side), coord_from_json(lab[0], q),
                        coord_from_json(lab[1], q), coord_from_json(lab[2], q)};
          labels->codec_index.push_back(labels->codec.encode(l));
          if (v > 0 && labels->codec_index[v] <= labels->codec_index[v - 1]) {
            throw InvalidLabel("vertices not in label order");
          }
        }
      } catch (const InvalidLabel& e) {
        throw ParseError(e.what(), locate("{\"side\"", v));
      } catch (const ordered_json::exception& e) {
        throw ParseError(e.what(), locate("{\"side\"", v));
      }
    }
    std::vector<Edge> edges;
    edges.reserve(edges_json.size());
    for (std::size_t k = 0; k < edges_json.size(); ++k) {
      const auto& e = edges_json[k];
      const auto edge_line = [&] {
        const std::size_t head = locate("\"edges\"", 0);
        return head == 0 ? 0 : head + 1 + k;
      };
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        throw ParseError("edge must be [u, v]", edge_line());
      }
      const auto u = e[0].get<std::uint64_t>();
      const auto v = e[1].get<std::uint64_t>();
      if (u >= n || v >= n) throw ParseError("edge endpoint out of range", edge_line());
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    try {
      return BipartiteGraph::from_edges(n, std::move(sides), std::move(edges), std::move(labels));
    } catch (const ConstructionError& e) {
      throw ParseError(e.what(), 0);
    }
  } catch (const ordered_json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

std::string_view to_string(GraphFormat format) noexcept {
  switch (format) {
    case GraphFormat::kGraph6: return "graph6";
    case GraphFormat::kDimacsEdge: return "dimacs-edge";
    case GraphFormat::kEdgeList: return "edge-list";
    case GraphFormat::kLabeledJson: return "labeled-json";
  }
  return "unknown";
}

std::optional<GraphFormat> parse_format(std::string_view name) noexcept {
  for (GraphFormat f : {GraphFormat::kGraph6, GraphFormat::kDimacsEdge,
                        GraphFormat::kEdgeList, GraphFormat::kLabeledJson}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::kGraph6;
  if (ext == ".dimacs" || ext == ".col") return GraphFormat::kDimacsEdge;
  if (ext == ".edges" || ext == ".txt") return GraphFormat::kEdgeList;
  if (ext == ".json") return GraphFormat::kLabeledJson;
  return std::nullopt;
}

std::string serialize(const BipartiteGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: return to_graph6(g);
    case GraphFormat::kDimacsEdge: return to_dimacs(g);
    case GraphFormat::kEdgeList: return to_edge_list(g);
    case GraphFormat::kLabeledJson: return to_labeled_json(g);
  }
  return {};
}

BipartiteGraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: return from_graph6(text);
    case GraphFormat::kDimacsEdge: return from_dimacs(text);
    case GraphFormat::kEdgeList: return from_edge_list(text);
    case GraphFormat::kLabeledJson: return from_labeled_json(text);
  }
  throw ParseError("unknown format", 0);
}

BipartiteGraph read_graph_file(const std::filesystem::path& path,
                               std::optional<GraphFormat> format) {
  if (!format) format = format_from_extension(path);
  if (!format) {
    throw ParseError("cannot infer graph format from '" + path.string() + "'", 0);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), *format);
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

ordered_json extent_json(const Extent& e) {
  return e ? ordered_json(*e) : ordered_json("inf");
}

ordered_json histogram_json(const std::map<std::uint32_t, std::uint64_t>& h) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

ordered_json field_json(const Field& f) {
  return {{"p", f.p()},
          {"n", f.n()},
          {"q", f.q()},
          {"modulus", f.spec().modulus},
          {"modulus_text", f.modulus_string()}};
}

}  // namespace

std::string field_to_json(const Field& f) { return field_json(f).dump(2); }

std::string report_to_json(const VerifyReport& r) {
  ordered_json doc;
  doc["order"] = r.order;
  doc["size"] = r.size;
  doc["degrees"] = histogram_json(r.degrees);
  doc["bipartite"] = r.bipartite;
  doc["girth"] = extent_json(r.girth);
  doc["diameter"] = r.diameter_computed ? extent_json(r.diameter) : ordered_json(nullptr);
  ordered_json timings = ordered_json::object();
  for (const auto& t : r.timings) timings[t.check] = t.millis;
  doc["timings_ms"] = timings;
  return doc.dump(2);
}

std::string pds_to_json(const BipartiteGraph& gamma, const PdsConstruction& pds) {
  const Field f(pds.q);
  const PdsCertificate& c = pds.certificate;
  ordered_json doc;
  doc["q"] = pds.q;
  doc["field"] = field_json(f);
  doc["variant"] = std::string(to_string(pds.seeds.variant));
  doc["x"] = pds.seeds.x ? ordered_json(pds.seeds.x->value) : ordered_json(nullptr);
  doc["cardinality"] = c.cardinality;
  doc["expected_cardinality"] = pds.expected_cardinality;
  doc["perfect"] = c.perfect;
  doc["disjoint"] = pds.disjoint();
  ordered_json overlap = ordered_json::array();
  for (VertexId v : pds.overlap) overlap.push_back(to_string(gamma.label(v)));
  doc["overlap"] = overlap;
  doc["i_q_size"] = pds.i_q.size();
  doc["i_s_size"] = pds.i_s.size();
  doc["outside_neighbor_counts"] = histogram_json(c.outside_hits);
  doc["induced_degrees"] = histogram_json(c.induced_degrees);
  doc["induced_diameter"] = extent_json(c.induced_diameter);
  doc["witness"] = c.witness ? ordered_json(to_string(gamma.label(*c.witness)))
                             : ordered_json(nullptr);
  ordered_json alts = ordered_json::array();
  for (const auto& a : pds.alternates) {
    alts.push_back({{"x", a.x.value}, {"cardinality", a.cardinality}, {"perfect", a.perfect}});
  }
  doc["alternates"] = alts;
  doc["residual_order"] = gamma.order() - c.cardinality;
  doc["expected_residual_order"] = expected_residual_order(pds.q);
  doc["pass"] = pds.passed();
  return doc.dump(2);
}

std::string label_list(const BipartiteGraph& g, const VertexSet& vertices) {
  std::string out;
  for (VertexId v : vertices) {
    out += to_string(g.label(v));
    out += '\n';
  }
  return out;
}

}  // namespace cagekit
