// Copyright 2026 The Antimagic Orientation Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "antimagic/io.h"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what);
}

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly the listed integer fields and rejects trailing garbage.
template <typename... Ints>
bool scan_fields(std::istringstream& in, Ints&... fields) {
  if (!(in >> ... >> fields)) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::int64_t x_count = 0, y_count = 0, edge_count = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string keyword;
      fields >> keyword;
      if (keyword != "bipartite") {
        parse_error(line_no, "expected 'bipartite <x> <y> <edges>' header");
      }
      if (!scan_fields(fields, x_count, y_count, edge_count) || x_count < 0 ||
          y_count < 0 || edge_count < 0) {
        parse_error(line_no, "bad header counts");
      }
      if (edge_count > kMaxEdges ||
          x_count > std::numeric_limits<VertexId>::max() ||
          y_count > std::numeric_limits<VertexId>::max()) {
        parse_error(line_no, "graph too large");
      }
      edges.reserve(static_cast<std::size_t>(edge_count));
      have_header = true;
      continue;
    }
    std::int64_t x = 0, y = 0;
    if (!scan_fields(fields, x, y)) parse_error(line_no, "expected '<x> <y>'");
    if (static_cast<std::int64_t>(edges.size()) == edge_count) {
      parse_error(line_no, "more edges than declared in header");
    }
    if (x < 0 || x >= x_count || y < 0 || y >= y_count) {
      parse_error(line_no, "endpoint out of range");
    }
    edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y)});
  }
  if (!have_header) parse_error(line_no, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != edge_count) {
    parse_error(line_no, "header declares " + std::to_string(edge_count) +
                             " edges, found " + std::to_string(edges.size()));
  }
  return BipartiteGraph(static_cast<VertexId>(x_count),
                        static_cast<VertexId>(y_count), std::move(edges));
}

BipartiteGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  return parse_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& graph) {
  out << "bipartite " << graph.x_count() << ' ' << graph.y_count() << ' '
      << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.x << ' ' << e.y << '\n';
}

std::string graph_to_string(const BipartiteGraph& graph) {
  std::ostringstream out;
  write_graph(out, graph);
  return out.str();
}

void write_labeling(std::ostream& out, const BipartiteGraph& graph,
                    const OrientedLabeling& oriented,
                    std::string_view case_tag, bool verified) {
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    out << e << ' ' << edge.x << ' ' << edge.y << ' '
        << (oriented.orientation.dir[e] == Direction::kXtoY ? "XY" : "YX")
        << ' ' << oriented.labeling.label[e] << '\n';
  }
  out << "# case " << case_tag << " verified "
      << (verified ? "true" : "false") << '\n';
}

LabelingFile parse_labeling(std::istream& in, const BipartiteGraph& graph) {
  const EdgeId edge_count = graph.edge_count();
  LabelingFile result;
  result.oriented.orientation.dir.assign(edge_count, Direction::kXtoY);
  result.oriented.labeling.label.assign(edge_count, 0);
  std::vector<bool> seen(edge_count, false);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream footer(line.substr(first + 1));
      std::string key, tag, verified_key, verified;
      if (footer >> key >> tag >> verified_key >> verified && key == "case" &&
          verified_key == "verified") {
        result.case_tag = tag;
        result.verified = verified == "true";
      }
      continue;
    }
    std::istringstream fields(line);
    std::int64_t id = 0, x = 0, y = 0, label = 0;
    std::string dir;
    if (!(fields >> id >> x >> y >> dir >> label)) {
      parse_error(line_no, "expected '<edge_id> <x> <y> <XY|YX> <label>'");
    }
    std::string rest;
    if (fields >> rest) parse_error(line_no, "trailing fields");
    if (id < 0 || id >= edge_count) parse_error(line_no, "edge id out of range");
    if (seen[id]) parse_error(line_no, "edge id listed twice");
    const Edge& edge = graph.edge(static_cast<EdgeId>(id));
    if (edge.x != x || edge.y != y) {
      parse_error(line_no, "endpoints do not match graph edge " +
                               std::to_string(id));
    }
    if (dir != "XY" && dir != "YX") parse_error(line_no, "direction not XY/YX");
    seen[id] = true;
    result.oriented.orientation.dir[id] =
        dir == "XY" ? Direction::kXtoY : Direction::kYtoX;
    result.oriented.labeling.label[id] = label;
  }
  for (EdgeId e = 0; e < edge_count; ++e) {
    if (!seen[e]) parse_error(line_no, "edge " + std::to_string(e) + " missing");
  }
  return result;
}

}  // namespace antimagic
