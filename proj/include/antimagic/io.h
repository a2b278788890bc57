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

// Text formats.
//
// Graph file:
//   bipartite <x_count> <y_count> <edge_count>
//   <x> <y>            one line per edge, in edge-id order
//
// Labeling file:
//   <edge_id> <x> <y> <XY|YX> <label>   one line per edge
//   # case <tag> verified <true|false>
//
// Lines starting with '#' are comments (the labeling footer is one).

#ifndef ANTIMAGIC_IO_H_
#define ANTIMAGIC_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "antimagic/graph.h"
#include "antimagic/labeling.h"

namespace antimagic {

// Throws Error{kParseError} on syntax problems and Error{kMalformedGraph}
// when the parsed edges do not form a simple bipartite graph.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const BipartiteGraph& graph);
std::string graph_to_string(const BipartiteGraph& graph);

struct LabelingFile {
  OrientedLabeling oriented;
  std::optional<std::string> case_tag;
  std::optional<bool> verified;
};

void write_labeling(std::ostream& out, const BipartiteGraph& graph,
                    const OrientedLabeling& oriented,
                    std::string_view case_tag, bool verified);

// Parses a labeling file against `graph`. Every edge id must appear exactly
// once and its endpoints must match the graph (Error{kParseError} otherwise).
// Label values are not checked here; that is the verifier's job.
LabelingFile parse_labeling(std::istream& in, const BipartiteGraph& graph);

}  // namespace antimagic

#endif  // ANTIMAGIC_IO_H_
