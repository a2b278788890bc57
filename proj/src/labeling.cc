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

#include "antimagic/labeling.h"

namespace antimagic {

VertexSums oriented_vertex_sums(const BipartiteGraph& graph,
                                const Orientation& orientation,
                                const Labeling& labeling,
                                std::span<const std::uint8_t> mask) {
  VertexSums sums{std::vector<Label>(graph.x_count(), 0),
                  std::vector<Label>(graph.y_count(), 0)};
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!mask.empty() && mask[e] == 0) continue;
    const Label value = labeling.label[e];
    const Edge& edge = graph.edge(e);
    if (orientation.dir[e] == Direction::kXtoY) {
      sums.x_sums[edge.x] -= value;
      sums.y_sums[edge.y] += value;
    } else {
      sums.x_sums[edge.x] += value;
      sums.y_sums[edge.y] -= value;
    }
  }
  return sums;
}

VertexSums undirected_vertex_sums(const BipartiteGraph& graph,
                                  const Labeling& labeling,
                                  std::span<const std::uint8_t> mask) {
  VertexSums sums{std::vector<Label>(graph.x_count(), 0),
                  std::vector<Label>(graph.y_count(), 0)};
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!mask.empty() && mask[e] == 0) continue;
    const Edge& edge = graph.edge(e);
    sums.x_sums[edge.x] += labeling.label[e];
    sums.y_sums[edge.y] += labeling.label[e];
  }
  return sums;
}

}  // namespace antimagic
