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

#ifndef ANTIMAGIC_LABELING_H_
#define ANTIMAGIC_LABELING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "antimagic/graph.h"

namespace antimagic {

enum class Direction : std::uint8_t { kXtoY, kYtoX };

struct Orientation {
  std::vector<Direction> dir;  // indexed by edge id

  static Orientation all_x_to_y(const BipartiteGraph& graph) {
    return {std::vector<Direction>(graph.edge_count(), Direction::kXtoY)};
  }
};

// Per-edge labels. A zero entry means "not labeled"; gadgets produce such
// partial labelings over their own edges and drivers merge them.
struct Labeling {
  std::vector<Label> label;  // indexed by edge id

  static Labeling empty(const BipartiteGraph& graph) {
    return {std::vector<Label>(graph.edge_count(), 0)};
  }
};

struct OrientedLabeling {
  Orientation orientation;
  Labeling labeling;
};

struct VertexSums {
  std::vector<Label> x_sums;
  std::vector<Label> y_sums;

  Label at(VertexRef v) const {
    return v.side == Side::kX ? x_sums[v.index] : y_sums[v.index];
  }
};

// Closed label interval [lo, hi].
struct LabelWindow {
  Label lo = 1;
  Label hi = 0;

  Label size() const { return hi - lo + 1; }
};

// Oriented sums: each edge adds its label at its head and subtracts it at its
// tail. Unlabeled (zero) edges contribute nothing. When `mask` is non-empty
// only edges with a non-zero mask entry are counted.
VertexSums oriented_vertex_sums(const BipartiteGraph& graph,
                                const Orientation& orientation,
                                const Labeling& labeling,
                                std::span<const std::uint8_t> mask = {});

// Sum of incident labels, orientation ignored.
VertexSums undirected_vertex_sums(const BipartiteGraph& graph,
                                  const Labeling& labeling,
                                  std::span<const std::uint8_t> mask = {});

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELING_H_
