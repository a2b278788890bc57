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

#ifndef ANTIMAGIC_GRAPH_H_
#define ANTIMAGIC_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace antimagic {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
// Labels and vertex sums. With at most kMaxEdges edges every sum is bounded
// by kMaxEdges^2, far inside the int64 range.
using Label = std::int64_t;

inline constexpr std::int64_t kMaxEdges = 1'000'000;

enum class Side : std::uint8_t { kX, kY };

constexpr Side opposite(Side side) {
  return side == Side::kX ? Side::kY : Side::kX;
}

struct VertexRef {
  Side side;
  VertexId index;

  friend constexpr auto operator<=>(const VertexRef&,
                                    const VertexRef&) = default;
};

struct Edge {
  VertexId x;
  VertexId y;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

// Simple bipartite graph G[X,Y]. Edge ids are positions in the edge list.
// Construction validates index ranges and rejects duplicate edges, so every
// BipartiteGraph value is well-formed.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(VertexId x_count, VertexId y_count, std::vector<Edge> edges);

  VertexId x_count() const { return x_count_; }
  VertexId y_count() const { return y_count_; }
  VertexId count(Side side) const {
    return side == Side::kX ? x_count_ : y_count_;
  }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  VertexId endpoint(EdgeId e, Side side) const {
    return side == Side::kX ? edges_[e].x : edges_[e].y;
  }
  // The endpoint of `e` that is not `v`.
  VertexRef other_end(EdgeId e, VertexRef v) const {
    return v.side == Side::kX ? VertexRef{Side::kY, edges_[e].y}
                              : VertexRef{Side::kX, edges_[e].x};
  }

  // Incident edge ids in ascending order.
  std::span<const EdgeId> incident(Side side, VertexId v) const;
  std::span<const EdgeId> incident(VertexRef v) const {
    return incident(v.side, v.index);
  }
  VertexId degree(Side side, VertexId v) const {
    return static_cast<VertexId>(incident(side, v).size());
  }

  // Same edge ids, X and Y exchanged.
  BipartiteGraph with_sides_swapped() const;

 private:
  VertexId x_count_ = 0;
  VertexId y_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> x_offsets_{0};
  std::vector<EdgeId> x_adjacency_;
  std::vector<EdgeId> y_offsets_{0};
  std::vector<EdgeId> y_adjacency_;
};

// (m, n, s, t) in the canonical side assignment where s >= t.
struct GraphProfile {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  bool swapped = false;

  std::int64_t edge_count() const { return m * s; }

  friend bool operator==(const GraphProfile&, const GraphProfile&) = default;
};

// Checks biregularity and reports the canonical profile. `swapped` is set
// when the input's X-degree is smaller than its Y-degree.
// Throws Error{kEmptyGraph} or Error{kNotBiregular}.
GraphProfile validate_and_profile(const BipartiteGraph& graph);

struct CanonicalGraph {
  BipartiteGraph graph;  // sides already exchanged when profile.swapped
  GraphProfile profile;
};

CanonicalGraph canonicalize(const BipartiteGraph& graph);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_H_
