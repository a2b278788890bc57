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

#include "antimagic/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "antimagic/errors.h"

namespace antimagic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedGraph: return "MalformedGraph";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotBiregular: return "NotBiregular";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kEvenComponent: return "EvenComponent";
    case ErrorCode::kWrongCase: return "WrongCase";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kOddLength: return "OddLength";
    case ErrorCode::kNotTwoRegular: return "NotTwoRegular";
    case ErrorCode::kWindowMismatch: return "WindowMismatch";
    case ErrorCode::kBadWindow: return "BadWindow";
    case ErrorCode::kRepeatedYVertex: return "RepeatedYVertex";
    case ErrorCode::kOddHalfLength: return "OddHalfLength";
    case ErrorCode::kLengthClassViolation: return "LengthClassViolation";
    case ErrorCode::kYOverlap: return "YOverlap";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kInvalidWalk: return "InvalidWalk";
  }
  return "Unknown";
}

namespace {

// Counting-sort style CSR build; edges are visited in id order so each
// adjacency list comes out ascending.
void build_adjacency(VertexId count, std::span<const Edge> edges, Side side,
                     std::vector<EdgeId>& offsets,
                     std::vector<EdgeId>& adjacency) {
  offsets.assign(static_cast<std::size_t>(count) + 1, 0);
  for (const Edge& e : edges) ++offsets[(side == Side::kX ? e.x : e.y) + 1];
  for (VertexId v = 0; v < count; ++v) offsets[v + 1] += offsets[v];
  adjacency.assign(edges.size(), 0);
  std::vector<EdgeId> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges.size()); ++id) {
    const VertexId v = side == Side::kX ? edges[id].x : edges[id].y;
    adjacency[cursor[v]++] = id;
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(VertexId x_count, VertexId y_count,
                               std::vector<Edge> edges)
    : x_count_(x_count), y_count_(y_count), edges_(std::move(edges)) {
  if (x_count_ < 0 || y_count_ < 0) {
    throw Error(ErrorCode::kMalformedGraph, "negative vertex count");
  }
  if (static_cast<std::int64_t>(edges_.size()) > kMaxEdges) {
    throw Error(ErrorCode::kMalformedGraph,
                "more than " + std::to_string(kMaxEdges) + " edges");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.x < 0 || e.x >= x_count_ || e.y < 0 || e.y >= y_count_) {
      throw Error(ErrorCode::kMalformedGraph,
                  "edge " + std::to_string(i) + " has an endpoint out of range");
    }
  }
  build_adjacency(x_count_, edges_, Side::kX, x_offsets_, x_adjacency_);
  build_adjacency(y_count_, edges_, Side::kY, y_offsets_, y_adjacency_);

  // Duplicate check: within each X vertex, neighbours must be distinct.
  std::vector<EdgeId> last_seen(static_cast<std::size_t>(y_count_), -1);
  for (VertexId x = 0; x < x_count_; ++x) {
    for (EdgeId e : incident(Side::kX, x)) {
      const VertexId y = edges_[e].y;
      if (last_seen[y] >= 0 && edges_[last_seen[y]].x == x) {
        throw Error(ErrorCode::kMalformedGraph,
                    "duplicate edge (" + std::to_string(x) + ", " +
                        std::to_string(y) + ") at ids " +
                        std::to_string(last_seen[y]) + " and " +
                        std::to_string(e));
      }
      last_seen[y] = e;
    }
  }
}

std::span<const EdgeId> BipartiteGraph::incident(Side side, VertexId v) const {
  const auto& offsets = side == Side::kX ? x_offsets_ : y_offsets_;
  const auto& adjacency = side == Side::kX ? x_adjacency_ : y_adjacency_;
  return std::span<const EdgeId>(adjacency).subspan(
      offsets[v], offsets[v + 1] - offsets[v]);
}

BipartiteGraph BipartiteGraph::with_sides_swapped() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const Edge& e : edges_) flipped.push_back({e.y, e.x});
  return BipartiteGraph(y_count_, x_count_, std::move(flipped));
}

namespace {

// Common degree of one side, or throws. A side with no vertices has no
// constraint; callers never reach that with E > 0.
std::int64_t common_degree(const BipartiteGraph& graph, Side side) {
  const VertexId count = graph.count(side);
  const std::int64_t first = graph.degree(side, 0);
  for (VertexId v = 1; v < count; ++v) {
    if (graph.degree(side, v) != first) {
      throw Error(ErrorCode::kNotBiregular,
                  std::string(side == Side::kX ? "X" : "Y") + " vertices " +
                      "0 and " + std::to_string(v) + " have degrees " +
                      std::to_string(first) + " and " +
                      std::to_string(graph.degree(side, v)));
    }
  }
  return first;
}

}  // namespace

GraphProfile validate_and_profile(const BipartiteGraph& graph) {
  if (graph.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  }
  const std::int64_t dx = common_degree(graph, Side::kX);
  const std::int64_t dy = common_degree(graph, Side::kY);
  if (dx == 0 || dy == 0) {
    // Isolated vertices next to a non-empty edge set break regularity.
    throw Error(ErrorCode::kNotBiregular, "graph has isolated vertices");
  }
  GraphProfile profile;
  if (dx >= dy) {
    profile = {graph.x_count(), graph.y_count(), dx, dy, false};
  } else {
    profile = {graph.y_count(), graph.x_count(), dy, dx, true};
  }
  return profile;
}

CanonicalGraph canonicalize(const BipartiteGraph& graph) {
  GraphProfile profile = validate_and_profile(graph);
  if (profile.swapped) return {graph.with_sides_swapped(), profile};
  return {graph, profile};
}

}  // namespace antimagic
