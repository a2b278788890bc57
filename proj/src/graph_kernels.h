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

// Index-based kernels shared by the decomposition routines. Not part of the
// public API.

#ifndef ANTIMAGIC_SRC_GRAPH_KERNELS_H_
#define ANTIMAGIC_SRC_GRAPH_KERNELS_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace antimagic::internal {

// Bipartite multigraph for matching: arcs[i] = (left, right).
// Returns, for each left vertex, the index of its matched arc or -1.
// Hopcroft-Karp; arcs are tried in index order.
std::vector<std::int32_t> maximum_matching(
    std::int32_t left_count, std::int32_t right_count,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& arcs);

struct CircuitStep {
  std::int32_t edge;
  std::int32_t tail;
  std::int32_t head;
};

// Consumption state shared across successive circuits on one multigraph.
struct EulerState {
  std::vector<std::uint8_t> used;   // per edge
  std::vector<std::size_t> cursor;  // per vertex, into its adjacency list

  EulerState(std::size_t vertex_count, std::size_t edge_count)
      : used(edge_count, 0), cursor(vertex_count, 0) {}
};

// Undirected multigraph with edges[i] = (u, v). Returns an Euler circuit of
// the unused edges reachable from `start`, as traversed steps beginning at
// `start`. Every vertex must have even unused degree. Incident edges are
// tried in ascending index order.
std::vector<CircuitStep> euler_circuit(
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
    const std::vector<std::vector<std::int32_t>>& adjacency,
    std::int32_t start, EulerState& state);

// adjacency[v] = ascending indices of edges incident to v (a loop appears
// twice).
std::vector<std::vector<std::int32_t>> build_adjacency(
    std::int32_t vertex_count,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges);

// Union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::int32_t count);
  std::int32_t find(std::int32_t v);
  void unite(std::int32_t a, std::int32_t b);

 private:
  std::vector<std::int32_t> parent_;
};

}  // namespace antimagic::internal

#endif  // ANTIMAGIC_SRC_GRAPH_KERNELS_H_
