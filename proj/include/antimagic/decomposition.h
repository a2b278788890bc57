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

// Structural subroutines behind the labeling constructions: X-saturating
// matchings, open-trail and cycle decompositions, and 2-factors of the
// degree-2-suppressed multigraph.
//
// Every routine is deterministic: whenever a choice is free, the lowest edge
// id (then the lowest vertex index) wins.

#ifndef ANTIMAGIC_DECOMPOSITION_H_
#define ANTIMAGIC_DECOMPOSITION_H_

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "antimagic/graph.h"

namespace antimagic {

struct Matching {
  std::vector<EdgeId> edges;  // ascending by X endpoint
};

// Open trail y_1 x_1 y_2 ... x_k y_{k+1}; `edges` is in traversal order from
// `start_y` to `end_y`.
struct Trail {
  std::vector<EdgeId> edges;
  VertexId start_y = -1;
  VertexId end_y = -1;

  std::size_t length() const { return edges.size(); }
};

// Closed walk x_1 y_1 x_2 y_2 ... x_k y_k x_1. edges[0] = x_1 y_1 and the
// last edge is y_k x_1.
struct Cycle {
  std::vector<EdgeId> edges;
  VertexId start_x = -1;

  std::size_t length() const { return edges.size(); }
};

struct CycleSet {
  std::vector<Cycle> cycles;
};

struct TwoFactor {
  std::vector<EdgeId> edges;  // ascending
};

// s-regular multigraph on X obtained by replacing every (degree-2) Y vertex
// by an edge between its two neighbours. Multigraph edge i stands for Y
// vertex i, and back_map[i] holds its two original edge ids.
struct SuppressedMultigraph {
  VertexId vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::array<EdgeId, 2>> back_map;
};

// Trails and cycles bucketed by length mod 4, each bucket ordered by
// descending length, ties by smallest edge id.
struct DecompositionPlan {
  std::vector<Trail> mod2_trails;
  std::vector<Cycle> mod2_cycles;
  std::vector<Trail> mod0_trails;
  std::vector<Cycle> mod0_cycles;

  std::size_t p() const { return mod2_trails.size(); }
  std::size_t q() const { return mod0_trails.size(); }
  std::size_t l() const { return mod0_cycles.size(); }
  std::size_t h() const { return mod2_cycles.size(); }
};

// Matching covering every X vertex (Hopcroft-Karp). Throws Error{kInfeasible}
// if none exists, which biregular inputs with s >= t never trigger.
Matching x_saturating_matching(const BipartiteGraph& graph,
                               const GraphProfile& profile);

// For t = 2: rewires `matching` until no component of G - M has all degrees
// even, so that open_trail_decomposition applies to G - M.
Matching reroute_for_open_trails(const BipartiteGraph& graph,
                                 Matching matching);

// Splits `edge_set` into open trails whose endpoints are exactly its
// odd-degree vertices. X vertices must have even degree and Y vertices degree
// at most 2 within the set; every degree-2 Y vertex ends up interior to one
// trail. Throws Error{kOddDegree} if an X vertex has odd degree,
// Error{kInfeasible} if a Y vertex has degree above 2, and
// Error{kEvenComponent} for a component without odd-degree vertices.
std::vector<Trail> open_trail_decomposition(const BipartiteGraph& graph,
                                            std::span<const EdgeId> edge_set);

// Throws Error{kWrongCase} unless t = 2.
SuppressedMultigraph suppress_degree_two(const BipartiteGraph& graph,
                                         const GraphProfile& profile);

// Petersen 2-factor via Euler orientation and a perfect matching of the
// out/in split graph, expanded back through the subdivision. Throws
// Error{kWrongCase} unless the multigraph is regular of positive even degree.
TwoFactor two_factor(const SuppressedMultigraph& multigraph);

// Partitions an even edge set (every degree even) into simple cycles.
// Throws Error{kOddDegree} otherwise.
CycleSet cycle_decomposition(const BipartiteGraph& graph,
                             std::span<const EdgeId> edge_set);

// Throws Error{kOddLength} for odd items.
DecompositionPlan classify_and_order(std::vector<Trail> trails,
                                     std::vector<Cycle> cycles);

// Vertex sequence of a trail (y_1, x_1, ..., y_{k+1}) and of a cycle
// (x_1, y_1, ..., y_k); no consistency checks beyond adjacency.
std::vector<VertexRef> trail_vertices(const BipartiteGraph& graph,
                                      const Trail& trail);
std::vector<VertexRef> cycle_vertices(const BipartiteGraph& graph,
                                      const Cycle& cycle);

// Complement of `edge_set` in 0..edge_count-1, ascending.
std::vector<EdgeId> complement_edges(EdgeId edge_count,
                                     std::span<const EdgeId> edge_set);

}  // namespace antimagic

#endif  // ANTIMAGIC_DECOMPOSITION_H_
