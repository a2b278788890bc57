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

#include "antimagic/decomposition.h"

#include <algorithm>
#include <string>

#include "antimagic/errors.h"
#include "graph_kernels.h"

namespace antimagic {
namespace {

using internal::CircuitStep;
using internal::DisjointSets;
using internal::EulerState;

// X vertices occupy [0, x_count), Y vertices follow.
struct FlatIndex {
  VertexId x_count;

  std::int32_t operator()(VertexRef v) const {
    return v.side == Side::kX ? v.index : x_count + v.index;
  }
  VertexRef vertex(std::int32_t flat) const {
    return flat < x_count ? VertexRef{Side::kX, flat}
                          : VertexRef{Side::kY, flat - x_count};
  }
};

std::vector<std::uint8_t> edge_mask(EdgeId edge_count,
                                    std::span<const EdgeId> edge_set) {
  std::vector<std::uint8_t> mask(edge_count, 0);
  for (EdgeId e : edge_set) mask[e] = 1;
  return mask;
}

std::vector<VertexId> masked_degrees(const BipartiteGraph& graph, Side side,
                                     std::span<const EdgeId> edge_set) {
  std::vector<VertexId> degree(graph.count(side), 0);
  for (EdgeId e : edge_set) ++degree[graph.endpoint(e, side)];
  return degree;
}

EdgeId min_edge(std::span<const EdgeId> edges) {
  return edges.empty() ? -1 : *std::min_element(edges.begin(), edges.end());
}

}  // namespace

Matching x_saturating_matching(const BipartiteGraph& graph,
                               const GraphProfile& profile) {
  (void)profile;
  std::vector<std::pair<std::int32_t, std::int32_t>> arcs;
  arcs.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) arcs.emplace_back(e.x, e.y);
  const auto mate =
      internal::maximum_matching(graph.x_count(), graph.y_count(), arcs);
  Matching matching;
  for (VertexId x = 0; x < graph.x_count(); ++x) {
    if (mate[x] < 0) {
      throw Error(ErrorCode::kInfeasible,
                  "no matching saturates X (vertex " + std::to_string(x) +
                      " unmatched)");
    }
    matching.edges.push_back(mate[x]);
  }
  return matching;
}

Matching reroute_for_open_trails(const BipartiteGraph& graph,
                                 Matching matching) {
  const FlatIndex flat{graph.x_count()};
  const std::int32_t vertex_count = graph.x_count() + graph.y_count();
  std::vector<EdgeId> matched_at_x(graph.x_count(), -1);
  for (EdgeId e : matching.edges) matched_at_x[graph.edge(e).x] = e;

  while (true) {
    std::vector<std::uint8_t> in_matching(graph.edge_count(), 0);
    for (EdgeId e : matched_at_x) in_matching[e] = 1;
    DisjointSets components(vertex_count);
    std::vector<VertexId> degree(vertex_count, 0);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      if (in_matching[e]) continue;
      const Edge& edge = graph.edge(e);
      components.unite(edge.x, flat({Side::kY, edge.y}));
      ++degree[edge.x];
      ++degree[flat({Side::kY, edge.y})];
    }
    std::vector<std::uint8_t> has_odd(vertex_count, 0);
    for (std::int32_t v = 0; v < vertex_count; ++v) {
      if (degree[v] % 2 == 1) has_odd[components.find(v)] = 1;
    }
    // Lowest X vertex lying in a non-trivial all-even component.
    VertexId target = -1;
    for (VertexId x = 0; x < graph.x_count(); ++x) {
      if (degree[x] > 0 && !has_odd[components.find(x)]) {
        target = x;
        break;
      }
    }
    if (target < 0) break;
    // Its partner lies outside the component; a non-matching neighbour in
    // the component takes over. That edge is never a bridge, so the
    // component stays connected and now holds an odd vertex.
    for (EdgeId e : graph.incident(Side::kX, target)) {
      if (!in_matching[e]) {
        matched_at_x[target] = e;
        break;
      }
    }
  }
  matching.edges.assign(matched_at_x.begin(), matched_at_x.end());
  return matching;
}

std::vector<Trail> open_trail_decomposition(const BipartiteGraph& graph,
                                            std::span<const EdgeId> edge_set) {
  const FlatIndex flat{graph.x_count()};
  const std::int32_t vertex_count = graph.x_count() + graph.y_count();
  const auto x_degree = masked_degrees(graph, Side::kX, edge_set);
  const auto y_degree = masked_degrees(graph, Side::kY, edge_set);
  for (VertexId x = 0; x < graph.x_count(); ++x) {
    if (x_degree[x] % 2 != 0) {
      throw Error(ErrorCode::kOddDegree,
                  "X vertex " + std::to_string(x) + " has odd degree");
    }
  }
  for (VertexId y = 0; y < graph.y_count(); ++y) {
    if (y_degree[y] > 2) {
      throw Error(ErrorCode::kInfeasible,
                  "Y vertex " + std::to_string(y) + " has degree above 2");
    }
  }

  std::vector<EdgeId> sorted(edge_set.begin(), edge_set.end());
  std::sort(sorted.begin(), sorted.end());

  // Local multigraph: real edges first, dummy edges appended per component.
  std::vector<std::pair<std::int32_t, std::int32_t>> local;
  local.reserve(sorted.size() * 2);
  DisjointSets components(vertex_count);
  for (EdgeId e : sorted) {
    const Edge& edge = graph.edge(e);
    const std::int32_t u = edge.x;
    const std::int32_t w = flat({Side::kY, edge.y});
    local.emplace_back(u, w);
    components.unite(u, w);
  }
  const auto real_count = static_cast<std::int32_t>(local.size());

  // Odd vertices grouped by component root, ascending within each group.
  std::vector<std::vector<std::int32_t>> odd_by_root(vertex_count);
  for (VertexId y = 0; y < graph.y_count(); ++y) {
    if (y_degree[y] == 1) {
      const std::int32_t v = flat({Side::kY, y});
      odd_by_root[components.find(v)].push_back(v);
    }
  }
  // Components in order of their smallest edge id.
  std::vector<std::int32_t> roots;
  std::vector<std::uint8_t> root_seen(vertex_count, 0);
  for (const auto& [u, w] : local) {
    const std::int32_t r = components.find(u);
    if (!root_seen[r]) {
      root_seen[r] = 1;
      roots.push_back(r);
    }
  }
  for (std::int32_t r : roots) {
    const auto& odd = odd_by_root[r];
    if (odd.empty()) {
      throw Error(ErrorCode::kEvenComponent,
                  "component containing vertex index " + std::to_string(r) +
                      " has no odd-degree vertex");
    }
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
      local.emplace_back(odd[i], odd[i + 1]);
    }
  }

  const auto adjacency = internal::build_adjacency(vertex_count, local);
  EulerState state(vertex_count, local.size());
  std::vector<Trail> trails;
  for (std::int32_t r : roots) {
    const std::vector<CircuitStep> circuit =
        internal::euler_circuit(local, adjacency, odd_by_root[r].front(), state);
    // Rotate so the walk starts right after a dummy edge, then cut at dummies.
    const auto first_dummy = std::find_if(
        circuit.begin(), circuit.end(),
        [&](const CircuitStep& step) { return step.edge >= real_count; });
    std::vector<CircuitStep> rotated(first_dummy + 1, circuit.end());
    rotated.insert(rotated.end(), circuit.begin(), first_dummy + 1);
    Trail current;
    for (const CircuitStep& step : rotated) {
      if (step.edge >= real_count) {
        trails.push_back(std::move(current));
        current = Trail{};
        continue;
      }
      if (current.edges.empty()) current.start_y = flat.vertex(step.tail).index;
      current.edges.push_back(sorted[step.edge]);
      current.end_y = flat.vertex(step.head).index;
    }
  }
  return trails;
}

SuppressedMultigraph suppress_degree_two(const BipartiteGraph& graph,
                                         const GraphProfile& profile) {
  if (profile.t != 2) {
    throw Error(ErrorCode::kWrongCase,
                "suppression needs t = 2, got t = " + std::to_string(profile.t));
  }
  SuppressedMultigraph multigraph;
  multigraph.vertex_count = graph.x_count();
  for (VertexId y = 0; y < graph.y_count(); ++y) {
    const auto incident = graph.incident(Side::kY, y);
    if (incident.size() != 2) {
      throw Error(ErrorCode::kWrongCase,
                  "Y vertex " + std::to_string(y) + " does not have degree 2");
    }
    multigraph.edges.emplace_back(graph.edge(incident[0]).x,
                                  graph.edge(incident[1]).x);
    multigraph.back_map.push_back({incident[0], incident[1]});
  }
  return multigraph;
}

TwoFactor two_factor(const SuppressedMultigraph& multigraph) {
  const std::int32_t n = multigraph.vertex_count;
  std::vector<std::int32_t> degree(n, 0);
  for (const auto& [u, w] : multigraph.edges) {
    ++degree[u];
    ++degree[w];
  }
  const std::int32_t s = n > 0 ? degree[0] : 0;
  if (s <= 0 || s % 2 != 0 ||
      std::any_of(degree.begin(), degree.end(),
                  [s](std::int32_t d) { return d != s; })) {
    throw Error(ErrorCode::kWrongCase,
                "2-factor needs a regular multigraph of positive even degree");
  }

  // Orient along Euler circuits: every vertex gets s/2 out and s/2 in arcs.
  const auto adjacency = internal::build_adjacency(n, multigraph.edges);
  EulerState state(n, multigraph.edges.size());
  std::vector<std::pair<std::int32_t, std::int32_t>> arcs;  // (tail, head)
  std::vector<std::int32_t> arc_edge;
  for (std::int32_t v = 0; v < n; ++v) {
    for (const CircuitStep& step :
         internal::euler_circuit(multigraph.edges, adjacency, v, state)) {
      arcs.emplace_back(step.tail, step.head);
      arc_edge.push_back(step.edge);
    }
  }
  // Split graph is (s/2)-regular bipartite, so a perfect matching exists.
  const auto mate = internal::maximum_matching(n, n, arcs);
  TwoFactor factor;
  for (std::int32_t v = 0; v < n; ++v) {
    if (mate[v] < 0) {
      throw Error(ErrorCode::kInfeasible, "split graph has no perfect matching");
    }
    const auto& original = multigraph.back_map[arc_edge[mate[v]]];
    factor.edges.push_back(original[0]);
    factor.edges.push_back(original[1]);
  }
  std::sort(factor.edges.begin(), factor.edges.end());
  return factor;
}

CycleSet cycle_decomposition(const BipartiteGraph& graph,
                             std::span<const EdgeId> edge_set) {
  const FlatIndex flat{graph.x_count()};
  const std::int32_t vertex_count = graph.x_count() + graph.y_count();
  const auto mask = edge_mask(graph.edge_count(), edge_set);
  for (Side side : {Side::kX, Side::kY}) {
    const auto degree = masked_degrees(graph, side, edge_set);
    for (VertexId v = 0; v < graph.count(side); ++v) {
      if (degree[v] % 2 != 0) {
        throw Error(ErrorCode::kOddDegree,
                    std::string(side == Side::kX ? "X" : "Y") + " vertex " +
                        std::to_string(v) + " has odd degree");
      }
    }
  }

  std::vector<std::uint8_t> used(graph.edge_count(), 0);
  std::vector<std::size_t> cursor(vertex_count, 0);
  std::vector<std::int32_t> position(vertex_count, -1);  // index in path
  auto next_unused = [&](VertexRef v) -> EdgeId {
    const auto incident = graph.incident(v);
    auto& c = cursor[flat(v)];
    while (c < incident.size() && (!mask[incident[c]] || used[incident[c]])) {
      ++c;
    }
    return c < incident.size() ? incident[c] : -1;
  };

  std::vector<EdgeId> sorted(edge_set.begin(), edge_set.end());
  std::sort(sorted.begin(), sorted.end());
  CycleSet result;
  for (EdgeId seed : sorted) {
    if (used[seed]) continue;
    const VertexRef origin{Side::kX, graph.edge(seed).x};
    std::vector<VertexRef> path{origin};
    std::vector<EdgeId> path_edges;
    position[flat(origin)] = 0;
    while (true) {
      const VertexRef here = path.back();
      const EdgeId e = next_unused(here);
      if (e < 0) break;  // only possible back at the origin with nothing left
      used[e] = 1;
      const VertexRef there = graph.other_end(e, here);
      path_edges.push_back(e);
      const std::int32_t seen_at = position[flat(there)];
      if (seen_at < 0) {
        position[flat(there)] = static_cast<std::int32_t>(path.size());
        path.push_back(there);
        continue;
      }
      // Closed a simple cycle at `there`; cut it off the path.
      Cycle cycle;
      cycle.edges.assign(path_edges.begin() + seen_at, path_edges.end());
      if (there.side == Side::kX) {
        cycle.start_x = there.index;
      } else {
        // Start one step later so the cycle begins at an X vertex.
        std::rotate(cycle.edges.begin(), cycle.edges.begin() + 1,
                    cycle.edges.end());
        cycle.start_x = path[seen_at + 1].index;
      }
      result.cycles.push_back(std::move(cycle));
      for (std::size_t i = seen_at + 1; i < path.size(); ++i) {
        position[flat(path[i])] = -1;
      }
      path.resize(seen_at + 1);
      path_edges.resize(seen_at);
    }
    position[flat(origin)] = -1;
  }
  return result;
}

DecompositionPlan classify_and_order(std::vector<Trail> trails,
                                     std::vector<Cycle> cycles) {
  DecompositionPlan plan;
  for (Trail& trail : trails) {
    if (trail.length() % 2 != 0) {
      throw Error(ErrorCode::kOddLength,
                  "trail of length " + std::to_string(trail.length()));
    }
    (trail.length() % 4 == 2 ? plan.mod2_trails : plan.mod0_trails)
        .push_back(std::move(trail));
  }
  for (Cycle& cycle : cycles) {
    if (cycle.length() % 2 != 0) {
      throw Error(ErrorCode::kOddLength,
                  "cycle of length " + std::to_string(cycle.length()));
    }
    (cycle.length() % 4 == 2 ? plan.mod2_cycles : plan.mod0_cycles)
        .push_back(std::move(cycle));
  }
  auto order = [](const auto& a, const auto& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return min_edge(a.edges) < min_edge(b.edges);
  };
  std::sort(plan.mod2_trails.begin(), plan.mod2_trails.end(), order);
  std::sort(plan.mod0_trails.begin(), plan.mod0_trails.end(), order);
  std::sort(plan.mod2_cycles.begin(), plan.mod2_cycles.end(), order);
  std::sort(plan.mod0_cycles.begin(), plan.mod0_cycles.end(), order);
  return plan;
}

std::vector<VertexRef> trail_vertices(const BipartiteGraph& graph,
                                      const Trail& trail) {
  std::vector<VertexRef> vertices{{Side::kY, trail.start_y}};
  for (EdgeId e : trail.edges) {
    vertices.push_back(graph.other_end(e, vertices.back()));
  }
  return vertices;
}

std::vector<VertexRef> cycle_vertices(const BipartiteGraph& graph,
                                      const Cycle& cycle) {
  std::vector<VertexRef> vertices{{Side::kX, cycle.start_x}};
  for (EdgeId e : cycle.edges) {
    vertices.push_back(graph.other_end(e, vertices.back()));
  }
  vertices.pop_back();  // back at start_x
  return vertices;
}

std::vector<EdgeId> complement_edges(EdgeId edge_count,
                                     std::span<const EdgeId> edge_set) {
  const auto mask = edge_mask(edge_count, edge_set);
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < edge_count; ++e) {
    if (!mask[e]) rest.push_back(e);
  }
  return rest;
}

}  // namespace antimagic
