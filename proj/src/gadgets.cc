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

#include <set>
#include <string>

#include "antimagic/labeler.h"

namespace antimagic {
namespace {

// Follows `edges` from `start`, checking incidence and edge distinctness.
// Returns the visited vertices (edges.size() + 1 entries).
std::vector<VertexRef> checked_walk(const BipartiteGraph& graph,
                                    VertexRef start,
                                    const std::vector<EdgeId>& edges) {
  std::vector<VertexRef> vertices{start};
  std::set<EdgeId> seen;
  for (EdgeId e : edges) {
    if (e < 0 || e >= graph.edge_count() || !seen.insert(e).second) {
      throw Error(ErrorCode::kInvalidWalk,
                  "edge " + std::to_string(e) + " missing or repeated");
    }
    const VertexRef here = vertices.back();
    if (graph.endpoint(e, here.side) != here.index) {
      throw Error(ErrorCode::kInvalidWalk, "edge " + std::to_string(e) +
                                               " is not incident to " +
                                               describe(here));
    }
    vertices.push_back(graph.other_end(e, here));
  }
  return vertices;
}

void require_distinct_y(const std::vector<VertexRef>& vertices,
                        std::size_t count) {
  std::set<VertexId> ys;
  for (std::size_t i = 0; i < count; ++i) {
    if (vertices[i].side == Side::kY && !ys.insert(vertices[i].index).second) {
      throw Error(ErrorCode::kRepeatedYVertex,
                  describe(vertices[i]) + " visited twice");
    }
  }
}

void check_trail(const BipartiteGraph& graph, const Trail& trail) {
  if (trail.edges.empty() || trail.edges.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidWalk, "trail length must be even and > 0");
  }
  const auto vertices =
      checked_walk(graph, {Side::kY, trail.start_y}, trail.edges);
  if (vertices.back() != VertexRef{Side::kY, trail.end_y}) {
    throw Error(ErrorCode::kInvalidWalk, "trail does not end at its end_y");
  }
  require_distinct_y(vertices, vertices.size());
}

void check_closed(const BipartiteGraph& graph, const Cycle& cycle) {
  if (cycle.edges.size() < 4 || cycle.edges.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidWalk, "cycle length must be even and >= 4");
  }
  const auto vertices =
      checked_walk(graph, {Side::kX, cycle.start_x}, cycle.edges);
  if (vertices.back() != vertices.front()) {
    throw Error(ErrorCode::kInvalidWalk, "cycle does not close");
  }
  require_distinct_y(vertices, vertices.size() - 1);
}

// Trail of length 2k: edge j (1-based) sits at Y position j/2 + 1. Positions
// of the parity that the k-parity selects take the rising low stream, the
// rest the falling high stream.
void assign_trail_streams(const Trail& trail, Label low, Label high,
                          Labeling& out) {
  const std::size_t k = trail.edges.size() / 2;
  const std::size_t low_parity = k % 2 == 0 ? 0 : 1;
  for (std::size_t j = 1; j <= trail.edges.size(); ++j) {
    const std::size_t y_position = j / 2 + 1;
    out.label[trail.edges[j - 1]] =
        y_position % 2 == low_parity ? low++ : high--;
  }
}

// Cycle of length 2k (k even): edge j (1-based) sits at Y position
// ceil(j/2). Odd positions read a+1, a, a+2, a+3, ..., a+k-1; even positions
// read b, b-2, b-3, ..., b-k+1, b-1.
void assign_cycle_streams(const Cycle& cycle, Label a, Label b,
                          Labeling& out) {
  const Label k = static_cast<Label>(cycle.edges.size() / 2);
  Label low_index = 0;
  Label high_index = 0;
  for (std::size_t j = 1; j <= cycle.edges.size(); ++j) {
    const std::size_t y_position = (j + 1) / 2;
    Label value;
    if (y_position % 2 == 1) {
      const Label i = low_index++;
      value = i == 0 ? a + 1 : i == 1 ? a : a + i;
    } else {
      const Label i = high_index++;
      value = i == 0 ? b : i == k - 1 ? b - 1 : b - i - 1;
    }
    out.label[cycle.edges[j - 1]] = value;
  }
}

}  // namespace

GadgetResult label_two_regular(const BipartiteGraph& graph,
                               const CycleSet& cycles, LabelWindow window) {
  std::vector<int> x_degree(graph.x_count(), 0);
  std::vector<int> y_degree(graph.y_count(), 0);
  std::size_t edge_total = 0;
  for (const Cycle& cycle : cycles.cycles) {
    check_closed(graph, cycle);
    for (EdgeId e : cycle.edges) {
      ++x_degree[graph.edge(e).x];
      ++y_degree[graph.edge(e).y];
    }
    edge_total += cycle.edges.size();
  }
  for (const auto* degrees : {&x_degree, &y_degree}) {
    for (int d : *degrees) {
      if (d != 0 && d != 2) {
        throw Error(ErrorCode::kNotTwoRegular,
                    "vertex of degree " + std::to_string(d) + " in cycle set");
      }
    }
  }
  if (window.size() != static_cast<Label>(edge_total)) {
    throw Error(ErrorCode::kWindowMismatch,
                "window holds " + std::to_string(window.size()) +
                    " labels for " + std::to_string(edge_total) + " edges");
  }

  GadgetResult result{Labeling::empty(graph), {}};
  Label block_start = window.lo;
  for (const Cycle& cycle : cycles.cycles) {
    for (std::size_t j = 0; j < cycle.edges.size(); ++j) {
      const Label offset = j == 0 ? 1 : j == 1 ? 0 : static_cast<Label>(j);
      result.labels.label[cycle.edges[j]] = block_start + offset;
    }
    block_start += static_cast<Label>(cycle.edges.size());
  }
  return result;
}

Labeling label_open_trail(const BipartiteGraph& graph, const Trail& trail,
                          Label a, Label b) {
  check_trail(graph, trail);
  const Label k = static_cast<Label>(trail.edges.size() / 2);
  if (a != b - 2 * k + 1) {
    throw Error(ErrorCode::kBadWindow,
                "window [" + std::to_string(a) + ", " + std::to_string(b) +
                    "] does not fit a trail of length " +
                    std::to_string(2 * k));
  }
  Labeling out = Labeling::empty(graph);
  assign_trail_streams(trail, a, b, out);
  return out;
}

Labeling label_even_cycle(const BipartiteGraph& graph, const Cycle& cycle,
                          Label a, Label b) {
  check_closed(graph, cycle);
  const Label k = static_cast<Label>(cycle.edges.size() / 2);
  if (k % 2 != 0) {
    throw Error(ErrorCode::kOddHalfLength,
                "cycle of length " + std::to_string(2 * k) +
                    " is not 0 mod 4");
  }
  if (a != b - 2 * k + 1) {
    throw Error(ErrorCode::kBadWindow,
                "window [" + std::to_string(a) + ", " + std::to_string(b) +
                    "] does not fit a cycle of length " +
                    std::to_string(2 * k));
  }
  Labeling out = Labeling::empty(graph);
  assign_cycle_streams(cycle, a, b, out);
  return out;
}

GadgetResult label_family(const BipartiteGraph& graph,
                          const DecompositionPlan& plan, Label c, Label d) {
  if (plan.h() != 0) {
    throw Error(ErrorCode::kLengthClassViolation,
                "cycles of length 2 mod 4 have no family gadget");
  }
  Label edge_total = 0;
  std::set<VertexId> y_used;
  auto claim_y = [&](const std::vector<VertexRef>& vertices,
                     std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (vertices[i].side == Side::kY &&
          !y_used.insert(vertices[i].index).second) {
        throw Error(ErrorCode::kYOverlap,
                    describe(vertices[i]) + " shared by two family items");
      }
    }
  };
  auto check_class = [](std::size_t length, std::size_t residue,
                        const char* what) {
    if (length % 4 != residue) {
      throw Error(ErrorCode::kLengthClassViolation,
                  std::string(what) + " of length " + std::to_string(length) +
                      " in the wrong bucket");
    }
  };
  for (const auto* bucket : {&plan.mod2_trails, &plan.mod0_trails}) {
    const std::size_t residue = bucket == &plan.mod2_trails ? 2 : 0;
    for (const Trail& trail : *bucket) {
      check_class(trail.length(), residue, "trail");
      if (trail.edges.empty()) {
        throw Error(ErrorCode::kInvalidWalk, "empty trail");
      }
      const auto vertices =
          checked_walk(graph, {Side::kY, trail.start_y}, trail.edges);
      if (vertices.back() != VertexRef{Side::kY, trail.end_y}) {
        throw Error(ErrorCode::kInvalidWalk, "trail does not end at its end_y");
      }
      claim_y(vertices, vertices.size());
      edge_total += static_cast<Label>(trail.length());
    }
  }
  for (const Cycle& cycle : plan.mod0_cycles) {
    check_class(cycle.length(), 0, "cycle");
    if (cycle.edges.size() < 4) {
      throw Error(ErrorCode::kInvalidWalk, "cycle shorter than 4");
    }
    const auto vertices =
        checked_walk(graph, {Side::kX, cycle.start_x}, cycle.edges);
    if (vertices.back() != vertices.front()) {
      throw Error(ErrorCode::kInvalidWalk, "cycle does not close");
    }
    claim_y(vertices, vertices.size() - 1);
    edge_total += static_cast<Label>(cycle.length());
  }
  if (c != d - edge_total + 1) {
    throw Error(ErrorCode::kWindowMismatch,
                "[" + std::to_string(c) + ", " + std::to_string(d) +
                    "] does not hold " + std::to_string(edge_total) +
                    " labels");
  }

  GadgetResult result{Labeling::empty(graph), {}};
  const Label p = static_cast<Label>(plan.p());
  const Label q = static_cast<Label>(plan.q());
  Label consumed = 0;  // sum of half-lengths of earlier items
  Label index = 0;     // 1-based item index once incremented
  for (const Trail& trail : plan.mod2_trails) {
    ++index;
    assign_trail_streams(trail, c + consumed, d - consumed, result.labels);
    consumed += static_cast<Label>(trail.length() / 2);
    result.endpoint_increments.push_back({trail.start_y, c - 2 * p + index - 1});
    result.endpoint_increments.push_back({trail.end_y, c - index});
  }
  for (const Trail& trail : plan.mod0_trails) {
    ++index;
    assign_trail_streams(trail, c + consumed, d - consumed, result.labels);
    consumed += static_cast<Label>(trail.length() / 2);
    const Label top = d + 2 * q - 2 * (index - p - 1);
    result.endpoint_increments.push_back({trail.start_y, top});
    result.endpoint_increments.push_back({trail.end_y, top - 1});
  }
  for (const Cycle& cycle : plan.mod0_cycles) {
    assign_cycle_streams(cycle, c + consumed, d - consumed, result.labels);
    consumed += static_cast<Label>(cycle.length() / 2);
  }
  return result;
}

}  // namespace antimagic
