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

#include "graph_kernels.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace antimagic::internal {

std::vector<std::int32_t> maximum_matching(
    std::int32_t left_count, std::int32_t right_count,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& arcs) {
  std::vector<std::vector<std::int32_t>> adjacency(left_count);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(arcs.size()); ++i) {
    adjacency[arcs[i].first].push_back(i);
  }

  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> left_arc(left_count, -1);
  std::vector<std::int32_t> right_arc(right_count, -1);
  std::vector<std::int32_t> layer(left_count);
  std::vector<std::int32_t> queue;
  std::vector<std::size_t> cursor(left_count);

  // Greedy start: cheap and keeps later phases short.
  for (std::int32_t u = 0; u < left_count; ++u) {
    for (std::int32_t a : adjacency[u]) {
      if (right_arc[arcs[a].second] < 0) {
        left_arc[u] = a;
        right_arc[arcs[a].second] = a;
        break;
      }
    }
  }

  while (true) {
    // BFS layering from free left vertices.
    queue.clear();
    for (std::int32_t u = 0; u < left_count; ++u) {
      if (left_arc[u] < 0) {
        layer[u] = 0;
        queue.push_back(u);
      } else {
        layer[u] = kInf;
      }
    }
    bool found_free = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      for (std::int32_t a : adjacency[u]) {
        const std::int32_t mate_arc = right_arc[arcs[a].second];
        if (mate_arc < 0) {
          found_free = true;
        } else {
          const std::int32_t w = arcs[mate_arc].first;
          if (layer[w] == kInf) {
            layer[w] = layer[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    if (!found_free) break;

    // Iterative DFS along layers; each free root tries one augmenting path.
    std::fill(cursor.begin(), cursor.end(), 0);
    bool augmented = false;
    std::vector<std::int32_t> path_arcs;
    std::vector<std::int32_t> stack;
    for (std::int32_t root = 0; root < left_count; ++root) {
      if (left_arc[root] >= 0) continue;
      stack.assign(1, root);
      path_arcs.clear();
      while (!stack.empty()) {
        const std::int32_t u = stack.back();
        bool advanced = false;
        while (cursor[u] < adjacency[u].size()) {
          const std::int32_t a = adjacency[u][cursor[u]++];
          const std::int32_t mate_arc = right_arc[arcs[a].second];
          if (mate_arc < 0) {
            // Augment along path_arcs + a.
            path_arcs.push_back(a);
            for (std::int32_t pa : path_arcs) {
              left_arc[arcs[pa].first] = pa;
              right_arc[arcs[pa].second] = pa;
            }
            stack.clear();
            augmented = true;
            advanced = true;
            break;
          }
          const std::int32_t w = arcs[mate_arc].first;
          if (layer[w] == layer[u] + 1) {
            path_arcs.push_back(a);
            stack.push_back(w);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          layer[u] = kInf;  // dead end for this phase
          stack.pop_back();
          if (!path_arcs.empty()) path_arcs.pop_back();
        }
      }
    }
    if (!augmented) break;
  }
  return left_arc;
}

std::vector<std::vector<std::int32_t>> build_adjacency(
    std::int32_t vertex_count,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  std::vector<std::vector<std::int32_t>> adjacency(vertex_count);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(edges.size()); ++i) {
    adjacency[edges[i].first].push_back(i);
    adjacency[edges[i].second].push_back(i);
  }
  return adjacency;
}

std::vector<CircuitStep> euler_circuit(
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
    const std::vector<std::vector<std::int32_t>>& adjacency,
    std::int32_t start, EulerState& state) {
  auto& used = state.used;
  auto& cursor = state.cursor;
  struct Frame {
    std::int32_t vertex;
    std::int32_t via_edge;
  };
  std::vector<Frame> stack{{start, -1}};
  std::vector<CircuitStep> reversed;
  while (!stack.empty()) {
    const std::int32_t v = stack.back().vertex;
    auto& c = cursor[v];
    while (c < adjacency[v].size() && used[adjacency[v][c]]) ++c;
    if (c < adjacency[v].size()) {
      const std::int32_t e = adjacency[v][c];
      used[e] = 1;
      const std::int32_t w =
          edges[e].first == v ? edges[e].second : edges[e].first;
      stack.push_back({w, e});
    } else {
      const Frame done = stack.back();
      stack.pop_back();
      if (done.via_edge >= 0) {
        reversed.push_back({done.via_edge, stack.back().vertex, done.vertex});
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

DisjointSets::DisjointSets(std::int32_t count) : parent_(count) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

std::int32_t DisjointSets::find(std::int32_t v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void DisjointSets::unite(std::int32_t a, std::int32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  parent_[b] = a;  // root is the smallest index of its set
}

}  // namespace antimagic::internal
