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

#include "antimagic/verifier.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

// Deliberately separate from oriented_vertex_sums: walks each vertex's
// incidence list and reads the direction from the vertex's point of view.
VertexSums recompute_sums(const BipartiteGraph& graph,
                          const Orientation& orientation,
                          const Labeling& labeling) {
  VertexSums sums;
  sums.x_sums.resize(graph.x_count());
  sums.y_sums.resize(graph.y_count());
  for (Side side : {Side::kX, Side::kY}) {
    auto& out = side == Side::kX ? sums.x_sums : sums.y_sums;
    const Direction entering =
        side == Side::kX ? Direction::kYtoX : Direction::kXtoY;
    for (VertexId v = 0; v < graph.count(side); ++v) {
      Label total = 0;
      for (EdgeId e : graph.incident(side, v)) {
        total += orientation.dir[e] == entering ? labeling.label[e]
                                                : -labeling.label[e];
      }
      out[v] = total;
    }
  }
  return sums;
}

}  // namespace

VerifyReport verify_labeling(const BipartiteGraph& graph,
                             const Orientation& orientation,
                             const Labeling& labeling) {
  VerifyReport report;
  const EdgeId edge_count = graph.edge_count();

  if (static_cast<EdgeId>(labeling.label.size()) != edge_count ||
      static_cast<EdgeId>(orientation.dir.size()) != edge_count) {
    report.bijection_problems.push_back(
        "labeling/orientation size does not match edge count");
    return report;
  }

  std::vector<EdgeId> owner(static_cast<std::size_t>(edge_count) + 1, -1);
  for (EdgeId e = 0; e < edge_count; ++e) {
    const Label value = labeling.label[e];
    if (value < 1 || value > edge_count) {
      report.bijection_problems.push_back(
          "edge " + std::to_string(e) + " has label " + std::to_string(value) +
          " outside [1, " + std::to_string(edge_count) + "]");
      continue;
    }
    if (owner[value] >= 0) {
      report.bijection_problems.push_back(
          "label " + std::to_string(value) + " used by edges " +
          std::to_string(owner[value]) + " and " + std::to_string(e));
      continue;
    }
    owner[value] = e;
  }
  report.bijection_ok = report.bijection_problems.empty();

  report.sums = recompute_sums(graph, orientation, labeling);

  std::vector<std::pair<Label, VertexRef>> keyed;
  keyed.reserve(graph.x_count() + graph.y_count());
  for (VertexId v = 0; v < graph.x_count(); ++v) {
    keyed.emplace_back(report.sums.x_sums[v], VertexRef{Side::kX, v});
  }
  for (VertexId v = 0; v < graph.y_count(); ++v) {
    keyed.emplace_back(report.sums.y_sums[v], VertexRef{Side::kY, v});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    for (std::size_t b = i + 1; b < j; ++b) {
      report.collisions.emplace_back(keyed[i].second, keyed[b].second);
    }
    i = j;
  }

  report.sign_split_ok =
      std::all_of(report.sums.x_sums.begin(), report.sums.x_sums.end(),
                  [](Label v) { return v < 0; }) &&
      std::all_of(report.sums.y_sums.begin(), report.sums.y_sums.end(),
                  [](Label v) { return v > 0; });
  report.ok = report.bijection_ok && report.collisions.empty();
  return report;
}

std::string describe(const VertexRef& v) {
  return (v.side == Side::kX ? "x" : "y") + std::to_string(v.index);
}

std::string describe(const VerifyReport& report) {
  std::ostringstream out;
  out << "verified " << (report.ok ? "true" : "false") << " (bijection "
      << (report.bijection_ok ? "ok" : "FAILED") << ", "
      << report.collisions.size() << " collisions)\n";
  for (const auto& problem : report.bijection_problems) {
    out << "  bijection: " << problem << '\n';
  }
  for (const auto& [a, b] : report.collisions) {
    out << "  collision: " << describe(a) << " and " << describe(b)
        << " both sum to " << report.sums.at(a) << '\n';
  }
  return out.str();
}

namespace {

bool distinct_sums(const BipartiteGraph& graph, const Orientation& orientation,
                   const std::vector<Label>& labels,
                   std::vector<Label>& scratch) {
  scratch.assign(graph.x_count() + graph.y_count(), 0);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    const Label sign = orientation.dir[e] == Direction::kXtoY ? 1 : -1;
    scratch[edge.x] -= sign * labels[e];
    scratch[graph.x_count() + edge.y] += sign * labels[e];
  }
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

std::optional<std::vector<Label>> first_permutation(
    const BipartiteGraph& graph, const Orientation& orientation) {
  std::vector<Label> labels(graph.edge_count());
  std::iota(labels.begin(), labels.end(), Label{1});
  std::vector<Label> scratch;
  do {
    if (distinct_sums(graph, orientation, labels, scratch)) return labels;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

}  // namespace

OracleResult brute_force_oracle(const BipartiteGraph& graph, int max_edges) {
  const EdgeId edge_count = graph.edge_count();
  if (edge_count > max_edges) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(edge_count) + " edges exceed oracle limit " +
                    std::to_string(max_edges));
  }
  OracleResult result;
  Orientation orientation = Orientation::all_x_to_y(graph);
  if (auto labels = first_permutation(graph, orientation)) {
    result.witness = OrientedLabeling{orientation, Labeling{*labels}};
    result.searched = SearchedSpace::kAllXtoY;
    return result;
  }
  result.searched = SearchedSpace::kAllOrientations;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edge_count);
       ++mask) {
    for (EdgeId e = 0; e < edge_count; ++e) {
      orientation.dir[e] =
          (mask >> e) & 1 ? Direction::kYtoX : Direction::kXtoY;
    }
    if (auto labels = first_permutation(graph, orientation)) {
      result.witness = OrientedLabeling{orientation, Labeling{*labels}};
      return result;
    }
  }
  return result;
}

}  // namespace antimagic
