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

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "antimagic/labeler.h"

namespace antimagic {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kT1: return "T1";
    case CaseTag::kTGe3Odd: return "T_GE3_ODD";
    case CaseTag::kTGe3Even: return "T_GE3_EVEN";
    case CaseTag::kT2SOdd: return "T2_S_ODD";
    case CaseTag::kT2S2: return "T2_S2";
    case CaseTag::kT2S4: return "T2_S4";
    case CaseTag::kT2SGe6: return "T2_S_GE6";
  }
  return "UNKNOWN";
}

CaseTag case_tag_for(const GraphProfile& profile) {
  if (profile.t == 1) return CaseTag::kT1;
  if (profile.t >= 3) {
    return profile.t % 2 == 1 ? CaseTag::kTGe3Odd : CaseTag::kTGe3Even;
  }
  if (profile.s % 2 == 1) return CaseTag::kT2SOdd;
  if (profile.s == 2) return CaseTag::kT2S2;
  if (profile.s == 4) return CaseTag::kT2S4;
  return CaseTag::kT2SGe6;
}

namespace {

void require(bool condition, const char* driver) {
  if (!condition) {
    throw Error(ErrorCode::kWrongCase,
                std::string(driver) + " called outside its degree range");
  }
}

// Copies the non-zero labels of `part` into `into`.
void merge(Labeling& into, const Labeling& part) {
  for (std::size_t e = 0; e < part.label.size(); ++e) {
    if (part.label[e] != 0) into.label[e] = part.label[e];
  }
}

OrientedLabeling checked(const BipartiteGraph& graph, OrientedLabeling result,
                         const char* driver) {
  VerifyReport report =
      verify_labeling(graph, result.orientation, result.labeling);
  if (!report.ok) {
    throw ConstructionFailed(std::string(driver) + " produced a labeling that "
                                 "does not verify:\n" + describe(report),
                             std::move(report));
  }
  return result;
}

// The matching edge at each Y vertex, or -1.
std::vector<EdgeId> matched_at_y(const BipartiteGraph& graph,
                                 const Matching& matching) {
  std::vector<EdgeId> at_y(graph.y_count(), -1);
  for (EdgeId e : matching.edges) at_y[graph.edge(e).y] = e;
  return at_y;
}

}  // namespace

OrientedLabeling case_t1(const BipartiteGraph& graph,
                         const GraphProfile& profile) {
  require(profile.t == 1 && !profile.swapped, "case_t1");
  OrientedLabeling out{Orientation::all_x_to_y(graph), Labeling::empty(graph)};
  Label next = 1;
  for (VertexId x = 0; x < graph.x_count(); ++x) {
    for (EdgeId e : graph.incident(Side::kX, x)) out.labeling.label[e] = next++;
  }
  return checked(graph, std::move(out), "case_t1");
}

OrientedLabeling case_t_ge3(const BipartiteGraph& graph,
                            const GraphProfile& profile,
                            const Matching& matching) {
  require(profile.t >= 3 && !profile.swapped, "case_t_ge3");
  const Label m = graph.x_count();
  const Label t = profile.t;
  OrientedLabeling out{Orientation::all_x_to_y(graph), Labeling::empty(graph)};
  const std::vector<EdgeId> at_y = matched_at_y(graph, matching);

  // Per-row label lists for the matched Y vertices (row i = partner index + 1).
  auto row_labels = [&](Label i) {
    std::vector<Label> row;
    if (t % 2 == 1) {
      for (Label k = 1; k <= (t - 1) / 2; ++k) {
        row.push_back((2 * k - 1) * m + i);
        row.push_back((2 * k + 1) * m - i + 1);
      }
    } else {
      row = {2 * i - 1, 3 * m - i + 1, 4 * m - i + 1};
      for (Label k = 2; k <= (t - 2) / 2; ++k) {
        row.push_back(2 * k * m + i);
        row.push_back((2 * k + 2) * m - i + 1);
      }
    }
    return row;
  };

  Label unmatched_rank = 0;
  for (VertexId y = 0; y < graph.y_count(); ++y) {
    const auto incident = graph.incident(Side::kY, y);
    if (at_y[y] >= 0) {
      const auto row = row_labels(graph.edge(at_y[y]).x + 1);
      std::size_t slot = 0;
      for (EdgeId e : incident) {
        if (e != at_y[y]) out.labeling.label[e] = row[slot++];
      }
    } else {
      Label next = t * m + t * unmatched_rank++ + 1;
      for (EdgeId e : incident) out.labeling.label[e] = next++;
    }
  }

  std::vector<Label> h_sum(graph.x_count(), 0);
  for (VertexId x = 0; x < graph.x_count(); ++x) {
    for (EdgeId e : graph.incident(Side::kX, x)) h_sum[x] += out.labeling.label[e];
  }
  std::vector<VertexId> order(graph.x_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return h_sum[a] < h_sum[b];
  });
  std::vector<EdgeId> at_x(graph.x_count(), -1);
  for (EdgeId e : matching.edges) at_x[graph.edge(e).x] = e;
  for (Label rank = 1; rank <= m; ++rank) {
    out.labeling.label[at_x[order[rank - 1]]] = t % 2 == 1 ? rank : 2 * rank;
  }
  return checked(graph, std::move(out), "case_t_ge3");
}

OrientedLabeling case_t2_s_odd(const BipartiteGraph& graph,
                               const GraphProfile& profile,
                               const Matching& matching) {
  require(profile.t == 2 && profile.s % 2 == 1 && !profile.swapped,
          "case_t2_s_odd");
  const Matching rerouted = reroute_for_open_trails(graph, matching);
  const std::vector<EdgeId> h_edges =
      complement_edges(graph.edge_count(), rerouted.edges);
  DecompositionPlan plan =
      classify_and_order(open_trail_decomposition(graph, h_edges), {});
  const Label c = 2 * static_cast<Label>(plan.p()) + 1;
  const Label d = static_cast<Label>(profile.s) * graph.x_count() -
                  2 * static_cast<Label>(plan.q());

  OrientedLabeling out{Orientation::all_x_to_y(graph), Labeling::empty(graph)};
  GadgetResult family = label_family(graph, plan, c, d);
  merge(out.labeling, family.labels);
  const std::vector<EdgeId> at_y = matched_at_y(graph, rerouted);
  for (const EndpointIncrement& inc : family.endpoint_increments) {
    if (at_y[inc.y] >= 0) out.labeling.label[at_y[inc.y]] = inc.increment;
  }
  return checked(graph, std::move(out), "case_t2_s_odd");
}

OrientedLabeling case_t2_s_even(const BipartiteGraph& graph,
                                const GraphProfile& profile) {
  require(profile.t == 2 && profile.s % 2 == 0 && !profile.swapped,
          "case_t2_s_even");
  const Label m = graph.x_count();
  const Label s = profile.s;
  OrientedLabeling out{Orientation::all_x_to_y(graph), Labeling::empty(graph)};

  if (s == 2) {
    std::vector<EdgeId> all(graph.edge_count());
    std::iota(all.begin(), all.end(), 0);
    merge(out.labeling,
          label_two_regular(graph, cycle_decomposition(graph, all), {1, 2 * m})
              .labels);
    return checked(graph, std::move(out), "case_t2_s_even");
  }

  const TwoFactor factor = two_factor(suppress_degree_two(graph, profile));
  const std::vector<EdgeId> rest =
      complement_edges(graph.edge_count(), factor.edges);
  DecompositionPlan split =
      classify_and_order({}, cycle_decomposition(graph, rest).cycles);
  std::stable_partition(split.mod2_cycles.begin(), split.mod2_cycles.end(),
                        [](const Cycle& c) { return c.length() == 6; });

  const Label h = static_cast<Label>(split.h());
  DecompositionPlan family_plan;
  family_plan.mod0_cycles = split.mod0_cycles;
  std::vector<std::pair<Label, Label>> path_end_labels;
  for (Label i = 1; i <= h; ++i) {
    const std::vector<EdgeId>& e = split.mod2_cycles[i - 1].edges;
    const std::size_t k = e.size() / 2;
    Label first, last, second, penultimate, third, antepenultimate;
    if (s == 4) {
      first = i;
      last = 2 * m - (i - 1);
      second = h + 2 * i - 1;
      penultimate = h + 2 * i;
      third = 2 * m + 1 - (h + 2 * i - 1);
      antepenultimate = 2 * m + 1 - (h + 2 * i);
    } else {
      first = i;
      last = h + i;
      second = 2 * h + 2 * i - 1;
      penultimate = 2 * h + 2 * i;
      third = (s - 2) * m + 2 * h + 1 - (2 * h + 2 * i - 1);
      antepenultimate = (s - 2) * m + 2 * h + 1 - (2 * h + 2 * i);
    }
    out.labeling.label[e[0]] = first;
    out.labeling.label[e[2 * k - 1]] = last;
    out.labeling.label[e[1]] = second;
    out.labeling.label[e[2 * k - 2]] = penultimate;
    out.labeling.label[e[2]] = third;
    out.labeling.label[e[2 * k - 3]] = antepenultimate;
    out.orientation.dir[e[0]] = Direction::kYtoX;
    if (s == 4) out.orientation.dir[e[2 * k - 1]] = Direction::kYtoX;
    if (k >= 5) {
      Trail path;
      path.edges.assign(e.begin() + 3, e.begin() + (2 * k - 3));
      path.start_y = graph.edge(e[2]).y;
      path.end_y = graph.edge(e[2 * k - 3]).y;
      family_plan.mod0_trails.push_back(std::move(path));
      path_end_labels.emplace_back(third, antepenultimate);
    }
  }

  const Label c = s == 4 ? 3 * h + 1 : 4 * h + 1;
  const Label d = s == 4 ? 2 * m - 3 * h : (s - 2) * m - 2 * h;
  GadgetResult family = label_family(graph, family_plan, c, d);
  merge(out.labeling, family.labels);
  for (std::size_t i = 0; i < path_end_labels.size(); ++i) {
    const Label start = family.endpoint_increments[2 * i].increment;
    const Label end = family.endpoint_increments[2 * i + 1].increment;
    if (start != path_end_labels[i].first || end != path_end_labels[i].second) {
      throw Error(ErrorCode::kConstructionFailed,
                  "path " + std::to_string(i) +
                      " endpoint labels disagree with the family increments");
    }
  }

  merge(out.labeling,
        label_two_regular(graph, cycle_decomposition(graph, factor.edges),
                          {(s - 2) * m + 1, s * m})
            .labels);
  return checked(graph, std::move(out), "case_t2_s_even");
}

AntimagicResult antimagic_orientation(const BipartiteGraph& graph) {
  const CanonicalGraph canonical = canonicalize(graph);
  const BipartiteGraph& g = canonical.graph;
  GraphProfile profile = canonical.profile;
  GraphProfile local = profile;
  local.swapped = false;
  const CaseTag tag = case_tag_for(profile);

  OrientedLabeling oriented;
  switch (tag) {
    case CaseTag::kT1:
      oriented = case_t1(g, local);
      break;
    case CaseTag::kTGe3Odd:
    case CaseTag::kTGe3Even:
      oriented = case_t_ge3(g, local, x_saturating_matching(g, local));
      break;
    case CaseTag::kT2SOdd:
      oriented = case_t2_s_odd(g, local, x_saturating_matching(g, local));
      break;
    case CaseTag::kT2S2:
    case CaseTag::kT2S4:
    case CaseTag::kT2SGe6:
      oriented = case_t2_s_even(g, local);
      break;
  }
  if (profile.swapped) {
    for (Direction& dir : oriented.orientation.dir) {
      dir = dir == Direction::kXtoY ? Direction::kYtoX : Direction::kXtoY;
    }
  }
  VerifyReport report =
      verify_labeling(graph, oriented.orientation, oriented.labeling);
  if (!report.ok) {
    throw ConstructionFailed(
        "output does not verify on the input graph:\n" + describe(report),
        std::move(report));
  }
  return {std::move(oriented), tag, profile, std::move(report)};
}

}  // namespace antimagic
