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
#include <set>

#include "antimagic/errors.h"
#include "antimagic/instance_gen.h"
#include "antimagic/labeler.h"
#include "antimagic/verifier.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace antimagic {
namespace {

using testing::naive_oriented;
using testing::pairwise_distinct;

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kConstructionFailed;
}

void expect_antimagic(const BipartiteGraph& g, const OrientedLabeling& ol) {
  std::vector<Label> expected(g.edge_count());
  std::iota(expected.begin(), expected.end(), 1);
  std::vector<Label> got = ol.labeling.label;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  std::vector<Label> ys;
  std::vector<Label> all = naive_oriented(g, ol, &ys);
  all.insert(all.end(), ys.begin(), ys.end());
  EXPECT_TRUE(pairwise_distinct(all));
}

TEST(CaseTagTest, Mapping) {
  auto tag = [](std::int64_t s, std::int64_t t) {
    return case_tag_for(GraphProfile{1, 1, s, t, false});
  };
  EXPECT_EQ(tag(4, 1), CaseTag::kT1);
  EXPECT_EQ(tag(5, 3), CaseTag::kTGe3Odd);
  EXPECT_EQ(tag(4, 4), CaseTag::kTGe3Even);
  EXPECT_EQ(tag(3, 2), CaseTag::kT2SOdd);
  EXPECT_EQ(tag(2, 2), CaseTag::kT2S2);
  EXPECT_EQ(tag(4, 2), CaseTag::kT2S4);
  EXPECT_EQ(tag(8, 2), CaseTag::kT2SGe6);
  EXPECT_EQ(to_string(CaseTag::kT2SGe6), "T2_S_GE6");
  EXPECT_EQ(to_string(CaseTag::kTGe3Odd), "T_GE3_ODD");
}

// ---- t = 1 ----

TEST(CaseT1Test, TwoSmallStars) {
  const BipartiteGraph g = disjoint_union(star(2), star(2));
  const OrientedLabeling ol = case_t1(g, validate_and_profile(g));
  std::vector<Label> ys;
  const std::vector<Label> xs = naive_oriented(g, ol, &ys);
  EXPECT_EQ(xs, (std::vector<Label>{-3, -7}));
  std::sort(ys.begin(), ys.end());
  EXPECT_EQ(ys, (std::vector<Label>{1, 2, 3, 4}));
}

TEST(CaseT1Test, PerfectMatching) {
  BipartiteGraph g = star(1);
  for (int i = 0; i < 4; ++i) g = disjoint_union(g, star(1));
  const OrientedLabeling ol = case_t1(g, validate_and_profile(g));
  std::vector<Label> ys;
  const std::vector<Label> xs = naive_oriented(g, ol, &ys);
  EXPECT_EQ(xs, (std::vector<Label>{-1, -2, -3, -4, -5}));
  EXPECT_EQ(ys, (std::vector<Label>{1, 2, 3, 4, 5}));
}

TEST(CaseT1Test, SingleStar) {
  const BipartiteGraph g = star(5);
  const OrientedLabeling ol = case_t1(g, validate_and_profile(g));
  std::vector<Label> ys;
  EXPECT_EQ(naive_oriented(g, ol, &ys), (std::vector<Label>{-15}));
  EXPECT_EQ(ys, (std::vector<Label>{1, 2, 3, 4, 5}));
}

TEST(CaseT1Test, WrongCase) {
  const BipartiteGraph g = even_cycle(3);
  EXPECT_EQ(code_of([&] { case_t1(g, validate_and_profile(g)); }),
            ErrorCode::kWrongCase);
}

// ---- t >= 3 ----

// Sums of the non-matching labels at each matched Y vertex, keyed by the row
// index i (partner X index + 1).
std::map<Label, std::vector<Label>> matched_rows(const BipartiteGraph& g,
                                                 const OrientedLabeling& ol,
                                                 const Matching& m) {
  std::map<Label, std::vector<Label>> rows;
  std::set<EdgeId> matching(m.edges.begin(), m.edges.end());
  for (EdgeId e : m.edges) {
    const VertexId y = g.edge(e).y;
    auto& row = rows[g.edge(e).x + 1];
    for (EdgeId f : g.incident(Side::kY, y)) {
      if (!matching.count(f)) row.push_back(ol.labeling.label[f]);
    }
    std::sort(row.begin(), row.end());
  }
  return rows;
}

TEST(CaseTGe3Test, K33RowLabelsAndSums) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  const GraphProfile p = validate_and_profile(g);
  const Matching m = x_saturating_matching(g, p);
  const OrientedLabeling ol = case_t_ge3(g, p, m);
  expect_antimagic(g, ol);
  const Label n = 3;
  for (const auto& [i, row] : matched_rows(g, ol, m)) {
    EXPECT_EQ(row, (std::vector<Label>{n + i, 3 * n - i + 1}));
    EXPECT_EQ(row[0] + row[1], 4 * n + 1);
  }
}

TEST(CaseTGe3Test, FiveRowSum) {
  const BipartiteGraph g = gen_biregular({10, 10, 5, 5, 3, 1000});
  const GraphProfile p = validate_and_profile(g);
  const Matching m = x_saturating_matching(g, p);
  const OrientedLabeling ol = case_t_ge3(g, p, m);
  expect_antimagic(g, ol);
  const Label t = 5;
  const Label n = 10;
  for (const auto& [i, row] : matched_rows(g, ol, m)) {
    const std::vector<Label> want = [&] {
      std::vector<Label> w{n + i, 3 * n - i + 1, 3 * n + i, 5 * n - i + 1};
      std::sort(w.begin(), w.end());
      return w;
    }();
    EXPECT_EQ(row, want);
    EXPECT_EQ(2 * std::accumulate(row.begin(), row.end(), Label{0}),
              (t - 1) * ((t + 1) * n + 1));
  }
}

TEST(CaseTGe3Test, FourRowSum) {
  const BipartiteGraph g = gen_biregular({8, 8, 4, 4, 2, 1000});
  const GraphProfile p = validate_and_profile(g);
  const Matching m = x_saturating_matching(g, p);
  const OrientedLabeling ol = case_t_ge3(g, p, m);
  expect_antimagic(g, ol);
  const Label n = 8;
  for (const auto& [i, row] : matched_rows(g, ol, m)) {
    EXPECT_EQ(row, (std::vector<Label>{2 * i - 1, 3 * n - i + 1, 4 * n - i + 1}));
    // (t^2 - 9) m + t - 3 at t = 4.
    EXPECT_EQ(std::accumulate(row.begin(), row.end(), Label{0}), 7 * n + 1);
  }
}

TEST(CaseTGe3Test, SixRowSumIsConstant) {
  const BipartiteGraph g = gen_biregular({6, 6, 6, 6, 0, 1000});
  const GraphProfile p = validate_and_profile(g);
  const Matching m = x_saturating_matching(g, p);
  const OrientedLabeling ol = case_t_ge3(g, p, m);
  expect_antimagic(g, ol);
  const Label t = 6;
  const Label n = 6;
  for (const auto& [i, row] : matched_rows(g, ol, m)) {
    EXPECT_EQ(2 * std::accumulate(row.begin(), row.end(), Label{0}),
              (t * t - 2) * n + t - 2);
  }
}

TEST(CaseTGe3Test, MatchingLabelsFollowSortedHSums) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::int64_t t = 3 + seed % 3;
    const BipartiteGraph g = gen_biregular({2 * t, 2 * t + 2, t + 1, t, seed, 1000});
    const GraphProfile p = validate_and_profile(g);
    const Matching m = x_saturating_matching(g, p);
    const OrientedLabeling ol = case_t_ge3(g, p, m);
    std::set<EdgeId> matching(m.edges.begin(), m.edges.end());
    std::vector<std::pair<Label, Label>> by_x;  // (H sum, matching label)
    for (VertexId x = 0; x < g.x_count(); ++x) {
      Label h = 0;
      Label own = 0;
      for (EdgeId e : g.incident(Side::kX, x)) {
        (matching.count(e) ? own : h) += ol.labeling.label[e];
      }
      by_x.push_back({h, own});
    }
    std::sort(by_x.begin(), by_x.end());
    for (std::size_t r = 0; r < by_x.size(); ++r) {
      EXPECT_EQ(by_x[r].second, static_cast<Label>(t % 2 ? r + 1 : 2 * (r + 1)));
      if (r > 0) {
        EXPECT_LT(by_x[r - 1].first + by_x[r - 1].second,
                  by_x[r].first + by_x[r].second);
      }
    }
  }
}

TEST(CaseTGe3Test, WrongCase) {
  const BipartiteGraph g = complete_bipartite(2, 3);
  const GraphProfile p = validate_and_profile(g);
  EXPECT_EQ(code_of([&] { case_t_ge3(g, p, x_saturating_matching(g, p)); }),
            ErrorCode::kWrongCase);
}

// ---- t = 2, s odd ----

TEST(CaseT2SOddTest, LabelSetsAndXSums) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::int64_t s = 3 + 2 * (seed % 2);
    const std::int64_t m = 4 + 2 * (seed % 4);
    const BipartiteGraph g = gen_biregular({m, m * s / 2, s, 2, seed, 1000});
    const GraphProfile p = validate_and_profile(g);
    const Matching base = x_saturating_matching(g, p);
    const OrientedLabeling ol = case_t2_s_odd(g, p, base);
    expect_antimagic(g, ol);

    // Recompute the plan the driver used.
    const Matching rerouted = reroute_for_open_trails(g, base);
    const DecompositionPlan plan = classify_and_order(
        open_trail_decomposition(g, complement_edges(g.edge_count(), rerouted.edges)),
        {});
    const Label pp = static_cast<Label>(plan.p());
    const Label qq = static_cast<Label>(plan.q());
    std::vector<Label> matching_labels;
    for (EdgeId e : rerouted.edges) matching_labels.push_back(ol.labeling.label[e]);
    std::sort(matching_labels.begin(), matching_labels.end());
    std::vector<Label> want = testing::range(1, 2 * pp);
    for (Label v = s * m - 2 * qq + 1; v <= s * m; ++v) want.push_back(v);
    EXPECT_EQ(matching_labels, want) << "seed " << seed;

    const Label h_sum = -(s - 1) * (s * m - 2 * qq + 2 * pp + 1) / 2;
    const std::vector<Label> xs = naive_oriented(g, ol, nullptr);
    for (EdgeId e : rerouted.edges) {
      EXPECT_EQ(xs[g.edge(e).x], h_sum - ol.labeling.label[e]);
    }
  }
}

TEST(CaseT2SOddTest, WrongCase) {
  const BipartiteGraph g = complete_bipartite(2, 4);
  const GraphProfile p = validate_and_profile(g);
  EXPECT_EQ(code_of([&] { case_t2_s_odd(g, p, x_saturating_matching(g, p)); }),
            ErrorCode::kWrongCase);
}

// ---- t = 2, s even ----

TEST(CaseT2SEvenTest, TwoRegular) {
  const BipartiteGraph g = disjoint_union(even_cycle(2), even_cycle(3));
  const OrientedLabeling ol = case_t2_s_even(g, validate_and_profile(g));
  expect_antimagic(g, ol);
  for (Direction d : ol.orientation.dir) EXPECT_EQ(d, Direction::kXtoY);
}

// The mod-2 cycles of G - E(F) in the driver's order.
std::vector<Cycle> mod2_cycles(const BipartiteGraph& g, const GraphProfile& p) {
  const TwoFactor f = two_factor(suppress_degree_two(g, p));
  DecompositionPlan plan = classify_and_order(
      {}, cycle_decomposition(g, complement_edges(g.edge_count(), f.edges)).cycles);
  std::stable_partition(plan.mod2_cycles.begin(), plan.mod2_cycles.end(),
                        [](const Cycle& c) { return c.length() == 6; });
  return plan.mod2_cycles;
}

TEST(CaseT2SEvenTest, FourDesignatedSums) {
  const BipartiteGraph g = gen_biregular({10, 20, 4, 2, 2, 1000});
  const GraphProfile p = validate_and_profile(g);
  const OrientedLabeling ol = case_t2_s_even(g, p);
  expect_antimagic(g, ol);
  const auto cycles = mod2_cycles(g, p);
  const Label h = static_cast<Label>(cycles.size());
  const Label m = 10;
  ASSERT_GT(h, 0);
  std::vector<Label> ys;
  naive_oriented(g, ol, &ys);
  for (Label i = 1; i <= h; ++i) {
    const auto& e = cycles[i - 1].edges;
    EXPECT_EQ(ys[g.edge(e.front()).y], h + i - 1);
    EXPECT_EQ(ys[g.edge(e.back()).y], -2 * m + h + 3 * i - 1);
    EXPECT_EQ(ol.orientation.dir[e.front()], Direction::kYtoX);
    EXPECT_EQ(ol.orientation.dir[e.back()], Direction::kYtoX);
    if (e.size() == 6) {
      EXPECT_EQ(ys[g.edge(e[2]).y], 4 * m + 3 - 2 * h - 4 * i);
    }
  }
}

TEST(CaseT2SEvenTest, SixDesignatedSums) {
  const BipartiteGraph g = gen_biregular({12, 36, 6, 2, 0, 1000});
  const GraphProfile p = validate_and_profile(g);
  const OrientedLabeling ol = case_t2_s_even(g, p);
  expect_antimagic(g, ol);
  const auto cycles = mod2_cycles(g, p);
  const Label h = static_cast<Label>(cycles.size());
  const Label m = 12;
  const Label s = 6;
  ASSERT_GT(h, 0);
  std::vector<Label> ys;
  naive_oriented(g, ol, &ys);
  for (Label i = 1; i <= h; ++i) {
    const auto& e = cycles[i - 1].edges;
    EXPECT_EQ(ys[g.edge(e.front()).y], 2 * h + i - 1);
    EXPECT_EQ(ys[g.edge(e.back()).y], 3 * h + 3 * i);
    EXPECT_EQ(ol.orientation.dir[e.front()], Direction::kYtoX);
    EXPECT_EQ(ol.orientation.dir[e.back()], Direction::kXtoY);
    if (e.size() == 6) {
      EXPECT_EQ(ys[g.edge(e[2]).y], 2 * (s - 2) * m + 3 - 4 * i);
    }
  }
  for (Label y : ys) EXPECT_GT(y, 0);
  for (Label x : naive_oriented(g, ol, nullptr)) EXPECT_LT(x, 0);
}

TEST(CaseT2SEvenTest, WrongCase) {
  const BipartiteGraph g = complete_bipartite(2, 3);
  EXPECT_EQ(code_of([&] { case_t2_s_even(g, validate_and_profile(g)); }),
            ErrorCode::kWrongCase);
}

// ---- dispatcher ----

TEST(AntimagicOrientationTest, NamedExamples) {
  EXPECT_EQ(antimagic_orientation(star(3)).tag, CaseTag::kT1);
  EXPECT_EQ(antimagic_orientation(even_cycle(4)).tag, CaseTag::kT2S2);
  EXPECT_EQ(antimagic_orientation(complete_bipartite(3, 3)).tag, CaseTag::kTGe3Odd);
}

TEST(AntimagicOrientationTest, SwappedInputKeepsCallerSides) {
  const BipartiteGraph g = complete_bipartite(3, 2);  // X degree 2 < Y degree 3
  const AntimagicResult r = antimagic_orientation(g);
  EXPECT_TRUE(r.profile.swapped);
  EXPECT_EQ(r.tag, CaseTag::kT2SOdd);
  EXPECT_TRUE(r.report.ok);
  expect_antimagic(g, r.oriented);
  // The degree-3 side is Y here and its sums are the negative ones.
  for (Label y : r.report.sums.y_sums) EXPECT_LT(y, 0);
  for (Label x : r.report.sums.x_sums) EXPECT_GT(x, 0);
}

TEST(AntimagicOrientationTest, RejectsNonBiregular) {
  const BipartiteGraph path(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(code_of([&] { antimagic_orientation(path); }),
            ErrorCode::kNotBiregular);
  EXPECT_EQ(code_of([] { antimagic_orientation(BipartiteGraph(1, 1, {})); }),
            ErrorCode::kEmptyGraph);
}

TEST(AntimagicOrientationTest, ConstructionFailedCarriesReport) {
  const BipartiteGraph g = even_cycle(2);
  const VerifyReport bad = verify_labeling(g, Orientation::all_x_to_y(g),
                                           Labeling{{1, 1, 1, 1}});
  const ConstructionFailed failure("demo", bad);
  EXPECT_EQ(failure.code(), ErrorCode::kConstructionFailed);
  EXPECT_FALSE(failure.report().ok);
}

}  // namespace
}  // namespace antimagic
