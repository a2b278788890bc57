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

#ifndef ANTIMAGIC_VERIFIER_H_
#define ANTIMAGIC_VERIFIER_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/graph.h"
#include "antimagic/labeling.h"

namespace antimagic {

struct VerifyReport {
  bool ok = false;
  bool bijection_ok = false;
  // All X sums negative and all Y sums positive. Informational only.
  bool sign_split_ok = false;
  VertexSums sums;
  // Vertices sharing an oriented sum, as (first of the group, other) pairs;
  // a group of k equal sums yields k - 1 pairs.
  std::vector<std::pair<VertexRef, VertexRef>> collisions;
  // Human-readable reasons the labels are not a bijection onto [1, |E|].
  std::vector<std::string> bijection_problems;
};

// Checks the antimagic definition directly: labels form a bijection onto
// [1, |E|] and all |X| + |Y| oriented sums are pairwise distinct. Sums are
// recomputed here with a separate kernel. Never throws on size-consistent
// input.
VerifyReport verify_labeling(const BipartiteGraph& graph,
                             const Orientation& orientation,
                             const Labeling& labeling);

std::string describe(const VertexRef& v);
// Multi-line diagnostic listing bijection problems and collisions.
std::string describe(const VerifyReport& report);

enum class SearchedSpace { kAllXtoY, kAllOrientations };

struct OracleResult {
  // Lexicographically smallest witness in the searched space, if any.
  std::optional<OrientedLabeling> witness;
  // Space that was searched exhaustively. kAllXtoY means a witness was found
  // with every edge directed X to Y; kAllOrientations means reversals were
  // explored too (because the first space had no witness).
  SearchedSpace searched = SearchedSpace::kAllXtoY;
};

inline constexpr int kDefaultOracleMaxEdges = 9;

// Exhaustive search over label permutations, first with all edges X to Y and
// then over every orientation. Throws Error{kTooLarge} when |E| > max_edges.
OracleResult brute_force_oracle(const BipartiteGraph& graph,
                                int max_edges = kDefaultOracleMaxEdges);

}  // namespace antimagic

#endif  // ANTIMAGIC_VERIFIER_H_
