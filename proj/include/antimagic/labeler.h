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

// Antimagic orientations of biregular bipartite graphs.
//
// Two layers live here. The gadgets label one structural piece (a trail, an
// even cycle, a 2-regular graph, a family of Y-disjoint trails and cycles)
// from a prescribed label window and guarantee closed-form vertex sums. The
// case drivers pick the orientation, partition [1, |E|] among gadgets and
// matching edges, and self-verify the result.
//
// All drivers expect the canonical side assignment (s >= t) produced by
// canonicalize(); antimagic_orientation() takes care of that for arbitrary
// input.

#ifndef ANTIMAGIC_LABELER_H_
#define ANTIMAGIC_LABELER_H_

#include <string_view>
#include <vector>

#include "antimagic/decomposition.h"
#include "antimagic/errors.h"
#include "antimagic/graph.h"
#include "antimagic/labeling.h"
#include "antimagic/verifier.h"

namespace antimagic {

enum class CaseTag {
  kT1,         // t = 1: disjoint stars
  kTGe3Odd,    // t >= 3, t odd
  kTGe3Even,   // t >= 3, t even
  kT2SOdd,     // t = 2, s odd
  kT2S2,       // t = 2, s = 2 (2-regular)
  kT2S4,       // t = 2, s = 4
  kT2SGe6,     // t = 2, s >= 6 even
};

std::string_view to_string(CaseTag tag);
CaseTag case_tag_for(const GraphProfile& profile);

// Label increment the surrounding construction must add at a trail endpoint
// (through an edge outside the gadget) for the gadget's Y sums to stay
// pairwise distinct.
struct EndpointIncrement {
  VertexId y;
  Label increment;
};

struct GadgetResult {
  Labeling labels;  // zero outside the gadget's edges
  std::vector<EndpointIncrement> endpoint_increments;
};

// Labels a 2-regular subgraph (disjoint even cycles) with exactly the labels
// of `window` so that all its vertex sums are distinct and lie in
// [2 lo + 1, 2 hi - 1]. Each cycle takes the next block of consecutive
// labels, laid out in traversal order with the first two swapped.
// Throws Error{kNotTwoRegular}, Error{kWindowMismatch}.
GadgetResult label_two_regular(const BipartiteGraph& graph,
                               const CycleSet& cycles, LabelWindow window);

// Open trail of length 2k with distinct Y vertices, window [a, b] with
// a = b - 2k + 1. Edges at one parity class of Y positions take
// a, a+1, ..., a+k-1 in traversal order and the others b, b-1, ..., b-k+1;
// every X vertex then sums to d(x)(a+b)/2.
// Throws Error{kBadWindow}, Error{kRepeatedYVertex}, Error{kInvalidWalk}.
Labeling label_open_trail(const BipartiteGraph& graph, const Trail& trail,
                          Label a, Label b);

// Even cycle (or closed trail with distinct Y vertices) of length 2k with
// k even, window [a, b] with a = b - 2k + 1. Every X vertex sums to a + b per
// visit and Y sums are pairwise distinct.
// Throws Error{kBadWindow}, Error{kOddHalfLength}, Error{kRepeatedYVertex},
// Error{kInvalidWalk}.
Labeling label_even_cycle(const BipartiteGraph& graph, const Cycle& cycle,
                          Label a, Label b);

// Labels the plan's items in order (length-2-mod-4 trails, length-0-mod-4
// trails, length-0-mod-4 cycles) with nested windows
// a_i = c + sum_{j<i} k_j, b_i = d - sum_{j<i} k_j, so a_i + b_i = c + d and
// every X sum is d_H(x)(c+d)/2. The returned increments, once added at the
// trail endpoints, keep all Y sums distinct.
// Throws Error{kWindowMismatch} (c != d - |E(H)| + 1),
// Error{kLengthClassViolation}, Error{kYOverlap}, Error{kInvalidWalk}.
GadgetResult label_family(const BipartiteGraph& graph,
                          const DecompositionPlan& plan, Label c, Label d);

// A driver's output was rejected by the verifier.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what, VerifyReport report)
      : Error(ErrorCode::kConstructionFailed, what),
        report_(std::move(report)) {}

  const VerifyReport& report() const { return report_; }

 private:
  VerifyReport report_;
};

// Case drivers. Each throws Error{kWrongCase} outside its (s, t) range and
// ConstructionFailed if its own output does not verify.
OrientedLabeling case_t1(const BipartiteGraph& graph,
                         const GraphProfile& profile);
OrientedLabeling case_t_ge3(const BipartiteGraph& graph,
                            const GraphProfile& profile,
                            const Matching& matching);
OrientedLabeling case_t2_s_odd(const BipartiteGraph& graph,
                               const GraphProfile& profile,
                               const Matching& matching);
OrientedLabeling case_t2_s_even(const BipartiteGraph& graph,
                                const GraphProfile& profile);

struct AntimagicResult {
  OrientedLabeling oriented;  // in the caller's side assignment
  CaseTag tag;
  GraphProfile profile;
  VerifyReport report;
};

// Validates, canonicalizes, dispatches on the case tag, maps the result back
// to the input's sides and verifies it. Throws Error{kNotBiregular},
// Error{kEmptyGraph} or ConstructionFailed.
AntimagicResult antimagic_orientation(const BipartiteGraph& graph);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELER_H_
