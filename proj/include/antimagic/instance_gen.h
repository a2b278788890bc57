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

// Seeded generators and a fixed catalog of biregular bipartite graphs.

#ifndef ANTIMAGIC_INSTANCE_GEN_H_
#define ANTIMAGIC_INSTANCE_GEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "antimagic/graph.h"

namespace antimagic {

struct GenSpec {
  std::int64_t m = 0;  // |X|
  std::int64_t n = 0;  // |Y|
  std::int64_t s = 0;  // X degree
  std::int64_t t = 0;  // Y degree
  std::uint64_t seed = 0;
  int max_retries = 1000;
};

// Random simple graph with the requested profile. X stubs are paired in
// order with uniformly drawn Y stubs, avoiding parallel edges; a draw with no
// admissible stub left restarts the whole sample. Output edges are sorted by
// (x, y), and the result depends only on `spec` on every platform.
// Throws Error{kInfeasible} if m s != n t, s > n, t > m or a count is not
// positive, and Error{kRetriesExhausted}.
BipartiteGraph gen_biregular(const GenSpec& spec);

// K_{1,s}.
BipartiteGraph star(VertexId s);
// K_{a,b} with |X| = a.
BipartiteGraph complete_bipartite(VertexId a, VertexId b);
// C_{2k}: x_i y_i x_{i+1} ... (k >= 2).
BipartiteGraph even_cycle(VertexId k);
// Vertex-disjoint union; the second graph's ids follow the first's.
BipartiteGraph disjoint_union(const BipartiteGraph& a,
                              const BipartiteGraph& b);

struct NamedInstance {
  std::string name;
  BipartiteGraph graph;
};

// Fixed catalog with at least one instance per construction case, including
// even-degree instances whose cycle decompositions contain cycles of both
// length classes and odd-degree instances with trails of both length classes.
std::vector<NamedInstance> named_instances();

}  // namespace antimagic

#endif  // ANTIMAGIC_INSTANCE_GEN_H_
