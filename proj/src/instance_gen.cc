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

#include "antimagic/instance_gen.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

// Uniform draw from [0, bound). std::uniform_int_distribution is
// implementation-defined, so the reduction is spelled out here.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

// One attempt; returns false when some X vertex runs out of admissible stubs.
bool try_pairing(const GenSpec& spec, std::mt19937_64& rng,
                 std::vector<Edge>& edges) {
  std::vector<VertexId> pool;
  pool.reserve(static_cast<std::size_t>(spec.n * spec.t));
  for (VertexId y = 0; y < spec.n; ++y) {
    for (std::int64_t k = 0; k < spec.t; ++k) pool.push_back(y);
  }
  std::vector<VertexId> owner(static_cast<std::size_t>(spec.n), -1);
  edges.clear();
  for (VertexId x = 0; x < spec.m; ++x) {
    for (std::int64_t k = 0; k < spec.s; ++k) {
      std::size_t pick = draw(rng, pool.size());
      if (owner[pool[pick]] == x) {
        std::vector<std::size_t> admissible;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (owner[pool[i]] != x) admissible.push_back(i);
        }
        if (admissible.empty()) return false;
        pick = admissible[draw(rng, admissible.size())];
      }
      const VertexId y = pool[pick];
      owner[y] = x;
      edges.push_back({x, y});
      pool[pick] = pool.back();
      pool.pop_back();
    }
  }
  return true;
}

}  // namespace

BipartiteGraph gen_biregular(const GenSpec& spec) {
  if (spec.m <= 0 || spec.n <= 0 || spec.s <= 0 || spec.t <= 0) {
    throw Error(ErrorCode::kInfeasible, "counts and degrees must be positive");
  }
  if (spec.m * spec.s != spec.n * spec.t) {
    throw Error(ErrorCode::kInfeasible,
                "m*s = " + std::to_string(spec.m * spec.s) + " but n*t = " +
                    std::to_string(spec.n * spec.t));
  }
  if (spec.s > spec.n || spec.t > spec.m) {
    throw Error(ErrorCode::kInfeasible,
                "degree exceeds the opposite side's size");
  }
  if (spec.m * spec.s > kMaxEdges) {
    throw Error(ErrorCode::kInfeasible, "too many edges");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    if (try_pairing(spec, rng, edges)) {
      std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.x, a.y) < std::pair(b.x, b.y);
      });
      return BipartiteGraph(static_cast<VertexId>(spec.m),
                            static_cast<VertexId>(spec.n), std::move(edges));
    }
  }
  throw Error(ErrorCode::kRetriesExhausted,
              std::to_string(spec.max_retries) + " attempts failed");
}

BipartiteGraph star(VertexId s) { return complete_bipartite(1, s); }

BipartiteGraph complete_bipartite(VertexId a, VertexId b) {
  std::vector<Edge> edges;
  for (VertexId x = 0; x < a; ++x) {
    for (VertexId y = 0; y < b; ++y) edges.push_back({x, y});
  }
  return BipartiteGraph(a, b, std::move(edges));
}

BipartiteGraph even_cycle(VertexId k) {
  if (k < 2) throw Error(ErrorCode::kMalformedGraph, "C_2k needs k >= 2");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % k, i});
  }
  return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph disjoint_union(const BipartiteGraph& a,
                              const BipartiteGraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) {
    edges.push_back({e.x + a.x_count(), e.y + a.y_count()});
  }
  return BipartiteGraph(a.x_count() + b.x_count(), a.y_count() + b.y_count(),
                        std::move(edges));
}

std::vector<NamedInstance> named_instances() {
  auto gen = [](std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t t,
                std::uint64_t seed) {
    return gen_biregular({m, n, s, t, seed, 1000});
  };
  std::vector<NamedInstance> out;
  out.push_back({"K_1,1", star(1)});
  out.push_back({"K_1,3", star(3)});
  out.push_back({"K_1,5", star(5)});
  out.push_back({"stars_2xK_1,2", disjoint_union(star(2), star(2))});
  out.push_back({"K_2,3", complete_bipartite(2, 3)});
  out.push_back({"K_3,2", complete_bipartite(3, 2)});
  out.push_back({"K_3,3", complete_bipartite(3, 3)});
  out.push_back({"K_4,4", complete_bipartite(4, 4)});
  out.push_back({"K_5,5", complete_bipartite(5, 5)});
  out.push_back({"K_2,4", complete_bipartite(2, 4)});
  out.push_back({"K_2,6", complete_bipartite(2, 6)});
  out.push_back({"C4", even_cycle(2)});
  out.push_back({"C6", even_cycle(3)});
  out.push_back({"C8", even_cycle(4)});
  out.push_back({"C4+C6", disjoint_union(even_cycle(2), even_cycle(3))});
  out.push_back({"t4_m8_s4", gen(8, 8, 4, 4, 1)});
  out.push_back({"t3_m6_s5", gen(6, 10, 5, 3, 1)});
  out.push_back({"t2_s3_m8", gen(8, 12, 3, 2, 0)});
  out.push_back({"t2_s5_m8", gen(8, 20, 5, 2, 0)});
  out.push_back({"t2_s4_m10", gen(10, 20, 4, 2, 2)});
  out.push_back({"t2_s6_m12", gen(12, 36, 6, 2, 0)});
  out.push_back({"t2_s8_m10", gen(10, 40, 8, 2, 0)});
  return out;
}

}  // namespace antimagic
