// Copyright 2026 The hypercover Authors
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

#include "hypercover/degeneracy.h"

#include <algorithm>
#include <unordered_set>

#include "masks.h"
#include "trace_state.h"

namespace hypercover {

namespace {

using internal::Mask;

template <bool kStrong>
EliminationOrder Peel(const Hypergraph& h) {
  EliminationOrder result;
  result.order.reserve(h.num_vertices());
  result.step_values.reserve(h.num_vertices());
  internal::TraceState state(h);
  while (state.num_alive() > 0) {
    const VertexId x =
        kStrong ? state.MinStrongDegreeVertex() : state.MinDegreeVertex();
    const std::size_t d = kStrong ? state.strong_degree(x) : state.degree(x);
    result.order.push_back(x);
    result.step_values.push_back(d);
    result.value = std::max(result.value, d);
    state.Remove(x);
  }
  return result;
}

template <bool kStrong>
BruteForceValue OverAllSubsets(const Hypergraph& h, std::size_t cap) {
  internal::RequireAtMost(h.num_vertices(), std::min<std::size_t>(cap, 20),
                          "vertex set");
  const std::vector<Mask> edges = internal::EdgeMasks(h);
  BruteForceValue best;
  const Mask full = internal::LowMask(h.num_vertices());
  for (Mask s = 1; s <= full && full != 0; ++s) {
    std::vector<Mask> traces = internal::Traces(edges, s);
    if constexpr (kStrong) traces = internal::MaximalOnly(traces);
    const std::size_t value = internal::MinCoverCount(traces, s);
    if (best.witness.empty() || value > best.value) {
      best.value = value;
      best.witness = internal::ToSet(s);
    }
  }
  return best;
}

}  // namespace

EliminationOrder StrongDegeneracy(const Hypergraph& h) {
  return Peel<true>(h);
}

EliminationOrder Degeneracy(const Hypergraph& h) { return Peel<false>(h); }

BruteForceValue StrongDegeneracyBruteForce(const Hypergraph& h,
                                           std::size_t max_vertices) {
  return OverAllSubsets<true>(h, max_vertices);
}

BruteForceValue DegeneracyBruteForce(const Hypergraph& h,
                                     std::size_t max_vertices) {
  return OverAllSubsets<false>(h, max_vertices);
}

BruteForceValue MightyDegeneracyBruteForce(const Hypergraph& h,
                                           std::size_t max_vertices) {
  internal::RequireAtMost(h.num_vertices(),
                          std::min<std::size_t>(max_vertices, 20),
                          "vertex set");
  const std::size_t n = h.num_vertices();
  const std::vector<Mask> edges = internal::EdgeMasks(h);
  // closed[v]: v together with every vertex sharing an edge with it.
  std::vector<Mask> closed(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = internal::Bit(v);
    for (Mask e : edges) {
      if (e & internal::Bit(v)) closed[v] |= e;
    }
  }

  const Mask full = internal::LowMask(n);
  std::unordered_set<Mask> visited;
  BruteForceValue best;
  bool found = false;
  for (Mask r = 0;; ++r) {
    Mask gone = 0;
    for (Mask rest = r; rest != 0; rest &= rest - 1) {
      gone |= closed[std::countr_zero(rest)];
    }
    const Mask survivors = full & ~gone;
    if (survivors != 0 && visited.insert(survivors).second) {
      const std::vector<Mask> maximal =
          internal::MaximalOnly(internal::Traces(edges, survivors));
      const std::size_t value = internal::MinCoverCount(maximal, survivors);
      if (!found || value > best.value) {
        best.value = value;
        best.witness = internal::ToSet(survivors);
        found = true;
      }
    }
    if (r == full) break;
  }
  return best;
}

}  // namespace hypercover
