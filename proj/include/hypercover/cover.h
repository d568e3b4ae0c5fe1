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

// Simultaneous construction of an edge cover C and an independent set X with
// |C| <= m(H) * |X|, where m(H) is the mighty degeneracy; the reported factor
// is the strong degeneracy, which bounds m(H) from above and is computable.
//
// Each round picks a vertex x of minimum strong degree in the current
// restriction, takes every maximal trace through x, extends each one to its
// representative base edge, and deletes all vertices of those traces. What
// survives is always a strong subset, so the number of traces taken per round
// is at most m(H).

#ifndef HYPERCOVER_COVER_H_
#define HYPERCOVER_COVER_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "hypercover/hypergraph.h"

namespace hypercover {

struct CoverChecks {
  bool cover_valid = false;
  bool independent_valid = false;
  // |C| <= sum(per_step_edges) <= bound_factor * |X|, and the same with
  // mighty_bound when it is present.
  bool inequality_holds = false;
};

struct CoverCertificate {
  std::vector<EdgeId> cover;           // ascending
  std::vector<VertexId> independent;   // removal order x_1..x_t
  std::vector<std::size_t> per_step_edges;
  std::size_t bound_factor = 0;        // strong degeneracy of H
  std::optional<std::size_t> mighty_bound;
  CoverChecks checks;
};

struct TransversalChecks {
  bool transversal_valid = false;
  bool matching_valid = false;
  bool inequality_holds = false;  // |S| <= bound_factor * |M|
};

// Greedy cover run on the dual: its cover edges are vertices of H hitting
// every edge, its independent set is a set of pairwise disjoint edges of H.
struct TransversalCertificate {
  std::vector<VertexId> transversal;  // ascending
  std::vector<EdgeId> matching;       // ascending
  std::size_t bound_factor = 0;       // strong degeneracy of the dual
  std::optional<std::size_t> mighty_bound;
  TransversalChecks checks;
};

enum class MightyBound {
  kSkip,
  kWhenAffordable,  // brute force when n <= kMightyBruteForceCap
};

// Throws IsolatedVertex. The checks are verified before returning; a failed
// check is an Internal error.
CoverCertificate GreedyCover(const Hypergraph& h,
                             MightyBound mighty = MightyBound::kWhenAffordable);

TransversalCertificate GreedyTransversal(
    const Hypergraph& h, MightyBound mighty = MightyBound::kWhenAffordable);

}  // namespace hypercover

#endif  // HYPERCOVER_COVER_H_
