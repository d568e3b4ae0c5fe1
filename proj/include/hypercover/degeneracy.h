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

#ifndef HYPERCOVER_DEGENERACY_H_
#define HYPERCOVER_DEGENERACY_H_

#include <cstddef>
#include <vector>

#include "hypercover/hypergraph.h"

namespace hypercover {

// A peeling sequence x_1..x_n. step_values[i] is the minimum degree of the
// restriction to V - {x_1..x_i} (0-based i), attained by order[i].
struct EliminationOrder {
  std::vector<VertexId> order;
  std::vector<std::size_t> step_values;
  std::size_t value = 0;  // max of step_values, 0 for n = 0
};

// Strong degeneracy: repeatedly deletes a vertex of minimum strong degree in
// the current restriction (ties to the smallest id). value is the largest
// minimum strong degree over all induced subhypergraphs.
EliminationOrder StrongDegeneracy(const Hypergraph& h);

// Same peeling with the plain degree, the number of distinct traces through
// a vertex.
EliminationOrder Degeneracy(const Hypergraph& h);

struct BruteForceValue {
  std::size_t value = 0;
  // The vertex set attaining the value: the subset S for the degeneracy
  // searches, the strong subset W for the mighty degeneracy.
  VertexSet witness;
};

inline constexpr std::size_t kStrongBruteForceCap = 12;
inline constexpr std::size_t kMightyBruteForceCap = 14;

// max over nonempty S of min strong degree in H[S]. Throws TooLarge.
BruteForceValue StrongDegeneracyBruteForce(
    const Hypergraph& h, std::size_t max_vertices = kStrongBruteForceCap);

// max over nonempty S of min plain degree in H[S]. Throws TooLarge.
BruteForceValue DegeneracyBruteForce(
    const Hypergraph& h, std::size_t max_vertices = kStrongBruteForceCap);

// Mighty degeneracy: max over every R with a nonempty strong subset W of the
// minimum strong degree in H[W]. Throws TooLarge.
BruteForceValue MightyDegeneracyBruteForce(
    const Hypergraph& h, std::size_t max_vertices = kMightyBruteForceCap);

}  // namespace hypercover

#endif  // HYPERCOVER_DEGENERACY_H_
