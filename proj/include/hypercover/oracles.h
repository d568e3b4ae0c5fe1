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

// Exponential exact solvers used to certify the greedy bounds on small
// instances. Candidates are enumerated by size and, within a size, in
// lexicographic order, so the witness is the lexicographically least optimum.

#ifndef HYPERCOVER_ORACLES_H_
#define HYPERCOVER_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypercover/graph.h"
#include "hypercover/hypergraph.h"

namespace hypercover {

enum class Problem {
  kMinEdgeCover,
  kMaxIndependentSet,
  kMinTransversal,
  kMaxMatching,
  kMinDominating,
  kMinTotalDominating,
  kMaxTwoPacking,
  kMaxOpenTwoPacking,
};

std::string_view ProblemName(Problem p);
std::optional<Problem> ParseProblem(std::string_view name);
bool IsGraphProblem(Problem p);

struct ExactResult {
  Problem problem = Problem::kMinEdgeCover;
  // False when no feasible set exists (a cover with an uncoverable vertex, a
  // total dominating set with an isolated vertex). value/witness are then
  // empty.
  bool feasible = true;
  std::size_t value = 0;
  std::vector<std::uint32_t> witness;  // edge or vertex ids, ascending
  std::uint64_t explored = 0;          // complete candidates examined
};

inline constexpr std::size_t kHypergraphOracleCap = 16;  // vertices
inline constexpr std::size_t kEdgeOracleCap = 64;        // edges
inline constexpr std::size_t kGraphOracleCap = 18;       // vertices

// Hypergraph problems only. Throws TooLarge, ParameterError.
ExactResult Exact(const Hypergraph& h, Problem problem);
// Graph problems only. Throws TooLarge, ParameterError.
ExactResult Exact(const Graph& g, Problem problem);

}  // namespace hypercover

#endif  // HYPERCOVER_ORACLES_H_
