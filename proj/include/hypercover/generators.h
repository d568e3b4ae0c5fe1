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

#ifndef HYPERCOVER_GENERATORS_H_
#define HYPERCOVER_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hypercover/graph.h"
#include "hypercover/hypergraph.h"

namespace hypercover {

// Seeded generator with a platform-independent output stream: mt19937_64 is
// fully specified by the standard, and the range reductions below avoid the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 1).
  double Unit();

 private:
  std::mt19937_64 engine_;
};

// Clique on v2..vn, plus v1 joined to v2. Edges, in order: N[v1], N(v2),
// N(v3), ..., N(vn). Throws NTooSmall for n < 3.
Hypergraph GapFamily(std::size_t n);

// Uniform labelled tree from a random Prüfer sequence. Throws ParameterError
// for n = 0.
Graph RandomTree(std::size_t n, std::uint64_t seed);

// sequence has n - 2 entries in [0, n). Throws ParameterError.
Graph PruferDecode(std::size_t n, std::span<const VertexId> sequence);
// Throws NotATree; n >= 2.
std::vector<VertexId> PruferEncode(const Graph& tree);

// m distinct nonempty edges of size at most max_edge_size. With
// cover_feasible every vertex lands in some edge; that needs
// m >= ceil(n / max_edge_size). Throws ParameterError, InfeasibleEdgeCount.
Hypergraph RandomHypergraph(std::size_t n, std::size_t m,
                            std::size_t max_edge_size, std::uint64_t seed,
                            bool cover_feasible = false);

// G(n, p). Throws ParameterError for p outside [0, 1].
Graph RandomGraph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace hypercover

#endif  // HYPERCOVER_GENERATORS_H_
