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

#include "hypercover/generators.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "hypercover/error.h"

namespace hypercover {

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejects the low sliver that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

double Rng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Hypergraph GapFamily(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kNTooSmall,
                "gap family needs n >= 3, got " + std::to_string(n));
  }
  std::vector<VertexSet> edges;
  std::vector<std::string> labels;
  edges.push_back({0, 1});
  labels.push_back("N[v1]");
  VertexSet second = {0};
  for (VertexId v = 2; v < n; ++v) second.push_back(v);
  edges.push_back(std::move(second));
  labels.push_back("N(v2)");
  for (VertexId i = 2; i < n; ++i) {
    VertexSet e;
    for (VertexId v = 1; v < n; ++v) {
      if (v != i) e.push_back(v);
    }
    edges.push_back(std::move(e));
    labels.push_back("N(v" + std::to_string(i + 1) + ")");
  }
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Graph PruferDecode(std::size_t n, std::span<const VertexId> sequence) {
  if (n < 2 || sequence.size() != n - 2) {
    throw Error(ErrorCode::kParameterError,
                "a Prüfer sequence for n vertices has n - 2 >= 0 entries");
  }
  std::vector<std::size_t> degree(n, 1);
  for (VertexId a : sequence) {
    if (a >= n) {
      throw Error(ErrorCode::kParameterError,
                  "Prüfer entry " + std::to_string(a + 1) + " is out of range");
    }
    ++degree[a];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<GraphEdge> edges;
  edges.reserve(n - 1);
  for (VertexId a : sequence) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, a);
    if (--degree[a] == 1) leaves.push(a);
  }
  const VertexId u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph(n, edges);
}

std::vector<VertexId> PruferEncode(const Graph& tree) {
  const std::size_t n = tree.num_vertices();
  if (n < 2 || !tree.IsTree()) {
    throw Error(ErrorCode::kNotATree,
                "Prüfer encoding needs a tree on at least 2 vertices");
  }
  std::vector<std::size_t> degree(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<char> removed(n, 0);
  std::vector<VertexId> sequence;
  sequence.reserve(n - 2);
  while (sequence.size() + 2 < n) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (VertexId p : tree.neighbors(leaf)) {
      if (removed[p]) continue;
      sequence.push_back(p);
      if (--degree[p] == 1) leaves.push(p);
      break;
    }
  }
  return sequence;
}

Graph RandomTree(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw Error(ErrorCode::kParameterError, "a tree needs n >= 1");
  }
  if (n == 1) return Graph(1, {});
  Rng rng(seed);
  std::vector<VertexId> sequence(n - 2);
  for (VertexId& a : sequence) a = static_cast<VertexId>(rng.Below(n));
  return PruferDecode(n, sequence);
}

namespace {

// Number of nonempty subsets of size <= k, saturated at `cap`.
std::size_t CountSmallSubsets(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, 0)
  for (std::size_t i = 1; i <= k; ++i) {
    // C(n, i) = C(n, i - 1) * (n - i + 1) / i, saturating.
    const long double next =
        static_cast<long double>(binom) * static_cast<long double>(n - i + 1) /
        static_cast<long double>(i);
    if (next > static_cast<long double>(cap)) return cap;
    binom = static_cast<std::size_t>(next + 0.5L);
    total += binom;
    if (total >= cap) return cap;
  }
  return total;
}

VertexSet SampleSubset(Rng& rng, std::size_t n, std::size_t size,
                       std::vector<VertexId>& scratch) {
  VertexSet out;
  if (2 * size > n) {
    // Partial Fisher-Yates.
    scratch.resize(n);
    std::iota(scratch.begin(), scratch.end(), VertexId{0});
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(scratch[i], scratch[i + rng.Below(n - i)]);
    }
    out.assign(scratch.begin(), scratch.begin() + static_cast<long>(size));
  } else {
    while (out.size() < size) {
      const auto v = static_cast<VertexId>(rng.Below(n));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Hypergraph RandomHypergraph(std::size_t n, std::size_t m,
                            std::size_t max_edge_size, std::uint64_t seed,
                            bool cover_feasible) {
  if (n == 0 || max_edge_size == 0 || max_edge_size > n) {
    throw Error(ErrorCode::kParameterError,
                "random hypergraph needs n >= 1 and 1 <= max-size <= n");
  }
  if (CountSmallSubsets(n, max_edge_size, m + 1) < m) {
    throw Error(ErrorCode::kInfeasibleEdgeCount,
                "only " + std::to_string(CountSmallSubsets(n, max_edge_size,
                                                           m + 1)) +
                    " distinct edges of size <= " +
                    std::to_string(max_edge_size) + " exist");
  }
  const std::size_t blocks = (n + max_edge_size - 1) / max_edge_size;
  if (cover_feasible && m < blocks) {
    throw Error(ErrorCode::kParameterError,
                "covering all vertices needs m >= " + std::to_string(blocks));
  }

  Rng rng(seed);
  std::set<VertexSet> seen;
  std::vector<VertexSet> edges;
  edges.reserve(m);
  if (cover_feasible) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.Below(i)]);
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t begin = b * max_edge_size;
      const std::size_t end = std::min(n, begin + max_edge_size);
      VertexSet e(perm.begin() + static_cast<long>(begin),
                  perm.begin() + static_cast<long>(end));
      std::sort(e.begin(), e.end());
      seen.insert(e);
      edges.push_back(std::move(e));
    }
  }
  std::vector<VertexId> scratch;
  while (edges.size() < m) {
    const std::size_t size = 1 + rng.Below(max_edge_size);
    VertexSet e = SampleSubset(rng, n, size, scratch);
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Graph RandomGraph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::kParameterError,
                "edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<GraphEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.Unit() < edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace hypercover
