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

#ifndef HYPERCOVER_GRAPH_H_
#define HYPERCOVER_GRAPH_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercover/hypergraph.h"

namespace hypercover {

using GraphEdge = std::pair<VertexId, VertexId>;

// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  // Throws VertexOutOfRange, InvalidGraph (self-loop), and DuplicateEdge for
  // a repeated pair under kReject; kMerge folds repeats silently.
  Graph(std::size_t num_vertices, std::span<const GraphEdge> edges,
        DuplicatePolicy policy = DuplicatePolicy::kReject,
        std::size_t* merged = nullptr);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<GraphEdge> Edges() const;

  // Connected with exactly n - 1 edges, n >= 1.
  bool IsTree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t num_edges_ = 0;
  std::vector<std::vector<VertexId>> adjacency_;
};

// The .gr format: "p edge <n> <m>" then m lines "e <u> <v>", 1-based. Lines
// starting with '#' or 'c' are comments.
struct ParsedGraph {
  Graph graph;
  std::size_t merged_edges = 0;
};

// Throws SyntaxError, VertexOutOfRange, InvalidGraph, DuplicateEdge.
ParsedGraph ParseGraph(std::string_view text,
                       DuplicatePolicy policy = DuplicatePolicy::kReject);
std::string WriteGraph(const Graph& g);

}  // namespace hypercover

#endif  // HYPERCOVER_GRAPH_H_
