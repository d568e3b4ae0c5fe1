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

#ifndef HYPERCOVER_DOMINATION_H_
#define HYPERCOVER_DOMINATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hypercover/graph.h"
#include "hypercover/hypergraph.h"

namespace hypercover {

enum class NeighborhoodKind { kClosed, kOpen };

std::string_view NeighborhoodKindName(NeighborhoodKind kind);
std::optional<NeighborhoodKind> ParseNeighborhoodKind(std::string_view name);

struct NeighborhoodHypergraph {
  Hypergraph hypergraph;
  // edge_of[v] is the id of the edge N[v] (closed) or N(v) (open).
  std::vector<EdgeId> edge_of;
};

// One edge per vertex, N[v] or N(v), with repeated neighborhoods merged into
// the first; labels read "N[v3]" / "N(v3)", joined by ',' after a merge.
// Throws IsolatedVertexForOpen when an open neighborhood would be empty.
NeighborhoodHypergraph BuildNeighborhoodHypergraph(const Graph& g,
                                                   NeighborhoodKind kind);

enum class GraphSetKind {
  kDominating,
  kTotalDominating,
  kTwoPacking,
  kOpenTwoPacking,
};

std::string_view GraphSetKindName(GraphSetKind kind);
std::optional<GraphSetKind> ParseGraphSetKind(std::string_view name);

// Direct definitions on the graph. Throws VertexOutOfRange.
bool CheckGraph(const Graph& g, GraphSetKind kind,
                std::span<const VertexId> ids);

struct DominationCrossCheck {
  std::size_t cover_size = 0;        // greedy cover on the neighborhood
  std::size_t independent_size = 0;  // hypergraph, generic route
  bool agrees = false;               // both equal |D| = |P|
};

struct DominationCertificate {
  NeighborhoodKind kind = NeighborhoodKind::kClosed;
  VertexSet dominating;  // ascending
  VertexSet packing;     // ascending
  bool equal = false;
  bool dominating_valid = false;
  bool packing_valid = false;
  std::optional<DominationCrossCheck> cross_check;
};

// Linear leaf-first solver for trees. Vertices are pruned smallest leaf
// first; when a pruned vertex is not yet (totally) dominated it joins the
// packing and its remaining neighbour joins the dominating set. The last
// vertex has no remaining neighbour and takes its smallest-id closed (open)
// neighbour instead.
//
// Throws NotATree, SingleVertexOpen. A failed validity check or |D| != |P|
// is an Internal error.
DominationCertificate TreeDomination(const Graph& tree, NeighborhoodKind kind,
                                     bool cross_check = false);

struct AuditReport {
  std::size_t samples = 0;
  std::size_t closed_checks = 0;
  std::size_t open_checks = 0;
  bool open_skipped = false;  // the graph has an isolated vertex
  std::size_t equivalence_violations = 0;
  std::size_t degree_bound_violations = 0;
  std::size_t leaf_checks = 0;  // trees only
  std::size_t leaf_violations = 0;

  bool passed() const {
    return equivalence_violations == 0 && degree_bound_violations == 0 &&
           leaf_violations == 0;
  }
};

// Samples random vertex subsets S and compares both sides of:
//   S dominating           <=> {N[v] : v in S} covers the closed hypergraph
//   S 2-packing            <=> S independent in the closed hypergraph
//   S total dominating     <=> {N(v) : v in S} covers the open hypergraph
//   S open 2-packing       <=> S independent in the open hypergraph
// plus strong degree <= deg + 1 (closed), <= deg (open), and strong degree 1
// at the leaves of a tree.
AuditReport NeighborhoodEquivalenceAudit(const Graph& g, std::size_t trials,
                                         std::uint64_t seed);

}  // namespace hypercover

#endif  // HYPERCOVER_DOMINATION_H_
