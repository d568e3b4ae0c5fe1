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

#ifndef HYPERCOVER_HYPERGRAPH_H_
#define HYPERCOVER_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypercover {

// Internal ids are 0-based. Files, JSON and the C API use 1-based ids.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Always sorted ascending without repeats.
using VertexSet = std::vector<VertexId>;

enum class DuplicatePolicy {
  kReject,  // a second copy of an edge is a DuplicateEdge error
  kMerge,   // copies collapse into the first one; labels are joined with ','
};

struct BuildReport {
  std::size_t merged_edges = 0;       // duplicate edges folded away
  std::size_t repeated_vertices = 0;  // "e 1 1" style repeats collapsed
};

// A hypergraph H = (V, E) with V = {0..n-1} and E a list of pairwise
// distinct, nonempty vertex sets. Edge order is the canonical id order.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Vertices of every edge are sorted and deduplicated. Throws EmptyEdge,
  // VertexOutOfRange, or DuplicateEdge (kReject only). `labels` is either
  // empty or has one entry per input edge.
  Hypergraph(std::size_t num_vertices, std::vector<VertexSet> edges,
             std::vector<std::string> labels = {},
             DuplicatePolicy policy = DuplicatePolicy::kReject,
             BuildReport* report = nullptr);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  // Sum of edge sizes.
  std::size_t total_size() const { return total_size_; }

  const VertexSet& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<VertexSet>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the edge carries no label.
  const std::string& label(EdgeId e) const;

  // Ids of the edges containing v, ascending.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return incidence_[v];
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::size_t total_size_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// The restriction H[S]: all distinct nonempty traces e ∩ S. Each trace keeps
// the smallest base edge id that produces it, so traces are listed in
// ascending representative order.
struct SubHypergraph {
  const Hypergraph* base = nullptr;
  VertexSet vertices;
  std::vector<VertexSet> traces;  // in base vertex ids
  std::vector<EdgeId> representative;

  bool Contains(VertexId v) const;
  // Relabels vertices[i] -> i. Trace order and the labels of the
  // representative edges are kept.
  Hypergraph ToHypergraph() const;
};

// Throws EmptySubset for S = ∅ and VertexOutOfRange for ids >= n. The subset
// need not be sorted.
SubHypergraph Restrict(const Hypergraph& h, std::span<const VertexId> subset);

// V minus the removed vertices and every vertex of every edge meeting them.
VertexSet StrongSubset(const Hypergraph& h, std::span<const VertexId> removed);

// Restriction to StrongSubset(h, removed); nullopt when nothing survives.
std::optional<SubHypergraph> StrongRemove(const Hypergraph& h,
                                          std::span<const VertexId> removed);

// Indices of the sets not properly contained in another set of the list, in
// ascending order. The sets must be pairwise distinct.
std::vector<std::size_t> MaximalSets(std::span<const VertexSet> sets);
std::vector<EdgeId> MaximalEdges(const Hypergraph& h);
std::vector<std::size_t> MaximalTraces(const SubHypergraph& sub);

std::size_t Degree(const Hypergraph& h, VertexId x);
std::size_t StrongDegree(const Hypergraph& h, VertexId x);
std::vector<std::size_t> StrongDegrees(const Hypergraph& h);
// x must belong to sub.vertices.
std::size_t Degree(const SubHypergraph& sub, VertexId x);
std::size_t StrongDegree(const SubHypergraph& sub, VertexId x);

// H^d: vertex i of the dual is edge i of h; the dual edge of vertex v is the
// set of edges containing v. Twin vertices produce one merged dual edge whose
// label lists every generator ("v1,v4"). Throws IsolatedVertex.
Hypergraph Dual(const Hypergraph& h);

enum class SetKind { kEdgeCover, kIndependentSet, kTransversal, kMatching };

std::string_view SetKindName(SetKind kind);
std::optional<SetKind> ParseSetKind(std::string_view name);

// Edge ids for kEdgeCover/kMatching, vertex ids otherwise; repeats are
// ignored. Throws IdOutOfRange.
bool Check(const Hypergraph& h, SetKind kind,
           std::span<const std::uint32_t> ids);

struct ShatterWitness {
  VertexSet set;
  bool shattered = false;
  // Lexicographically least subset of `set` that is not a trace.
  std::optional<VertexSet> missing_subset;
};

struct VcResult {
  std::size_t value = 0;
  // True when E = ∅: no set, not even ∅, is shattered. value is then 0.
  bool none_shattered = false;
  // A largest shattered set, lexicographically least among those.
  ShatterWitness witness;
};

inline constexpr std::size_t kDefaultVcVertexCap = 20;

ShatterWitness CheckShattered(const Hypergraph& h,
                              std::span<const VertexId> set);

// Exhaustive search; throws TooLarge when n exceeds max_vertices.
VcResult VcDimension(const Hypergraph& h,
                     std::size_t max_vertices = kDefaultVcVertexCap);

}  // namespace hypercover

#endif  // HYPERCOVER_HYPERGRAPH_H_
