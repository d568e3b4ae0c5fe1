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

#include "hypercover/domination.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>

#include "hypercover/cover.h"
#include "hypercover/error.h"
#include "hypercover/generators.h"

namespace hypercover {

namespace {

constexpr VertexId kNoVertex = ~VertexId{0};

VertexSet Neighborhood(const Graph& g, VertexId v, NeighborhoodKind kind) {
  const std::span<const VertexId> adj = g.neighbors(v);
  VertexSet out(adj.begin(), adj.end());
  if (kind == NeighborhoodKind::kClosed) {
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  }
  return out;
}

}  // namespace

std::string_view NeighborhoodKindName(NeighborhoodKind kind) {
  return kind == NeighborhoodKind::kClosed ? "closed" : "open";
}

std::optional<NeighborhoodKind> ParseNeighborhoodKind(std::string_view name) {
  if (name == "closed") return NeighborhoodKind::kClosed;
  if (name == "open") return NeighborhoodKind::kOpen;
  return std::nullopt;
}

NeighborhoodHypergraph BuildNeighborhoodHypergraph(const Graph& g,
                                                   NeighborhoodKind kind) {
  const bool closed = kind == NeighborhoodKind::kClosed;
  NeighborhoodHypergraph result;
  result.edge_of.resize(g.num_vertices());
  std::map<VertexSet, EdgeId> index;
  std::vector<VertexSet> edges;
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!closed && g.degree(v) == 0) {
      throw Error(ErrorCode::kIsolatedVertexForOpen,
                  "vertex " + std::to_string(v + 1) +
                      " has no neighbours; N(v) would be empty");
    }
    const std::string label = (closed ? "N[v" : "N(v") + std::to_string(v + 1) +
                              (closed ? "]" : ")");
    VertexSet nb = Neighborhood(g, v, kind);
    auto [it, inserted] = index.emplace(nb, static_cast<EdgeId>(edges.size()));
    if (inserted) {
      edges.push_back(std::move(nb));
      labels.push_back(label);
    } else {
      labels[it->second] += "," + label;
    }
    result.edge_of[v] = it->second;
  }
  result.hypergraph =
      Hypergraph(g.num_vertices(), std::move(edges), std::move(labels));
  return result;
}

std::string_view GraphSetKindName(GraphSetKind kind) {
  switch (kind) {
    case GraphSetKind::kDominating:
      return "dominating";
    case GraphSetKind::kTotalDominating:
      return "total-dominating";
    case GraphSetKind::kTwoPacking:
      return "2-packing";
    case GraphSetKind::kOpenTwoPacking:
      return "open-2-packing";
  }
  return "";
}

std::optional<GraphSetKind> ParseGraphSetKind(std::string_view name) {
  for (GraphSetKind k :
       {GraphSetKind::kDominating, GraphSetKind::kTotalDominating,
        GraphSetKind::kTwoPacking, GraphSetKind::kOpenTwoPacking}) {
    if (GraphSetKindName(k) == name) return k;
  }
  return std::nullopt;
}

bool CheckGraph(const Graph& g, GraphSetKind kind,
                std::span<const VertexId> ids) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_set(n, 0);
  for (VertexId v : ids) {
    if (v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v + 1) + " is outside 1.." +
                      std::to_string(n));
    }
    in_set[v] = 1;
  }
  const bool closed =
      kind == GraphSetKind::kDominating || kind == GraphSetKind::kTwoPacking;

  if (kind == GraphSetKind::kDominating ||
      kind == GraphSetKind::kTotalDominating) {
    for (VertexId x = 0; x < n; ++x) {
      bool hit = closed && in_set[x];
      for (VertexId y : g.neighbors(x)) hit = hit || in_set[y];
      if (!hit) return false;
    }
    return true;
  }
  // Packings: no vertex may lie in two chosen neighbourhoods.
  std::vector<char> claimed(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (!in_set[s]) continue;
    if (closed) {
      if (claimed[s]) return false;
      claimed[s] = 1;
    }
    for (VertexId y : g.neighbors(s)) {
      if (claimed[y]) return false;
      claimed[y] = 1;
    }
  }
  return true;
}

DominationCertificate TreeDomination(const Graph& tree, NeighborhoodKind kind,
                                     bool cross_check) {
  if (!tree.IsTree()) {
    throw Error(ErrorCode::kNotATree,
                "input with " + std::to_string(tree.num_vertices()) +
                    " vertices and " + std::to_string(tree.num_edges()) +
                    " edges is not a tree");
  }
  const std::size_t n = tree.num_vertices();
  const bool closed = kind == NeighborhoodKind::kClosed;
  if (!closed && n == 1) {
    throw Error(ErrorCode::kSingleVertexOpen,
                "total domination is undefined on a single vertex");
  }

  // Prune smallest leaf first; parent[v] is v's one remaining neighbour at
  // the moment it is pruned.
  std::vector<VertexId> order;
  std::vector<VertexId> parent(n, kNoVertex);
  order.reserve(n);
  {
    std::vector<std::size_t> remaining(n);
    std::vector<char> pruned(n, 0);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v) {
      remaining[v] = tree.degree(v);
      if (remaining[v] <= 1) leaves.push(v);
    }
    while (!leaves.empty()) {
      const VertexId v = leaves.top();
      leaves.pop();
      pruned[v] = 1;
      order.push_back(v);
      for (VertexId p : tree.neighbors(v)) {
        if (pruned[p]) continue;
        parent[v] = p;
        if (--remaining[p] == 1) leaves.push(p);
        break;
      }
    }
  }

  DominationCertificate cert;
  cert.kind = kind;
  // covered[v]: v has a closed (open) neighbour in the dominating set.
  std::vector<char> covered(n, 0);
  for (VertexId v : order) {
    if (covered[v]) continue;
    VertexId d = parent[v];
    if (d == kNoVertex) {
      const std::span<const VertexId> adj = tree.neighbors(v);
      d = closed ? (adj.empty() ? v : std::min(v, adj.front())) : adj.front();
    }
    cert.packing.push_back(v);
    cert.dominating.push_back(d);
    if (closed) covered[d] = 1;
    for (VertexId u : tree.neighbors(d)) covered[u] = 1;
  }
  std::sort(cert.packing.begin(), cert.packing.end());
  std::sort(cert.dominating.begin(), cert.dominating.end());

  cert.equal = cert.dominating.size() == cert.packing.size();
  cert.dominating_valid = CheckGraph(
      tree, closed ? GraphSetKind::kDominating : GraphSetKind::kTotalDominating,
      cert.dominating);
  cert.packing_valid = CheckGraph(
      tree, closed ? GraphSetKind::kTwoPacking : GraphSetKind::kOpenTwoPacking,
      cert.packing);
  if (!cert.equal || !cert.dominating_valid || !cert.packing_valid) {
    throw Error(ErrorCode::kInternal, "tree domination certificate failed");
  }

  if (cross_check) {
    const NeighborhoodHypergraph nh = BuildNeighborhoodHypergraph(tree, kind);
    const CoverCertificate generic =
        GreedyCover(nh.hypergraph, MightyBound::kSkip);
    DominationCrossCheck cc;
    cc.cover_size = generic.cover.size();
    cc.independent_size = generic.independent.size();
    cc.agrees = cc.cover_size == cert.dominating.size() &&
                cc.independent_size == cert.packing.size();
    cert.cross_check = cc;
  }
  return cert;
}

AuditReport NeighborhoodEquivalenceAudit(const Graph& g, std::size_t trials,
                                         std::uint64_t seed) {
  AuditReport report;
  report.samples = trials;
  const std::size_t n = g.num_vertices();

  const NeighborhoodHypergraph closed =
      BuildNeighborhoodHypergraph(g, NeighborhoodKind::kClosed);
  std::optional<NeighborhoodHypergraph> open;
  bool has_isolated = false;
  for (VertexId v = 0; v < n; ++v) has_isolated = has_isolated || g.degree(v) == 0;
  if (has_isolated) {
    report.open_skipped = true;
  } else {
    open = BuildNeighborhoodHypergraph(g, NeighborhoodKind::kOpen);
  }

  const std::vector<std::size_t> strong_closed =
      StrongDegrees(closed.hypergraph);
  std::vector<std::size_t> strong_open;
  if (open.has_value()) strong_open = StrongDegrees(open->hypergraph);
  const bool is_tree = n >= 2 && g.IsTree();
  for (VertexId x = 0; x < n; ++x) {
    if (strong_closed[x] > g.degree(x) + 1) ++report.degree_bound_violations;
    if (open.has_value() && strong_open[x] > g.degree(x)) {
      ++report.degree_bound_violations;
    }
    if (is_tree && g.degree(x) == 1) {
      ++report.leaf_checks;
      if (strong_closed[x] != 1) ++report.leaf_violations;
      if (open.has_value() && strong_open[x] != 1) ++report.leaf_violations;
    }
  }

  Rng rng(seed);
  std::vector<VertexId> subset;
  std::vector<EdgeId> generators;
  for (std::size_t t = 0; t < trials; ++t) {
    const double density = rng.Unit();
    subset.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (rng.Unit() < density) subset.push_back(v);
    }
    const auto audit = [&](const NeighborhoodHypergraph& nh,
                           GraphSetKind dominating, GraphSetKind packing) {
      generators.clear();
      for (VertexId v : subset) generators.push_back(nh.edge_of[v]);
      if (CheckGraph(g, dominating, subset) !=
          Check(nh.hypergraph, SetKind::kEdgeCover, generators)) {
        ++report.equivalence_violations;
      }
      if (CheckGraph(g, packing, subset) !=
          Check(nh.hypergraph, SetKind::kIndependentSet, subset)) {
        ++report.equivalence_violations;
      }
    };
    audit(closed, GraphSetKind::kDominating, GraphSetKind::kTwoPacking);
    report.closed_checks += 2;
    if (open.has_value()) {
      audit(*open, GraphSetKind::kTotalDominating,
            GraphSetKind::kOpenTwoPacking);
      report.open_checks += 2;
    }
  }
  return report;
}

}  // namespace hypercover
