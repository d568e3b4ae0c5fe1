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

#include "hypercover/hypergraph.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "hypercover/error.h"

namespace hypercover {

namespace {

const std::string& EmptyLabel() {
  static const std::string* const kEmpty = new std::string();
  return *kEmpty;
}

void AppendLabel(std::string& into, const std::string& extra) {
  if (extra.empty()) return;
  if (into.empty()) {
    into = extra;
  } else {
    into += ',';
    into += extra;
  }
}

void CheckVertex(std::size_t n, VertexId v) {
  if (v >= n) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v + 1) + " is outside 1.." +
                    std::to_string(n));
  }
}

VertexSet Normalize(std::size_t n, std::span<const VertexId> ids) {
  VertexSet out(ids.begin(), ids.end());
  for (VertexId v : out) CheckVertex(n, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<VertexSet> edges,
                       std::vector<std::string> labels, DuplicatePolicy policy,
                       BuildReport* report)
    : num_vertices_(num_vertices) {
  if (!labels.empty() && labels.size() != edges.size()) {
    throw Error(ErrorCode::kParameterError,
                "label count does not match edge count");
  }
  BuildReport local;
  std::map<VertexSet, EdgeId> seen;
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet& e = edges[i];
    if (e.empty()) {
      throw Error(ErrorCode::kEmptyEdge,
                  "edge " + std::to_string(i + 1) + " is empty");
    }
    std::sort(e.begin(), e.end());
    const auto last = std::unique(e.begin(), e.end());
    local.repeated_vertices += static_cast<std::size_t>(e.end() - last);
    e.erase(last, e.end());
    CheckVertex(num_vertices_, e.back());

    auto [it, inserted] = seen.emplace(e, static_cast<EdgeId>(edges_.size()));
    if (!inserted) {
      if (policy == DuplicatePolicy::kReject) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge " + std::to_string(i + 1) + " repeats edge " +
                        std::to_string(it->second + 1));
      }
      ++local.merged_edges;
      if (!labels.empty()) AppendLabel(labels_[it->second], labels[i]);
      continue;
    }
    total_size_ += e.size();
    edges_.push_back(std::move(e));
    if (!labels.empty()) labels_.push_back(std::move(labels[i]));
  }
  if (std::all_of(labels_.begin(), labels_.end(),
                  [](const std::string& s) { return s.empty(); })) {
    labels_.clear();
  }

  incidence_.assign(num_vertices_, {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    for (VertexId v : edges_[e]) incidence_[v].push_back(e);
  }
  if (report != nullptr) *report = local;
}

const std::string& Hypergraph::label(EdgeId e) const {
  return labels_.empty() ? EmptyLabel() : labels_[e];
}

bool SubHypergraph::Contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Hypergraph SubHypergraph::ToHypergraph() const {
  std::vector<VertexSet> edges;
  edges.reserve(traces.size());
  for (const VertexSet& t : traces) {
    VertexSet relabeled;
    relabeled.reserve(t.size());
    for (VertexId v : t) {
      relabeled.push_back(static_cast<VertexId>(
          std::lower_bound(vertices.begin(), vertices.end(), v) -
          vertices.begin()));
    }
    edges.push_back(std::move(relabeled));
  }
  std::vector<std::string> labels;
  if (base != nullptr && base->has_labels()) {
    for (EdgeId rep : representative) labels.push_back(base->label(rep));
  }
  return Hypergraph(vertices.size(), std::move(edges), std::move(labels));
}

SubHypergraph Restrict(const Hypergraph& h, std::span<const VertexId> subset) {
  SubHypergraph sub;
  sub.base = &h;
  sub.vertices = Normalize(h.num_vertices(), subset);
  if (sub.vertices.empty()) {
    throw Error(ErrorCode::kEmptySubset, "restriction to the empty set");
  }
  std::vector<char> inside(h.num_vertices(), 0);
  for (VertexId v : sub.vertices) inside[v] = 1;

  std::map<VertexSet, std::size_t> index;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    VertexSet trace;
    for (VertexId v : h.edge(e)) {
      if (inside[v]) trace.push_back(v);
    }
    if (trace.empty()) continue;
    auto [it, inserted] = index.emplace(trace, sub.traces.size());
    if (inserted) {
      sub.traces.push_back(std::move(trace));
      sub.representative.push_back(e);
    }
  }
  return sub;
}

VertexSet StrongSubset(const Hypergraph& h, std::span<const VertexId> removed) {
  std::vector<char> gone(h.num_vertices(), 0);
  for (VertexId r : removed) {
    CheckVertex(h.num_vertices(), r);
    gone[r] = 1;
    for (EdgeId e : h.incident_edges(r)) {
      for (VertexId v : h.edge(e)) gone[v] = 1;
    }
  }
  VertexSet survivors;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (!gone[v]) survivors.push_back(v);
  }
  return survivors;
}

std::optional<SubHypergraph> StrongRemove(const Hypergraph& h,
                                          std::span<const VertexId> removed) {
  VertexSet survivors = StrongSubset(h, removed);
  if (survivors.empty()) return std::nullopt;
  return Restrict(h, survivors);
}

std::vector<std::size_t> MaximalSets(std::span<const VertexSet> sets) {
  VertexId max_vertex = 0;
  for (const VertexSet& s : sets) {
    if (!s.empty()) max_vertex = std::max(max_vertex, s.back());
  }
  std::vector<std::vector<std::size_t>> containing(
      sets.empty() ? 0 : std::size_t{max_vertex} + 1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (VertexId v : sets[i]) containing[v].push_back(i);
  }

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet& s = sets[i];
    if (s.empty()) continue;
    // A proper superset must contain every vertex of s, so scanning the
    // shortest membership list suffices.
    VertexId pivot = s.front();
    for (VertexId v : s) {
      if (containing[v].size() < containing[pivot].size()) pivot = v;
    }
    bool contained = false;
    for (std::size_t j : containing[pivot]) {
      if (j == i || sets[j].size() <= s.size()) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), s.begin(), s.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(i);
  }
  return maximal;
}

std::vector<EdgeId> MaximalEdges(const Hypergraph& h) {
  std::vector<EdgeId> out;
  for (std::size_t i : MaximalSets(h.edges())) {
    out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

std::vector<std::size_t> MaximalTraces(const SubHypergraph& sub) {
  return MaximalSets(sub.traces);
}

std::size_t Degree(const Hypergraph& h, VertexId x) {
  CheckVertex(h.num_vertices(), x);
  return h.incident_edges(x).size();
}

std::size_t StrongDegree(const Hypergraph& h, VertexId x) {
  CheckVertex(h.num_vertices(), x);
  return StrongDegrees(h)[x];
}

std::vector<std::size_t> StrongDegrees(const Hypergraph& h) {
  std::vector<std::size_t> degrees(h.num_vertices(), 0);
  for (EdgeId e : MaximalEdges(h)) {
    for (VertexId v : h.edge(e)) ++degrees[v];
  }
  return degrees;
}

namespace {

void CheckMember(const SubHypergraph& sub, VertexId x) {
  if (!sub.Contains(x)) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(x + 1) +
                    " is not in the restricted vertex set");
  }
}

bool TraceHas(const VertexSet& t, VertexId x) {
  return std::binary_search(t.begin(), t.end(), x);
}

}  // namespace

std::size_t Degree(const SubHypergraph& sub, VertexId x) {
  CheckMember(sub, x);
  return static_cast<std::size_t>(
      std::count_if(sub.traces.begin(), sub.traces.end(),
                    [x](const VertexSet& t) { return TraceHas(t, x); }));
}

std::size_t StrongDegree(const SubHypergraph& sub, VertexId x) {
  CheckMember(sub, x);
  std::size_t count = 0;
  for (std::size_t i : MaximalTraces(sub)) {
    if (TraceHas(sub.traces[i], x)) ++count;
  }
  return count;
}

Hypergraph Dual(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  std::vector<std::string> labels;
  edges.reserve(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::span<const EdgeId> inc = h.incident_edges(v);
    if (inc.empty()) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "vertex " + std::to_string(v + 1) +
                      " lies in no edge; its dual edge would be empty");
    }
    edges.emplace_back(inc.begin(), inc.end());
    labels.push_back("v" + std::to_string(v + 1));
  }
  return Hypergraph(h.num_edges(), std::move(edges), std::move(labels),
                    DuplicatePolicy::kMerge);
}

std::string_view SetKindName(SetKind kind) {
  switch (kind) {
    case SetKind::kEdgeCover:
      return "edge-cover";
    case SetKind::kIndependentSet:
      return "independent-set";
    case SetKind::kTransversal:
      return "transversal";
    case SetKind::kMatching:
      return "matching";
  }
  return "";
}

std::optional<SetKind> ParseSetKind(std::string_view name) {
  for (SetKind k : {SetKind::kEdgeCover, SetKind::kIndependentSet,
                    SetKind::kTransversal, SetKind::kMatching}) {
    if (SetKindName(k) == name) return k;
  }
  return std::nullopt;
}

bool Check(const Hypergraph& h, SetKind kind,
           std::span<const std::uint32_t> ids) {
  const bool edge_ids =
      kind == SetKind::kEdgeCover || kind == SetKind::kMatching;
  const std::size_t limit = edge_ids ? h.num_edges() : h.num_vertices();
  std::vector<char> chosen(limit, 0);
  for (std::uint32_t id : ids) {
    if (id >= limit) {
      throw Error(ErrorCode::kIdOutOfRange,
                  std::string(edge_ids ? "edge" : "vertex") + " id " +
                      std::to_string(id + 1) + " is outside 1.." +
                      std::to_string(limit));
    }
    chosen[id] = 1;
  }

  switch (kind) {
    case SetKind::kEdgeCover: {
      std::vector<char> covered(h.num_vertices(), 0);
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (!chosen[e]) continue;
        for (VertexId v : h.edge(e)) covered[v] = 1;
      }
      return std::all_of(covered.begin(), covered.end(),
                         [](char c) { return c != 0; });
    }
    case SetKind::kMatching: {
      std::vector<char> used(h.num_vertices(), 0);
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (!chosen[e]) continue;
        for (VertexId v : h.edge(e)) {
          if (used[v]) return false;
          used[v] = 1;
        }
      }
      return true;
    }
    case SetKind::kIndependentSet:
      for (const VertexSet& e : h.edges()) {
        int hits = 0;
        for (VertexId v : e) hits += chosen[v];
        if (hits > 1) return false;
      }
      return true;
    case SetKind::kTransversal:
      for (const VertexSet& e : h.edges()) {
        if (std::none_of(e.begin(), e.end(),
                         [&](VertexId v) { return chosen[v] != 0; })) {
          return false;
        }
      }
      return true;
  }
  return false;
}

}  // namespace hypercover
