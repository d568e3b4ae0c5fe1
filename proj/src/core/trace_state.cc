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

#include "trace_state.h"

#include <algorithm>

#include "hypercover/error.h"

namespace hypercover::internal {

std::size_t TraceState::SetHash::operator()(const VertexSet& s) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (VertexId v : s) {
    h ^= v;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

TraceState::TraceState(const Hypergraph& h)
    : containing_(h.num_vertices()),
      strong_(h.num_vertices(), 0),
      plain_(h.num_vertices(), 0),
      alive_(h.num_vertices(), 1),
      num_alive_(h.num_vertices()) {
  traces_.resize(h.num_edges());
  index_.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    traces_[e].vertices = h.edge(e);
    traces_[e].representative = e;
    index_.emplace(h.edge(e), e);
    for (VertexId v : h.edge(e)) {
      containing_[v].push_back(e);
      ++plain_[v];
    }
  }
  for (EdgeId e : MaximalEdges(h)) {
    traces_[e].maximal = true;
    for (VertexId v : h.edge(e)) ++strong_[v];
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    by_strong_.emplace(strong_[v], v);
    by_plain_.emplace(plain_[v], v);
  }
}

std::vector<std::size_t> TraceState::MaximalTracesContaining(
    VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t id : containing_[v]) {
    if (traces_[id].live && traces_[id].maximal) out.push_back(id);
  }
  std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
    return traces_[a].representative < traces_[b].representative;
  });
  return out;
}

bool TraceState::HasProperSuperset(std::size_t id) const {
  const VertexSet& s = traces_[id].vertices;
  VertexId pivot = s.front();
  for (VertexId v : s) {
    if (containing_[v].size() < containing_[pivot].size()) pivot = v;
  }
  for (std::size_t other : containing_[pivot]) {
    const Trace& t = traces_[other];
    if (other == id || !t.live || t.vertices.size() <= s.size()) continue;
    if (std::includes(t.vertices.begin(), t.vertices.end(), s.begin(),
                      s.end())) {
      return true;
    }
  }
  return false;
}

void TraceState::DecrementStrong(VertexId v) {
  by_strong_.erase({strong_[v], v});
  --strong_[v];
  by_strong_.emplace(strong_[v], v);
}

void TraceState::DecrementPlain(VertexId v) {
  by_plain_.erase({plain_[v], v});
  --plain_[v];
  by_plain_.emplace(plain_[v], v);
}

void TraceState::Remove(VertexId x) {
  if (!alive_[x]) {
    throw Error(ErrorCode::kInternal,
                "vertex " + std::to_string(x + 1) + " removed twice");
  }
  by_strong_.erase({strong_[x], x});
  by_plain_.erase({plain_[x], x});
  alive_[x] = 0;
  --num_alive_;

  std::vector<std::size_t> recheck;
  for (std::size_t id : containing_[x]) {
    Trace& t = traces_[id];
    if (!t.live) continue;
    index_.erase(t.vertices);
    t.vertices.erase(std::lower_bound(t.vertices.begin(), t.vertices.end(), x));
    if (t.vertices.empty()) {
      t.live = false;
      continue;
    }
    auto [it, inserted] = index_.emplace(t.vertices, id);
    if (!inserted) {
      // The existing copy avoids x and sits strictly inside the old trace, so
      // it is not maximal. It folds into this one.
      Trace& twin = traces_[it->second];
      if (twin.maximal) {
        throw Error(ErrorCode::kInternal, "merged trace was maximal");
      }
      twin.live = false;
      t.representative = std::min(t.representative, twin.representative);
      it->second = id;
      for (VertexId v : t.vertices) DecrementPlain(v);
    }
    if (t.maximal) recheck.push_back(id);
  }
  containing_[x].clear();
  containing_[x].shrink_to_fit();

  for (std::size_t id : recheck) {
    if (!HasProperSuperset(id)) continue;
    traces_[id].maximal = false;
    for (VertexId v : traces_[id].vertices) DecrementStrong(v);
  }
}

}  // namespace hypercover::internal
