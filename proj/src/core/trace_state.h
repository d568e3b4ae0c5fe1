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

#ifndef HYPERCOVER_CORE_TRACE_STATE_H_
#define HYPERCOVER_CORE_TRACE_STATE_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercover/hypergraph.h"

namespace hypercover::internal {

// The restriction H[W] maintained under single-vertex deletions from W.
//
// Deleting x shrinks every trace through x. A shrunk trace may vanish or
// coincide with an existing trace, which then merges into it. Containment is
// preserved by deletions, so a non-maximal trace never becomes maximal again
// and only the maximal traces that lost x need a fresh maximality test. Both
// the plain degree (distinct traces through a vertex) and the strong degree
// (maximal traces through it) therefore only decrease, and the minimum is
// read from an ordered set keyed by (degree, vertex id).
class TraceState {
 public:
  explicit TraceState(const Hypergraph& h);

  std::size_t num_alive() const { return num_alive_; }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  std::size_t strong_degree(VertexId v) const { return strong_[v]; }
  std::size_t degree(VertexId v) const { return plain_[v]; }

  // Smallest degree, ties to the smallest id. Requires num_alive() > 0.
  VertexId MinStrongDegreeVertex() const { return by_strong_.begin()->second; }
  VertexId MinDegreeVertex() const { return by_plain_.begin()->second; }

  // Live maximal traces through v, ordered by representative edge id.
  std::vector<std::size_t> MaximalTracesContaining(VertexId v) const;

  const VertexSet& trace(std::size_t id) const { return traces_[id].vertices; }
  EdgeId representative(std::size_t id) const {
    return traces_[id].representative;
  }

  void Remove(VertexId x);

 private:
  struct Trace {
    VertexSet vertices;
    EdgeId representative = 0;
    bool live = true;
    bool maximal = false;
  };

  struct SetHash {
    std::size_t operator()(const VertexSet& s) const;
  };

  bool HasProperSuperset(std::size_t id) const;
  void DecrementStrong(VertexId v);
  void DecrementPlain(VertexId v);

  std::vector<Trace> traces_;
  // containing_[v] lists every trace that held v when it was created. Entries
  // never go stale except by the trace dying.
  std::vector<std::vector<std::size_t>> containing_;
  std::unordered_map<VertexSet, std::size_t, SetHash> index_;
  std::vector<std::uint32_t> strong_;
  std::vector<std::uint32_t> plain_;
  std::vector<char> alive_;
  std::set<std::pair<std::uint32_t, VertexId>> by_strong_;
  std::set<std::pair<std::uint32_t, VertexId>> by_plain_;
  std::size_t num_alive_ = 0;
};

}  // namespace hypercover::internal

#endif  // HYPERCOVER_CORE_TRACE_STATE_H_
