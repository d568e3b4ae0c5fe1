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

// 64-bit membership words for the exponential searches. Everything here
// assumes at most 64 elements in the ground set.

#ifndef HYPERCOVER_CORE_MASKS_H_
#define HYPERCOVER_CORE_MASKS_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypercover/error.h"
#include "hypercover/hypergraph.h"

namespace hypercover::internal {

using Mask = std::uint64_t;

inline constexpr Mask Bit(unsigned i) { return Mask{1} << i; }

inline Mask LowMask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : Bit(static_cast<unsigned>(n)) - 1;
}

inline void RequireAtMost(std::size_t size, std::size_t cap,
                          const char* what) {
  if (size > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::string(what) + " has " + std::to_string(size) +
                    " elements; the exhaustive search is capped at " +
                    std::to_string(cap));
  }
}

inline Mask ToMask(std::span<const VertexId> ids) {
  Mask m = 0;
  for (VertexId v : ids) m |= Bit(v);
  return m;
}

inline VertexSet ToSet(Mask m) {
  VertexSet out;
  while (m != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline std::vector<Mask> EdgeMasks(const Hypergraph& h) {
  RequireAtMost(h.num_vertices(), 64, "vertex set");
  std::vector<Mask> masks;
  masks.reserve(h.num_edges());
  for (const VertexSet& e : h.edges()) masks.push_back(ToMask(e));
  return masks;
}

// Distinct nonempty traces of the edges on `subset`.
inline std::vector<Mask> Traces(std::span<const Mask> edges, Mask subset) {
  std::vector<Mask> traces;
  traces.reserve(edges.size());
  for (Mask e : edges) {
    if (const Mask t = e & subset; t != 0) traces.push_back(t);
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return traces;
}

// Keeps only the traces not properly contained in another one.
inline std::vector<Mask> MaximalOnly(const std::vector<Mask>& traces) {
  std::vector<Mask> out;
  for (Mask t : traces) {
    bool contained = false;
    for (Mask u : traces) {
      if (u != t && (t & ~u) == 0) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(t);
  }
  return out;
}

// min over x in subset of the number of `family` members containing x.
inline std::size_t MinCoverCount(const std::vector<Mask>& family,
                                 Mask subset) {
  std::size_t best = family.size() + 1;
  for (Mask rest = subset; rest != 0; rest &= rest - 1) {
    const Mask x = rest & (~rest + 1);
    std::size_t count = 0;
    for (Mask t : family) count += (t & x) != 0;
    best = std::min(best, count);
  }
  return best;
}

}  // namespace hypercover::internal

#endif  // HYPERCOVER_CORE_MASKS_H_
