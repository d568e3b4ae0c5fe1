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

#include <algorithm>
#include <bit>
#include <vector>

#include "hypercover/error.h"
#include "hypercover/hypergraph.h"
#include "masks.h"

namespace hypercover {

namespace {

using internal::Bit;
using internal::Mask;

// Caps the trace bitmap at 2^24 entries.
constexpr std::size_t kMaxShatterSetSize = 24;

// Which of the 2^k subsets of `members` (in position order) occur as a trace.
// An edge missing `members` entirely contributes the empty trace, so ∅ is
// present exactly when some edge avoids the set; for the empty set itself this
// gives "∅ is shattered iff E is nonempty".
std::vector<char> TracePresence(std::span<const Mask> edges,
                                std::span<const VertexId> members) {
  std::vector<char> present(std::size_t{1} << members.size(), 0);
  for (Mask e : edges) {
    std::size_t code = 0;
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (e & Bit(members[p])) code |= std::size_t{1} << p;
    }
    present[code] = 1;
  }
  return present;
}

// Lexicographic order on the sorted member lists encoded by two codes.
bool LexLess(std::size_t a, std::size_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

ShatterWitness Witness(std::span<const Mask> edges,
                       std::span<const VertexId> members) {
  ShatterWitness w;
  w.set.assign(members.begin(), members.end());
  const std::vector<char> present = TracePresence(edges, members);
  std::optional<std::size_t> missing;
  for (std::size_t code = 0; code < present.size(); ++code) {
    if (present[code]) continue;
    if (!missing.has_value() || LexLess(code, *missing)) missing = code;
  }
  w.shattered = !missing.has_value();
  if (missing.has_value()) {
    VertexSet subset;
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (*missing & (std::size_t{1} << p)) subset.push_back(members[p]);
    }
    w.missing_subset = std::move(subset);
  }
  return w;
}

bool Shattered(std::span<const Mask> edges, std::span<const VertexId> members,
               std::vector<char>& seen) {
  const std::size_t total = std::size_t{1} << members.size();
  if (edges.size() < total) return false;
  seen.assign(total, 0);
  std::size_t distinct = 0;
  for (Mask e : edges) {
    std::size_t code = 0;
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (e & Bit(members[p])) code |= std::size_t{1} << p;
    }
    if (!seen[code]) {
      seen[code] = 1;
      if (++distinct == total) return true;
    }
  }
  return false;
}

}  // namespace

ShatterWitness CheckShattered(const Hypergraph& h,
                              std::span<const VertexId> set) {
  VertexSet members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  internal::RequireAtMost(members.size(), kMaxShatterSetSize, "candidate set");
  for (VertexId v : members) {
    if (v >= h.num_vertices()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v + 1) + " is out of range");
    }
  }
  const std::vector<Mask> edges = internal::EdgeMasks(h);
  return Witness(edges, members);
}

VcResult VcDimension(const Hypergraph& h, std::size_t max_vertices) {
  internal::RequireAtMost(h.num_vertices(), std::min<std::size_t>(max_vertices, 64),
                          "vertex set");
  VcResult result;
  if (h.num_edges() == 0) {
    result.none_shattered = true;
    result.witness.shattered = false;
    result.witness.missing_subset = VertexSet{};
    return result;
  }
  const std::vector<Mask> edges = internal::EdgeMasks(h);
  const std::size_t n = h.num_vertices();

  // A shattered k-set needs 2^k distinct traces, hence at most m of them.
  std::size_t k = 0;
  while (k < n && (std::size_t{1} << (k + 1)) <= edges.size()) ++k;

  std::vector<char> seen;
  for (;; --k) {
    std::vector<VertexId> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<VertexId>(i);
    while (true) {
      if (Shattered(edges, combo, seen)) {
        result.value = k;
        result.witness = Witness(edges, combo);
        return result;
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    if (k == 0) break;
  }
  // Unreachable with E nonempty: ∅ is always shattered then.
  throw Error(ErrorCode::kInternal, "no shattered set found");
}

}  // namespace hypercover
