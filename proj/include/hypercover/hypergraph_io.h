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

// The .hg text format:
//
//   # comment
//   p hg <n> <m>
//   e <v1> <v2> ... <vk>   [# label]
//
// exactly m edge lines, 1-based vertex ids. Text after a '#' on an edge line
// is the edge's provenance label. WriteHypergraph emits sorted vertices and
// edges in id order, so parse/write round trips are byte-stable.

#ifndef HYPERCOVER_HYPERGRAPH_IO_H_
#define HYPERCOVER_HYPERGRAPH_IO_H_

#include <string>
#include <string_view>

#include "hypercover/hypergraph.h"

namespace hypercover {

struct ParsedHypergraph {
  Hypergraph hypergraph;
  BuildReport report;
};

// Throws SyntaxError, EmptyEdge, VertexOutOfRange, DuplicateEdge.
ParsedHypergraph ParseHypergraph(
    std::string_view text, DuplicatePolicy policy = DuplicatePolicy::kReject);

std::string WriteHypergraph(const Hypergraph& h);

}  // namespace hypercover

#endif  // HYPERCOVER_HYPERGRAPH_IO_H_
