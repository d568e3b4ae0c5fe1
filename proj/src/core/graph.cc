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

#include "hypercover/graph.h"

#include <algorithm>
#include <optional>

#include "hypercover/error.h"
#include "text_lines.h"

namespace hypercover {

Graph::Graph(std::size_t num_vertices, std::span<const GraphEdge> edges,
             DuplicatePolicy policy, std::size_t* merged)
    : adjacency_(num_vertices) {
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(u + 1) + "-" +
                      std::to_string(v + 1) + " leaves 1.." +
                      std::to_string(num_vertices));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidGraph,
                  "self-loop at vertex " + std::to_string(u + 1));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t folded = 0;
  for (VertexId v = 0; v < adjacency_.size(); ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (const auto dup = std::adjacent_find(adj.begin(), adj.end());
        dup != adj.end() && policy == DuplicatePolicy::kReject) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge " + std::to_string(v + 1) + "-" +
                      std::to_string(*dup + 1) + " appears twice");
    }
    const auto last = std::unique(adj.begin(), adj.end());
    if (last != adj.end()) {
      folded += static_cast<std::size_t>(adj.end() - last);
      adj.erase(last, adj.end());
    }
    num_edges_ += adj.size();
  }
  num_edges_ /= 2;
  if (merged != nullptr) *merged = folded / 2;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::vector<GraphEdge> Graph::Edges() const {
  std::vector<GraphEdge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::IsTree() const {
  const std::size_t n = adjacency_.size();
  if (n == 0 || num_edges_ != n - 1) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

ParsedGraph ParseGraph(std::string_view text, DuplicatePolicy policy) {
  using internal::ParseCount;
  using internal::SyntaxAt;
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::vector<GraphEdge> edges;
  std::size_t last_line = 0;

  internal::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    if (line.empty() || line.front() == '#' || line.front() == 'c') return;
    const auto tokens = internal::SplitTokens(line);
    if (tokens.front() == "p") {
      if (n.has_value()) SyntaxAt(line_no, "second header line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        SyntaxAt(line_no, "header must read 'p edge <n> <m>'");
      }
      n = ParseCount(tokens[2], line_no);
      m = ParseCount(tokens[3], line_no);
      if (*n > 0xFFFFFFFEull) SyntaxAt(line_no, "vertex count is too large");
      return;
    }
    if (tokens.front() != "e") {
      SyntaxAt(line_no, "unexpected line '" + std::string(line) + "'");
    }
    if (!n.has_value()) SyntaxAt(line_no, "edge line before the header");
    if (tokens.size() != 3) SyntaxAt(line_no, "edge line must read 'e <u> <v>'");
    if (edges.size() == m) {
      SyntaxAt(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    VertexId ends[2];
    for (int i = 0; i < 2; ++i) {
      const std::uint64_t v = ParseCount(tokens[1 + i], line_no);
      if (v == 0 || v > *n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::string(tokens[1 + i]) + " is outside 1.." +
                        std::to_string(*n));
      }
      ends[i] = static_cast<VertexId>(v - 1);
    }
    edges.emplace_back(ends[0], ends[1]);
  });

  if (!n.has_value()) SyntaxAt(last_line, "missing 'p edge <n> <m>' header");
  if (edges.size() != m) {
    SyntaxAt(last_line, "expected " + std::to_string(m) +
                            " edge lines, found " +
                            std::to_string(edges.size()));
  }
  ParsedGraph parsed;
  parsed.graph = Graph(static_cast<std::size_t>(*n), edges, policy,
                       &parsed.merged_edges);
  return parsed;
}

std::string WriteGraph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.Edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace hypercover
