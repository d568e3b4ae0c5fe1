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

#include "hypercover/hypergraph_io.h"

#include <optional>
#include <utility>
#include <vector>

#include "hypercover/error.h"
#include "text_lines.h"

namespace hypercover {

using internal::ParseCount;
using internal::SplitTokens;
using internal::SyntaxAt;
using internal::Trim;

ParsedHypergraph ParseHypergraph(std::string_view text,
                                 DuplicatePolicy policy) {
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::vector<VertexSet> edges;
  std::vector<std::string> labels;
  bool any_label = false;
  std::size_t last_line = 0;

  internal::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    if (line.empty() || line.front() == '#') return;

    std::string_view body = line;
    std::string label;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      body = Trim(line.substr(0, hash));
      label = std::string(Trim(line.substr(hash + 1)));
    }
    const std::vector<std::string_view> tokens = SplitTokens(body);

    if (tokens.front() == "p") {
      if (n.has_value()) SyntaxAt(line_no, "second header line");
      if (tokens.size() != 4 || tokens[1] != "hg") {
        SyntaxAt(line_no, "header must read 'p hg <n> <m>'");
      }
      n = ParseCount(tokens[2], line_no);
      m = ParseCount(tokens[3], line_no);
      if (*n > 0xFFFFFFFEull || m > 0xFFFFFFFEull) {
        SyntaxAt(line_no, "header counts are too large");
      }
      return;
    }
    if (tokens.front() != "e") {
      SyntaxAt(line_no, "unexpected line '" + std::string(line) + "'");
    }
    if (!n.has_value()) SyntaxAt(line_no, "edge line before the header");
    if (edges.size() == m) {
      SyntaxAt(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    if (tokens.size() == 1) {
      throw Error(ErrorCode::kEmptyEdge,
                  "line " + std::to_string(line_no) + ": edge has no vertices");
    }
    VertexSet edge;
    edge.reserve(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const std::uint64_t v = ParseCount(tokens[i], line_no);
      if (v == 0 || v > *n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::string(tokens[i]) + " is outside 1.." +
                        std::to_string(*n));
      }
      edge.push_back(static_cast<VertexId>(v - 1));
    }
    edges.push_back(std::move(edge));
    any_label = any_label || !label.empty();
    labels.push_back(std::move(label));
  });

  if (!n.has_value()) SyntaxAt(last_line, "missing 'p hg <n> <m>' header");
  if (edges.size() != m) {
    SyntaxAt(last_line, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(edges.size()));
  }
  if (!any_label) labels.clear();

  ParsedHypergraph parsed;
  parsed.hypergraph = Hypergraph(static_cast<std::size_t>(*n),
                                 std::move(edges), std::move(labels), policy,
                                 &parsed.report);
  return parsed;
}

std::string WriteHypergraph(const Hypergraph& h) {
  std::string out = "p hg " + std::to_string(h.num_vertices()) + " " +
                    std::to_string(h.num_edges()) + "\n";
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out += 'e';
    for (VertexId v : h.edge(e)) {
      out += ' ';
      out += std::to_string(v + 1);
    }
    if (!h.label(e).empty()) {
      out += " # ";
      out += h.label(e);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hypercover
