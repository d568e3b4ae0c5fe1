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

#include "hypercover/oracles.h"

#include <string>

#include "hypercover/domination.h"
#include "hypercover/error.h"
#include "masks.h"

namespace hypercover {

namespace {

using internal::Bit;
using internal::Mask;

// Both searches walk k-combinations of item indices in lexicographic order.
class SubsetSearch {
 public:
  explicit SubsetSearch(std::vector<Mask> items) : items_(std::move(items)) {
    suffix_.assign(items_.size() + 1, 0);
    for (std::size_t i = items_.size(); i > 0; --i) {
      suffix_[i - 1] = suffix_[i] | items_[i - 1];
    }
  }

  // Smallest k-set whose union contains target; nullopt when even all items
  // fall short.
  std::optional<std::vector<std::uint32_t>> MinCover(Mask target) {
    if ((suffix_[0] & target) != target) return std::nullopt;
    for (std::size_t k = 0; k <= items_.size(); ++k) {
      chosen_.clear();
      if (CoverDfs(0, k, 0, target)) return chosen_;
    }
    return std::nullopt;
  }

  // Largest set of pairwise disjoint items. Disjointness is hereditary, so
  // the first size with no feasible set ends the search.
  std::vector<std::uint32_t> MaxPacking() {
    std::vector<std::uint32_t> best;
    for (std::size_t k = 0; k <= items_.size(); ++k) {
      chosen_.clear();
      if (!PackDfs(0, k, 0)) break;
      best = chosen_;
    }
    return best;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  bool CoverDfs(std::size_t start, std::size_t left, Mask acc, Mask target) {
    if (left == 0) {
      ++explored_;
      return (acc & target) == target;
    }
    for (std::size_t i = start; i + left <= items_.size(); ++i) {
      if (((acc | suffix_[i]) & target) != target) return false;
      chosen_.push_back(static_cast<std::uint32_t>(i));
      if (CoverDfs(i + 1, left - 1, acc | items_[i], target)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool PackDfs(std::size_t start, std::size_t left, Mask acc) {
    if (left == 0) {
      ++explored_;
      return true;
    }
    for (std::size_t i = start; i + left <= items_.size(); ++i) {
      if (items_[i] & acc) continue;
      chosen_.push_back(static_cast<std::uint32_t>(i));
      if (PackDfs(i + 1, left - 1, acc | items_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Mask> items_;
  std::vector<Mask> suffix_;
  std::vector<std::uint32_t> chosen_;
  std::uint64_t explored_ = 0;
};

ExactResult Finish(Problem problem, const SubsetSearch& search,
                   std::optional<std::vector<std::uint32_t>> witness) {
  ExactResult result;
  result.problem = problem;
  result.explored = search.explored();
  result.feasible = witness.has_value();
  if (witness.has_value()) {
    result.value = witness->size();
    result.witness = std::move(*witness);
  }
  return result;
}

void VerifyWitness(bool valid, Problem problem) {
  if (!valid) {
    throw Error(ErrorCode::kInternal, "exact witness for " +
                                          std::string(ProblemName(problem)) +
                                          " failed its definition check");
  }
}

}  // namespace

std::string_view ProblemName(Problem p) {
  switch (p) {
    case Problem::kMinEdgeCover:
      return "min-edge-cover";
    case Problem::kMaxIndependentSet:
      return "max-independent-set";
    case Problem::kMinTransversal:
      return "min-transversal";
    case Problem::kMaxMatching:
      return "max-matching";
    case Problem::kMinDominating:
      return "min-dominating";
    case Problem::kMinTotalDominating:
      return "min-total-dominating";
    case Problem::kMaxTwoPacking:
      return "max-2-packing";
    case Problem::kMaxOpenTwoPacking:
      return "max-open-2-packing";
  }
  return "";
}

std::optional<Problem> ParseProblem(std::string_view name) {
  for (Problem p :
       {Problem::kMinEdgeCover, Problem::kMaxIndependentSet,
        Problem::kMinTransversal, Problem::kMaxMatching,
        Problem::kMinDominating, Problem::kMinTotalDominating,
        Problem::kMaxTwoPacking, Problem::kMaxOpenTwoPacking}) {
    if (ProblemName(p) == name) return p;
  }
  return std::nullopt;
}

bool IsGraphProblem(Problem p) {
  return p == Problem::kMinDominating || p == Problem::kMinTotalDominating ||
         p == Problem::kMaxTwoPacking || p == Problem::kMaxOpenTwoPacking;
}

ExactResult Exact(const Hypergraph& h, Problem problem) {
  if (IsGraphProblem(problem)) {
    throw Error(ErrorCode::kParameterError,
                std::string(ProblemName(problem)) + " expects a graph");
  }
  internal::RequireAtMost(h.num_vertices(), kHypergraphOracleCap,
                          "vertex set");
  internal::RequireAtMost(h.num_edges(), kEdgeOracleCap, "edge set");
  const std::vector<Mask> edges = internal::EdgeMasks(h);
  // incidence[v]: the edges through v, as a word over edge ids.
  std::vector<Mask> incidence(h.num_vertices(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) incidence[v] |= Bit(e);
  }

  switch (problem) {
    case Problem::kMinEdgeCover: {
      SubsetSearch search(edges);
      ExactResult r = Finish(
          problem, search,
          search.MinCover(internal::LowMask(h.num_vertices())));
      if (r.feasible) VerifyWitness(Check(h, SetKind::kEdgeCover, r.witness), problem);
      return r;
    }
    case Problem::kMinTransversal: {
      SubsetSearch search(incidence);
      ExactResult r = Finish(problem, search,
                             search.MinCover(internal::LowMask(h.num_edges())));
      if (r.feasible) VerifyWitness(Check(h, SetKind::kTransversal, r.witness), problem);
      return r;
    }
    case Problem::kMaxIndependentSet: {
      SubsetSearch search(incidence);
      ExactResult r = Finish(problem, search, search.MaxPacking());
      VerifyWitness(Check(h, SetKind::kIndependentSet, r.witness), problem);
      return r;
    }
    case Problem::kMaxMatching: {
      SubsetSearch search(edges);
      ExactResult r = Finish(problem, search, search.MaxPacking());
      VerifyWitness(Check(h, SetKind::kMatching, r.witness), problem);
      return r;
    }
    default:
      break;
  }
  throw Error(ErrorCode::kInternal, "unhandled problem");
}

ExactResult Exact(const Graph& g, Problem problem) {
  if (!IsGraphProblem(problem)) {
    throw Error(ErrorCode::kParameterError,
                std::string(ProblemName(problem)) + " expects a hypergraph");
  }
  internal::RequireAtMost(g.num_vertices(), kGraphOracleCap, "vertex set");
  const std::size_t n = g.num_vertices();
  std::vector<Mask> open(n, 0);
  std::vector<Mask> closed(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) open[v] |= Bit(u);
    closed[v] = open[v] | Bit(v);
  }
  const Mask all = internal::LowMask(n);

  switch (problem) {
    case Problem::kMinDominating: {
      SubsetSearch search(closed);
      ExactResult r = Finish(problem, search, search.MinCover(all));
      VerifyWitness(CheckGraph(g, GraphSetKind::kDominating, r.witness), problem);
      return r;
    }
    case Problem::kMinTotalDominating: {
      SubsetSearch search(open);
      ExactResult r = Finish(problem, search, search.MinCover(all));
      if (r.feasible) {
        VerifyWitness(CheckGraph(g, GraphSetKind::kTotalDominating, r.witness),
                      problem);
      }
      return r;
    }
    case Problem::kMaxTwoPacking: {
      SubsetSearch search(closed);
      ExactResult r = Finish(problem, search, search.MaxPacking());
      VerifyWitness(CheckGraph(g, GraphSetKind::kTwoPacking, r.witness), problem);
      return r;
    }
    case Problem::kMaxOpenTwoPacking: {
      SubsetSearch search(open);
      ExactResult r = Finish(problem, search, search.MaxPacking());
      VerifyWitness(CheckGraph(g, GraphSetKind::kOpenTwoPacking, r.witness),
                    problem);
      return r;
    }
    default:
      break;
  }
  throw Error(ErrorCode::kInternal, "unhandled problem");
}

}  // namespace hypercover
