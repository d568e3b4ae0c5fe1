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

#include "hypercover/hypercover.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercover/cover.h"
#include "hypercover/degeneracy.h"
#include "hypercover/domination.h"
#include "hypercover/error.h"
#include "hypercover/generators.h"
#include "hypercover/graph.h"
#include "hypercover/hypergraph.h"
#include "hypercover/hypergraph_io.h"
#include "hypercover/oracles.h"
#include "json_codec.h"

struct hc_hypergraph {
  hypercover::Hypergraph value;
};

struct hc_graph {
  hypercover::Graph value;
};

namespace {

using hypercover::Error;
using hypercover::ErrorCode;

thread_local std::string last_error;

hc_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError:
      return HC_ERR_SYNTAX;
    case ErrorCode::kEmptyEdge:
      return HC_ERR_EMPTY_EDGE;
    case ErrorCode::kVertexOutOfRange:
      return HC_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::kDuplicateEdge:
      return HC_ERR_DUPLICATE_EDGE;
    case ErrorCode::kEmptySubset:
      return HC_ERR_EMPTY_SUBSET;
    case ErrorCode::kIsolatedVertex:
      return HC_ERR_ISOLATED_VERTEX;
    case ErrorCode::kIdOutOfRange:
      return HC_ERR_ID_OUT_OF_RANGE;
    case ErrorCode::kTooLarge:
      return HC_ERR_TOO_LARGE;
    case ErrorCode::kNotATree:
      return HC_ERR_NOT_A_TREE;
    case ErrorCode::kSingleVertexOpen:
      return HC_ERR_SINGLE_VERTEX_OPEN;
    case ErrorCode::kIsolatedVertexForOpen:
      return HC_ERR_ISOLATED_VERTEX_FOR_OPEN;
    case ErrorCode::kNTooSmall:
      return HC_ERR_N_TOO_SMALL;
    case ErrorCode::kParameterError:
      return HC_ERR_PARAMETER;
    case ErrorCode::kInfeasibleEdgeCount:
      return HC_ERR_INFEASIBLE_EDGE_COUNT;
    case ErrorCode::kInvalidGraph:
      return HC_ERR_INVALID_GRAPH;
    case ErrorCode::kInternal:
      return HC_ERR_INTERNAL;
  }
  return HC_ERR_INTERNAL;
}

hc_status Fail(hc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into a status and hc_last_error().
template <typename Body>
hc_status Guard(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(HC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(HC_ERR_INTERNAL, e.what());
  }
}

char* CopyString(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

hc_status EmitJson(const nlohmann::json& doc, char** out) {
  *out = CopyString(doc.dump());
  return HC_OK;
}

hc_status MissingArgument(const char* what) {
  return Fail(HC_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

hypercover::DuplicatePolicy Policy(int strict) {
  return strict != 0 ? hypercover::DuplicatePolicy::kReject
                     : hypercover::DuplicatePolicy::kMerge;
}

hc_status Emit(hypercover::Hypergraph h, hc_hypergraph** out) {
  *out = new hc_hypergraph{std::move(h)};
  return HC_OK;
}

hc_status Emit(hypercover::Graph g, hc_graph** out) {
  *out = new hc_graph{std::move(g)};
  return HC_OK;
}

std::vector<std::uint32_t> ZeroBased(const uint32_t* ids, size_t count) {
  std::vector<std::uint32_t> out(count);
  // 0 wraps to UINT32_MAX and is then rejected as out of range.
  for (size_t i = 0; i < count; ++i) out[i] = ids[i] - 1;
  return out;
}

hypercover::Problem ToProblem(hc_problem p) {
  using hypercover::Problem;
  switch (p) {
    case HC_MIN_EDGE_COVER:
      return Problem::kMinEdgeCover;
    case HC_MAX_INDEPENDENT_SET:
      return Problem::kMaxIndependentSet;
    case HC_MIN_TRANSVERSAL:
      return Problem::kMinTransversal;
    case HC_MAX_MATCHING:
      return Problem::kMaxMatching;
    case HC_MIN_DOMINATING:
      return Problem::kMinDominating;
    case HC_MIN_TOTAL_DOMINATING:
      return Problem::kMinTotalDominating;
    case HC_MAX_TWO_PACKING:
      return Problem::kMaxTwoPacking;
    case HC_MAX_OPEN_TWO_PACKING:
      return Problem::kMaxOpenTwoPacking;
  }
  throw Error(ErrorCode::kParameterError, "unknown problem");
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK:
      return "Ok";
    case HC_ERR_INFEASIBLE:
      return "Infeasible";
    case HC_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    default:
      break;
  }
  for (int i = 0; i <= static_cast<int>(ErrorCode::kInternal); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (ToStatus(code) == status) return hypercover::ErrorName(code).data();
  }
  return "Unknown";
}

const char* hc_last_error(void) { return last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

const char* hc_version(void) { return HC_VERSION; }

hc_status hc_hypergraph_parse(const char* text, size_t length, int strict,
                              hc_hypergraph** out, hc_parse_report* report) {
  if (out == nullptr) return MissingArgument("out");
  if (text == nullptr && length > 0) return MissingArgument("text");
  return Guard([&] {
    auto parsed = hypercover::ParseHypergraph(
        std::string_view(text == nullptr ? "" : text, length), Policy(strict));
    if (report != nullptr) {
      report->merged_edges = parsed.report.merged_edges;
      report->repeated_vertices = parsed.report.repeated_vertices;
    }
    return Emit(std::move(parsed.hypergraph), out);
  });
}

hc_status hc_hypergraph_write(const hc_hypergraph* h, char** out) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] {
    *out = CopyString(hypercover::WriteHypergraph(h->value));
    return HC_OK;
  });
}

void hc_hypergraph_free(hc_hypergraph* h) { delete h; }

size_t hc_hypergraph_vertex_count(const hc_hypergraph* h) {
  return h == nullptr ? 0 : h->value.num_vertices();
}

size_t hc_hypergraph_edge_count(const hc_hypergraph* h) {
  return h == nullptr ? 0 : h->value.num_edges();
}

hc_status hc_hypergraph_dual(const hc_hypergraph* h, hc_hypergraph** out) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] { return Emit(hypercover::Dual(h->value), out); });
}

hc_status hc_graph_parse(const char* text, size_t length, int strict,
                         hc_graph** out, size_t* merged_edges) {
  if (out == nullptr) return MissingArgument("out");
  if (text == nullptr && length > 0) return MissingArgument("text");
  return Guard([&] {
    auto parsed = hypercover::ParseGraph(
        std::string_view(text == nullptr ? "" : text, length), Policy(strict));
    if (merged_edges != nullptr) *merged_edges = parsed.merged_edges;
    return Emit(std::move(parsed.graph), out);
  });
}

hc_status hc_graph_write(const hc_graph* g, char** out) {
  if (g == nullptr) return MissingArgument("graph");
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] {
    *out = CopyString(hypercover::WriteGraph(g->value));
    return HC_OK;
  });
}

void hc_graph_free(hc_graph* g) { delete g; }

size_t hc_graph_vertex_count(const hc_graph* g) {
  return g == nullptr ? 0 : g->value.num_vertices();
}

hc_status hc_generate_gap(size_t n, hc_hypergraph** out) {
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] { return Emit(hypercover::GapFamily(n), out); });
}

hc_status hc_generate_tree(size_t n, uint64_t seed, hc_graph** out) {
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] { return Emit(hypercover::RandomTree(n, seed), out); });
}

hc_status hc_generate_graph(size_t n, double edge_probability, uint64_t seed,
                            hc_graph** out) {
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] {
    return Emit(hypercover::RandomGraph(n, edge_probability, seed), out);
  });
}

hc_status hc_generate_hypergraph(size_t n, size_t m, size_t max_edge_size,
                                 uint64_t seed, int cover_feasible,
                                 hc_hypergraph** out) {
  if (out == nullptr) return MissingArgument("out");
  return Guard([&] {
    return Emit(hypercover::RandomHypergraph(n, m, max_edge_size, seed,
                                             cover_feasible != 0),
                out);
  });
}

hc_status hc_degeneracy(const hc_hypergraph* h, hc_degeneracy_kind kind,
                        char** json) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    using hypercover::capi::ToJson;
    switch (kind) {
      case HC_DEGENERACY_STRONG:
        return EmitJson(
            ToJson("strong", hypercover::StrongDegeneracy(h->value)), json);
      case HC_DEGENERACY_PLAIN:
        return EmitJson(ToJson("plain", hypercover::Degeneracy(h->value)),
                        json);
      case HC_DEGENERACY_STRONG_BF:
        return EmitJson(
            ToJson("strong-bf",
                   hypercover::StrongDegeneracyBruteForce(h->value)),
            json);
      case HC_DEGENERACY_PLAIN_BF:
        return EmitJson(
            ToJson("plain-bf", hypercover::DegeneracyBruteForce(h->value)),
            json);
      case HC_DEGENERACY_MIGHTY_BF:
        return EmitJson(
            ToJson("mighty-bf",
                   hypercover::MightyDegeneracyBruteForce(h->value)),
            json);
    }
    return Fail(HC_ERR_INVALID_ARGUMENT, "unknown degeneracy kind");
  });
}

hc_status hc_cover(const hc_hypergraph* h, char** json) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    return EmitJson(hypercover::capi::ToJson(hypercover::GreedyCover(h->value)),
                    json);
  });
}

hc_status hc_transversal(const hc_hypergraph* h, char** json) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    return EmitJson(
        hypercover::capi::ToJson(hypercover::GreedyTransversal(h->value)),
        json);
  });
}

hc_status hc_dominate(const hc_graph* tree, hc_neighborhood kind,
                      int cross_check, char** json) {
  if (tree == nullptr) return MissingArgument("tree");
  if (json == nullptr) return MissingArgument("json");
  if (kind != HC_CLOSED && kind != HC_OPEN) {
    return Fail(HC_ERR_INVALID_ARGUMENT, "unknown neighborhood kind");
  }
  return Guard([&] {
    auto nk = kind == HC_CLOSED ? hypercover::NeighborhoodKind::kClosed
                                : hypercover::NeighborhoodKind::kOpen;
    return EmitJson(hypercover::capi::ToJson(hypercover::TreeDomination(
                        tree->value, nk, cross_check != 0)),
                    json);
  });
}

hc_status hc_exact(const hc_hypergraph* h, const hc_graph* g,
                   hc_problem problem, char** json) {
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    hypercover::Problem p = ToProblem(problem);
    hypercover::ExactResult result;
    if (hypercover::IsGraphProblem(p)) {
      if (g == nullptr) return MissingArgument("graph");
      result = hypercover::Exact(g->value, p);
    } else {
      if (h == nullptr) return MissingArgument("hypergraph");
      result = hypercover::Exact(h->value, p);
    }
    if (!result.feasible) {
      return Fail(HC_ERR_INFEASIBLE,
                  std::string(hypercover::ProblemName(p)) +
                      " has no feasible solution on this instance");
    }
    return EmitJson(hypercover::capi::ToJson(result), json);
  });
}

hc_status hc_vc_dimension(const hc_hypergraph* h, char** json) {
  if (h == nullptr) return MissingArgument("hypergraph");
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    return EmitJson(hypercover::capi::ToJson(hypercover::VcDimension(h->value)),
                    json);
  });
}

hc_status hc_audit(const hc_graph* g, size_t trials, uint64_t seed,
                   char** json) {
  if (g == nullptr) return MissingArgument("graph");
  if (json == nullptr) return MissingArgument("json");
  return Guard([&] {
    return EmitJson(hypercover::capi::ToJson(
                        hypercover::NeighborhoodEquivalenceAudit(g->value,
                                                                 trials, seed)),
                    json);
  });
}

hc_status hc_verify(const hc_hypergraph* h, const hc_graph* g,
                    hc_set_kind kind, const uint32_t* ids, size_t count,
                    int* valid) {
  if (valid == nullptr) return MissingArgument("valid");
  if (ids == nullptr && count > 0) return MissingArgument("ids");
  return Guard([&] {
    const std::vector<std::uint32_t> zero = ZeroBased(ids, count);
    auto hyper = [&](hypercover::SetKind k) {
      if (h == nullptr) return MissingArgument("hypergraph");
      *valid = hypercover::Check(h->value, k, zero) ? 1 : 0;
      return HC_OK;
    };
    auto graph = [&](hypercover::GraphSetKind k) {
      if (g == nullptr) return MissingArgument("graph");
      *valid = hypercover::CheckGraph(g->value, k, zero) ? 1 : 0;
      return HC_OK;
    };
    switch (kind) {
      case HC_SET_EDGE_COVER:
        return hyper(hypercover::SetKind::kEdgeCover);
      case HC_SET_INDEPENDENT:
        return hyper(hypercover::SetKind::kIndependentSet);
      case HC_SET_TRANSVERSAL:
        return hyper(hypercover::SetKind::kTransversal);
      case HC_SET_MATCHING:
        return hyper(hypercover::SetKind::kMatching);
      case HC_SET_DOMINATING:
        return graph(hypercover::GraphSetKind::kDominating);
      case HC_SET_TOTAL_DOMINATING:
        return graph(hypercover::GraphSetKind::kTotalDominating);
      case HC_SET_TWO_PACKING:
        return graph(hypercover::GraphSetKind::kTwoPacking);
      case HC_SET_OPEN_TWO_PACKING:
        return graph(hypercover::GraphSetKind::kOpenTwoPacking);
    }
    return Fail(HC_ERR_INVALID_ARGUMENT, "unknown set kind");
  });
}

}  // extern "C"
