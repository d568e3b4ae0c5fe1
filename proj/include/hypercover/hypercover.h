/* Copyright 2026 The hypercover Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libhypercover.
 *
 * Hypergraphs and graphs live behind opaque handles created by the parse and
 * generate calls and released with the matching *_free. Every fallible call
 * returns an hc_status; on failure hc_last_error() describes the problem for
 * the calling thread. Results are JSON documents returned through a char**
 * that the caller releases with hc_string_free.
 *
 * All ids crossing this interface (in JSON and in id arrays) are 1-based. */

#ifndef HYPERCOVER_HYPERCOVER_H_
#define HYPERCOVER_HYPERCOVER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HC_BUILDING_LIBRARY)
#define HC_API __declspec(dllexport)
#else
#define HC_API __declspec(dllimport)
#endif
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_hypergraph hc_hypergraph;
typedef struct hc_graph hc_graph;

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_SYNTAX,
  HC_ERR_EMPTY_EDGE,
  HC_ERR_VERTEX_OUT_OF_RANGE,
  HC_ERR_DUPLICATE_EDGE,
  HC_ERR_EMPTY_SUBSET,
  HC_ERR_ISOLATED_VERTEX,
  HC_ERR_ID_OUT_OF_RANGE,
  HC_ERR_TOO_LARGE,
  HC_ERR_NOT_A_TREE,
  HC_ERR_SINGLE_VERTEX_OPEN,
  HC_ERR_ISOLATED_VERTEX_FOR_OPEN,
  HC_ERR_N_TOO_SMALL,
  HC_ERR_PARAMETER,
  HC_ERR_INFEASIBLE_EDGE_COUNT,
  HC_ERR_INVALID_GRAPH,
  HC_ERR_INFEASIBLE,
  HC_ERR_INVALID_ARGUMENT,
  HC_ERR_INTERNAL
} hc_status;

typedef enum hc_degeneracy_kind {
  HC_DEGENERACY_STRONG = 0,
  HC_DEGENERACY_PLAIN,
  HC_DEGENERACY_STRONG_BF,
  HC_DEGENERACY_PLAIN_BF,
  HC_DEGENERACY_MIGHTY_BF
} hc_degeneracy_kind;

typedef enum hc_neighborhood {
  HC_CLOSED = 0,
  HC_OPEN
} hc_neighborhood;

typedef enum hc_set_kind {
  HC_SET_EDGE_COVER = 0,
  HC_SET_INDEPENDENT,
  HC_SET_TRANSVERSAL,
  HC_SET_MATCHING,
  HC_SET_DOMINATING,
  HC_SET_TOTAL_DOMINATING,
  HC_SET_TWO_PACKING,
  HC_SET_OPEN_TWO_PACKING
} hc_set_kind;

typedef enum hc_problem {
  HC_MIN_EDGE_COVER = 0,
  HC_MAX_INDEPENDENT_SET,
  HC_MIN_TRANSVERSAL,
  HC_MAX_MATCHING,
  HC_MIN_DOMINATING,
  HC_MIN_TOTAL_DOMINATING,
  HC_MAX_TWO_PACKING,
  HC_MAX_OPEN_TWO_PACKING
} hc_problem;

/* Stable names: "SyntaxError", "IsolatedVertex", ... */
HC_API const char* hc_status_name(hc_status status);
/* Message for the last failure on this thread; "" if none. */
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);
HC_API const char* hc_version(void);

/* --- hypergraphs (.hg) --- */

typedef struct hc_parse_report {
  size_t merged_edges;       /* duplicate edges folded into earlier ones */
  size_t repeated_vertices;  /* vertex ids listed twice within one edge */
} hc_parse_report;

/* strict != 0 rejects duplicate edges; otherwise they merge. report may be
 * NULL. */
HC_API hc_status hc_hypergraph_parse(const char* text, size_t length,
                                     int strict, hc_hypergraph** out,
                                     hc_parse_report* report);
HC_API hc_status hc_hypergraph_write(const hc_hypergraph* h, char** out);
HC_API void hc_hypergraph_free(hc_hypergraph* h);
HC_API size_t hc_hypergraph_vertex_count(const hc_hypergraph* h);
HC_API size_t hc_hypergraph_edge_count(const hc_hypergraph* h);
HC_API hc_status hc_hypergraph_dual(const hc_hypergraph* h,
                                    hc_hypergraph** out);

/* --- graphs (.gr) --- */

HC_API hc_status hc_graph_parse(const char* text, size_t length, int strict,
                                hc_graph** out, size_t* merged_edges);
HC_API hc_status hc_graph_write(const hc_graph* g, char** out);
HC_API void hc_graph_free(hc_graph* g);
HC_API size_t hc_graph_vertex_count(const hc_graph* g);

/* --- generators --- */

HC_API hc_status hc_generate_gap(size_t n, hc_hypergraph** out);
HC_API hc_status hc_generate_tree(size_t n, uint64_t seed, hc_graph** out);
HC_API hc_status hc_generate_graph(size_t n, double edge_probability,
                                   uint64_t seed, hc_graph** out);
HC_API hc_status hc_generate_hypergraph(size_t n, size_t m,
                                        size_t max_edge_size, uint64_t seed,
                                        int cover_feasible,
                                        hc_hypergraph** out);

/* --- analyses; each writes a JSON document to *json --- */

/* {"kind","value","order","step_values"} for the peeling kinds,
 * {"kind","value","witness"} for the brute-force kinds. */
HC_API hc_status hc_degeneracy(const hc_hypergraph* h, hc_degeneracy_kind kind,
                               char** json);
HC_API hc_status hc_cover(const hc_hypergraph* h, char** json);
HC_API hc_status hc_transversal(const hc_hypergraph* h, char** json);
/* cross_check != 0 also runs the generic greedy on the neighbourhood
 * hypergraph and reports whether the sizes agree. */
HC_API hc_status hc_dominate(const hc_graph* tree, hc_neighborhood kind,
                             int cross_check, char** json);
/* Hypergraph problems take h, graph problems take g; pass NULL for the other.
 * An infeasible instance returns HC_ERR_INFEASIBLE. */
HC_API hc_status hc_exact(const hc_hypergraph* h, const hc_graph* g,
                          hc_problem problem, char** json);
HC_API hc_status hc_vc_dimension(const hc_hypergraph* h, char** json);
HC_API hc_status hc_audit(const hc_graph* g, size_t trials, uint64_t seed,
                          char** json);

/* Definition check of a set of 1-based ids. Hypergraph kinds read h, graph
 * kinds read g. *valid receives 0 or 1. */
HC_API hc_status hc_verify(const hc_hypergraph* h, const hc_graph* g,
                           hc_set_kind kind, const uint32_t* ids, size_t count,
                           int* valid);

#ifdef __cplusplus
}
#endif

#endif /* HYPERCOVER_HYPERCOVER_H_ */
