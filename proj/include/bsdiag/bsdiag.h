/* Copyright 2026 The bsdiag Authors
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

/* C interface to the bsdiag fault-diagnosis engine.
 *
 * Graphs are opaque handles. Every fallible call returns a bsd_status; on
 * failure a message is available from bsd_last_error() on the calling thread.
 * Functions producing text return a heap string through `out` that the caller
 * releases with bsd_string_free(). Vertex sets cross the interface as
 * comma-separated permutation labels ("1234,2134"), never as internal ids.
 */

#ifndef BSDIAG_BSDIAG_H_
#define BSDIAG_BSDIAG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(BSDIAG_BUILDING_LIBRARY)
#define BSDIAG_API __attribute__((visibility("default")))
#else
#define BSDIAG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsd_status {
  BSD_OK = 0,
  BSD_ERR_INVALID = 1,   /* validation failure */
  BSD_ERR_BUDGET = 2,    /* search or size guard exceeded */
  BSD_ERR_VERIFY = 3,    /* a verification check failed */
  BSD_ERR_INTERNAL = 4
} bsd_status;

typedef enum bsd_export_format { BSD_EXPORT_EDGE_LIST = 0, BSD_EXPORT_DOT = 1 } bsd_export_format;

typedef enum bsd_search_mode {
  BSD_MODE_EXHAUSTIVE = 0,
  BSD_MODE_WITNESS_ONLY = 1,
  BSD_MODE_RANDOMIZED = 2
} bsd_search_mode;

typedef enum bsd_strategy {
  BSD_STRATEGY_ZERO = 0,
  BSD_STRATEGY_ONE = 1,
  BSD_STRATEGY_RANDOM = 2
} bsd_strategy;

typedef enum bsd_table_format { BSD_TABLE_JSON = 0, BSD_TABLE_CSV = 1 } bsd_table_format;

typedef struct bsd_graph bsd_graph;

typedef struct bsd_options {
  unsigned threads;        /* 0: hardware concurrency */
  uint64_t seed;
  uint64_t samples;        /* randomized mode */
  int max_t;               /* exhaustive guard on the certified value */
  size_t max_vertices;     /* exhaustive guard on |V| */
  int override_guards;     /* nonzero lifts both guards */
  int include_timing;      /* nonzero adds wall_ms fields to JSON */
} bsd_options;

BSDIAG_API void bsd_options_init(bsd_options* opts);

BSDIAG_API const char* bsd_version(void);
BSDIAG_API const char* bsd_last_error(void);
BSDIAG_API void bsd_string_free(char* s);

/* Bubble-sort graph B_n, 2 <= n <= 9. */
BSDIAG_API bsd_status bsd_graph_bubble_sort(int n, bsd_graph** out);
/* Generic simple graph; endpoints holds 2 * edge_count vertex ids. */
BSDIAG_API bsd_status bsd_graph_from_edges(size_t vertex_count, const uint32_t* endpoints,
                                           size_t edge_count, bsd_graph** out);
BSDIAG_API void bsd_graph_free(bsd_graph* g);

BSDIAG_API size_t bsd_graph_vertex_count(const bsd_graph* g);
BSDIAG_API size_t bsd_graph_edge_count(const bsd_graph* g);

BSDIAG_API bsd_status bsd_graph_export(const bsd_graph* g, bsd_export_format format, char** out);
/* {"vertices","edges","degree","connectivity","diameter"}; connectivity is
 * null above 720 vertices. */
BSDIAG_API bsd_status bsd_graph_props_json(const bsd_graph* g, char** out);

BSDIAG_API bsd_status bsd_is_conditional(const bsd_graph* g, const char* faults, int* out);
BSDIAG_API bsd_status bsd_are_distinguishable(const bsd_graph* g, const char* f1, const char* f2,
                                              int* out);

/* Pair-edge witness; x and y may be NULL for the default pair-edge.
 * Returns BSD_ERR_VERIFY (with the JSON still written) if a check fails. */
BSDIAG_API bsd_status bsd_witness_json(const bsd_graph* g, const char* x, const char* y, char** out);

BSDIAG_API bsd_status bsd_conditional_diagnosability_json(const bsd_graph* g, bsd_search_mode mode,
                                                          const bsd_options* opts, char** out);
BSDIAG_API bsd_status bsd_diagnosability_json(const bsd_graph* g, const bsd_options* opts,
                                              char** out);

BSDIAG_API bsd_status bsd_simulate_json(const bsd_graph* g, const char* faults, bsd_strategy strategy,
                                        uint64_t seed, char** out);
BSDIAG_API bsd_status bsd_diagnose_json(const bsd_graph* g, const char* syndrome_json, int t,
                                        int conditional, char** out);

/* Runs the named suite ("paper"). Returns BSD_ERR_VERIFY, with the table
 * still written, if any check fails. */
BSDIAG_API bsd_status bsd_verify_suite(const char* suite, const bsd_options* opts,
                                       bsd_table_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BSDIAG_BSDIAG_H_ */
