// Copyright 2026 The capcycle Authors
//
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

/* C interface to the capcycle engine.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a capcycle_status;
 * on failure capcycle_last_error() holds a one-line message for the calling
 * thread. Strings and arrays returned through out-parameters are allocated by
 * the library and released with capcycle_free().
 */
#ifndef CAPCYCLE_CAPCYCLE_H_
#define CAPCYCLE_CAPCYCLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CAPCYCLE_BUILDING)
#    define CAPCYCLE_API __declspec(dllexport)
#  else
#    define CAPCYCLE_API __declspec(dllimport)
#  endif
#else
#  define CAPCYCLE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum capcycle_status {
  CAPCYCLE_OK = 0,
  CAPCYCLE_ERR_EMPTY_ALLOCATION = 1,
  CAPCYCLE_ERR_NEGATIVE_ENTRY = 2,
  CAPCYCLE_ERR_PARSE = 3,
  CAPCYCLE_ERR_DIMENSION_MISMATCH = 4,
  CAPCYCLE_ERR_SPACE_TOO_LARGE = 5,
  CAPCYCLE_ERR_OVERFLOW = 6,
  CAPCYCLE_ERR_ALL_TIES = 7,
  CAPCYCLE_ERR_INVALID_ARGUMENT = 8,
  CAPCYCLE_ERR_INTERNAL = 9
} capcycle_status;

typedef enum capcycle_cell {
  CAPCYCLE_CELL_TIE = 0,
  CAPCYCLE_CELL_A_WIN = 1,
  CAPCYCLE_CELL_B_WIN = 2
} capcycle_cell;

typedef enum capcycle_outcome {
  CAPCYCLE_OUTCOME_A_WINS = 0,
  CAPCYCLE_OUTCOME_B_WINS = 1,
  CAPCYCLE_OUTCOME_DRAW = 2
} capcycle_outcome;

typedef enum capcycle_tie_policy {
  CAPCYCLE_TIE_REROLL = 0,
  CAPCYCLE_TIE_NO_GAME = 1
} capcycle_tie_policy;

typedef enum capcycle_format {
  CAPCYCLE_FORMAT_TEXT = 0, /* matchup: grid; analysis/simulation: text */
  CAPCYCLE_FORMAT_JSON = 1,
  CAPCYCLE_FORMAT_CSV = 2,  /* matchup only */
  CAPCYCLE_FORMAT_DOT = 3   /* graph only */
} capcycle_format;

typedef struct capcycle_allocation capcycle_allocation;
typedef struct capcycle_matchup capcycle_matchup;
typedef struct capcycle_graph capcycle_graph;

typedef struct capcycle_sim_config {
  uint64_t seed;
  uint64_t n_games;
  capcycle_tie_policy tie_policy;
  uint64_t best_of; /* 0 = no best-of series; otherwise odd */
  uint64_t n_series;
} capcycle_sim_config;

typedef struct capcycle_sim_stats {
  uint64_t games_played;
  uint64_t a_game_wins;
  uint64_t b_game_wins;
  uint64_t tie_games;
  uint64_t a_series_wins;
  uint64_t b_series_wins;
} capcycle_sim_stats;

CAPCYCLE_API const char* capcycle_version(void);
CAPCYCLE_API const char* capcycle_status_string(capcycle_status status);
CAPCYCLE_API const char* capcycle_last_error(void);
CAPCYCLE_API void capcycle_free(void* ptr);

/* Limit on enumerated spaces; default 100000000. */
CAPCYCLE_API uint64_t capcycle_get_space_limit(void);
CAPCYCLE_API void capcycle_set_space_limit(uint64_t limit);

/* Allocations */
CAPCYCLE_API capcycle_status capcycle_allocation_create(const int64_t* values, size_t k,
                                                        capcycle_allocation** out);
CAPCYCLE_API capcycle_status capcycle_allocation_parse(const char* text, capcycle_allocation** out);
CAPCYCLE_API void capcycle_allocation_destroy(capcycle_allocation* a);
CAPCYCLE_API size_t capcycle_allocation_k(const capcycle_allocation* a);
CAPCYCLE_API int64_t capcycle_allocation_budget(const capcycle_allocation* a);
/* Copies min(k, capacity) values; returns k. */
CAPCYCLE_API size_t capcycle_allocation_values(const capcycle_allocation* a, int64_t* out,
                                               size_t capacity);
CAPCYCLE_API capcycle_status capcycle_allocation_canonicalize(const capcycle_allocation* a,
                                                              capcycle_allocation** out);

/* Strategy spaces. Enumerations return count * k values, row-major. */
CAPCYCLE_API capcycle_status capcycle_composition_count(int64_t budget, size_t k, uint64_t* out);
CAPCYCLE_API capcycle_status capcycle_enumerate(int64_t budget, size_t k, int partitions,
                                                int64_t** values_out, size_t* count_out);

/* Matchups */
CAPCYCLE_API capcycle_status capcycle_matchup_create(const capcycle_allocation* a,
                                                     const capcycle_allocation* b,
                                                     capcycle_matchup** out);
CAPCYCLE_API void capcycle_matchup_destroy(capcycle_matchup* m);
CAPCYCLE_API size_t capcycle_matchup_k(const capcycle_matchup* m);
CAPCYCLE_API void capcycle_matchup_counts(const capcycle_matchup* m, uint64_t* wins_a,
                                          uint64_t* wins_b, uint64_t* ties);
CAPCYCLE_API capcycle_cell capcycle_matchup_cell(const capcycle_matchup* m, size_t i, size_t j);
CAPCYCLE_API capcycle_outcome capcycle_matchup_outcome(const capcycle_matchup* m);
CAPCYCLE_API capcycle_status capcycle_matchup_win_probability(const capcycle_matchup* m,
                                                              capcycle_tie_policy policy,
                                                              uint64_t* num, uint64_t* den);
/* TEXT, JSON or CSV. Labels may be NULL ("A"/"B"). */
CAPCYCLE_API capcycle_status capcycle_matchup_render(const capcycle_matchup* m,
                                                     capcycle_format format, const char* label_a,
                                                     const char* label_b, char** out);
CAPCYCLE_API capcycle_status capcycle_dominates(const capcycle_allocation* a,
                                                const capcycle_allocation* b, int* out);

/* Dominance graph over all partitions of a cap */
CAPCYCLE_API capcycle_status capcycle_graph_build(int64_t budget, size_t k, capcycle_graph** out);
CAPCYCLE_API void capcycle_graph_destroy(capcycle_graph* g);
CAPCYCLE_API size_t capcycle_graph_node_count(const capcycle_graph* g);
CAPCYCLE_API size_t capcycle_graph_edge_count(const capcycle_graph* g);
CAPCYCLE_API size_t capcycle_graph_draw_count(const capcycle_graph* g);
CAPCYCLE_API capcycle_status capcycle_graph_node(const capcycle_graph* g, size_t index,
                                                 int64_t* values, size_t capacity);
CAPCYCLE_API capcycle_status capcycle_graph_edge(const capcycle_graph* g, size_t index,
                                                 size_t* winner, size_t* loser, uint64_t* margin);
/* Flat arrays: 3 node indices per cycle; one component id per node. */
CAPCYCLE_API capcycle_status capcycle_graph_three_cycles(const capcycle_graph* g,
                                                         size_t** triples_out, size_t* count_out);
CAPCYCLE_API capcycle_status capcycle_graph_scc(const capcycle_graph* g, size_t** component_of,
                                                size_t* component_count);
/* Node indices with no strict dominator; *holds is 1 iff there are none. */
CAPCYCLE_API capcycle_status capcycle_graph_claim(const capcycle_graph* g, int* holds,
                                                  size_t** undominated_out, size_t* count_out);
/* DOT or JSON. */
CAPCYCLE_API capcycle_status capcycle_graph_render(const capcycle_graph* g, capcycle_format format,
                                                   char** out);

/* Best same-cap counter. *found is 0 and *counter_out NULL when none exists. */
CAPCYCLE_API capcycle_status capcycle_counter_strategy(const capcycle_allocation* a, int64_t budget,
                                                       int* found, capcycle_allocation** counter_out,
                                                       uint64_t* margin);

/* Full strategy-space report, TEXT or JSON. */
CAPCYCLE_API capcycle_status capcycle_analyze(int64_t budget, size_t k, capcycle_format format,
                                              char** out);

/* Simulation */
CAPCYCLE_API uint64_t capcycle_splitmix64_next(uint64_t* state);
CAPCYCLE_API capcycle_status capcycle_simulate_games(const capcycle_allocation* a,
                                                     const capcycle_allocation* b,
                                                     const capcycle_sim_config* config,
                                                     capcycle_sim_stats* stats);
CAPCYCLE_API capcycle_status capcycle_simulate_best_of(const capcycle_allocation* a,
                                                       const capcycle_allocation* b,
                                                       const capcycle_sim_config* config,
                                                       capcycle_sim_stats* stats);
/* Games, plus series when best_of is set; TEXT or JSON. */
CAPCYCLE_API capcycle_status capcycle_simulate_render(const capcycle_allocation* a,
                                                      const capcycle_allocation* b,
                                                      const capcycle_sim_config* config,
                                                      capcycle_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAPCYCLE_CAPCYCLE_H_ */
