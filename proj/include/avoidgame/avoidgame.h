/*
 * Copyright 2026 The avoidgame Authors
 *
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

/* C interface to the avoidgame library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every call returns an ag_status; on failure the
 * message is available from ag_last_error() on the same thread. Strings
 * handed out by the library are released with ag_string_free().
 */

#ifndef AVOIDGAME_H
#define AVOIDGAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(AG_BUILDING_LIBRARY)
#define AG_API __attribute__((visibility("default")))
#else
#define AG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ag_status {
    AG_OK = 0,
    AG_E_INVALID_ARGUMENT = 1, /* null handle, bad flag value, wrong turn */
    AG_E_PARSE = 2,
    AG_E_VALIDATION = 3,       /* input well formed but rejected by a precondition */
    AG_E_TIMEOUT = 4,
    AG_E_NODE_LIMIT = 5,
    AG_E_IO = 6,
    AG_E_INTERNAL = 7
} ag_status;

typedef enum ag_outcome {
    AG_AVOIDER = 0,
    AG_ENFORCER,
    AG_FIRST_LOSES,
    AG_SECOND_LOSES,
    AG_DRAW,
    AG_DOMINATOR,
    AG_STALLER,
    AG_SATISFIER,
    AG_FALSIFIER
} ag_outcome;

typedef enum ag_game {
    AG_GAME_AE = 0,
    AG_GAME_AA = 1
} ag_game;

typedef enum ag_role {
    AG_ROLE_AUTO = 0, /* the side the QBF winner corresponds to */
    AG_ROLE_AVOIDER = 1,
    AG_ROLE_ENFORCER = 2
} ag_role;

typedef struct ag_hypergraph ag_hypergraph;
typedef struct ag_graph ag_graph;
typedef struct ag_formula ag_formula;

typedef struct ag_solve_options {
    int dominated_pruning; /* nonzero enables pruning (Avoider-Enforcer only) */
    size_t tt_bytes;       /* transposition table budget */
    double timeout_s;      /* 0 disables */
    uint64_t node_limit;   /* 0 disables */
} ag_solve_options;

#define AG_MAX_VERTICES 64

typedef struct ag_solve_result {
    ag_outcome outcome;
    uint64_t nodes;
    uint64_t table_hits;
    double elapsed_s;
    size_t pv_length;
    int32_t pv[AG_MAX_VERTICES]; /* principal variation, first mover first */
} ag_solve_result;

typedef struct ag_oracle_move {
    int32_t vertex;
    ag_role role;     /* the side that moves */
    int fallback;     /* nonzero when the exact solver chose the move */
    char note[128];   /* fallback reason, empty otherwise */
} ag_oracle_move;

typedef void (*ag_line_fn)(const char* line, void* user);

AG_API const char* ag_version(void);
AG_API const char* ag_last_error(void);
AG_API const char* ag_outcome_token(ag_outcome outcome);
AG_API void ag_string_free(char* s);
AG_API void ag_solve_options_default(ag_solve_options* opts);

/* Whole-file helpers so callers need no C++ runtime for I/O. */
AG_API ag_status ag_read_file(const char* path, char** out);
AG_API ag_status ag_write_file(const char* path, const char* text);

AG_API ag_status ag_hypergraph_parse(const char* text, ag_hypergraph** out);
/* Edges are given back to back in `vertices`, with `sizes[i]` entries for edge i. */
AG_API ag_status ag_hypergraph_create(int32_t num_vertices, const int32_t* vertices, const size_t* sizes,
                                      size_t num_edges, ag_hypergraph** out);
AG_API ag_status ag_hypergraph_write(const ag_hypergraph* h, char** out);
AG_API int32_t ag_hypergraph_num_vertices(const ag_hypergraph* h);
AG_API size_t ag_hypergraph_num_edges(const ag_hypergraph* h);
AG_API void ag_hypergraph_free(ag_hypergraph* h);

AG_API ag_status ag_graph_parse(const char* text, ag_graph** out);
AG_API ag_status ag_graph_write(const ag_graph* g, char** out);
AG_API int32_t ag_graph_num_vertices(const ag_graph* g);
AG_API size_t ag_graph_num_edges(const ag_graph* g);
AG_API void ag_graph_free(ag_graph* g);

/* Position file: move lists on "m" lines. Release the array with ag_moves_free. */
AG_API ag_status ag_position_parse(const char* text, int32_t** moves, size_t* num_moves);
AG_API void ag_moves_free(int32_t* moves);

AG_API ag_status ag_formula_parse(const char* text, ag_formula** out);
AG_API ag_status ag_formula_write(const ag_formula* f, char** out);
AG_API int32_t ag_formula_rounds(const ag_formula* f);
AG_API void ag_formula_free(ag_formula* f);

/* opts may be NULL for defaults. */
AG_API ag_status ag_solve_ae(const ag_hypergraph* h, const ag_solve_options* opts, ag_solve_result* out);
AG_API ag_status ag_solve_aa(const ag_hypergraph* h, const ag_solve_options* opts, ag_solve_result* out);
AG_API ag_status ag_solve_domination(const ag_graph* g, const ag_solve_options* opts, ag_solve_result* out);
AG_API ag_status ag_solve_hgame(const ag_graph* g, const ag_graph* pattern, const ag_solve_options* opts,
                                ag_solve_result* out);
AG_API ag_status ag_solve_qbf(const ag_formula* f, ag_outcome* out);

/* Value and lowest-id optimal move of the position reached by `moves`. */
AG_API ag_status ag_position_value(const ag_hypergraph* h, ag_game game, const int32_t* moves, size_t num_moves,
                                   const ag_solve_options* opts, ag_outcome* out);
AG_API ag_status ag_best_move(const ag_hypergraph* h, ag_game game, const int32_t* moves, size_t num_moves,
                              const ag_solve_options* opts, int32_t* out);

/* Reductions. `labels_json` may be NULL; otherwise it receives the vertex
 * labels and edge provenance as JSON. */
AG_API ag_status ag_reduce_qbf_to_ae(const ag_formula* f, ag_hypergraph** out, char** labels_json);
AG_API ag_status ag_uniformize(const ag_hypergraph* h, int32_t k, ag_hypergraph** out, char** labels_json);
AG_API ag_status ag_ae_to_aa(const ag_hypergraph* h, ag_hypergraph** out, char** labels_json);
AG_API ag_status ag_ae_to_domination(const ag_hypergraph* h, ag_graph** out, char** labels_json);
/* h0 NULL means a single edge. pattern_out may be NULL. */
AG_API ag_status ag_ae_to_hgame(const ag_hypergraph* h, int32_t k, const ag_graph* h0, ag_graph** out,
                                ag_graph** pattern_out, char** labels_json);

/* Strategy oracle move on the board reduce_qbf_to_ae(f) after `moves`. */
AG_API ag_status ag_analyze(const ag_formula* f, ag_role role, const int32_t* moves, size_t num_moves,
                            const ag_solve_options* opts, ag_oracle_move* out);

/* Runs a named verification suite ("all", "reductions" or one suite name),
 * streaming report lines to `sink`. *all_passed is set on success. */
AG_API size_t ag_verify_suite_count(void);
AG_API const char* ag_verify_suite_name(size_t i);
AG_API ag_status ag_verify(const char* suite, uint64_t seed, ag_line_fn sink, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
