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

#include "avoidgame/avoidgame.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "avoidgame/io.hpp"
#include "avoidgame/qbf.hpp"
#include "avoidgame/reductions.hpp"
#include "avoidgame/solver.hpp"
#include "avoidgame/strategies.hpp"
#include "avoidgame/verify.hpp"

using namespace avoidgame;

struct ag_hypergraph {
    Hypergraph value;
};

struct ag_graph {
    Graph value;
};

struct ag_formula {
    QbfFormula value;
};

namespace {

thread_local std::string last_error;

ag_status fail(ag_status s, std::string msg)
{
    last_error = std::move(msg);
    return s;
}

ag_status status_of(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError: return AG_E_PARSE;
    case ErrorCode::Timeout: return AG_E_TIMEOUT;
    case ErrorCode::NodeLimit: return AG_E_NODE_LIMIT;
    case ErrorCode::InvalidArgument: return AG_E_INVALID_ARGUMENT;
    default: return AG_E_VALIDATION;
    }
}

/// Runs body and converts exceptions into status codes.
template <class F>
ag_status guarded(F&& body)
{
    try {
        last_error.clear();
        body();
        return AG_OK;
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(AG_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(AG_E_INTERNAL, e.what());
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SolveOptions to_options(const ag_solve_options* o)
{
    SolveOptions out;
    if (o) {
        out.use_dominated_pruning = o->dominated_pruning != 0;
        out.transposition_budget = o->tt_bytes;
        out.timeout_s = o->timeout_s;
        out.node_limit = o->node_limit;
    }
    out.validate();
    return out;
}

ag_outcome to_c(Outcome o)
{
    switch (o) {
    case Outcome::AvoiderWins: return AG_AVOIDER;
    case Outcome::EnforcerWins: return AG_ENFORCER;
    case Outcome::FirstPlayerLoses: return AG_FIRST_LOSES;
    case Outcome::SecondPlayerLoses: return AG_SECOND_LOSES;
    case Outcome::Draw: return AG_DRAW;
    case Outcome::DominatorWins: return AG_DOMINATOR;
    case Outcome::StallerWins: return AG_STALLER;
    }
    return AG_DRAW;
}

void fill(const SolveReport& r, ag_solve_result* out)
{
    *out = ag_solve_result{};
    out->outcome = to_c(r.outcome);
    out->nodes = r.nodes;
    out->table_hits = r.table_hits;
    out->elapsed_s = r.elapsed_s;
    out->pv_length = std::min<std::size_t>(r.principal_variation.size(), AG_MAX_VERTICES);
    for (std::size_t i = 0; i < out->pv_length; ++i)
        out->pv[i] = r.principal_variation[i];
}

std::vector<Vertex> to_moves(const int32_t* moves, size_t n)
{
    require(moves || n == 0, "moves is null");
    return std::vector<Vertex>(moves, moves + n);
}

void emit_labels(const ReductionMetadata& meta, char** labels_json)
{
    if (labels_json)
        *labels_json = dup_string(metadata_to_json(meta));
}

} // namespace

extern "C" {

const char* ag_version(void) { return "0.1.0"; }

const char* ag_last_error(void) { return last_error.c_str(); }

const char* ag_outcome_token(ag_outcome outcome)
{
    switch (outcome) {
    case AG_AVOIDER: return "AVOIDER";
    case AG_ENFORCER: return "ENFORCER";
    case AG_FIRST_LOSES: return "FIRST_LOSES";
    case AG_SECOND_LOSES: return "SECOND_LOSES";
    case AG_DRAW: return "DRAW";
    case AG_DOMINATOR: return "DOMINATOR";
    case AG_STALLER: return "STALLER";
    case AG_SATISFIER: return "SATISFIER";
    case AG_FALSIFIER: return "FALSIFIER";
    }
    return "UNKNOWN";
}

void ag_string_free(char* s) { std::free(s); }

void ag_solve_options_default(ag_solve_options* opts)
{
    if (!opts)
        return;
    const SolveOptions d;
    opts->dominated_pruning = d.use_dominated_pruning ? 1 : 0;
    opts->tt_bytes = d.transposition_budget;
    opts->timeout_s = d.timeout_s;
    opts->node_limit = d.node_limit;
}

ag_status ag_read_file(const char* path, char** out)
{
    if (!path || !out)
        return fail(AG_E_INVALID_ARGUMENT, "null argument");
    ag_status s = guarded([&] { *out = dup_string(read_text_file(path)); });
    return s == AG_E_INVALID_ARGUMENT ? AG_E_IO : s;
}

ag_status ag_write_file(const char* path, const char* text)
{
    if (!path || !text)
        return fail(AG_E_INVALID_ARGUMENT, "null argument");
    ag_status s = guarded([&] { write_text_file(path, text); });
    return s == AG_E_INVALID_ARGUMENT ? AG_E_IO : s;
}

// --- hypergraphs -----------------------------------------------------------

ag_status ag_hypergraph_parse(const char* text, ag_hypergraph** out)
{
    return guarded([&] {
        require(text && out, "null argument");
        *out = new ag_hypergraph{parse_hypergraph(text)};
    });
}

ag_status ag_hypergraph_create(int32_t num_vertices, const int32_t* vertices, const size_t* sizes, size_t num_edges,
                               ag_hypergraph** out)
{
    return guarded([&] {
        require(out && (num_edges == 0 || (vertices && sizes)), "null argument");
        std::vector<std::vector<Vertex>> edges;
        std::size_t at = 0;
        for (std::size_t i = 0; i < num_edges; ++i) {
            edges.emplace_back(vertices + at, vertices + at + sizes[i]);
            at += sizes[i];
        }
        *out = new ag_hypergraph{Hypergraph(num_vertices, std::move(edges))};
    });
}

ag_status ag_hypergraph_write(const ag_hypergraph* h, char** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        *out = dup_string(write_hypergraph(h->value));
    });
}

int32_t ag_hypergraph_num_vertices(const ag_hypergraph* h) { return h ? h->value.num_vertices() : -1; }

size_t ag_hypergraph_num_edges(const ag_hypergraph* h) { return h ? h->value.num_edges() : 0; }

void ag_hypergraph_free(ag_hypergraph* h) { delete h; }

// --- graphs ----------------------------------------------------------------

ag_status ag_graph_parse(const char* text, ag_graph** out)
{
    return guarded([&] {
        require(text && out, "null argument");
        *out = new ag_graph{parse_graph(text)};
    });
}

ag_status ag_graph_write(const ag_graph* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup_string(write_graph(g->value));
    });
}

int32_t ag_graph_num_vertices(const ag_graph* g) { return g ? g->value.num_vertices() : -1; }

size_t ag_graph_num_edges(const ag_graph* g) { return g ? g->value.num_edges() : 0; }

void ag_graph_free(ag_graph* g) { delete g; }

// --- positions -------------------------------------------------------------

ag_status ag_position_parse(const char* text, int32_t** moves, size_t* num_moves)
{
    return guarded([&] {
        require(text && moves && num_moves, "null argument");
        const std::vector<Vertex> m = parse_position(text);
        auto* out = static_cast<int32_t*>(std::malloc(std::max<std::size_t>(m.size(), 1) * sizeof(int32_t)));
        if (!out)
            throw std::bad_alloc();
        std::copy(m.begin(), m.end(), out);
        *moves = out;
        *num_moves = m.size();
    });
}

void ag_moves_free(int32_t* moves) { std::free(moves); }

// --- formulas --------------------------------------------------------------

ag_status ag_formula_parse(const char* text, ag_formula** out)
{
    return guarded([&] {
        require(text && out, "null argument");
        *out = new ag_formula{parse_qdimacs(text)};
    });
}

ag_status ag_formula_write(const ag_formula* f, char** out)
{
    return guarded([&] {
        require(f && out, "null argument");
        *out = dup_string(write_qdimacs(f->value));
    });
}

int32_t ag_formula_rounds(const ag_formula* f) { return f ? f->value.rounds() : -1; }

void ag_formula_free(ag_formula* f) { delete f; }

// --- solvers ---------------------------------------------------------------

ag_status ag_solve_ae(const ag_hypergraph* h, const ag_solve_options* opts, ag_solve_result* out)
{
    return guarded([&] {
        require(h && out, "null argument");
        fill(solve_ae(h->value, to_options(opts)), out);
    });
}

ag_status ag_solve_aa(const ag_hypergraph* h, const ag_solve_options* opts, ag_solve_result* out)
{
    return guarded([&] {
        require(h && out, "null argument");
        fill(solve_aa(h->value, to_options(opts)), out);
    });
}

ag_status ag_solve_domination(const ag_graph* g, const ag_solve_options* opts, ag_solve_result* out)
{
    return guarded([&] {
        require(g && out, "null argument");
        fill(solve_domination(g->value, to_options(opts)), out);
    });
}

ag_status ag_solve_hgame(const ag_graph* g, const ag_graph* pattern, const ag_solve_options* opts,
                         ag_solve_result* out)
{
    return guarded([&] {
        require(g && pattern && out, "null argument");
        fill(solve_hgame(g->value, pattern->value, to_options(opts)), out);
    });
}

ag_status ag_solve_qbf(const ag_formula* f, ag_outcome* out)
{
    return guarded([&] {
        require(f && out, "null argument");
        *out = solve_qbf_game(f->value) == QbfWinner::Satisfier ? AG_SATISFIER : AG_FALSIFIER;
    });
}

namespace {

GameKind to_kind(ag_game game)
{
    require(game == AG_GAME_AE || game == AG_GAME_AA, "unknown game");
    return game == AG_GAME_AE ? GameKind::AvoiderEnforcer : GameKind::AvoiderAvoider;
}

} // namespace

ag_status ag_position_value(const ag_hypergraph* h, ag_game game, const int32_t* moves, size_t num_moves,
                            const ag_solve_options* opts, ag_outcome* out)
{
    return guarded([&] {
        require(h && out, "null argument");
        const PlayState s = PlayState::replay(h->value.num_vertices(), to_moves(moves, num_moves));
        *out = to_c(position_value(h->value, to_kind(game), s, to_options(opts)));
    });
}

ag_status ag_best_move(const ag_hypergraph* h, ag_game game, const int32_t* moves, size_t num_moves,
                       const ag_solve_options* opts, int32_t* out)
{
    return guarded([&] {
        require(h && out, "null argument");
        const PlayState s = PlayState::replay(h->value.num_vertices(), to_moves(moves, num_moves));
        *out = best_move(h->value, to_kind(game), s, to_options(opts));
    });
}

// --- reductions ------------------------------------------------------------

ag_status ag_reduce_qbf_to_ae(const ag_formula* f, ag_hypergraph** out, char** labels_json)
{
    return guarded([&] {
        require(f && out, "null argument");
        LabeledReduction red = reduce_qbf_to_ae(f->value);
        emit_labels(red.metadata(), labels_json);
        *out = new ag_hypergraph{std::move(red.hypergraph)};
    });
}

ag_status ag_uniformize(const ag_hypergraph* h, int32_t k, ag_hypergraph** out, char** labels_json)
{
    return guarded([&] {
        require(h && out, "null argument");
        ReductionMetadata meta;
        Hypergraph r = to_k_uniform(h->value, k, &meta);
        emit_labels(meta, labels_json);
        *out = new ag_hypergraph{std::move(r)};
    });
}

ag_status ag_ae_to_aa(const ag_hypergraph* h, ag_hypergraph** out, char** labels_json)
{
    return guarded([&] {
        require(h && out, "null argument");
        ReductionMetadata meta;
        Hypergraph r = ae_to_aa(h->value, &meta);
        emit_labels(meta, labels_json);
        *out = new ag_hypergraph{std::move(r)};
    });
}

ag_status ag_ae_to_domination(const ag_hypergraph* h, ag_graph** out, char** labels_json)
{
    return guarded([&] {
        require(h && out, "null argument");
        ReductionMetadata meta;
        Graph r = ae_to_domination(h->value, &meta);
        emit_labels(meta, labels_json);
        *out = new ag_graph{std::move(r)};
    });
}

ag_status ag_ae_to_hgame(const ag_hypergraph* h, int32_t k, const ag_graph* h0, ag_graph** out,
                         ag_graph** pattern_out, char** labels_json)
{
    return guarded([&] {
        require(h && out, "null argument");
        PatternSpec spec{k, h0 ? h0->value : path2()};
        ReductionMetadata meta;
        HGameReduction r = reduce_ae_to_hgame(h->value, spec, &meta);
        // Allocate everything before handing ownership out.
        auto graph = std::make_unique<ag_graph>(ag_graph{std::move(r.graph)});
        std::unique_ptr<ag_graph> pattern;
        if (pattern_out)
            pattern = std::make_unique<ag_graph>(ag_graph{std::move(r.pattern)});
        emit_labels(meta, labels_json);
        *out = graph.release();
        if (pattern_out)
            *pattern_out = pattern.release();
    });
}

// --- oracles ---------------------------------------------------------------

ag_status ag_analyze(const ag_formula* f, ag_role role, const int32_t* moves, size_t num_moves,
                     const ag_solve_options* opts, ag_oracle_move* out)
{
    return guarded([&] {
        require(f && out, "null argument");
        require(role == AG_ROLE_AUTO || role == AG_ROLE_AVOIDER || role == AG_ROLE_ENFORCER, "unknown role");
        const LabeledReduction red = reduce_qbf_to_ae(f->value);
        const History history = to_moves(moves, num_moves);
        if (role == AG_ROLE_AUTO)
            role = solve_qbf_game(f->value) == QbfWinner::Satisfier ? AG_ROLE_AVOIDER : AG_ROLE_ENFORCER;
        OracleMove m;
        if (role == AG_ROLE_AVOIDER) {
            AvoiderOracle oracle(red, f->value, to_options(opts));
            m = oracle.move(history);
        } else {
            m = EnforcerOracle(red, f->value).move(history);
        }
        *out = ag_oracle_move{};
        out->vertex = m.vertex;
        out->role = role;
        out->fallback = m.fallback ? 1 : 0;
        std::strncpy(out->note, m.note.c_str(), sizeof out->note - 1);
    });
}

// --- verification ----------------------------------------------------------

size_t ag_verify_suite_count(void) { return suite_names().size(); }

const char* ag_verify_suite_name(size_t i)
{
    static const std::vector<std::string> names = suite_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

ag_status ag_verify(const char* suite, uint64_t seed, ag_line_fn sink, void* user, int* all_passed)
{
    return guarded([&] {
        require(suite && all_passed, "null argument");
        const auto results = run_verify(suite, seed, [&](const std::string& line) {
            if (sink)
                sink(line.c_str(), user);
        });
        bool ok = true;
        for (const SuiteResult& r : results)
            ok = ok && r.passed;
        *all_passed = ok ? 1 : 0;
    });
}

} // extern "C"
