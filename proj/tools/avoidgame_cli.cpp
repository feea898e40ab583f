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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoidgame/avoidgame.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kLimit = 3 };

/// Carries a library status out of nested helpers.
struct Failure {
    ag_status status;
    std::string message;
};

void check(ag_status s)
{
    if (s != AG_OK)
        throw Failure{s, ag_last_error()};
}

int exit_code(ag_status s)
{
    switch (s) {
    case AG_E_TIMEOUT:
    case AG_E_NODE_LIMIT: return kLimit;
    case AG_E_INTERNAL: return kFailed;
    default: return kInvalid;
    }
}

struct CString {
    char* p = nullptr;
    ~CString() { ag_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

std::string read_file(const std::string& path)
{
    CString text;
    check(ag_read_file(path.c_str(), &text.p));
    return text.str();
}

/// Writes to `path`, or to stdout when path is empty.
void write_output(const std::string& path, const std::string& text)
{
    if (path.empty())
        std::cout << text;
    else
        check(ag_write_file(path.c_str(), text.c_str()));
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using HypergraphH = Handle<ag_hypergraph, ag_hypergraph_free>;
using GraphH = Handle<ag_graph, ag_graph_free>;
using FormulaH = Handle<ag_formula, ag_formula_free>;

void load(const std::string& path, HypergraphH& h) { check(ag_hypergraph_parse(read_file(path).c_str(), &h.p)); }
void load(const std::string& path, GraphH& g) { check(ag_graph_parse(read_file(path).c_str(), &g.p)); }
void load(const std::string& path, FormulaH& f) { check(ag_formula_parse(read_file(path).c_str(), &f.p)); }

std::vector<int32_t> load_position(const std::string& path)
{
    int32_t* moves = nullptr;
    size_t n = 0;
    check(ag_position_parse(read_file(path).c_str(), &moves, &n));
    std::vector<int32_t> out(moves, moves + n);
    ag_moves_free(moves);
    return out;
}

struct Flags {
    std::string output;
    std::string labels;
    std::string pattern;
    std::string pattern_out;
    std::string role = "auto";
    int k = 6;
    std::uint64_t seed = 1;
    double timeout_s = 0.0;
    std::size_t tt_bytes = 0;
    bool no_pruning = false;
};

ag_solve_options options(const Flags& f)
{
    ag_solve_options o;
    ag_solve_options_default(&o);
    o.dominated_pruning = f.no_pruning ? 0 : 1;
    o.timeout_s = f.timeout_s;
    if (f.tt_bytes)
        o.tt_bytes = f.tt_bytes;
    return o;
}

void report(const ag_solve_result& r)
{
    std::cout << "nodes " << r.nodes << "\n";
    std::cout << "table_hits " << r.table_hits << "\n";
    std::cout << "elapsed_s " << r.elapsed_s << "\n";
    std::cout << "pv";
    for (size_t i = 0; i < r.pv_length; ++i)
        std::cout << ' ' << r.pv[i];
    std::cout << "\n" << ag_outcome_token(r.outcome) << "\n";
}

int run_solve(const std::string& game, const std::string& input, const Flags& f)
{
    const ag_solve_options o = options(f);
    ag_solve_result r;
    if (game == "qbf") {
        FormulaH q;
        load(input, q);
        ag_outcome w;
        check(ag_solve_qbf(q.p, &w));
        std::cout << ag_outcome_token(w) << "\n";
        return kOk;
    }
    if (game == "ae" || game == "aa") {
        HypergraphH h;
        load(input, h);
        check(game == "ae" ? ag_solve_ae(h.p, &o, &r) : ag_solve_aa(h.p, &o, &r));
    } else if (game == "domination") {
        GraphH g;
        load(input, g);
        check(ag_solve_domination(g.p, &o, &r));
    } else {
        if (f.pattern.empty())
            throw Failure{AG_E_INVALID_ARGUMENT, "solve hgame needs --pattern"};
        GraphH g, p;
        load(input, g);
        load(f.pattern, p);
        check(ag_solve_hgame(g.p, p.p, &o, &r));
    }
    report(r);
    return kOk;
}

void write_labels(const Flags& f, const CString& labels)
{
    if (!f.labels.empty())
        check(ag_write_file(f.labels.c_str(), labels.str().c_str()));
}

int run_reduce(const std::string& which, const std::string& input, const Flags& f)
{
    CString labels;
    char** want = f.labels.empty() ? nullptr : &labels.p;
    CString text;
    std::ostringstream summary;
    if (which == "qbf-to-ae" || which == "uniformize" || which == "ae-to-aa") {
        HypergraphH out;
        if (which == "qbf-to-ae") {
            FormulaH q;
            load(input, q);
            check(ag_reduce_qbf_to_ae(q.p, &out.p, want));
        } else {
            HypergraphH h;
            load(input, h);
            check(which == "uniformize" ? ag_uniformize(h.p, f.k, &out.p, want) : ag_ae_to_aa(h.p, &out.p, want));
        }
        check(ag_hypergraph_write(out.p, &text.p));
        summary << "hypergraph " << ag_hypergraph_num_vertices(out.p) << " vertices " << ag_hypergraph_num_edges(out.p)
                << " edges";
    } else {
        HypergraphH h;
        load(input, h);
        GraphH out;
        if (which == "ae-to-domination") {
            check(ag_ae_to_domination(h.p, &out.p, want));
        } else {
            GraphH h0, pattern;
            if (!f.pattern.empty())
                load(f.pattern, h0);
            check(ag_ae_to_hgame(h.p, f.k, h0.p, &out.p, &pattern.p, want));
            if (!f.pattern_out.empty()) {
                CString ptext;
                check(ag_graph_write(pattern.p, &ptext.p));
                check(ag_write_file(f.pattern_out.c_str(), ptext.p));
            }
        }
        check(ag_graph_write(out.p, &text.p));
        summary << "graph " << ag_graph_num_vertices(out.p) << " vertices " << ag_graph_num_edges(out.p) << " edges";
    }
    write_output(f.output, text.str());
    write_labels(f, labels);
    // Keep stdout clean for the reduction itself when it goes there.
    (f.output.empty() ? std::cerr : std::cout) << summary.str() << "\n";
    return kOk;
}

/// "u3", "x1", "xbar2" from the label JSON of the reduction.
std::string vertex_name(const std::string& labels_json, int32_t v)
{
    const auto j = nlohmann::json::parse(labels_json);
    for (const auto& e : j.at("vertices"))
        if (e.at("id").get<int>() == v)
            return e.at("kind").get<std::string>() + std::to_string(e.at("index").get<int>());
    return "?";
}

int run_analyze(const std::string& formula, const std::string& position, const Flags& f)
{
    static const std::map<std::string, ag_role> roles = {
        {"auto", AG_ROLE_AUTO}, {"avoider", AG_ROLE_AVOIDER}, {"enforcer", AG_ROLE_ENFORCER}};
    FormulaH q;
    load(formula, q);
    const std::vector<int32_t> moves = position.empty() ? std::vector<int32_t>{} : load_position(position);
    const ag_solve_options o = options(f);
    ag_oracle_move m;
    check(ag_analyze(q.p, roles.at(f.role), moves.data(), moves.size(), &o, &m));

    HypergraphH board;
    CString labels;
    check(ag_reduce_qbf_to_ae(q.p, &board.p, &labels.p));
    std::cout << "oracle " << (m.role == AG_ROLE_AVOIDER ? "AVOIDER" : "ENFORCER") << "\n";
    std::cout << "label " << vertex_name(labels.str(), m.vertex) << "\n";
    if (m.fallback)
        std::cout << "fallback " << m.note << "\n";
    std::cout << "MOVE " << m.vertex << "\n";
    return kOk;
}

int run_verify(const std::string& suite, const Flags& f)
{
    int passed = 0;
    auto sink = [](const char* line, void*) {
        std::cout << line << "\n";
        std::cout.flush();
    };
    check(ag_verify(suite.c_str(), f.seed, sink, nullptr, &passed));
    std::cout << (passed ? "ALL PASS" : "FAILED") << "\n";
    return passed ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solvers, reductions and strategy oracles for avoidance positional games"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ag_version());
    Flags f;

    auto add_limits = [&f](CLI::App* c) {
        c->add_option("--timeout-s", f.timeout_s, "Search time limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);
        c->add_option("--tt-bytes", f.tt_bytes, "Transposition table budget in bytes");
        c->add_flag("--no-dominated-pruning", f.no_pruning, "Search every move in Avoider-Enforcer games");
    };

    std::string game, input, kind, position, suite;

    auto* solve = app.add_subcommand("solve", "Solve a game exactly");
    solve->add_option("game", game)->required()->check(CLI::IsMember({"ae", "aa", "domination", "hgame", "qbf"}));
    solve->add_option("input", input, ".hg, DIMACS graph or QDIMACS file")->required();
    solve->add_option("--pattern", f.pattern, "Pattern graph for hgame");
    add_limits(solve);

    auto* reduce = app.add_subcommand("reduce", "Build a reduction");
    reduce->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"qbf-to-ae", "uniformize", "ae-to-aa", "ae-to-domination", "ae-to-hgame"}));
    reduce->add_option("input", input)->required();
    reduce->add_option("-o,--output", f.output, "Output file (stdout when omitted)");
    reduce->add_option("--labels", f.labels, "Write vertex labels and edge provenance as JSON");
    reduce->add_option("-k", f.k, "Target edge size, or independent-set size of the pattern")->capture_default_str();
    reduce->add_option("--pattern", f.pattern, "H0 graph for ae-to-hgame (default: one edge)");
    reduce->add_option("--pattern-out", f.pattern_out, "Write the resulting pattern graph");

    auto* analyze = app.add_subcommand("analyze", "Strategy oracle move on the reduction of a formula");
    analyze->add_option("formula", input, "QDIMACS file")->required();
    analyze->add_option("position", position, "Position file (empty board when omitted)");
    analyze->add_option("--role", f.role, "auto, avoider or enforcer")->capture_default_str()
        ->check(CLI::IsMember({"auto", "avoider", "enforcer"}));
    add_limits(analyze);

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::vector<std::string> suites = {"all", "reductions"};
    for (size_t i = 0; i < ag_verify_suite_count(); ++i)
        suites.emplace_back(ag_verify_suite_name(i));
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--seed", f.seed, "64-bit seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (solve->parsed())
            return run_solve(game, input, f);
        if (reduce->parsed())
            return run_reduce(kind, input, f);
        if (analyze->parsed())
            return run_analyze(input, position, f);
        return run_verify(suite, f);
    } catch (const Failure& e) {
        std::cerr << "error: " << e.message << "\n";
        return exit_code(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
