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

#include <doctest.h>

#include <string>
#include <vector>

#include "avoidgame/avoidgame.h"

TEST_CASE("parse, solve and write through the C interface")
{
    ag_hypergraph* h = nullptr;
    REQUIRE(ag_hypergraph_parse("p hg 2 1\ne 1 2\n", &h) == AG_OK);
    CHECK(ag_hypergraph_num_vertices(h) == 2);
    CHECK(ag_hypergraph_num_edges(h) == 1);

    ag_solve_result r;
    REQUIRE(ag_solve_ae(h, nullptr, &r) == AG_OK);
    CHECK(r.outcome == AG_AVOIDER);
    CHECK(std::string(ag_outcome_token(r.outcome)) == "AVOIDER");
    CHECK(r.pv_length == 2);

    char* text = nullptr;
    REQUIRE(ag_hypergraph_write(h, &text) == AG_OK);
    CHECK(std::string(text) == "p hg 2 1\ne 1 2\n");
    ag_string_free(text);

    ag_hypergraph* aa = nullptr;
    char* labels = nullptr;
    REQUIRE(ag_ae_to_aa(h, &aa, &labels) == AG_OK);
    CHECK(std::string(labels).find("v0") != std::string::npos);
    REQUIRE(ag_solve_aa(aa, nullptr, &r) == AG_OK);
    CHECK(r.outcome == AG_DRAW);
    ag_string_free(labels);
    ag_hypergraph_free(aa);
    ag_hypergraph_free(h);
}

TEST_CASE("errors carry a status and a message")
{
    ag_hypergraph* h = nullptr;
    CHECK(ag_hypergraph_parse("p hg 2 1\ne 1 x\n", &h) == AG_E_PARSE);
    CHECK(h == nullptr);
    CHECK(std::string(ag_last_error()).find("line 2") != std::string::npos);
    CHECK(ag_hypergraph_parse(nullptr, &h) == AG_E_INVALID_ARGUMENT);

    const int32_t vs[] = {1, 2, 3};
    const size_t sizes[] = {3};
    REQUIRE(ag_hypergraph_create(3, vs, sizes, 1, &h) == AG_OK);
    CHECK(ag_ae_to_aa(h, nullptr, nullptr) == AG_E_INVALID_ARGUMENT);
    ag_hypergraph* out = nullptr;
    CHECK(ag_ae_to_aa(h, &out, nullptr) == AG_E_VALIDATION);
    ag_solve_options o;
    ag_solve_options_default(&o);
    o.timeout_s = -1;
    ag_solve_result r;
    CHECK(ag_solve_ae(h, &o, &r) != AG_OK);
    ag_hypergraph_free(h);

    char* text = nullptr;
    CHECK(ag_read_file("/nonexistent/file", &text) == AG_E_IO);
}

TEST_CASE("formulas, reductions and oracles")
{
    ag_formula* f = nullptr;
    REQUIRE(ag_formula_parse("p cnf 2 1\na 1 0\ne 2 0\n1 1 1 0\n", &f) == AG_OK);
    CHECK(ag_formula_rounds(f) == 1);
    ag_outcome w;
    REQUIRE(ag_solve_qbf(f, &w) == AG_OK);
    CHECK(w == AG_FALSIFIER);

    ag_hypergraph* h = nullptr;
    REQUIRE(ag_reduce_qbf_to_ae(f, &h, nullptr) == AG_OK);
    CHECK(ag_hypergraph_num_vertices(h) == 10);
    CHECK(ag_hypergraph_num_edges(h) == 9);
    ag_solve_result r;
    REQUIRE(ag_solve_ae(h, nullptr, &r) == AG_OK);
    CHECK(r.outcome == AG_ENFORCER);

    const int32_t moves[] = {1, 5, 3};
    ag_oracle_move m;
    REQUIRE(ag_analyze(f, AG_ROLE_AUTO, moves, 3, nullptr, &m) == AG_OK);
    CHECK(m.role == AG_ROLE_ENFORCER);
    CHECK(m.vertex == 8);
    CHECK(ag_analyze(f, AG_ROLE_AVOIDER, moves, 3, nullptr, &m) == AG_E_INVALID_ARGUMENT);

    int32_t best = 0;
    REQUIRE(ag_best_move(h, AG_GAME_AE, moves, 3, nullptr, &best) == AG_OK);
    ag_outcome v;
    const int32_t after[] = {1, 5, 3, best};
    REQUIRE(ag_position_value(h, AG_GAME_AE, after, 4, nullptr, &v) == AG_OK);
    CHECK(v == AG_ENFORCER);

    ag_graph* g = nullptr;
    ag_graph* pattern = nullptr;
    ag_hypergraph* six = nullptr;
    REQUIRE(ag_hypergraph_parse("p hg 6 1\ne 1 2 3 4 5 6\n", &six) == AG_OK);
    REQUIRE(ag_ae_to_hgame(six, 6, nullptr, &g, &pattern, nullptr) == AG_OK);
    CHECK(ag_graph_num_vertices(g) == 10);
    CHECK(ag_graph_num_vertices(pattern) == 8);
    REQUIRE(ag_solve_hgame(g, pattern, nullptr, &r) == AG_OK);
    CHECK(r.outcome == AG_AVOIDER);

    ag_graph_free(pattern);
    ag_graph_free(g);
    ag_hypergraph_free(six);
    ag_hypergraph_free(h);
    ag_formula_free(f);
}

TEST_CASE("verification streams lines")
{
    std::vector<std::string> lines;
    int passed = 0;
    auto sink = [](const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); };
    REQUIRE(ag_verify("construction", 3, sink, &lines, &passed) == AG_OK);
    CHECK(passed == 1);
    REQUIRE_FALSE(lines.empty());
    CHECK(lines.back().rfind("PASS [11]", 0) == 0);
    CHECK(ag_verify("nonsense", 3, sink, &lines, &passed) == AG_E_INVALID_ARGUMENT);
    CHECK(ag_verify_suite_count() == 11);
    CHECK(std::string(ag_verify_suite_name(0)) == "qbf-equivalence");
    CHECK(ag_verify_suite_name(11) == nullptr);
}

TEST_CASE("verification is deterministic for a fixed seed")
{
    auto run = [](uint64_t seed) {
        std::string all;
        int passed = 0;
        auto sink = [](const char* line, void* user) { *static_cast<std::string*>(user) += std::string(line) + "\n"; };
        ag_verify("uniformize", seed, sink, &all, &passed);
        return all;
    };
    CHECK(run(5) == run(5));
    CHECK(run(5) != run(6));
}
