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

#include <random>

#include "avoidgame/reductions.hpp"
#include "avoidgame/reference.hpp"
#include "avoidgame/solver.hpp"

using namespace avoidgame;

namespace {

Literal lit(int v) { return {v < 0 ? -v : v, v < 0}; }
Clause cl(int a, int b, int c) { return {lit(a), lit(b), lit(c)}; }

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int lo, int hi)
{
    std::vector<std::vector<Vertex>> edges;
    std::vector<Vertex> all;
    for (Vertex v = 1; v <= n; ++v)
        all.push_back(v);
    for (int i = 0; i < m; ++i) {
        std::shuffle(all.begin(), all.end(), rng);
        const int size = std::uniform_int_distribution<int>(std::min(lo, n), std::min(hi, n))(rng);
        edges.emplace_back(all.begin(), all.begin() + size);
    }
    return Hypergraph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("avoider-enforcer examples")
{
    CHECK(solve_ae(Hypergraph(1, {{1}})).outcome == Outcome::EnforcerWins);
    CHECK(solve_ae(Hypergraph(2, {{1, 2}})).outcome == Outcome::AvoiderWins);
    const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(1, {cl(1, 2, 2), cl(-1, 2, 2)}));
    CHECK(solve_ae(red.hypergraph).outcome == Outcome::AvoiderWins);
    CHECK(reference::solve_ae(red.hypergraph) == Outcome::AvoiderWins);
}

TEST_CASE("avoider-avoider examples")
{
    CHECK(solve_aa(Hypergraph(1, {{1}})).outcome == Outcome::FirstPlayerLoses);
    CHECK(solve_aa(Hypergraph(3, {})).outcome == Outcome::Draw);
}

TEST_CASE("domination game examples")
{
    CHECK(solve_domination(Graph(1)).outcome == Outcome::DominatorWins);
    CHECK(solve_domination(Graph(2)).outcome == Outcome::DominatorWins);
    CHECK(solve_domination(Graph(2, {{1, 2}})).outcome == Outcome::StallerWins);
}

TEST_CASE("h-game examples")
{
    const Graph k2(2, {{1, 2}});
    CHECK(solve_hgame(k2, k2).outcome == Outcome::AvoiderWins);
    // Pattern with more vertices than Avoider will ever hold.
    CHECK(solve_hgame(Graph(5), Graph(4)).outcome == Outcome::AvoiderWins);
    CHECK(solve_hgame(Graph(5), Graph(3)).outcome == Outcome::EnforcerWins);
    const HGameReduction r = reduce_ae_to_hgame(Hypergraph(6, {{1, 2, 3, 4, 5, 6}}), PatternSpec{6, path2()});
    CHECK(solve_hgame(r.graph, r.pattern).outcome == Outcome::AvoiderWins);
}

TEST_CASE("best move tie-breaking")
{
    const Hypergraph pair(2, {{1, 2}});
    CHECK(best_move(pair, GameKind::AvoiderEnforcer, PlayState(2)) == 1);
    // Taking 3 leaves Avoider only vertex 1, so that is Enforcer's sole winning move.
    const Hypergraph single(3, {{1}});
    CHECK(best_move(single, GameKind::AvoiderEnforcer, PlayState::replay(3, {2})) == 3);
    const Hypergraph one(1, {{1}});
    CHECK(best_move(one, GameKind::AvoiderAvoider, PlayState(1)) == 1);
    CHECK(code_of([&] { best_move(one, GameKind::AvoiderAvoider, PlayState::replay(1, {1})); }) ==
          ErrorCode::TerminalPosition);
}

TEST_CASE("limits")
{
    const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(2, {cl(1, 2, 3), cl(-2, 4, 4)}));
    SolveOptions nodes;
    nodes.node_limit = 100;
    CHECK(code_of([&] { solve_ae(red.hypergraph, nodes); }) == ErrorCode::NodeLimit);
    SolveOptions time;
    time.timeout_s = 1e-6;
    CHECK(code_of([&] { solve_ae(red.hypergraph, time); }) == ErrorCode::Timeout);
    SolveOptions bad;
    bad.timeout_s = -1;
    CHECK_THROWS_AS(solve_ae(Hypergraph(1, {{1}}), bad), Error);
}

TEST_CASE("principal variation ends in the reported result")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const Hypergraph h = random_hypergraph(rng, 2 + t % 8, 1 + t % 5, 1, 4);
        const SolveReport r = solve_ae(h);
        const PlayState end = PlayState::replay(h.num_vertices(), r.principal_variation);
        const bool filled = avoider_filled(h, end.first()).has_value();
        // The line stops at the first terminal position.
        CHECK((end.full() || filled));
        CHECK(filled == (r.outcome == Outcome::EnforcerWins));
    }
}

TEST_CASE("property: solvers agree with plain minimax")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 120; ++t) {
        const int n = 1 + t % 8;
        const Hypergraph h = random_hypergraph(rng, n, 1 + t % 6, 1, 4);
        INFO("case " << t);
        CHECK(solve_ae(h).outcome == reference::solve_ae(h));
        CHECK(solve_aa(h).outcome == reference::solve_aa(h));
        const Graph g = random_graph(rng, n, 0.4);
        CHECK(solve_domination(g).outcome == reference::solve_domination(g));
        const Graph p = random_graph(rng, 1 + t % 3, 0.6);
        CHECK(solve_hgame(g, p).outcome == reference::solve_hgame(g, p));
    }
}

TEST_CASE("property: position values are consistent with best moves")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        const Hypergraph h = random_hypergraph(rng, 3 + t % 6, 1 + t % 4, 1, 3);
        PositionSolver solver(h, GameKind::AvoiderEnforcer);
        PlayState s(h.num_vertices());
        const Outcome root = solver.value(s);
        CHECK(root == solve_ae(h).outcome);
        // Optimal play from both sides never changes the value.
        while (!s.full()) {
            s = s.apply(solver.best_move(s));
            if (avoider_filled(h, s.first()))
                break;
            CHECK(solver.value(s) == root);
        }
    }
}

TEST_CASE("property: tiny transposition tables do not change results")
{
    std::mt19937_64 rng(31);
    SolveOptions tiny;
    tiny.transposition_budget = 1024;
    for (int t = 0; t < 30; ++t) {
        const Hypergraph h = random_hypergraph(rng, 6 + t % 5, 2 + t % 5, 1, 4);
        CHECK(solve_ae(h, tiny).outcome == solve_ae(h).outcome);
    }
}
