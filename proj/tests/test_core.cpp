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

#include "avoidgame/core.hpp"
#include "avoidgame/reference.hpp"

using namespace avoidgame;

TEST_CASE("moves alternate starting with the first player")
{
    PlayState s(5);
    s = s.apply(3);
    CHECK(s.first() == VertexSet{3});
    CHECK(s.second().empty());
    CHECK_THROWS_AS(s.apply(3), Error);
    try {
        s.apply(3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlreadyClaimed);
    }
    s = s.apply(1);
    CHECK(s.first() == VertexSet{3});
    CHECK(s.second() == VertexSet{1});
    CHECK(s.to_move() == Side::First);
    CHECK_THROWS_AS(s.apply(6), Error);
    CHECK_THROWS_AS(s.apply(0), Error);
}

TEST_CASE("replay rebuilds the same state")
{
    const PlayState s = PlayState::replay(6, {4, 2, 6, 1});
    CHECK(s.first() == VertexSet{4, 6});
    CHECK(s.second() == VertexSet{2, 1});
    CHECK(s.moves_played() == 4);
    CHECK(s.unclaimed() == VertexSet{3, 5});
}

TEST_CASE("avoider_filled reports the least filled edge")
{
    const Hypergraph h(5, {{1, 2}});
    CHECK(avoider_filled(h, VertexSet{1, 2, 5}) == 0u);
    CHECK_FALSE(avoider_filled(h, VertexSet{1, 5}).has_value());
    const Hypergraph two(2, {{1}, {2}});
    CHECK(avoider_filled(two, VertexSet{2}) == 1u);
}

TEST_CASE("hypergraph edges are normalised but duplicates kept")
{
    const Hypergraph h(4, {{3, 1, 2}, {1, 2, 3}, {4}});
    CHECK(h.edge(0) == Edge{1, 2, 3});
    CHECK(h.num_edges() == 3);
    CHECK(h.duplicate_edge_count() == 1);
    CHECK(h.min_edge_size() == 1);
    CHECK(h.max_edge_size() == 3);
    CHECK_THROWS_AS(Hypergraph(3, {{4}}), Error);
    CHECK_THROWS_AS(Hypergraph(3, {{}}), Error);
}

TEST_CASE("domination uses closed neighbourhoods")
{
    const Graph path(3, {{1, 2}, {2, 3}});
    CHECK(is_dominating(path, VertexSet{2}));
    CHECK_FALSE(is_dominating(path, VertexSet{1}));
    CHECK_FALSE(is_dominating(Graph(2), VertexSet{1}));
}

TEST_CASE("subgraph containment examples")
{
    const Graph g(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(subgraph_contains(g, VertexSet{1, 2}, Graph(2, {{1, 2}})));
    CHECK(subgraph_contains(g, VertexSet{1, 3, 4}, Graph(3)));
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(subgraph_contains(g, VertexSet{1, 2, 3, 4}, k4));
    CHECK_FALSE(subgraph_contains(g, VertexSet{1, 3}, Graph(2, {{1, 2}})));
}

TEST_CASE("graph rejects self-loops and ignores repeated edges")
{
    Graph g(3);
    g.add_edge(1, 2);
    g.add_edge(2, 1);
    CHECK(g.num_edges() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);
    CHECK_THROWS_AS(g.add_edge(1, 4), Error);
}

TEST_CASE("property: subgraph containment agrees with injection enumeration")
{
    std::mt19937_64 rng(20261017);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        const int p = std::uniform_int_distribution<int>(1, 4)(rng);
        std::bernoulli_distribution coin(0.45);
        Graph g(n), pat(p);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        for (Vertex u = 1; u <= p; ++u)
            for (Vertex v = u + 1; v <= p; ++v)
                if (coin(rng))
                    pat.add_edge(u, v);
        std::vector<Vertex> s;
        for (Vertex v = 1; v <= n; ++v)
            if (coin(rng))
                s.push_back(v);
        INFO("case " << t);
        CHECK(subgraph_contains(g, VertexSet::from(s), pat) == reference::contains_subgraph(g, s, pat));
    }
}

TEST_CASE("property: vertex set algebra matches std::set semantics")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const VertexSet a(rng()), b(rng());
        CHECK((a | b).size() + (a & b).size() == a.size() + b.size());
        CHECK((a - b).intersects(b) == false);
        CHECK((a & b).subset_of(a));
        if (!a.empty()) {
            CHECK(a.contains(a.min()));
            CHECK(a.to_vector().front() == a.min());
        }
    }
}
