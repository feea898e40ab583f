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
        const int size = std::uniform_int_distribution<int>(lo, hi)(rng);
        edges.emplace_back(all.begin(), all.begin() + size);
    }
    return Hypergraph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n)
{
    Graph g(n);
    std::bernoulli_distribution coin(0.4);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("qbf reduction on one round")
{
    const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(1, {cl(1, 2, 2)}));
    const Hypergraph& h = red.hypergraph;
    CHECK(h.num_vertices() == 10);
    CHECK(h.num_edges() == 9);
    CHECK(red.edge_tags.back().kind == EdgeTagKind::D);
    // u7 does not exist and x2 appears once.
    CHECK(h.edges().back() == Edge{red.x(1), red.x(2), *red.u(5)});
    CHECK(red.edge_tags.back().truncated);
    CHECK(red.label(red.xbar(2)).kind == VertexKind::XBar);
    CHECK(red.label(*red.u(6)).index == 6);
    CHECK_FALSE(red.u(7).has_value());
}

TEST_CASE("qbf reduction counts and edge sizes")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 3, m = 1 + t % 5;
        std::vector<Clause> cs;
        std::uniform_int_distribution<int> var(1, 2 * n);
        for (int j = 0; j < m; ++j)
            cs.push_back(cl(var(rng), -var(rng), var(rng)));
        const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(n, cs));
        CHECK(red.hypergraph.num_vertices() == 10 * n);
        CHECK(red.hypergraph.num_edges() == static_cast<std::size_t>(8 * n + m));
        CHECK(red.hypergraph.max_edge_size() <= 6);
        CHECK(red.edge_tags.size() == red.hypergraph.num_edges());
    }
}

TEST_CASE("raising the minimum edge size")
{
    const Hypergraph h(3, {{1, 2}, {1, 2, 3}});
    const Hypergraph r = raise_min_edge_size(h);
    CHECK(r.num_vertices() == 5);
    CHECK(r.edges() == std::vector<Edge>{{1, 2, 4}, {1, 2, 5}, {1, 2, 3}});
    const Hypergraph single = raise_min_edge_size(Hypergraph(1, {{1}}));
    CHECK(single.num_vertices() == 3);
    CHECK(single.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("uniformisation")
{
    const Hypergraph six(6, {{1, 2, 3, 4, 5, 6}});
    CHECK(to_k_uniform(six, 6) == six);
    const Hypergraph five = to_k_uniform(Hypergraph(5, {{1, 2, 3, 4, 5}}), 6);
    CHECK(five.num_vertices() == 7);
    CHECK(five.num_edges() == 2);
    CHECK(five.is_uniform(6));
    const Hypergraph four = to_k_uniform(Hypergraph(4, {{1, 2, 3, 4}}), 6);
    CHECK(four.num_vertices() == 8);
    CHECK(four.is_uniform(6));
    CHECK_THROWS_AS(to_k_uniform(Hypergraph(7, {{1, 2, 3, 4, 5, 6, 7}}), 6), Error);
}

TEST_CASE("lift to the avoider-avoider game")
{
    const Hypergraph h = ae_to_aa(Hypergraph(2, {{1, 2}}));
    CHECK(h.num_vertices() == 3);
    CHECK(h.edges() == std::vector<Edge>{{1, 2, 3}});
    CHECK_THROWS_AS(ae_to_aa(Hypergraph(3, {{1, 2}})), Error);

    std::mt19937_64 rng(5);
    const Hypergraph six = to_k_uniform(random_hypergraph(rng, 10, 4, 4, 6), 6);
    REQUIRE(six.num_vertices() % 2 == 0);
    const Hypergraph lifted = ae_to_aa(six);
    CHECK(lifted.num_vertices() == six.num_vertices() + 1);
    CHECK(lifted.is_uniform(7));
    CHECK(lifted.num_edges() == six.num_edges());
}

TEST_CASE("domination reduction is bipartite")
{
    const Graph g = ae_to_domination(Hypergraph(2, {{1, 2}}));
    CHECK(g.num_vertices() == 4);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const Graph f2 = ae_to_domination(Hypergraph(4, {{1, 2}, {2, 3, 4}, {1, 4}}));
    CHECK(f2.num_vertices() == 10);
    for (auto [u, v] : f2.edges())
        CHECK((u <= 4) != (v <= 4));
}

TEST_CASE("graph algebra")
{
    const Graph k4 = strong_product(path2(), path2());
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    const Graph k23 = join(independent_graph(2), independent_graph(3));
    CHECK(k23.num_edges() == 6);
    CHECK_FALSE(k23.adjacent(1, 2));
    CHECK(k23.adjacent(1, 5));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const Graph a = random_graph(rng, 1 + t % 5), b = random_graph(rng, 1 + t % 4);
        const Graph j = join(a, b);
        CHECK(j.num_edges() == a.num_edges() + b.num_edges() +
                                   static_cast<std::size_t>(a.num_vertices() * b.num_vertices()));
        const Graph p = strong_product(a, b);
        CHECK(p.num_vertices() == a.num_vertices() * b.num_vertices());
        // |E(a x b)| = |V_a||E_b| + |V_b||E_a| + 2|E_a||E_b|
        CHECK(p.num_edges() == a.num_vertices() * b.num_edges() + b.num_vertices() * a.num_edges() +
                                   2 * a.num_edges() * b.num_edges());
    }
}

TEST_CASE("h-game reduction of a single 6-edge")
{
    const HGameReduction r = reduce_ae_to_hgame(Hypergraph(6, {{1, 2, 3, 4, 5, 6}}), PatternSpec{6, path2()});
    CHECK(r.graph.num_vertices() == 10);
    // K4 on 7..10, each joined to v1..v6.
    CHECK(r.graph.num_edges() == 6 + 24);
    for (Vertex w = 7; w <= 10; ++w)
        for (Vertex v = 1; v <= 6; ++v)
            CHECK(r.graph.adjacent(w, v));
    CHECK(r.pattern.num_vertices() == 8);
    CHECK(r.pattern.num_edges() == 1 + 12);
    CHECK_THROWS_AS(reduce_ae_to_hgame(Hypergraph(6, {{1, 2, 3, 4, 5, 6}}), PatternSpec{5, path2()}), Error);
    CHECK_THROWS_AS(reduce_ae_to_hgame(Hypergraph(5, {{1, 2, 3, 4, 5}}), PatternSpec{6, path2()}), Error);
}

TEST_CASE("metadata labels every fresh vertex")
{
    ReductionMetadata meta;
    const Hypergraph r = to_k_uniform(Hypergraph(4, {{1, 2, 3, 4}}), 6, &meta);
    CHECK(meta.vertices.size() == 4);
    for (const auto& [id, label] : meta.vertices) {
        CHECK(id > 4);
        CHECK(label.kind == VertexKind::Aux);
    }
    ReductionMetadata aa;
    ae_to_aa(Hypergraph(2, {{1, 2}}), &aa);
    REQUIRE(aa.vertices.size() == 1);
    CHECK(aa.vertices[0].second.kind == VertexKind::V0);
    CHECK(r.num_vertices() == 8);
}
