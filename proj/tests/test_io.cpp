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

#include "avoidgame/io.hpp"

using namespace avoidgame;

namespace {

std::string error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("hypergraph text")
{
    std::vector<std::string> warnings;
    const Hypergraph h = parse_hypergraph("c demo\np hg 4 3\ne 1 2\ne 2 2 3\ne 2 1\nn 4 spare\n", &warnings);
    CHECK(h.num_vertices() == 4);
    CHECK(h.num_edges() == 3);
    CHECK(h.edge(1) == Edge{2, 3});
    CHECK(h.label(4) == "spare");
    CHECK(warnings.size() == 2);
    CHECK(write_hypergraph(h) == "p hg 4 3\ne 1 2\ne 2 3\ne 1 2\nn 4 spare\n");

    CHECK(error_of([] { parse_hypergraph("p hg 3 1\ne 1 x\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { parse_hypergraph("p hg 3 2\ne 1\n"); }).find("ParseError") != std::string::npos);
    CHECK_THROWS_AS(parse_hypergraph("p hg 3 1\ne 4\n"), Error);
    CHECK_THROWS_AS(parse_hypergraph("e 1\n"), Error);
}

TEST_CASE("dimacs graphs")
{
    const Graph g = parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.num_edges() == 2);
    CHECK(write_graph(g) == "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), Error);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), Error);
}

TEST_CASE("label metadata round trip")
{
    const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(1, {Clause{Literal{1, false}, Literal{2, false},
                                                                        Literal{2, true}}}));
    const ReductionMetadata meta = red.metadata();
    const std::string json = metadata_to_json(meta);
    const ReductionMetadata back = metadata_from_json(json);
    CHECK(back.vertices == meta.vertices);
    CHECK(back.edge_tags == meta.edge_tags);
    CHECK(metadata_to_json(back) == json);
    CHECK(json.find("\"xbar\"") != std::string::npos);
    CHECK_THROWS_AS(metadata_from_json("{"), Error);
}

TEST_CASE("position files")
{
    CHECK(parse_position("c opening\nm 5 6\nm 7\n") == std::vector<Vertex>{5, 6, 7});
    CHECK(parse_position("").empty());
    CHECK_THROWS_AS(parse_position("m 1 two\n"), Error);
}

TEST_CASE("property: writers and parsers round trip")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 20;
        std::uniform_int_distribution<int> vertex(1, n);
        std::vector<std::vector<Vertex>> edges;
        for (int i = 0; i < t % 7; ++i)
            edges.push_back({vertex(rng), vertex(rng), vertex(rng)});
        const Hypergraph h(n, edges);
        const std::string text = write_hypergraph(h);
        CHECK(parse_hypergraph(text) == h);
        CHECK(write_hypergraph(parse_hypergraph(text)) == text);

        Graph g(n);
        for (int i = 0; i < t % 9; ++i) {
            const Vertex a = vertex(rng), b = vertex(rng);
            if (a != b)
                g.add_edge(a, b);
        }
        CHECK(parse_graph(write_graph(g)) == g);
    }
}
