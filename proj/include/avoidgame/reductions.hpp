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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avoidgame/core.hpp"
#include "avoidgame/qbf.hpp"

namespace avoidgame {

enum class VertexKind { X, XBar, U, Aux, V0, PairVertex };

const char* vertex_kind_name(VertexKind k) noexcept;

struct VertexLabel {
    VertexKind kind = VertexKind::U;
    int index = 0;
    int sub = 0; ///< position inside a per-edge gadget, 0 when unused

    std::string text() const;
    bool operator==(const VertexLabel&) const = default;
};

enum class EdgeTagKind { A, B, CPlus, CMinus, D };

struct EdgeTag {
    EdgeTagKind kind = EdgeTagKind::A;
    int index = 0;          ///< subscript: A(2i), B(2i-1), C(6i), C(6i-2), C(6i-4), D(j)
    bool truncated = false; ///< some referenced u vertex lay beyond u(6n)

    std::string text() const;
    bool operator==(const EdgeTag&) const = default;
};

/// Vertex labels and edge provenance attached to a reduction output.
struct ReductionMetadata {
    std::vector<std::pair<Vertex, VertexLabel>> vertices;
    std::vector<EdgeTag> edge_tags; ///< empty, or one entry per output edge
};

/// Hypergraph produced from a 3-QBF formula, with every vertex and edge named.
///
/// Id layout: x(i) = i, xbar(i) = 2n + i, u(j) = 4n + j.
struct LabeledReduction {
    Hypergraph hypergraph;
    int rounds = 0;
    int clause_count = 0;
    std::vector<VertexLabel> vertex_labels; ///< index id - 1
    std::vector<EdgeTag> edge_tags;         ///< index edge index

    Vertex x(int i) const { return i; }
    Vertex xbar(int i) const { return 2 * rounds + i; }
    Vertex literal(int var, bool positive) const { return positive ? x(var) : xbar(var); }
    /// u(j) for 1 <= j <= 6n, otherwise nullopt.
    std::optional<Vertex> u(int j) const
    {
        if (j < 1 || j > 6 * rounds)
            return std::nullopt;
        return 4 * rounds + j;
    }
    const VertexLabel& label(Vertex v) const { return vertex_labels.at(static_cast<std::size_t>(v - 1)); }

    ReductionMetadata metadata() const;
};

LabeledReduction reduce_qbf_to_ae(const QbfFormula& f);

/// Two fresh vertices a1, a2; every minimum-size edge e becomes e+a1, e+a2.
Hypergraph raise_min_edge_size(const Hypergraph& h, ReductionMetadata* meta = nullptr);

/// Repeats raise_min_edge_size until every edge has size k.
Hypergraph to_k_uniform(const Hypergraph& h, int k, ReductionMetadata* meta = nullptr);

/// Adds a fresh vertex v0 to the board and to every edge. Requires an even
/// number of vertices.
Hypergraph ae_to_aa(const Hypergraph& h, ReductionMetadata* meta = nullptr);

/// Bipartite graph: v(i) for each board vertex, v(C,1) and v(C,2) for each
/// edge C, with v(i) ~ v(C,*) whenever i lies in C.
Graph ae_to_domination(const Hypergraph& h, ReductionMetadata* meta = nullptr);

Graph independent_graph(int k);
Graph join(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
/// Single edge, the second factor in H0' = H0 x P2.
Graph path2();

struct PatternSpec {
    int k = 6;
    Graph h0;

    /// Throws BadPattern unless k >= 6 and h0 has an edge or at least 6 vertices.
    void validate() const;
    /// I(k) join h0
    Graph pattern() const;
};

struct HGameReduction {
    Graph graph;
    Graph pattern;
};

HGameReduction reduce_ae_to_hgame(const Hypergraph& h, const PatternSpec& spec,
                                  ReductionMetadata* meta = nullptr);

} // namespace avoidgame
