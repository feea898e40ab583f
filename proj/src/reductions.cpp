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

#include "avoidgame/reductions.hpp"

#include <algorithm>
#include <sstream>

namespace avoidgame {

const char* vertex_kind_name(VertexKind k) noexcept
{
    switch (k) {
    case VertexKind::X: return "x";
    case VertexKind::XBar: return "xbar";
    case VertexKind::U: return "u";
    case VertexKind::Aux: return "aux";
    case VertexKind::V0: return "v0";
    case VertexKind::PairVertex: return "pairvertex";
    }
    return "unknown";
}

std::string VertexLabel::text() const
{
    std::string s = vertex_kind_name(kind);
    if (kind != VertexKind::V0)
        s += std::to_string(index);
    if (sub != 0)
        s += "." + std::to_string(sub);
    return s;
}

std::string EdgeTag::text() const
{
    switch (kind) {
    case EdgeTagKind::A: return "A" + std::to_string(index);
    case EdgeTagKind::B: return "B" + std::to_string(index);
    case EdgeTagKind::CPlus: return "C+" + std::to_string(index);
    case EdgeTagKind::CMinus: return "C-" + std::to_string(index);
    case EdgeTagKind::D: return "D" + std::to_string(index);
    }
    return "?";
}

ReductionMetadata LabeledReduction::metadata() const
{
    ReductionMetadata m;
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
        m.vertices.emplace_back(static_cast<Vertex>(i + 1), vertex_labels[i]);
    for (const auto& t : edge_tags)
        m.edge_tags.push_back(t);
    return m;
}

// ---------------------------------------------------------------------------
// 3-QBF -> Avoider-Enforcer

namespace {

class GadgetBuilder {
public:
    explicit GadgetBuilder(const LabeledReduction& red) : red_(red) {}

    /// Collects vertices; u indices beyond 6n are dropped and remembered.
    GadgetBuilder& x(int i)
    {
        edge_.push_back(red_.x(i));
        return *this;
    }
    GadgetBuilder& xbar(int i)
    {
        edge_.push_back(red_.xbar(i));
        return *this;
    }
    GadgetBuilder& lit(int i, bool positive) { return positive ? x(i) : xbar(i); }
    GadgetBuilder& u(int j)
    {
        if (auto v = red_.u(j))
            edge_.push_back(*v);
        else
            truncated_ = true;
        return *this;
    }

    void emit(std::vector<std::vector<Vertex>>& edges, std::vector<EdgeTag>& tags, EdgeTagKind kind, int index)
    {
        edges.push_back(std::move(edge_));
        tags.push_back(EdgeTag{kind, index, truncated_});
        edge_.clear();
        truncated_ = false;
    }

private:
    const LabeledReduction& red_;
    std::vector<Vertex> edge_;
    bool truncated_ = false;
};

/// u companion of a literal on variable `var` inside a clause edge.
int clause_companion(int var)
{
    int t = (var + 1) / 2;
    return (var % 2 == 1) ? 6 * t - 1 : 6 * t + 1;
}

} // namespace

LabeledReduction reduce_qbf_to_ae(const QbfFormula& f)
{
    const int n = f.rounds();
    LabeledReduction red;
    red.rounds = n;
    red.clause_count = static_cast<int>(f.clauses().size());
    red.vertex_labels.resize(static_cast<std::size_t>(10 * n));
    for (int i = 1; i <= 2 * n; ++i) {
        red.vertex_labels[red.x(i) - 1] = {VertexKind::X, i, 0};
        red.vertex_labels[red.xbar(i) - 1] = {VertexKind::XBar, i, 0};
    }
    for (int j = 1; j <= 6 * n; ++j)
        red.vertex_labels[*red.u(j) - 1] = {VertexKind::U, j, 0};

    std::vector<std::vector<Vertex>> edges;
    GadgetBuilder b(red);
    for (int i = 1; i <= n; ++i) {
        b.x(2 * i).xbar(2 * i).u(6 * i + 1).u(6 * i + 3).emit(edges, red.edge_tags, EdgeTagKind::A, 2 * i);
        b.u(6 * i).u(6 * i + 1).u(6 * i + 3).x(2 * i).emit(edges, red.edge_tags, EdgeTagKind::CPlus, 6 * i);
        b.u(6 * i).u(6 * i + 1).u(6 * i + 3).xbar(2 * i).emit(edges, red.edge_tags, EdgeTagKind::CMinus, 6 * i);
        b.u(6 * i - 2).u(6 * i - 1).u(6 * i + 1).x(2 * i).emit(edges, red.edge_tags, EdgeTagKind::CPlus, 6 * i - 2);
        b.u(6 * i - 2).u(6 * i - 1).u(6 * i + 1).xbar(2 * i).emit(edges, red.edge_tags, EdgeTagKind::CMinus, 6 * i - 2);
        b.x(2 * i - 1).xbar(2 * i - 1).u(6 * i - 1).emit(edges, red.edge_tags, EdgeTagKind::B, 2 * i - 1);
        b.u(6 * i - 4).u(6 * i - 3).u(6 * i - 1).x(2 * i - 1).emit(edges, red.edge_tags, EdgeTagKind::CPlus, 6 * i - 4);
        b.u(6 * i - 4).u(6 * i - 3).u(6 * i - 1).xbar(2 * i - 1).emit(edges, red.edge_tags, EdgeTagKind::CMinus,
                                                                        6 * i - 4);
    }
    int j = 0;
    for (const auto& clause : f.clauses()) {
        ++j;
        for (const auto& l : clause)
            b.lit(l.var, !l.negated).u(clause_companion(l.var));
        b.emit(edges, red.edge_tags, EdgeTagKind::D, j);
    }

    red.hypergraph = Hypergraph(10 * n, std::move(edges));
    for (int v = 1; v <= 10 * n; ++v)
        red.hypergraph.set_label(v, red.vertex_labels[v - 1].text());
    return red;
}

// ---------------------------------------------------------------------------
// Uniformization and the Avoider-Avoider lift

namespace {

Hypergraph raise_once(const Hypergraph& h, ReductionMetadata* meta, int& aux_counter)
{
    if (h.num_edges() == 0)
        throw Error(ErrorCode::EmptyEdgeSet, "hypergraph has no edges");
    const std::size_t m = h.min_edge_size();
    const Vertex a1 = h.num_vertices() + 1;
    const Vertex a2 = h.num_vertices() + 2;
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(2 * h.num_edges());
    for (const auto& e : h.edges()) {
        if (e.size() == m) {
            auto e1 = e;
            e1.push_back(a1);
            auto e2 = e;
            e2.push_back(a2);
            edges.push_back(std::move(e1));
            edges.push_back(std::move(e2));
        } else {
            edges.push_back(e);
        }
    }
    Hypergraph out(h.num_vertices() + 2, std::move(edges));
    for (const auto& [v, l] : h.labels())
        out.set_label(v, l);
    for (Vertex a : {a1, a2}) {
        VertexLabel lab{VertexKind::Aux, ++aux_counter, 0};
        out.set_label(a, lab.text());
        if (meta)
            meta->vertices.emplace_back(a, lab);
    }
    return out;
}

} // namespace

Hypergraph raise_min_edge_size(const Hypergraph& h, ReductionMetadata* meta)
{
    int aux = 0;
    return raise_once(h, meta, aux);
}

Hypergraph to_k_uniform(const Hypergraph& h, int k, ReductionMetadata* meta)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "uniformity must be positive");
    if (h.max_edge_size() > static_cast<std::size_t>(k))
        throw Error(ErrorCode::EdgeTooLarge, "edge of size " + std::to_string(h.max_edge_size()) +
                                                 " exceeds k = " + std::to_string(k));
    Hypergraph cur = h;
    int aux = 0;
    while (cur.num_edges() > 0 && !cur.is_uniform(static_cast<std::size_t>(k)))
        cur = raise_once(cur, meta, aux);
    return cur;
}

Hypergraph ae_to_aa(const Hypergraph& h, ReductionMetadata* meta)
{
    if (h.num_vertices() % 2 != 0)
        throw Error(ErrorCode::OddVertexCount,
                    "lift needs an even board, got " + std::to_string(h.num_vertices()) + " vertices");
    const Vertex v0 = h.num_vertices() + 1;
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(h.num_edges());
    for (const auto& e : h.edges()) {
        auto lifted = e;
        lifted.push_back(v0);
        edges.push_back(std::move(lifted));
    }
    Hypergraph out(v0, std::move(edges));
    for (const auto& [v, l] : h.labels())
        out.set_label(v, l);
    VertexLabel lab{VertexKind::V0, 0, 0};
    out.set_label(v0, lab.text());
    if (meta)
        meta->vertices.emplace_back(v0, lab);
    return out;
}

// ---------------------------------------------------------------------------
// Domination game

Graph ae_to_domination(const Hypergraph& h, ReductionMetadata* meta)
{
    const int n = h.num_vertices();
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (const auto& e : h.edges())
        for (Vertex v : e)
            covered[v] = true;
    for (Vertex v = 1; v <= n; ++v)
        if (!covered[v])
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " lies in no hyperedge");

    Graph g(n + 2 * static_cast<int>(h.num_edges()));
    for (std::size_t c = 0; c < h.num_edges(); ++c) {
        Vertex vc1 = n + 2 * static_cast<int>(c) + 1;
        Vertex vc2 = vc1 + 1;
        for (Vertex v : h.edge(c)) {
            g.add_edge(v, vc1);
            g.add_edge(v, vc2);
        }
        if (meta) {
            meta->vertices.emplace_back(vc1, VertexLabel{VertexKind::PairVertex, static_cast<int>(c), 1});
            meta->vertices.emplace_back(vc2, VertexLabel{VertexKind::PairVertex, static_cast<int>(c), 2});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Graph algebra

Graph independent_graph(int k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "negative independent set size");
    return Graph(k);
}

Graph join(const Graph& g, const Graph& h)
{
    const int ng = g.num_vertices();
    Graph out(ng + h.num_vertices());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(ng + u, ng + v);
    for (Vertex u = 1; u <= ng; ++u)
        for (Vertex v = 1; v <= h.num_vertices(); ++v)
            out.add_edge(u, ng + v);
    return out;
}

Graph strong_product(const Graph& g, const Graph& h)
{
    const int ng = g.num_vertices();
    const int nh = h.num_vertices();
    auto id = [nh](Vertex a, Vertex b) { return (a - 1) * nh + b; };
    Graph out(ng * nh);
    for (Vertex a1 = 1; a1 <= ng; ++a1)
        for (Vertex b1 = 1; b1 <= nh; ++b1)
            for (Vertex a2 = a1; a2 <= ng; ++a2)
                for (Vertex b2 = 1; b2 <= nh; ++b2) {
                    if (id(a2, b2) <= id(a1, b1))
                        continue;
                    bool first_ok = (a1 == a2) || g.adjacent(a1, a2);
                    bool second_ok = (b1 == b2) || h.adjacent(b1, b2);
                    if (first_ok && second_ok)
                        out.add_edge(id(a1, b1), id(a2, b2));
                }
    return out;
}

Graph path2()
{
    return Graph(2, {{1, 2}});
}

void PatternSpec::validate() const
{
    if (k < 6)
        throw Error(ErrorCode::BadPattern, "k must be at least 6, got " + std::to_string(k));
    if (h0.num_edges() == 0 && h0.num_vertices() < 6)
        throw Error(ErrorCode::BadPattern, "H0 needs an edge or at least 6 vertices");
}

Graph PatternSpec::pattern() const
{
    return join(independent_graph(k), h0);
}

// ---------------------------------------------------------------------------
// H-game

HGameReduction reduce_ae_to_hgame(const Hypergraph& h, const PatternSpec& spec, ReductionMetadata* meta)
{
    spec.validate();
    if (!h.is_uniform(6))
        throw Error(ErrorCode::NotUniform, "H-game reduction needs a 6-uniform hypergraph");

    const Graph gadget = strong_product(spec.h0, path2());
    const int n = h.num_vertices();
    const int m = static_cast<int>(h.num_edges());
    const int aux_per_edge = 2 * (spec.k - 6);
    const int copy_size = gadget.num_vertices();

    Graph g(n + m * (aux_per_edge + copy_size));
    auto aux_id = [&](int c, int j) { return n + c * aux_per_edge + j; };
    auto copy_id = [&](int c, Vertex w) { return n + m * aux_per_edge + c * copy_size + w; };

    for (int c = 0; c < m; ++c) {
        for (auto [a, b] : gadget.edges())
            g.add_edge(copy_id(c, a), copy_id(c, b));
        for (Vertex w = 1; w <= copy_size; ++w) {
            for (Vertex v : h.edge(static_cast<std::size_t>(c)))
                g.add_edge(copy_id(c, w), v);
            for (int j = 1; j <= aux_per_edge; ++j)
                g.add_edge(copy_id(c, w), aux_id(c, j));
        }
    }
    if (meta) {
        for (int c = 0; c < m; ++c)
            for (int j = 1; j <= aux_per_edge; ++j)
                meta->vertices.emplace_back(aux_id(c, j), VertexLabel{VertexKind::Aux, c, j});
        for (int c = 0; c < m; ++c)
            for (Vertex w = 1; w <= copy_size; ++w)
                meta->vertices.emplace_back(copy_id(c, w), VertexLabel{VertexKind::PairVertex, c, w});
    }
    return {std::move(g), spec.pattern()};
}

} // namespace avoidgame
