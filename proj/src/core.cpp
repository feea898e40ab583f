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

#include "avoidgame/core.hpp"

#include "pattern_matcher.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace avoidgame {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AlreadyClaimed: return "AlreadyClaimed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PrefixError: return "PrefixError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::EdgeTooLarge: return "EdgeTooLarge";
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoLegalMove: return "NoLegalMove";
    case ErrorCode::NotADeviation: return "NotADeviation";
    case ErrorCode::IllegalDeviation: return "IllegalDeviation";
    case ErrorCode::TerminalPosition: return "TerminalPosition";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NodeLimit: return "NodeLimit";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(int num_vertices, std::vector<std::vector<Vertex>> edges)
    : num_vertices_(num_vertices)
{
    if (num_vertices < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    edges_.reserve(edges.size());
    for (auto& e : edges) {
        if (e.empty())
            throw Error(ErrorCode::InvalidArgument, "empty hyperedge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.front() < 1 || e.back() > num_vertices) {
            std::ostringstream msg;
            msg << "hyperedge vertex outside [1, " << num_vertices << "]";
            throw Error(ErrorCode::OutOfRange, msg.str());
        }
        edges_.push_back(std::move(e));
    }
}

std::size_t Hypergraph::min_edge_size() const
{
    std::size_t m = 0;
    for (const auto& e : edges_)
        m = (m == 0) ? e.size() : std::min(m, e.size());
    return m;
}

std::size_t Hypergraph::max_edge_size() const
{
    std::size_t m = 0;
    for (const auto& e : edges_)
        m = std::max(m, e.size());
    return m;
}

bool Hypergraph::is_uniform(std::size_t k) const
{
    return std::all_of(edges_.begin(), edges_.end(), [k](const Edge& e) { return e.size() == k; });
}

std::size_t Hypergraph::duplicate_edge_count() const
{
    std::set<Edge> seen(edges_.begin(), edges_.end());
    return edges_.size() - seen.size();
}

VertexSet Hypergraph::edge_set(std::size_t i) const
{
    if (num_vertices_ > kMaxBoardVertices)
        throw Error(ErrorCode::OutOfRange, "board larger than 64 vertices");
    return VertexSet::from(edges_.at(i));
}

void Hypergraph::set_label(Vertex v, std::string label)
{
    if (v < 1 || v > num_vertices_)
        throw Error(ErrorCode::OutOfRange, "label for unknown vertex " + std::to_string(v));
    labels_[v] = std::move(label);
}

std::optional<std::string> Hypergraph::label(Vertex v) const
{
    auto it = labels_.find(v);
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int num_vertices)
{
    if (num_vertices < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(num_vertices));
}

Graph::Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(num_vertices)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 1 || v < 1 || u > num_vertices() || v > num_vertices())
        throw Error(ErrorCode::OutOfRange, "graph edge endpoint out of range");
    if (u == v)
        throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[u - 1];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return;
    nu.insert(it, v);
    auto& nv = adjacency_[v - 1];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u < 1 || u > num_vertices())
        return false;
    const auto& nu = adjacency_[u - 1];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges_);
    for (Vertex u = 1; u <= num_vertices(); ++u)
        for (Vertex v : adjacency_[u - 1])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> Graph::neighbor_sets() const
{
    if (num_vertices() > kMaxBoardVertices)
        throw Error(ErrorCode::OutOfRange, "graph larger than 64 vertices");
    std::vector<VertexSet> out(adjacency_.size());
    for (std::size_t i = 0; i < adjacency_.size(); ++i)
        out[i] = VertexSet::from(adjacency_[i]);
    return out;
}

// ---------------------------------------------------------------------------
// PlayState

PlayState::PlayState(int board_size) : PlayState(board_size, {}, {}) {}

PlayState::PlayState(int board_size, VertexSet first, VertexSet second)
    : board_size_(board_size), first_(first), second_(second)
{
    if (board_size < 0 || board_size > kMaxBoardVertices)
        throw Error(ErrorCode::OutOfRange, "board size must be in [0, 64]");
    if (first.intersects(second))
        throw Error(ErrorCode::InvalidArgument, "claimed sets overlap");
    if (!(first | second).subset_of(VertexSet::range(board_size)))
        throw Error(ErrorCode::OutOfRange, "claimed vertex outside the board");
    int diff = first.size() - second.size();
    if (diff != 0 && diff != 1)
        throw Error(ErrorCode::InvalidArgument, "claim counts violate alternation");
}

PlayState PlayState::apply(Vertex v) const
{
    if (v < 1 || v > board_size_)
        throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not on the board");
    if (claimed().contains(v))
        throw Error(ErrorCode::AlreadyClaimed, "vertex " + std::to_string(v) + " already claimed");
    PlayState next = *this;
    if (to_move() == Side::First)
        next.first_.insert(v);
    else
        next.second_.insert(v);
    return next;
}

PlayState PlayState::replay(int board_size, const std::vector<Vertex>& moves)
{
    PlayState s(board_size);
    for (Vertex v : moves)
        s = s.apply(v);
    return s;
}

Convention Convention::hgame(Graph pattern)
{
    if (pattern.num_vertices() == 0)
        throw Error(ErrorCode::BadPattern, "H-game pattern must be nonempty");
    return {GameKind::HGame, std::move(pattern)};
}

const char* outcome_token(Outcome o) noexcept
{
    switch (o) {
    case Outcome::AvoiderWins: return "AVOIDER";
    case Outcome::EnforcerWins: return "ENFORCER";
    case Outcome::FirstPlayerLoses: return "FIRST_LOSES";
    case Outcome::SecondPlayerLoses: return "SECOND_LOSES";
    case Outcome::Draw: return "DRAW";
    case Outcome::DominatorWins: return "DOMINATOR";
    case Outcome::StallerWins: return "STALLER";
    }
    return "UNKNOWN";
}

// ---------------------------------------------------------------------------
// Win conditions

std::optional<std::size_t> avoider_filled(const Hypergraph& h, VertexSet claimed)
{
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const Edge& e = h.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return claimed.contains(v); }))
            return i;
    }
    return std::nullopt;
}

bool is_dominating(const Graph& g, VertexSet s)
{
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        if (s.contains(v))
            continue;
        const auto& nv = g.neighbors(v);
        if (std::none_of(nv.begin(), nv.end(), [&](Vertex w) { return s.contains(w); }))
            return false;
    }
    return true;
}

namespace detail {

PatternMatcher::PatternMatcher(const Graph& host, const Graph& pattern) : host_nbrs_(host.neighbor_sets())
{
    const int k = pattern.num_vertices();
    std::vector<int> depth_of(static_cast<std::size_t>(k) + 1, -1);
    for (int step = 0; step < k; ++step) {
        Vertex best = 0;
        std::size_t best_links = 0, best_deg = 0;
        for (Vertex v = 1; v <= k; ++v) {
            if (depth_of[v] >= 0)
                continue;
            std::size_t links = 0;
            for (Vertex w : pattern.neighbors(v))
                links += depth_of[w] >= 0 ? 1 : 0;
            std::size_t deg = pattern.degree(v);
            if (best == 0 || links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        depth_of[best] = step;
        order_.push_back(best);
        std::vector<int> earlier;
        for (Vertex w : pattern.neighbors(best))
            if (depth_of[w] >= 0 && w != best)
                earlier.push_back(depth_of[w]);
        earlier_nbrs_.push_back(std::move(earlier));
        degree_.push_back(static_cast<int>(pattern.degree(best)));
    }
}

bool PatternMatcher::contains(VertexSet s) const
{
    s &= VertexSet::range(static_cast<int>(host_nbrs_.size()));
    if (pattern_size() > s.size())
        return false;
    int host_degree[kMaxBoardVertices] = {};
    for (Vertex t : s)
        host_degree[t - 1] = (host_nbrs_[t - 1] & s).size();
    std::vector<Vertex> image(order_.size(), 0);
    return extend(0, s, VertexSet{}, image, host_degree);
}

bool PatternMatcher::extend(std::size_t depth, VertexSet s, VertexSet used, std::vector<Vertex>& image,
                            const int* host_degree) const
{
    if (depth == order_.size())
        return true;
    VertexSet candidates = s - used;
    for (int d : earlier_nbrs_[depth])
        candidates &= host_nbrs_[image[d] - 1];
    for (Vertex t : candidates) {
        if (host_degree[t - 1] < degree_[depth])
            continue;
        image[depth] = t;
        VertexSet next = used;
        next.insert(t);
        if (extend(depth + 1, s, next, image, host_degree))
            return true;
    }
    return false;
}

} // namespace detail

bool subgraph_contains(const Graph& g, VertexSet s, const Graph& pattern)
{
    if (pattern.num_vertices() > s.size())
        return false;
    if (pattern.num_vertices() == 0)
        return true;
    return detail::PatternMatcher(g, pattern).contains(s);
}

} // namespace avoidgame
