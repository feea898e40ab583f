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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avoidgame/error.hpp"
#include "avoidgame/vertex_set.hpp"

namespace avoidgame {

/// A hyperedge: sorted vertex ids without repeats.
using Edge = std::vector<Vertex>;

/// Game board of a positional game: vertices 1..n and a family of losing sets.
///
/// Edges are normalized to sorted sets on construction. Repeated edges are
/// kept (reductions count them) and reported through duplicate_edge_count().
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int num_vertices, std::vector<std::vector<Vertex>> edges);

    int num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    std::size_t min_edge_size() const;
    std::size_t max_edge_size() const;
    bool is_uniform(std::size_t k) const;
    std::size_t duplicate_edge_count() const;

    /// Bitset of edge i; requires num_vertices() <= 64.
    VertexSet edge_set(std::size_t i) const;

    void set_label(Vertex v, std::string label);
    std::optional<std::string> label(Vertex v) const;
    const std::map<Vertex, std::string>& labels() const { return labels_; }

    bool operator==(const Hypergraph&) const = default;

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int num_vertices);
    Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    /// Inserts {u, v}; a repeated edge is ignored. Self-loops are rejected.
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Neighborhood bitsets (open); requires num_vertices() <= 64.
    std::vector<VertexSet> neighbor_sets() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

enum class Side { First, Second };

constexpr Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }

/// Claimed vertices of both players. The first player moves first, so the
/// turn is derived from the claim counts.
class PlayState {
public:
    explicit PlayState(int board_size);
    PlayState(int board_size, VertexSet first, VertexSet second);

    int board_size() const { return board_size_; }
    VertexSet first() const { return first_; }
    VertexSet second() const { return second_; }
    VertexSet claimed(Side s) const { return s == Side::First ? first_ : second_; }
    VertexSet claimed() const { return first_ | second_; }
    VertexSet unclaimed() const { return VertexSet::range(board_size_) - claimed(); }
    Side to_move() const { return first_.size() == second_.size() ? Side::First : Side::Second; }
    int moves_played() const { return first_.size() + second_.size(); }
    bool full() const { return moves_played() == board_size_; }

    /// Claims v for the player to move.
    PlayState apply(Vertex v) const;

    /// Replays a move sequence from the empty board.
    static PlayState replay(int board_size, const std::vector<Vertex>& moves);

    bool operator==(const PlayState&) const = default;

private:
    int board_size_;
    VertexSet first_;
    VertexSet second_;
};

inline PlayState apply_move(const PlayState& state, Vertex v) { return state.apply(v); }

enum class GameKind { AvoiderEnforcer, AvoiderAvoider, DominationAE, HGame };

struct Convention {
    GameKind kind = GameKind::AvoiderEnforcer;
    std::optional<Graph> pattern; ///< HGame only

    static Convention avoider_enforcer() { return {GameKind::AvoiderEnforcer, std::nullopt}; }
    static Convention avoider_avoider() { return {GameKind::AvoiderAvoider, std::nullopt}; }
    static Convention domination() { return {GameKind::DominationAE, std::nullopt}; }
    static Convention hgame(Graph pattern);
};

enum class Outcome {
    AvoiderWins,
    EnforcerWins,
    FirstPlayerLoses,
    SecondPlayerLoses,
    Draw,
    DominatorWins,
    StallerWins,
};

/// Stable report token: AVOIDER, ENFORCER, FIRST_LOSES, ...
const char* outcome_token(Outcome o) noexcept;

/// Least index of an edge contained in `claimed`.
std::optional<std::size_t> avoider_filled(const Hypergraph& h, VertexSet claimed);

/// Closed-neighborhood domination.
bool is_dominating(const Graph& g, VertexSet s);

/// Does the subgraph of g induced on s contain a (not necessarily induced)
/// copy of pattern?
bool subgraph_contains(const Graph& g, VertexSet s, const Graph& pattern);

} // namespace avoidgame
