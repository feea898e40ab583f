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
#include <cstdint>
#include <memory>
#include <vector>

#include "avoidgame/core.hpp"

namespace avoidgame {

struct SolveOptions {
    /// Skip moves dominated in the residual hypergraph (Avoider-Enforcer only).
    bool use_dominated_pruning = true;
    std::size_t transposition_budget = std::size_t{64} << 20; ///< bytes
    double timeout_s = 0.0;                                 ///< 0 disables
    std::uint64_t node_limit = 0;                           ///< 0 disables

    void validate() const;
};

struct SolveReport {
    Outcome outcome = Outcome::AvoiderWins;
    std::uint64_t nodes = 0;
    std::uint64_t table_hits = 0;
    double elapsed_s = 0.0;
    /// Optimal line from the empty board to a terminal position, lowest id
    /// among optimal moves at every step.
    std::vector<Vertex> principal_variation;
};

/// Avoider moves first; Enforcer wins iff Avoider ever holds a whole edge.
SolveReport solve_ae(const Hypergraph& h, const SolveOptions& opts = {});

/// Both players avoid; completing an edge inside one's own claims loses,
/// a full board without that is a draw.
SolveReport solve_aa(const Hypergraph& h, const SolveOptions& opts = {});

/// Staller moves first; Staller wins iff Dominator's final set dominates g.
SolveReport solve_domination(const Graph& g, const SolveOptions& opts = {});

/// Avoider moves first; Enforcer wins iff Avoider's claims contain pattern.
SolveReport solve_hgame(const Graph& g, const Graph& pattern, const SolveOptions& opts = {});

/// Game value of an arbitrary legal position (terminal positions included).
Outcome position_value(const Hypergraph& h, GameKind kind, const PlayState& state, const SolveOptions& opts = {});

/// Lowest-id move achieving the value of the position for the player to move.
/// `kind` must be AvoiderEnforcer or AvoiderAvoider.
Vertex best_move(const Hypergraph& h, GameKind kind, const PlayState& state, const SolveOptions& opts = {});

/// Graph games: DominationAE, or HGame with the convention's pattern.
Vertex best_move(const Graph& g, const Convention& conv, const PlayState& state, const SolveOptions& opts = {});

/// Keeps one transposition table across many queries on the same hypergraph.
/// Limits in the options apply to each query separately.
class PositionSolver {
public:
    /// `kind` must be AvoiderEnforcer or AvoiderAvoider.
    PositionSolver(const Hypergraph& h, GameKind kind, const SolveOptions& opts = {});
    ~PositionSolver();
    PositionSolver(PositionSolver&&) noexcept;
    PositionSolver& operator=(PositionSolver&&) noexcept;

    Outcome value(const PlayState& state);
    Vertex best_move(const PlayState& state);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace avoidgame
