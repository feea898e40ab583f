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
#include "avoidgame/reductions.hpp"
#include "avoidgame/solver.hpp"

namespace avoidgame {

enum class Player { Avoider, Enforcer };

enum class SlotKind {
    Fixed,     ///< one prescribed vertex
    Choice,    ///< the mover picks one literal of the pair
    Remainder, ///< the literal left over by the previous Choice
};

/// One move of the legitimate order. For Choice and Remainder slots,
/// `vertex` is x(var) and `other` is xbar(var).
struct LegitimateSlot {
    int round = 1;
    int step = 1; ///< 1..10 inside the round
    Player mover = Player::Avoider;
    SlotKind kind = SlotKind::Fixed;
    Vertex vertex = 0;
    Vertex other = 0;

    bool operator==(const LegitimateSlot&) const = default;
};

/// 10n slots for the reduction of an n-round formula (id layout of
/// reduce_qbf_to_ae).
std::vector<LegitimateSlot> legitimate_order(int rounds);

/// X(i) is true iff Avoider holds xbar(i) and Enforcer holds x(i); false in
/// the mirrored case; unset otherwise. `state.first()` is Avoider.
Assignment underlying_valuation(const LabeledReduction& red, const PlayState& state);

/// S(i) for 1 <= i <= 4n. Throws IndexOutOfRange.
VertexSet s_set(const LabeledReduction& red, int i);

/// Index into legitimate_order(rounds) of the first slot whose vertices lie
/// in S(i); S(i) is exactly the vertex set of the slots from there on.
std::size_t s_set_start(int rounds, int i);

struct PairSet {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::optional<Vertex> distinguished;

    /// Partner of v, or nullopt when v is in no pair.
    std::optional<Vertex> partner(Vertex v) const;
    VertexSet vertices() const;
    /// Throws InvalidArgument on overlapping pairs or a paired distinguished vertex.
    void validate() const;
};

enum class PairingRole {
    LastMover,    ///< claims the last vertex; forces the opponent into every pair
    NotLastMover, ///< forces the opponent into every pair and onto the distinguished vertex
};

/// Next move of the pairing strategy for the player to move in `state`.
/// Only vertices of `region` are considered (whole board when empty).
/// Throws NoLegalMove when the region has no free vertex.
Vertex pairing_move(const PlayState& state, const PairSet& pairs, PairingRole role,
                    std::optional<VertexSet> region = std::nullopt);

/// Ordered pairs (u, v), u != v, such that every edge containing u contains v.
std::vector<std::pair<Vertex, Vertex>> dominated_pairs(const Hypergraph& h);

/// Move history: history[0] is Avoider's first move, players alternate.
using History = std::vector<Vertex>;

/// Largest i such that Avoider claimed a vertex of S(i) before Enforcer did,
/// or nullopt.
std::optional<int> avoider_first_entry(const LabeledReduction& red, const History& history);

/// Enforcer's reply once Avoider has been first to play inside S(entered).
/// Throws NotADeviation if she was not.
Vertex enforcer_punish_move(const LabeledReduction& red, const History& history, int entered);

/// Pairing used by Avoider after Enforcer played y_E where the legitimate
/// order asked for y_A. `history` ends with y_E; `planned` holds, for every
/// variable whose literals lie outside the protected set, the value Avoider
/// aims for. Pairs cover only unplayed vertices outside S(k), where k is the
/// smallest index with y_E outside S(k) (k = 4n + 1, S(k) empty, when y_E is
/// in S(4n)). Throws IllegalDeviation when y_E is an odd-indexed u.
PairSet avoider_repair_pairing(const LabeledReduction& red, const History& history, Vertex y_a,
                               const Assignment& planned);

/// Smallest k with v outside S(k); 4n + 1 when v lies in every S(i).
int first_set_excluding(const LabeledReduction& red, Vertex v);

struct OracleMove {
    Vertex vertex = 0;
    bool fallback = false; ///< chosen by the exact solver
    std::string note;      ///< why the fallback was taken
};

/// Enforcer plays the legitimate order with Falsifier's choices and punishes
/// the first Avoider move into an S(i) he has not touched.
class EnforcerOracle {
public:
    EnforcerOracle(const LabeledReduction& red, const QbfFormula& formula);
    OracleMove move(const History& history) const;

private:
    Vertex legitimate_move(const PlayState& state) const;

    const LabeledReduction& red_;
    const QbfFormula& formula_;
    std::vector<LegitimateSlot> order_;
};

/// Avoider plays the legitimate order with Satisfier's choices and repairs a
/// single Enforcer deviation with a pairing outside S(k). Anything else is
/// handed to the exact solver and reported as a fallback.
class AvoiderOracle {
public:
    AvoiderOracle(const LabeledReduction& red, const QbfFormula& formula, const SolveOptions& opts = {});
    OracleMove move(const History& history);

private:
    OracleMove fallback(const PlayState& state, std::string note);
    OracleMove after_deviation(const History& history, std::size_t at);
    Vertex satisfier_literal(const Assignment& fixed, int var) const;

    const LabeledReduction& red_;
    const QbfFormula& formula_;
    std::vector<LegitimateSlot> order_;
    PositionSolver solver_;
};

} // namespace avoidgame
