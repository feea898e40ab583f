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

#include "avoidgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <optional>

#include "pattern_matcher.hpp"

namespace avoidgame {

void SolveOptions::validate() const
{
    if (transposition_budget == 0)
        throw Error(ErrorCode::InvalidArgument, "transposition budget must be positive");
    if (timeout_s < 0.0)
        throw Error(ErrorCode::InvalidArgument, "timeout must be non-negative");
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

Mask full_mask(int n) { return VertexSet::range(n).bits(); }

class Budget {
public:
    explicit Budget(const SolveOptions& o) : start_(Clock::now()), timeout_s_(o.timeout_s), node_limit_(o.node_limit) {}

    void restart()
    {
        start_ = Clock::now();
        nodes = 0;
        hits = 0;
    }

    void tick()
    {
        ++nodes;
        if (node_limit_ != 0 && nodes > node_limit_)
            throw Error(ErrorCode::NodeLimit, "node limit of " + std::to_string(node_limit_) + " reached");
        if (timeout_s_ > 0.0 && (nodes & 1023) == 0 && elapsed() > timeout_s_)
            throw Error(ErrorCode::Timeout, "search exceeded " + std::to_string(timeout_s_) + " s");
    }

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    std::uint64_t nodes = 0;
    std::uint64_t hits = 0;

private:
    Clock::time_point start_;
    double timeout_s_;
    std::uint64_t node_limit_;
};

/// Open-addressing memo keyed by both claim bitsets. A full probe window is
/// overwritten, which only costs a recomputation.
class TranspositionTable {
public:
    TranspositionTable(std::size_t budget_bytes, int board_size)
    {
        // No need for more slots than about twice the 3^n positions.
        double positions = std::pow(3.0, std::min(board_size, 40));
        std::size_t want = static_cast<std::size_t>(std::min(2.0 * positions + 1024.0, 1e18));
        std::size_t cap = std::max<std::size_t>(budget_bytes / sizeof(Entry), 1024);
        std::size_t slots = std::bit_floor(std::min(want, cap));
        slots_.resize(slots);
        mask_ = slots - 1;
    }

    bool probe(Mask a, Mask b, int& value) const
    {
        std::size_t h = hash(a, b);
        for (std::size_t i = 0; i < kWindow; ++i) {
            const Entry& e = slots_[(h + i) & mask_];
            if (!e.used)
                return false;
            if (e.a == a && e.b == b) {
                value = e.value;
                return true;
            }
        }
        return false;
    }

    void store(Mask a, Mask b, int value)
    {
        std::size_t h = hash(a, b);
        for (std::size_t i = 0; i < kWindow; ++i) {
            Entry& e = slots_[(h + i) & mask_];
            if (!e.used || (e.a == a && e.b == b)) {
                e = Entry{a, b, static_cast<std::int8_t>(value), true};
                return;
            }
        }
        slots_[h & mask_] = Entry{a, b, static_cast<std::int8_t>(value), true};
    }

private:
    struct Entry {
        Mask a = 0;
        Mask b = 0;
        std::int8_t value = 0;
        bool used = false;
    };
    static constexpr std::size_t kWindow = 8;

    static std::size_t hash(Mask a, Mask b)
    {
        Mask x = a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        x ^= x >> 29;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 32;
        return static_cast<std::size_t>(x);
    }

    std::vector<Entry> slots_;
    std::size_t mask_ = 0;
};

// ---------------------------------------------------------------------------
// Rules for the two-valued games. "first" is the player moving first
// (Avoider, Staller); values are "first player wins".

struct HypergraphMasks {
    explicit HypergraphMasks(const Hypergraph& h) : n(h.num_vertices()), edges_of(static_cast<std::size_t>(n) + 1)
    {
        if (n > kMaxBoardVertices)
            throw Error(ErrorCode::OutOfRange, "solver supports at most 64 vertices");
        for (std::size_t i = 0; i < h.num_edges(); ++i)
            edges.push_back(h.edge_set(i).bits());
        // Repeated edges never change a winner.
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (Vertex v : VertexSet(edges[i]))
                edges_of[v].push_back(static_cast<int>(i));
    }

    bool completes(Mask owner, Vertex v) const
    {
        for (int i : edges_of[v])
            if ((edges[i] & ~owner) == 0)
                return true;
        return false;
    }

    bool holds_edge(Mask owner) const
    {
        return std::any_of(edges.begin(), edges.end(), [owner](Mask e) { return (e & ~owner) == 0; });
    }

    int n;
    std::vector<Mask> edges;
    std::vector<std::vector<int>> edges_of;
};

class AeRules {
public:
    AeRules(const Hypergraph& h, bool prune) : g_(h), prune_(prune) {}

    int board_size() const { return g_.n; }

    std::optional<bool> terminal(Mask first, Mask second) const
    {
        if (g_.holds_edge(first))
            return false;
        if ((first | second) == full_mask(g_.n))
            return true;
        return std::nullopt;
    }

    std::optional<bool> after_move(Mask first, Mask, Vertex v, bool first_moved) const
    {
        if (first_moved && g_.completes(first, v))
            return false;
        return std::nullopt;
    }

    bool final_value(Mask, Mask) const { return true; }

    /// Every edge already holds an Enforcer vertex.
    std::optional<bool> decided(Mask, Mask second) const
    {
        for (Mask e : g_.edges)
            if ((e & second) == 0)
                return std::nullopt;
        return true;
    }

    Mask candidates(Mask, Mask second, Mask free, bool) const
    {
        if (!prune_)
            return free;
        // common[u]: free vertices lying in every live edge through u.
        Mask common[kMaxBoardVertices];
        for (Vertex u : VertexSet(free))
            common[u - 1] = free;
        for (Mask e : g_.edges) {
            if (e & second)
                continue;
            Mask rest = e & free;
            for (Vertex u : VertexSet(rest))
                common[u - 1] &= rest;
        }
        Mask pruned = 0;
        for (Vertex u : VertexSet(free)) {
            for (Vertex v : VertexSet(common[u - 1] & ~bit(u))) {
                bool mutual = (common[v - 1] & bit(u)) != 0;
                if (!mutual || u < v)
                    pruned |= bit(v);
            }
        }
        return free & ~pruned;
    }

private:
    HypergraphMasks g_;
    bool prune_;
};

class DominationRules {
public:
    explicit DominationRules(const Graph& g) : n_(g.num_vertices())
    {
        if (n_ > kMaxBoardVertices)
            throw Error(ErrorCode::OutOfRange, "solver supports at most 64 vertices");
        auto nbrs = g.neighbor_sets();
        closed_.resize(nbrs.size());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            closed_[i] = nbrs[i].bits() | (Mask{1} << i);
    }

    int board_size() const { return n_; }

    std::optional<bool> terminal(Mask staller, Mask dominator) const
    {
        for (Mask c : closed_)
            if ((c & ~staller) == 0)
                return false;
        if ((staller | dominator) == full_mask(n_))
            return final_value(staller, dominator);
        return std::nullopt;
    }

    /// Staller claiming a whole closed neighbourhood leaves it undominated.
    std::optional<bool> after_move(Mask staller, Mask, Vertex v, bool first_moved) const
    {
        if (!first_moved)
            return std::nullopt;
        for (Vertex w : VertexSet(closed_[v - 1]))
            if ((closed_[w - 1] & ~staller) == 0)
                return false;
        return std::nullopt;
    }

    bool final_value(Mask, Mask dominator) const { return dominates(dominator); }

    std::optional<bool> decided(Mask, Mask dominator) const
    {
        if (dominates(dominator))
            return true;
        return std::nullopt;
    }

    Mask candidates(Mask, Mask, Mask free, bool) const { return free; }

private:
    bool dominates(Mask s) const
    {
        return std::all_of(closed_.begin(), closed_.end(), [s](Mask c) { return (c & s) != 0; });
    }

    int n_;
    std::vector<Mask> closed_;
};

class HGameRules {
public:
    HGameRules(const Graph& g, const Graph& pattern) : n_(g.num_vertices()), matcher_(g, pattern)
    {
        if (n_ > kMaxBoardVertices)
            throw Error(ErrorCode::OutOfRange, "solver supports at most 64 vertices");
    }

    int board_size() const { return n_; }

    std::optional<bool> terminal(Mask avoider, Mask enforcer) const
    {
        if (matcher_.contains(VertexSet(avoider)))
            return false;
        if ((avoider | enforcer) == full_mask(n_))
            return true;
        return std::nullopt;
    }

    std::optional<bool> after_move(Mask avoider, Mask, Vertex, bool first_moved) const
    {
        if (first_moved && std::popcount(avoider) >= matcher_.pattern_size() && matcher_.contains(VertexSet(avoider)))
            return false;
        return std::nullopt;
    }

    bool final_value(Mask, Mask) const { return true; }

    /// Avoider cannot reach pattern size any more.
    std::optional<bool> decided(Mask avoider, Mask enforcer) const
    {
        int free = n_ - std::popcount(avoider | enforcer);
        bool avoider_to_move = std::popcount(avoider) == std::popcount(enforcer);
        int still = avoider_to_move ? (free + 1) / 2 : free / 2;
        if (std::popcount(avoider) + still < matcher_.pattern_size())
            return true;
        return std::nullopt;
    }

    Mask candidates(Mask, Mask, Mask free, bool) const { return free; }

private:
    int n_;
    detail::PatternMatcher matcher_;
};

template <class Rules>
class TwoValueEngine {
public:
    TwoValueEngine(const Rules& rules, const SolveOptions& opts, Budget& budget)
        : rules_(rules), all_(full_mask(rules.board_size())), tt_(opts.transposition_budget, rules.board_size()),
          budget_(budget)
    {
    }

    /// First player wins from (first, second), terminal positions included.
    bool value(Mask first, Mask second)
    {
        if (auto t = rules_.terminal(first, second))
            return *t;
        return search(first, second);
    }

    bool is_terminal(Mask first, Mask second) const { return rules_.terminal(first, second).has_value(); }

    Vertex best(Mask first, Mask second)
    {
        const bool target = value(first, second);
        const bool first_to_move = std::popcount(first) == std::popcount(second);
        for (Vertex v : VertexSet(all_ & ~(first | second))) {
            bool child = first_to_move ? child_value(first | bit(v), second, v, true)
                                       : child_value(first, second | bit(v), v, false);
            if (child == target)
                return v;
        }
        throw Error(ErrorCode::TerminalPosition, "no move available");
    }

    std::vector<Vertex> principal_variation(Mask first, Mask second)
    {
        std::vector<Vertex> line;
        while (!is_terminal(first, second)) {
            Vertex v = best(first, second);
            line.push_back(v);
            if (std::popcount(first) == std::popcount(second))
                first |= bit(v);
            else
                second |= bit(v);
        }
        return line;
    }

private:
    bool child_value(Mask first, Mask second, Vertex v, bool first_moved)
    {
        if (auto t = rules_.after_move(first, second, v, first_moved))
            return *t;
        if ((first | second) == all_)
            return rules_.final_value(first, second);
        return search(first, second);
    }

    /// Nonterminal positions only.
    bool search(Mask first, Mask second)
    {
        budget_.tick();
        if (auto d = rules_.decided(first, second))
            return *d;
        int cached = 0;
        if (tt_.probe(first, second, cached)) {
            ++budget_.hits;
            return cached != 0;
        }
        const bool first_to_move = std::popcount(first) == std::popcount(second);
        const Mask free = all_ & ~(first | second);
        bool result = !first_to_move;
        for (Vertex v : VertexSet(rules_.candidates(first, second, free, first_to_move))) {
            if (first_to_move) {
                if (child_value(first | bit(v), second, v, true)) {
                    result = true;
                    break;
                }
            } else if (!child_value(first, second | bit(v), v, false)) {
                result = false;
                break;
            }
        }
        tt_.store(first, second, result ? 1 : 0);
        return result;
    }

    const Rules& rules_;
    Mask all_;
    TranspositionTable tt_;
    Budget& budget_;
};

/// Avoider-Avoider: negamax over {-1, 0, +1} for the player to move.
class AaEngine {
public:
    AaEngine(const Hypergraph& h, const SolveOptions& opts, Budget& budget)
        : g_(h), all_(full_mask(g_.n)), tt_(opts.transposition_budget, g_.n), budget_(budget)
    {
    }

    /// Value for the first player, terminal positions included.
    int value_for_first(Mask first, Mask second)
    {
        if (auto t = terminal(first, second))
            return *t;
        int v = search(first, second);
        return std::popcount(first) == std::popcount(second) ? v : -v;
    }

    std::optional<int> terminal(Mask first, Mask second) const
    {
        if (g_.holds_edge(first))
            return -1;
        if (g_.holds_edge(second))
            return 1;
        if ((first | second) == all_)
            return 0;
        return std::nullopt;
    }

    Vertex best(Mask first, Mask second)
    {
        const bool first_to_move = std::popcount(first) == std::popcount(second);
        const int target = first_to_move ? value_for_first(first, second) : -value_for_first(first, second);
        for (Vertex v : VertexSet(all_ & ~(first | second)))
            if (move_value(first, second, v, first_to_move) == target)
                return v;
        throw Error(ErrorCode::TerminalPosition, "no move available");
    }

    std::vector<Vertex> principal_variation(Mask first, Mask second)
    {
        std::vector<Vertex> line;
        while (!terminal(first, second)) {
            Vertex v = best(first, second);
            line.push_back(v);
            if (std::popcount(first) == std::popcount(second))
                first |= bit(v);
            else
                second |= bit(v);
        }
        return line;
    }

private:
    /// Value for the mover of playing v.
    int move_value(Mask first, Mask second, Vertex v, bool first_to_move)
    {
        Mask mine = (first_to_move ? first : second) | bit(v);
        if (g_.completes(mine, v))
            return -1;
        Mask nf = first_to_move ? mine : first;
        Mask ns = first_to_move ? second : mine;
        if ((nf | ns) == all_)
            return 0;
        return -search(nf, ns);
    }

    int search(Mask first, Mask second)
    {
        budget_.tick();
        int cached = 0;
        if (tt_.probe(first, second, cached)) {
            ++budget_.hits;
            return cached;
        }
        const bool first_to_move = std::popcount(first) == std::popcount(second);
        int best = -2;
        for (Vertex v : VertexSet(all_ & ~(first | second))) {
            best = std::max(best, move_value(first, second, v, first_to_move));
            if (best == 1)
                break;
        }
        tt_.store(first, second, best);
        return best;
    }

    HypergraphMasks g_;
    Mask all_;
    TranspositionTable tt_;
    Budget& budget_;
};

template <class Rules>
SolveReport run_two_value(const Rules& rules, const SolveOptions& opts, Outcome first_wins, Outcome first_loses)
{
    opts.validate();
    Budget budget(opts);
    TwoValueEngine<Rules> engine(rules, opts, budget);
    SolveReport r;
    r.outcome = engine.value(0, 0) ? first_wins : first_loses;
    r.principal_variation = engine.principal_variation(0, 0);
    r.nodes = budget.nodes;
    r.table_hits = budget.hits;
    r.elapsed_s = budget.elapsed();
    return r;
}

Outcome aa_outcome(int value_for_first)
{
    if (value_for_first > 0)
        return Outcome::SecondPlayerLoses;
    if (value_for_first < 0)
        return Outcome::FirstPlayerLoses;
    return Outcome::Draw;
}

void check_state(const PlayState& state, int board_size)
{
    if (state.board_size() != board_size)
        throw Error(ErrorCode::InvalidArgument, "position does not match the board size");
}

} // namespace

SolveReport solve_ae(const Hypergraph& h, const SolveOptions& opts)
{
    return run_two_value(AeRules(h, opts.use_dominated_pruning), opts, Outcome::AvoiderWins, Outcome::EnforcerWins);
}

SolveReport solve_domination(const Graph& g, const SolveOptions& opts)
{
    return run_two_value(DominationRules(g), opts, Outcome::StallerWins, Outcome::DominatorWins);
}

SolveReport solve_hgame(const Graph& g, const Graph& pattern, const SolveOptions& opts)
{
    if (pattern.num_vertices() == 0)
        throw Error(ErrorCode::BadPattern, "H-game pattern must be nonempty");
    return run_two_value(HGameRules(g, pattern), opts, Outcome::AvoiderWins, Outcome::EnforcerWins);
}

SolveReport solve_aa(const Hypergraph& h, const SolveOptions& opts)
{
    opts.validate();
    Budget budget(opts);
    AaEngine engine(h, opts, budget);
    SolveReport r;
    r.outcome = aa_outcome(engine.value_for_first(0, 0));
    r.principal_variation = engine.principal_variation(0, 0);
    r.nodes = budget.nodes;
    r.table_hits = budget.hits;
    r.elapsed_s = budget.elapsed();
    return r;
}

struct PositionSolver::Impl {
    Impl(const Hypergraph& h, GameKind kind, const SolveOptions& opts) : budget(opts)
    {
        opts.validate();
        n = h.num_vertices();
        if (kind == GameKind::AvoiderEnforcer) {
            ae_rules.emplace(h, opts.use_dominated_pruning);
            ae.emplace(*ae_rules, opts, budget);
        } else if (kind == GameKind::AvoiderAvoider) {
            aa.emplace(h, opts, budget);
        } else {
            throw Error(ErrorCode::InvalidArgument, "hypergraph games are Avoider-Enforcer or Avoider-Avoider");
        }
    }

    int n = 0;
    Budget budget;
    std::optional<AeRules> ae_rules;
    std::optional<TwoValueEngine<AeRules>> ae;
    std::optional<AaEngine> aa;
};

PositionSolver::PositionSolver(const Hypergraph& h, GameKind kind, const SolveOptions& opts)
    : impl_(std::make_unique<Impl>(h, kind, opts))
{
}

PositionSolver::~PositionSolver() = default;
PositionSolver::PositionSolver(PositionSolver&&) noexcept = default;
PositionSolver& PositionSolver::operator=(PositionSolver&&) noexcept = default;

Outcome PositionSolver::value(const PlayState& state)
{
    check_state(state, impl_->n);
    impl_->budget.restart();
    const Mask f = state.first().bits(), s = state.second().bits();
    if (impl_->ae)
        return impl_->ae->value(f, s) ? Outcome::AvoiderWins : Outcome::EnforcerWins;
    return aa_outcome(impl_->aa->value_for_first(f, s));
}

Vertex PositionSolver::best_move(const PlayState& state)
{
    check_state(state, impl_->n);
    impl_->budget.restart();
    const Mask f = state.first().bits(), s = state.second().bits();
    if (impl_->ae) {
        if (impl_->ae->is_terminal(f, s))
            throw Error(ErrorCode::TerminalPosition, "game is already decided");
        return impl_->ae->best(f, s);
    }
    if (impl_->aa->terminal(f, s))
        throw Error(ErrorCode::TerminalPosition, "game is already decided");
    return impl_->aa->best(f, s);
}

Outcome position_value(const Hypergraph& h, GameKind kind, const PlayState& state, const SolveOptions& opts)
{
    return PositionSolver(h, kind, opts).value(state);
}

Vertex best_move(const Hypergraph& h, GameKind kind, const PlayState& state, const SolveOptions& opts)
{
    return PositionSolver(h, kind, opts).best_move(state);
}

Vertex best_move(const Graph& g, const Convention& conv, const PlayState& state, const SolveOptions& opts)
{
    opts.validate();
    check_state(state, g.num_vertices());
    Budget budget(opts);
    const Mask f = state.first().bits(), s = state.second().bits();
    auto pick = [&](const auto& rules) {
        TwoValueEngine engine(rules, opts, budget);
        if (engine.is_terminal(f, s))
            throw Error(ErrorCode::TerminalPosition, "game is already decided");
        return engine.best(f, s);
    };
    if (conv.kind == GameKind::DominationAE)
        return pick(DominationRules(g));
    if (conv.kind == GameKind::HGame && conv.pattern)
        return pick(HGameRules(g, *conv.pattern));
    throw Error(ErrorCode::InvalidArgument, "graph games are DominationAE or HGame");
}

} // namespace avoidgame
