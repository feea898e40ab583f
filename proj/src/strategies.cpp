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

#include "avoidgame/strategies.hpp"

#include <algorithm>

namespace avoidgame {

namespace {

struct Layout {
    int n;
    Vertex x(int var) const { return var; }
    Vertex xbar(int var) const { return 2 * n + var; }
    Vertex u(int j) const { return 4 * n + j; }
    bool has_u(int j) const { return j >= 1 && j <= 6 * n; }
};

/// Variable of a literal vertex, 0 for u vertices.
int variable_of(const LabeledReduction& red, Vertex v)
{
    const VertexLabel& l = red.label(v);
    return (l.kind == VertexKind::X || l.kind == VertexKind::XBar) ? l.index : 0;
}

Vertex other_literal(const LabeledReduction& red, Vertex v)
{
    int var = variable_of(red, v);
    return v == red.x(var) ? red.xbar(var) : red.x(var);
}

PlayState replay_prefix(int n, const History& history, std::size_t len)
{
    return PlayState::replay(n, History(history.begin(), history.begin() + static_cast<std::ptrdiff_t>(len)));
}

/// Whether `v`, played by the slot's mover from `before`, follows the slot.
bool fulfills(const LegitimateSlot& slot, const PlayState& before, Vertex v)
{
    switch (slot.kind) {
    case SlotKind::Fixed:
        return v == slot.vertex;
    case SlotKind::Choice:
        return v == slot.vertex || v == slot.other;
    case SlotKind::Remainder:
        return (v == slot.vertex && before.claimed().contains(slot.other)) ||
               (v == slot.other && before.claimed().contains(slot.vertex));
    }
    return false;
}

std::optional<Vertex> lowest(VertexSet s)
{
    if (s.empty())
        return std::nullopt;
    return s.min();
}

VertexSet literals_of(const LabeledReduction& red, int var) { return VertexSet{red.x(var), red.xbar(var)}; }

} // namespace

std::vector<LegitimateSlot> legitimate_order(int rounds)
{
    if (rounds < 1)
        throw Error(ErrorCode::InvalidArgument, "legitimate order needs at least one round");
    const Layout L{rounds};
    std::vector<LegitimateSlot> order;
    order.reserve(static_cast<std::size_t>(10 * rounds));
    const auto A = Player::Avoider;
    const auto E = Player::Enforcer;
    for (int i = 1; i <= rounds; ++i) {
        const int odd = 2 * i - 1, even = 2 * i;
        order.push_back({i, 1, A, SlotKind::Fixed, L.u(6 * i - 5), 0});
        order.push_back({i, 2, E, SlotKind::Fixed, L.u(6 * i - 4), 0});
        order.push_back({i, 3, A, SlotKind::Fixed, L.u(6 * i - 3), 0});
        order.push_back({i, 4, E, SlotKind::Choice, L.x(odd), L.xbar(odd)});
        order.push_back({i, 5, A, SlotKind::Remainder, L.x(odd), L.xbar(odd)});
        order.push_back({i, 6, E, SlotKind::Fixed, L.u(6 * i - 2), 0});
        order.push_back({i, 7, A, SlotKind::Fixed, L.u(6 * i - 1), 0});
        order.push_back({i, 8, E, SlotKind::Fixed, L.u(6 * i), 0});
        order.push_back({i, 9, A, SlotKind::Choice, L.x(even), L.xbar(even)});
        order.push_back({i, 10, E, SlotKind::Remainder, L.x(even), L.xbar(even)});
    }
    return order;
}

Assignment underlying_valuation(const LabeledReduction& red, const PlayState& state)
{
    Assignment a(2 * red.rounds);
    for (int var = 1; var <= 2 * red.rounds; ++var) {
        const Vertex x = red.x(var), xb = red.xbar(var);
        if (state.first().contains(xb) && state.second().contains(x))
            a.set(var, true);
        else if (state.first().contains(x) && state.second().contains(xb))
            a.set(var, false);
    }
    return a;
}

VertexSet s_set(const LabeledReduction& red, int i)
{
    const int n = red.rounds;
    if (i < 1 || i > 4 * n)
        throw Error(ErrorCode::IndexOutOfRange, "S index " + std::to_string(i) + " outside 1.." + std::to_string(4 * n));
    const Layout L{n};
    VertexSet s{L.u(6 * n), L.x(2 * n), L.xbar(2 * n)};
    for (int j = 4 * n - 1; j >= i; --j) {
        const int k = (j + 3) / 4;
        switch (4 * k - j) {
        case 0:
            s |= VertexSet{L.u(6 * k), L.x(2 * k), L.xbar(2 * k), L.u(6 * k + 1)};
            break;
        case 1:
            s |= VertexSet{L.u(6 * k - 2), L.u(6 * k - 1)};
            break;
        case 2:
            s |= VertexSet{L.x(2 * k - 1), L.xbar(2 * k - 1)};
            break;
        default:
            s |= VertexSet{L.u(6 * k - 4), L.u(6 * k - 3)};
            break;
        }
    }
    return s;
}

std::size_t s_set_start(int rounds, int i)
{
    if (i < 1 || i > 4 * rounds)
        throw Error(ErrorCode::IndexOutOfRange, "S index out of range");
    const int k = (i + 3) / 4;
    static constexpr int offset[4] = {7, 5, 3, 1}; // by 4k - i
    return static_cast<std::size_t>(10 * (k - 1) + offset[4 * k - i]);
}

int first_set_excluding(const LabeledReduction& red, Vertex v)
{
    for (int i = 1; i <= 4 * red.rounds; ++i)
        if (!s_set(red, i).contains(v))
            return i;
    return 4 * red.rounds + 1;
}

std::optional<Vertex> PairSet::partner(Vertex v) const
{
    for (auto [a, b] : pairs) {
        if (a == v)
            return b;
        if (b == v)
            return a;
    }
    return std::nullopt;
}

VertexSet PairSet::vertices() const
{
    VertexSet s;
    for (auto [a, b] : pairs) {
        s.insert(a);
        s.insert(b);
    }
    return s;
}

void PairSet::validate() const
{
    VertexSet seen;
    for (auto [a, b] : pairs) {
        if (a == b || seen.contains(a) || seen.contains(b))
            throw Error(ErrorCode::InvalidArgument, "pairs must be disjoint");
        seen.insert(a);
        seen.insert(b);
    }
    if (distinguished && seen.contains(*distinguished))
        throw Error(ErrorCode::InvalidArgument, "distinguished vertex lies in a pair");
}

Vertex pairing_move(const PlayState& state, const PairSet& pairs, PairingRole role, std::optional<VertexSet> region)
{
    const VertexSet area = region ? *region : VertexSet::range(state.board_size());
    const VertexSet free = state.unclaimed() & area;
    if (free.empty())
        throw Error(ErrorCode::NoLegalMove, "no free vertex to play");
    const Side me = state.to_move();
    const VertexSet theirs = state.claimed(other(me));
    const VertexSet mine = state.claimed(me);

    // Answer an entry into a pair with its partner.
    for (auto [a, b] : pairs.pairs) {
        if (theirs.contains(a) && free.contains(b))
            return b;
        if (theirs.contains(b) && free.contains(a))
            return a;
    }

    const VertexSet paired = pairs.vertices();
    VertexSet avoid = paired;
    if (role == PairingRole::NotLastMover) {
        // The vertex the opponent must end up taking: the distinguished one,
        // or once she has it, the partner of a pair we opened ourselves.
        std::optional<Vertex> target;
        if (pairs.distinguished && free.contains(*pairs.distinguished))
            target = pairs.distinguished;
        for (auto [a, b] : pairs.pairs) {
            if (target)
                break;
            if (mine.contains(a) && free.contains(b))
                target = b;
            else if (mine.contains(b) && free.contains(a))
                target = a;
        }
        if (!target) {
            for (auto [a, b] : pairs.pairs)
                if (free.contains(a) && free.contains(b))
                    return std::min(a, b);
        }
        if (target)
            avoid.insert(*target);
    }
    if (auto v = lowest(free - avoid))
        return *v;
    return free.min();
}

std::vector<std::pair<Vertex, Vertex>> dominated_pairs(const Hypergraph& h)
{
    const int n = h.num_vertices();
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        edges.push_back(h.edge_set(i));
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v)
                continue;
            bool all = std::all_of(edges.begin(), edges.end(),
                                   [u, v](VertexSet e) { return !e.contains(u) || e.contains(v); });
            if (all)
                out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

/// Index of the first move touching s, or nullopt.
std::optional<std::size_t> first_touch(const History& history, VertexSet s)
{
    for (std::size_t t = 0; t < history.size(); ++t)
        if (s.contains(history[t]))
            return t;
    return std::nullopt;
}

/// Scripted reply inside S(j) once Avoider has played there again.
std::optional<Vertex> punishment_script(const LabeledReduction& red, const PlayState& state, int j)
{
    const int n = red.rounds;
    const Layout L{n};
    const int k = (j + 3) / 4;
    const VertexSet free = state.unclaimed();
    const VertexSet enf = state.second();
    auto if_free = [&](Vertex v) -> std::optional<Vertex> {
        if (free.contains(v))
            return v;
        return std::nullopt;
    };
    switch (4 * k - j) {
    case 3: // Avoider took u(6k-4), u(6k-3)
        if (!enf.intersects(literals_of(red, 2 * k - 1)) && free.contains(L.x(2 * k - 1)))
            return L.x(2 * k - 1);
        return if_free(L.u(6 * k - 2));
    case 2: // Avoider took both literals of X(2k-1)
        return if_free(L.u(6 * k - 2));
    case 1: // Avoider took u(6k-2), u(6k-1)
        if (free.contains(L.u(6 * k)))
            return L.u(6 * k);
        if (!enf.intersects(literals_of(red, 2 * k)))
            return lowest(free & literals_of(red, 2 * k));
        return std::nullopt;
    default: {
        if (k == n)
            return std::nullopt; // two of the three base vertices already fill an edge
        const VertexSet triple{L.u(6 * k), L.x(2 * k), L.xbar(2 * k)};
        VertexSet quad = triple;
        quad.insert(L.u(6 * k + 1));
        if (!enf.intersects(quad))
            return lowest(free & triple);
        return if_free(L.u(6 * k + 2));
    }
    }
}

} // namespace

std::optional<int> avoider_first_entry(const LabeledReduction& red, const History& history)
{
    std::optional<int> deepest;
    for (int i = 1; i <= 4 * red.rounds; ++i) {
        auto t = first_touch(history, s_set(red, i));
        if (t && *t % 2 == 0)
            deepest = i;
    }
    return deepest;
}

Vertex enforcer_punish_move(const LabeledReduction& red, const History& history, int entered)
{
    const VertexSet s = s_set(red, entered);
    auto t = first_touch(history, s);
    if (!t || *t % 2 != 0)
        throw Error(ErrorCode::NotADeviation, "Avoider was not first to play in S" + std::to_string(entered));
    const PlayState state = PlayState::replay(red.hypergraph.num_vertices(), history);
    if (state.to_move() != Side::Second)
        throw Error(ErrorCode::InvalidArgument, "Enforcer is not to move");
    const VertexSet free = state.unclaimed();
    const VertexSet outside_free = free - s;

    if (*t + 1 == history.size()) {
        if (auto v = lowest(outside_free))
            return *v;
        return free.min();
    }

    // Pairing of the outside vertices left after our reply to the entry.
    const PlayState anchor = replay_prefix(red.hypergraph.num_vertices(), history, *t + 2);
    const std::vector<Vertex> rest = (anchor.unclaimed() - s).to_vector();
    PairSet pairs;
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2)
        pairs.pairs.emplace_back(rest[i], rest[i + 1]);

    const Vertex last = history.back();
    if (!s.contains(last)) {
        if (auto p = pairs.partner(last); p && free.contains(*p))
            return *p;
    } else if (auto v = punishment_script(red, state, entered)) {
        return *v;
    }
    for (auto [a, b] : pairs.pairs) {
        if (state.first().contains(a) && free.contains(b))
            return b;
        if (state.first().contains(b) && free.contains(a))
            return a;
    }
    if (auto v = lowest(outside_free))
        return *v;
    return free.min();
}

PairSet avoider_repair_pairing(const LabeledReduction& red, const History& history, Vertex y_a,
                               const Assignment& planned)
{
    if (history.empty())
        throw Error(ErrorCode::InvalidArgument, "history must end with the deviating move");
    const Vertex y_e = history.back();
    const VertexLabel& le = red.label(y_e);
    if (le.kind == VertexKind::U && le.index % 2 == 1)
        throw Error(ErrorCode::IllegalDeviation, "deviation onto an odd-indexed u is not repaired");
    const int n = red.rounds;
    const Layout L{n};
    const int k = first_set_excluding(red, y_e);
    const VertexSet s = k <= 4 * n ? s_set(red, k) : VertexSet{};
    PlayState state = PlayState::replay(red.hypergraph.num_vertices(), history);
    VertexSet played = state.claimed();
    played.insert(y_a);

    auto avoider_literal = [&](int var) {
        bool value = planned.get(var).value_or(true);
        return value ? L.xbar(var) : L.x(var);
    };
    auto enforcer_literal = [&](int var) { return other_literal(red, avoider_literal(var)); };

    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto add = [&](Vertex a, Vertex b) {
        std::erase_if(pairs, [a, b](const auto& p) { return p.first == a || p.second == a || p.first == b || p.second == b; });
        pairs.emplace_back(a, b);
    };
    auto uu = [&](int j) { return L.has_u(j) ? L.u(j) : 0; };
    for (int i = 1; i <= n; ++i) {
        const std::pair<Vertex, Vertex> base[] = {
            {uu(6 * i - 4), avoider_literal(2 * i - 1)}, {uu(6 * i - 3), uu(6 * i - 6)},
            {enforcer_literal(2 * i - 1), uu(6 * i - 1)}, {uu(6 * i - 2), avoider_literal(2 * i)},
            {uu(6 * i + 1), enforcer_literal(2 * i)},
        };
        for (auto [a, b] : base)
            if (a != 0 && b != 0)
                pairs.emplace_back(a, b);
    }

    auto round_of_u = [](int j) { return (j + 5) / 6; };
    auto unplayed_literal = [&](int var) {
        Vertex x = L.x(var);
        return played.contains(x) ? L.xbar(var) : x;
    };
    // A change naming a vertex beyond u(6n) still frees its partner.
    auto change = [&](Vertex a, Vertex b) {
        if (a != 0 && b != 0)
            add(a, b);
        else
            std::erase_if(pairs, [v = a ? a : b](const auto& p) { return p.first == v || p.second == v; });
    };

    const VertexLabel& la = red.label(y_a);
    if (la.kind == VertexKind::U) {
        const int j = la.index, i = round_of_u(j);
        if (j == 6 * i - 4)
            change(uu(6 * i - 3), avoider_literal(2 * i - 1));
        else if (j == 6 * i - 2)
            change(uu(6 * i - 1), avoider_literal(2 * i));
        else if (j == 6 * i)
            change(uu(6 * i + 3), avoider_literal(2 * i));
    } else if (int var = variable_of(red, y_a); var % 2 == 1) {
        const int i = (var + 1) / 2;
        change(unplayed_literal(var), uu(6 * i - 1));
    }

    if (int var = variable_of(red, y_e); var != 0) {
        const int i = (var + 1) / 2;
        if (var % 2 == 1) {
            change(unplayed_literal(var), uu(6 * i - 4));
        } else {
            change(unplayed_literal(var), uu(6 * i + 1));
            change(uu(6 * i - 2), uu(6 * i));
        }
    }

    PairSet out;
    for (auto [a, b] : pairs)
        if (!played.contains(a) && !played.contains(b) && !s.contains(a) && !s.contains(b))
            out.pairs.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(out.pairs.begin(), out.pairs.end());
    if (k == 4 * n + 1) {
        // Enforcer moves last on the whole remaining board: the vertex left
        // out of the pairing is the one he must end up taking.
        const VertexSet loose = VertexSet::range(red.hypergraph.num_vertices()) - played - out.vertices();
        VertexSet lits;
        for (Vertex v : loose)
            if (variable_of(red, v) != 0)
                lits.insert(v);
        if (!lits.empty())
            out.distinguished = lits.min();
        else if (!loose.empty())
            out.distinguished = loose.min();
    }
    return out;
}

// ---------------------------------------------------------------------------

EnforcerOracle::EnforcerOracle(const LabeledReduction& red, const QbfFormula& formula)
    : red_(red), formula_(formula), order_(legitimate_order(red.rounds))
{
    if (formula.rounds() != red.rounds)
        throw Error(ErrorCode::InvalidArgument, "formula and reduction disagree on the number of rounds");
}

Vertex EnforcerOracle::legitimate_move(const PlayState& state) const
{
    const Assignment fixed = underlying_valuation(red_, state);
    const VertexSet free = state.unclaimed();
    const VertexSet enf = state.second();
    for (const LegitimateSlot& slot : order_) {
        if (slot.mover != Player::Enforcer)
            continue;
        const VertexSet lits{slot.vertex, slot.other};
        switch (slot.kind) {
        case SlotKind::Fixed:
            if (free.contains(slot.vertex))
                return slot.vertex;
            break;
        case SlotKind::Choice:
            if (!enf.intersects(lits)) {
                const int var = variable_of(red_, slot.vertex);
                // Enforcer holding x(var) makes the variable true.
                bool value = winning_choice(formula_, fixed, var).value_or(true);
                Vertex pick = value ? slot.vertex : slot.other;
                if (free.contains(pick))
                    return pick;
                if (auto v = lowest(free & lits))
                    return *v;
            }
            break;
        case SlotKind::Remainder:
            if (!enf.intersects(lits))
                if (auto v = lowest(free & lits))
                    return *v;
            break;
        }
    }
    return free.min();
}

OracleMove EnforcerOracle::move(const History& history) const
{
    const PlayState state = PlayState::replay(red_.hypergraph.num_vertices(), history);
    if (state.to_move() != Side::Second)
        throw Error(ErrorCode::InvalidArgument, "Enforcer is not to move");
    if (state.full())
        throw Error(ErrorCode::TerminalPosition, "board is full");
    if (auto j = avoider_first_entry(red_, history))
        return {enforcer_punish_move(red_, history, *j), false, {}};
    return {legitimate_move(state), false, {}};
}

// ---------------------------------------------------------------------------

AvoiderOracle::AvoiderOracle(const LabeledReduction& red, const QbfFormula& formula, const SolveOptions& opts)
    : red_(red), formula_(formula), order_(legitimate_order(red.rounds)),
      solver_(red.hypergraph, GameKind::AvoiderEnforcer, opts)
{
    if (formula.rounds() != red.rounds)
        throw Error(ErrorCode::InvalidArgument, "formula and reduction disagree on the number of rounds");
}

OracleMove AvoiderOracle::fallback(const PlayState& state, std::string note)
{
    return {solver_.best_move(state), true, std::move(note)};
}

Vertex AvoiderOracle::satisfier_literal(const Assignment& fixed, int var) const
{
    // Avoider holding xbar(var) makes the variable true.
    bool value = winning_choice(formula_, fixed, var).value_or(true);
    return value ? red_.xbar(var) : red_.x(var);
}

OracleMove AvoiderOracle::move(const History& history)
{
    const int n = red_.hypergraph.num_vertices();
    const PlayState state = PlayState::replay(n, history);
    if (state.to_move() != Side::First)
        throw Error(ErrorCode::InvalidArgument, "Avoider is not to move");
    if (state.full())
        throw Error(ErrorCode::TerminalPosition, "board is full");
    if (avoider_filled(red_.hypergraph, state.first()))
        return {state.unclaimed().min(), false, "already lost"};

    PlayState before(n);
    for (std::size_t t = 0; t < history.size(); ++t) {
        if (!fulfills(order_[t], before, history[t])) {
            if (t % 2 == 0)
                return fallback(state, "history left the oracle's own line");
            return after_deviation(history, t);
        }
        before = before.apply(history[t]);
    }

    const LegitimateSlot& slot = order_[history.size()];
    switch (slot.kind) {
    case SlotKind::Fixed:
        return {slot.vertex, false, {}};
    case SlotKind::Choice:
        return {satisfier_literal(underlying_valuation(red_, state), variable_of(red_, slot.vertex)), false, {}};
    case SlotKind::Remainder:
        return {state.claimed().contains(slot.vertex) ? slot.other : slot.vertex, false, {}};
    }
    return fallback(state, "unreachable slot kind");
}

OracleMove AvoiderOracle::after_deviation(const History& history, std::size_t at)
{
    const int nv = red_.hypergraph.num_vertices();
    const int rounds = red_.rounds;
    const PlayState state = PlayState::replay(nv, history);
    const PlayState before = replay_prefix(nv, history, at);
    const Vertex y_e = history[at];
    const LegitimateSlot& slot = order_[at];

    const VertexLabel& le = red_.label(y_e);
    if (le.kind == VertexKind::U && le.index % 2 == 1)
        return fallback(state, "Enforcer deviated onto " + le.text());

    // The vertex the order asked Enforcer to take; Avoider claims it herself.
    Assignment fixed = underlying_valuation(red_, before);
    Vertex y_a = 0;
    switch (slot.kind) {
    case SlotKind::Fixed:
        y_a = slot.vertex;
        break;
    case SlotKind::Choice: {
        const int var = variable_of(red_, slot.vertex);
        Assignment trial = fixed;
        trial.set(var, true);
        bool value = solve_qbf_game(formula_, trial) == QbfWinner::Satisfier;
        y_a = value ? slot.other : slot.vertex;
        break;
    }
    case SlotKind::Remainder:
        return fallback(state, "Enforcer skipped the remaining literal");
    }

    const int k = first_set_excluding(red_, y_e);
    const VertexSet s = k <= 4 * rounds ? s_set(red_, k) : VertexSet{};

    // Planned values for every variable whose literals lie outside S(k).
    PlayState after_ya = replay_prefix(nv, history, at + 1);
    after_ya = PlayState(nv, after_ya.first() | VertexSet{y_a}, after_ya.second());
    Assignment planned(2 * rounds);
    for (int var = 1; var <= 2 * rounds; ++var) {
        const Vertex x = red_.x(var), xb = red_.xbar(var);
        if (s.contains(x))
            continue;
        if (after_ya.second().contains(x) || after_ya.first().contains(xb))
            planned.set(var, true);
        else if (after_ya.second().contains(xb) || after_ya.first().contains(x))
            planned.set(var, false);
        else
            planned.set(var, winning_choice(formula_, planned, var).value_or(true));
    }

    if (history.size() == at + 1)
        return {y_a, false, {}};
    if (history[at + 1] != y_a)
        return fallback(state, "history left the oracle's own line");

    const PairSet pairs = avoider_repair_pairing(red_, History(history.begin(), history.begin() + static_cast<std::ptrdiff_t>(at + 1)), y_a, planned);

    // Moves inside S(k) must keep following the legitimate order.
    std::size_t next_slot = k <= 4 * rounds ? s_set_start(rounds, k) : order_.size();
    PlayState walk = replay_prefix(nv, history, at + 2);
    for (std::size_t t = at + 2; t < history.size(); ++t) {
        const Vertex v = history[t];
        if (s.contains(v)) {
            if (next_slot >= order_.size() || !fulfills(order_[next_slot], walk, v))
                return fallback(state, t % 2 == 1 ? "second Enforcer deviation" : "history left the oracle's own line");
            ++next_slot;
        }
        walk = walk.apply(v);
    }

    const Vertex last = history.back();
    const bool inside_open = !(state.unclaimed() & s).empty();
    if (s.contains(last) && inside_open) {
        const LegitimateSlot& mine = order_.at(next_slot);
        switch (mine.kind) {
        case SlotKind::Fixed:
            return {mine.vertex, false, {}};
        case SlotKind::Choice: {
            Assignment choice_fixed = planned;
            const Assignment actual = underlying_valuation(red_, state);
            for (int var = 1; var <= 2 * rounds; ++var)
                if (auto val = actual.get(var); val && s.contains(red_.x(var)))
                    choice_fixed.set(var, *val);
            return {satisfier_literal(choice_fixed, variable_of(red_, mine.vertex)), false, {}};
        }
        case SlotKind::Remainder:
            return {state.claimed().contains(mine.vertex) ? mine.other : mine.vertex, false, {}};
        }
    }
    const VertexSet outside = VertexSet::range(nv) - s;
    if ((state.unclaimed() & outside).empty())
        return fallback(state, "no free vertex outside the protected set");
    // Enforcer moves last inside S(k); once it is full Avoider has to open
    // the outside herself and plays the pairing as the one not moving last.
    const PairingRole role = inside_open ? PairingRole::LastMover : PairingRole::NotLastMover;
    return {pairing_move(state, pairs, role, outside), false, {}};
}

} // namespace avoidgame
