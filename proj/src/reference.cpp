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

#include "avoidgame/reference.hpp"

#include <algorithm>
#include <functional>

namespace avoidgame::reference {

namespace {

enum class Owner { None, First, Second };

struct Board {
    std::vector<Owner> owner; // index id - 1
    int moves = 0;

    explicit Board(int n) : owner(static_cast<std::size_t>(n), Owner::None) {}
    Owner to_move() const { return moves % 2 == 0 ? Owner::First : Owner::Second; }
    bool full() const { return moves == static_cast<int>(owner.size()); }
    std::vector<Vertex> claims(Owner o) const
    {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < owner.size(); ++i)
            if (owner[i] == o)
                out.push_back(static_cast<Vertex>(i + 1));
        return out;
    }
};

bool holds_edge(const Hypergraph& h, const Board& b, Owner o)
{
    for (const Edge& e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return b.owner[v - 1] == o; }))
            return true;
    return false;
}

/// +1 first player wins, -1 loses, 0 draw. `lost(board, player)` is checked
/// right after that player moves; `final_value` scores a full board.
int minimax(Board& b, const std::function<bool(const Board&, Owner)>& lost,
            const std::function<int(const Board&)>& final_value)
{
    if (b.full())
        return final_value(b);
    const Owner me = b.to_move();
    const int sign = me == Owner::First ? 1 : -1;
    int best = -2;
    for (std::size_t i = 0; i < b.owner.size(); ++i) {
        if (b.owner[i] != Owner::None)
            continue;
        b.owner[i] = me;
        ++b.moves;
        int v = lost(b, me) ? -sign : minimax(b, lost, final_value);
        --b.moves;
        b.owner[i] = Owner::None;
        best = std::max(best, sign * v);
        if (best == 1)
            break;
    }
    return sign * best;
}

} // namespace

Outcome solve_ae(const Hypergraph& h)
{
    Board b(h.num_vertices());
    int v = minimax(
        b, [&](const Board& bd, Owner o) { return o == Owner::First && holds_edge(h, bd, Owner::First); },
        [](const Board&) { return 1; });
    return v > 0 ? Outcome::AvoiderWins : Outcome::EnforcerWins;
}

Outcome solve_aa(const Hypergraph& h)
{
    Board b(h.num_vertices());
    int v = minimax(
        b, [&](const Board& bd, Owner o) { return holds_edge(h, bd, o); }, [](const Board&) { return 0; });
    if (v > 0)
        return Outcome::SecondPlayerLoses;
    if (v < 0)
        return Outcome::FirstPlayerLoses;
    return Outcome::Draw;
}

Outcome solve_domination(const Graph& g)
{
    Board b(g.num_vertices());
    // Staller (first) wins iff Dominator's final set fails to dominate.
    auto dominated_by_second = [&](const Board& bd) {
        for (Vertex w = 1; w <= g.num_vertices(); ++w) {
            bool ok = bd.owner[w - 1] == Owner::Second;
            for (Vertex u : g.neighbors(w))
                ok = ok || bd.owner[u - 1] == Owner::Second;
            if (!ok)
                return false;
        }
        return true;
    };
    int v = minimax(
        b, [](const Board&, Owner) { return false; }, [&](const Board& bd) { return dominated_by_second(bd) ? 1 : -1; });
    return v > 0 ? Outcome::StallerWins : Outcome::DominatorWins;
}

Outcome solve_hgame(const Graph& g, const Graph& pattern)
{
    Board b(g.num_vertices());
    int v = minimax(
        b, [](const Board&, Owner) { return false; },
        [&](const Board& bd) { return contains_subgraph(g, bd.claims(Owner::First), pattern) ? -1 : 1; });
    return v > 0 ? Outcome::AvoiderWins : Outcome::EnforcerWins;
}

bool contains_subgraph(const Graph& g, const std::vector<Vertex>& s, const Graph& pattern)
{
    const int k = pattern.num_vertices();
    if (k == 0)
        return true;
    if (static_cast<int>(s.size()) < k)
        return false;
    const auto pattern_edges = pattern.edges();
    std::vector<Vertex> image(static_cast<std::size_t>(k));
    std::vector<bool> used(s.size(), false);
    std::function<bool(int)> place = [&](int p) {
        if (p == k) {
            for (auto [a, b] : pattern_edges)
                if (!g.adjacent(image[a - 1], image[b - 1]))
                    return false;
            return true;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (used[i])
                continue;
            used[i] = true;
            image[static_cast<std::size_t>(p)] = s[i];
            bool found = place(p + 1);
            used[i] = false;
            if (found)
                return true;
        }
        return false;
    };
    return place(0);
}

QbfWinner solve_qbf(const QbfFormula& f)
{
    const int vars = f.num_vars();
    if (f.rounds() > 2)
        throw Error(ErrorCode::InvalidArgument, "reference QBF enumeration is limited to two rounds");
    // Table for variable 2i has 2^(2i-1) entries indexed by earlier values.
    std::vector<int> table_bits;
    int total_bits = 0;
    for (int i = 1; i <= f.rounds(); ++i) {
        table_bits.push_back(1 << (2 * i - 1));
        total_bits += table_bits.back();
    }
    for (std::uint64_t strategy = 0; strategy < (std::uint64_t{1} << total_bits); ++strategy) {
        bool beats_all = true;
        for (int falsifier = 0; falsifier < (1 << f.rounds()) && beats_all; ++falsifier) {
            Assignment a(vars);
            int prefix = 0; // earlier values, bit j = X(j+1)
            int offset = 0;
            for (int i = 1; i <= f.rounds(); ++i) {
                bool odd = ((falsifier >> (i - 1)) & 1) != 0;
                a.set(2 * i - 1, odd);
                prefix |= (odd ? 1 : 0) << (2 * i - 2);
                bool even = ((strategy >> (offset + prefix)) & 1) != 0;
                a.set(2 * i, even);
                prefix |= (even ? 1 : 0) << (2 * i - 1);
                offset += table_bits[static_cast<std::size_t>(i - 1)];
            }
            beats_all = evaluate(f.clauses(), a);
        }
        if (beats_all)
            return QbfWinner::Satisfier;
    }
    return QbfWinner::Falsifier;
}

} // namespace avoidgame::reference
