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

#include <functional>
#include <random>

#include "avoidgame/strategies.hpp"

using namespace avoidgame;

namespace {

Literal lit(int v) { return {v < 0 ? -v : v, v < 0}; }
Clause cl(int a, int b, int c) { return {lit(a), lit(b), lit(c)}; }

// Ids for one round: x1 = 1, x2 = 2, xbar1 = 3, xbar2 = 4, u(j) = 4 + j.
constexpr Vertex x1 = 1, xbar1 = 3, x2 = 2, xbar2 = 4;
constexpr Vertex u(int j) { return 4 + j; }

} // namespace

TEST_CASE("legitimate order of one round")
{
    const auto order = legitimate_order(1);
    REQUIRE(order.size() == 10);
    const std::vector<std::pair<Player, Vertex>> expected = {
        {Player::Avoider, u(1)},  {Player::Enforcer, u(2)}, {Player::Avoider, u(3)}, {Player::Enforcer, x1},
        {Player::Avoider, x1},    {Player::Enforcer, u(4)}, {Player::Avoider, u(5)}, {Player::Enforcer, u(6)},
        {Player::Avoider, x2},    {Player::Enforcer, x2}};
    for (std::size_t t = 0; t < 10; ++t) {
        CHECK(order[t].mover == expected[t].first);
        CHECK(order[t].vertex == expected[t].second);
    }
    CHECK(order[3].kind == SlotKind::Choice);
    CHECK(order[3].other == xbar1);
    CHECK(order[4].kind == SlotKind::Remainder);
    CHECK(order[8].kind == SlotKind::Choice);
    CHECK(order[9].kind == SlotKind::Remainder);
}

TEST_CASE("underlying valuation")
{
    const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(1, {cl(1, 2, 2)}));
    const PlayState a = PlayState::replay(10, {xbar1, x1});
    CHECK(underlying_valuation(red, a).get(1) == true);
    const PlayState b = PlayState::replay(10, {x1, xbar1});
    CHECK(underlying_valuation(red, b).get(1) == false);
    CHECK_FALSE(underlying_valuation(red, PlayState(10)).is_set(1));
    CHECK_FALSE(underlying_valuation(red, b).is_set(2));
}

TEST_CASE("protected sets are nested suffixes of odd size")
{
    for (int n = 1; n <= 4; ++n) {
        const std::vector<Clause> cs = {cl(1, 2 * n, -2)};
        const LabeledReduction red = reduce_qbf_to_ae(QbfFormula(n, cs));
        const auto order = legitimate_order(n);
        VertexSet all = VertexSet::range(10 * n);
        all.erase(*red.u(1));
        CHECK(s_set(red, 1) == all);
        for (int i = 1; i <= 4 * n; ++i) {
            const VertexSet s = s_set(red, i);
            CHECK(s.size() % 2 == 1);
            VertexSet suffix;
            for (std::size_t t = s_set_start(n, i); t < order.size(); ++t) {
                suffix.insert(order[t].vertex);
                if (order[t].other)
                    suffix.insert(order[t].other);
            }
            CHECK(suffix == s);
            if (i > 1)
                CHECK(s.subset_of(s_set(red, i - 1)));
        }
        CHECK_THROWS_AS(s_set(red, 0), Error);
        CHECK_THROWS_AS(s_set(red, 4 * n + 1), Error);
    }
}

TEST_CASE("pairing answers inside a touched pair")
{
    const PairSet pairs{{{1, 2}, {3, 4}}, std::nullopt};
    const PlayState s = PlayState::replay(5, {1});
    CHECK(pairing_move(s, pairs, PairingRole::LastMover) == 2);
    // Opponent took the unpaired vertex: lowest free vertex outside the pairs,
    // otherwise open a pair.
    const PlayState t = PlayState::replay(5, {5});
    CHECK(pairing_move(t, pairs, PairingRole::NotLastMover) == 1);
    CHECK_THROWS_AS((PairSet{{{1, 2}, {2, 3}}, std::nullopt}.validate()), Error);
    CHECK_THROWS_AS((PairSet{{{1, 2}}, 2}.validate()), Error);
}

TEST_CASE("dominated pairs")
{
    const auto d = dominated_pairs(Hypergraph(3, {{1, 2}, {2, 3}}));
    CHECK(std::find(d.begin(), d.end(), std::pair<Vertex, Vertex>{1, 2}) != d.end());
    CHECK(std::find(d.begin(), d.end(), std::pair<Vertex, Vertex>{3, 2}) != d.end());
    CHECK(std::find(d.begin(), d.end(), std::pair<Vertex, Vertex>{2, 1}) == d.end());
    CHECK(dominated_pairs(Hypergraph(3, {})).size() == 6);
}

TEST_CASE("enforcer punishes the first entry into a protected set")
{
    const QbfFormula f(1, {cl(1, 1, 1)});
    const LabeledReduction red = reduce_qbf_to_ae(f);
    const EnforcerOracle oracle(red, f);
    // Avoider opens with x1 instead of u1: Enforcer answers outside S(2).
    CHECK(avoider_first_entry(red, {x1}) == 2);
    CHECK(oracle.move({x1}).vertex == u(1));
    // Avoider then holds both literals of X1: Enforcer takes u4.
    CHECK(oracle.move({x1, u(1), xbar1}).vertex == u(4));
    // Avoider holds u2 and u3: Enforcer takes x1.
    CHECK(oracle.move({u(2)}).vertex == u(1));
    CHECK(oracle.move({u(2), u(1), u(3)}).vertex == x1);
    CHECK_THROWS_AS(enforcer_punish_move(red, {u(1)}, 1), Error);
}

TEST_CASE("avoider repair follows the deviation table")
{
    const QbfFormula f(1, {cl(1, 2, 2)});
    const LabeledReduction red = reduce_qbf_to_ae(f);
    // Enforcer skips u2 for u4; Avoider takes u2 and pairs u3 with the
    // literal she plans to own.
    Assignment planned(2);
    planned.set(1, true);
    planned.set(2, true);
    PairSet p = avoider_repair_pairing(red, {u(1), u(4)}, u(2), planned);
    CHECK(p.partner(u(3)) == xbar1);
    planned.set(1, false);
    p = avoider_repair_pairing(red, {u(1), u(4)}, u(2), planned);
    CHECK(p.partner(u(3)) == x1);
    CHECK_THROWS_AS(avoider_repair_pairing(red, {u(1), u(3)}, u(2), planned), Error);
}

TEST_CASE("oracles win against every adversary on sample formulas")
{
    const std::vector<std::vector<Clause>> samples = {
        {cl(1, 1, 1)}, {cl(1, 2, 2)}, {cl(1, 2, 2), cl(-1, -2, -2)}, {cl(2, 2, 2), cl(-2, -2, -2)}};
    for (const auto& cs : samples) {
        const QbfFormula f(1, cs);
        const LabeledReduction red = reduce_qbf_to_ae(f);
        const bool avoider = solve_qbf_game(f) == QbfWinner::Satisfier;
        EnforcerOracle enforcer(red, f);
        AvoiderOracle avoider_oracle(red, f);
        long lines = 0, lost = 0;
        History h;
        std::function<void(PlayState)> rec = [&](PlayState s) {
            if (s.full()) {
                ++lines;
                lost += avoider_filled(red.hypergraph, s.first()).has_value() == avoider;
                return;
            }
            const bool oracle_turn = (s.to_move() == Side::First) == avoider;
            if (oracle_turn) {
                const Vertex v = avoider ? avoider_oracle.move(h).vertex : enforcer.move(h).vertex;
                h.push_back(v);
                rec(s.apply(v));
                h.pop_back();
                return;
            }
            for (Vertex v : s.unclaimed()) {
                h.push_back(v);
                rec(s.apply(v));
                h.pop_back();
            }
        };
        rec(PlayState(10));
        CHECK(lines > 0);
        CHECK(lost == 0);
    }
}
