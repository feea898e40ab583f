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

#include <random>

#include "avoidgame/qbf.hpp"
#include "avoidgame/reference.hpp"

using namespace avoidgame;

namespace {

Literal lit(int v) { return {v < 0 ? -v : v, v < 0}; }
Clause cl(int a, int b, int c) { return {lit(a), lit(b), lit(c)}; }

ErrorCode code_of(const std::string& text)
{
    try {
        parse_qdimacs(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

QbfFormula random_formula(std::mt19937_64& rng, int rounds, int clauses)
{
    std::vector<Clause> cs;
    std::uniform_int_distribution<int> var(1, 2 * rounds);
    std::bernoulli_distribution neg(0.5);
    for (int j = 0; j < clauses; ++j) {
        Clause c;
        for (auto& l : c)
            l = {var(rng), neg(rng)};
        cs.push_back(c);
    }
    return QbfFormula(rounds, cs);
}

} // namespace

TEST_CASE("qdimacs subset")
{
    const QbfFormula f = parse_qdimacs("p cnf 2 1\na 1 0\ne 2 0\n1 2 2 0\n");
    CHECK(f.rounds() == 1);
    REQUIRE(f.clauses().size() == 1);
    CHECK(f.clauses()[0] == cl(1, 2, 2));

    CHECK(code_of("p cnf 2 1\ne 1 0\na 2 0\n1 2 2 0\n") == ErrorCode::PrefixError);
    CHECK(code_of("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n") == ErrorCode::ArityError);
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\ne 2 0\n1 2 3 0\n"), Error);
    CHECK(code_of("a 1 0\n") == ErrorCode::ParseError);
}

TEST_CASE("game winner examples")
{
    CHECK(solve_qbf_game(QbfFormula(1, {cl(1, 2, 2)})) == QbfWinner::Satisfier);
    CHECK(solve_qbf_game(QbfFormula(1, {cl(1, 1, 1)})) == QbfWinner::Falsifier);
    CHECK(solve_qbf_game(QbfFormula(1, {cl(1, 2, 2), cl(-1, -2, -2)})) == QbfWinner::Satisfier);
}

TEST_CASE("evaluation")
{
    Assignment a(2);
    a.set(1, false);
    a.set(2, true);
    const std::vector<Clause> c1 = {cl(1, 2, 2)};
    CHECK(evaluate(c1, a));
    Assignment b(1);
    b.set(1, false);
    const std::vector<Clause> c2 = {cl(1, 1, 1)};
    CHECK_FALSE(evaluate(c2, b));
    CHECK(evaluate(std::vector<Clause>{}, Assignment(2)));
    CHECK_THROWS_AS(evaluate(c1, Assignment(2)), Error);
}

TEST_CASE("property: writer output parses back to the same formula")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const QbfFormula f = random_formula(rng, 1 + t % 3, 1 + t % 7);
        const std::string text = write_qdimacs(f);
        CHECK(parse_qdimacs(text) == f);
        CHECK(write_qdimacs(parse_qdimacs(text)) == text);
    }
}

TEST_CASE("property: game solver agrees with strategy-table enumeration")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 150; ++t) {
        const QbfFormula f = random_formula(rng, 1 + t % 2, 1 + t % 5);
        INFO(write_qdimacs(f));
        CHECK(solve_qbf_game(f) == reference::solve_qbf(f));
    }
}

TEST_CASE("property: a winning choice keeps the owner winning")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const QbfFormula f = random_formula(rng, 2, 1 + t % 6);
        Assignment fixed(4);
        for (int var = 1; var <= 4; ++var) {
            const auto choice = winning_choice(f, fixed, var);
            const QbfWinner owner = var % 2 == 1 ? QbfWinner::Falsifier : QbfWinner::Satisfier;
            if (choice) {
                fixed.set(var, *choice);
                CHECK(solve_qbf_game(f, fixed) == owner);
            } else {
                for (bool v : {true, false}) {
                    Assignment alt = fixed;
                    alt.set(var, v);
                    CHECK(solve_qbf_game(f, alt) != owner);
                }
                fixed.set(var, true);
            }
        }
    }
}
