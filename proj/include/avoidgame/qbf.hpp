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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoidgame/error.hpp"

namespace avoidgame {

struct Literal {
    int var = 1;           ///< 1-based variable index
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

/// Ordered three-slot clause. Slots may repeat a literal.
using Clause = std::array<Literal, 3>;

/// forall X1 exists X2 ... forall X(2n-1) exists X(2n) . psi
///
/// Odd variables belong to Falsifier, even ones to Satisfier.
class QbfFormula {
public:
    QbfFormula(int rounds, std::vector<Clause> clauses);

    int rounds() const { return rounds_; }
    int num_vars() const { return 2 * rounds_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

    bool operator==(const QbfFormula&) const = default;

private:
    int rounds_;
    std::vector<Clause> clauses_;
};

/// Partial truth assignment over X1..X(2n).
class Assignment {
public:
    explicit Assignment(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1) {}

    int num_vars() const { return static_cast<int>(values_.size()) - 1; }
    std::optional<bool> get(int var) const { return values_.at(static_cast<std::size_t>(var)); }
    void set(int var, bool value) { values_.at(static_cast<std::size_t>(var)) = value; }
    void unset(int var) { values_.at(static_cast<std::size_t>(var)).reset(); }
    bool is_set(int var) const { return get(var).has_value(); }

    bool operator==(const Assignment&) const = default;

private:
    std::vector<std::optional<bool>> values_;
};

enum class QbfWinner { Satisfier, Falsifier };

QbfFormula parse_qdimacs(std::string_view text);
std::string write_qdimacs(const QbfFormula& f);

/// Every clause has a satisfied literal. Throws PartialAssignment when a
/// variable occurring in the clauses is unset.
bool evaluate(std::span<const Clause> clauses, const Assignment& a);

/// Exact winner of the alternating assignment game.
QbfWinner solve_qbf_game(const QbfFormula& f);

/// Winner of the game where the variables set in `fixed` are already decided
/// and the remaining ones are chosen in index order by their owners.
QbfWinner solve_qbf_game(const QbfFormula& f, const Assignment& fixed);

/// Value the owner of `var` should pick so that the owner still wins, given
/// the decided variables in `fixed`. Prefers true. Empty when the owner loses
/// either way.
std::optional<bool> winning_choice(const QbfFormula& f, const Assignment& fixed, int var);

} // namespace avoidgame
