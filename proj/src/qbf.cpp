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

#include "avoidgame/qbf.hpp"

#include <sstream>

namespace avoidgame {

QbfFormula::QbfFormula(int rounds, std::vector<Clause> clauses) : rounds_(rounds), clauses_(std::move(clauses))
{
    if (rounds < 1)
        throw Error(ErrorCode::InvalidArgument, "formula needs at least one round");
    for (const auto& c : clauses_)
        for (const auto& l : c)
            if (l.var < 1 || l.var > 2 * rounds)
                throw Error(ErrorCode::OutOfRange, "literal on unknown variable " + std::to_string(l.var));
}

namespace {

[[noreturn]] void parse_fail(ErrorCode code, int line_no, const std::string& what)
{
    throw Error(code, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<long> read_ints(const std::string& body, int line_no)
{
    std::istringstream in(body);
    std::vector<long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            parse_fail(ErrorCode::ParseError, line_no, "expected integer, got '" + tok + "'");
        }
        if (pos != tok.size())
            parse_fail(ErrorCode::ParseError, line_no, "expected integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

QbfFormula parse_qdimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long num_vars = -1, num_clauses = -1;
    int next_var = 1;
    std::vector<Clause> clauses;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        char tag = line[start];
        if (tag == 'c')
            continue;
        if (tag == 'p') {
            std::istringstream hdr(line.substr(start + 1));
            std::string fmt;
            if (num_vars >= 0)
                parse_fail(ErrorCode::ParseError, line_no, "repeated problem line");
            if (!(hdr >> fmt >> num_vars >> num_clauses) || fmt != "cnf" || num_vars < 0 || num_clauses < 0)
                parse_fail(ErrorCode::ParseError, line_no, "expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (hdr >> extra)
                parse_fail(ErrorCode::ParseError, line_no, "trailing tokens on problem line");
            continue;
        }
        if (num_vars < 0)
            parse_fail(ErrorCode::ParseError, line_no, "content before problem line");
        if (tag == 'a' || tag == 'e') {
            if (!clauses.empty())
                parse_fail(ErrorCode::PrefixError, line_no, "quantifier after clauses");
            auto ints = read_ints(line.substr(start + 1), line_no);
            if (ints.empty() || ints.back() != 0)
                parse_fail(ErrorCode::ParseError, line_no, "quantifier line must end with 0");
            ints.pop_back();
            if (ints.size() != 1)
                parse_fail(ErrorCode::PrefixError, line_no, "quantifier blocks must hold exactly one variable");
            bool expect_forall = (next_var % 2) == 1;
            if ((tag == 'a') != expect_forall)
                parse_fail(ErrorCode::PrefixError, line_no,
                           std::string("prefix must alternate starting with 'a'; expected '") +
                               (expect_forall ? 'a' : 'e') + "'");
            if (ints[0] != next_var)
                parse_fail(ErrorCode::PrefixError, line_no,
                           "variables must be quantified in order; expected " + std::to_string(next_var));
            ++next_var;
            continue;
        }
        auto ints = read_ints(line.substr(start), line_no);
        if (ints.empty() || ints.back() != 0)
            parse_fail(ErrorCode::ParseError, line_no, "clause line must end with 0");
        ints.pop_back();
        if (ints.size() != 3)
            parse_fail(ErrorCode::ArityError, line_no,
                       "clause has " + std::to_string(ints.size()) + " literals, expected 3");
        Clause c;
        for (std::size_t k = 0; k < 3; ++k) {
            long lit = ints[k];
            if (lit == 0 || std::labs(lit) > num_vars)
                parse_fail(ErrorCode::ParseError, line_no, "literal " + std::to_string(lit) + " out of range");
            c[k] = Literal{static_cast<int>(std::labs(lit)), lit < 0};
        }
        clauses.push_back(c);
    }

    if (num_vars < 0)
        throw Error(ErrorCode::ParseError, "missing problem line");
    if (num_vars == 0 || num_vars % 2 != 0)
        throw Error(ErrorCode::PrefixError, "variable count must be a positive even number");
    if (next_var - 1 != num_vars)
        throw Error(ErrorCode::PrefixError, "prefix quantifies " + std::to_string(next_var - 1) + " of " +
                                                std::to_string(num_vars) + " variables");
    if (static_cast<long>(clauses.size()) != num_clauses)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(num_clauses) + " clauses, found " +
                                               std::to_string(clauses.size()));
    return QbfFormula(static_cast<int>(num_vars / 2), std::move(clauses));
}

std::string write_qdimacs(const QbfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
    for (int v = 1; v <= f.num_vars(); ++v)
        out << (v % 2 ? 'a' : 'e') << ' ' << v << " 0\n";
    for (const auto& c : f.clauses()) {
        for (const auto& l : c)
            out << (l.negated ? -l.var : l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(std::span<const Clause> clauses, const Assignment& a)
{
    bool all = true;
    for (const auto& c : clauses) {
        bool sat = false;
        for (const auto& l : c) {
            if (l.var > a.num_vars() || !a.is_set(l.var))
                throw Error(ErrorCode::PartialAssignment, "variable X" + std::to_string(l.var) + " is unset");
            if (*a.get(l.var) != l.negated)
                sat = true;
        }
        all = all && sat;
    }
    return all;
}

namespace {

// Satisfier wins from here?
bool satisfier_wins(const QbfFormula& f, Assignment& a, int var)
{
    while (var <= f.num_vars() && a.is_set(var))
        ++var;
    if (var > f.num_vars())
        return evaluate(f.clauses(), a);
    bool satisfier_moves = (var % 2) == 0;
    for (bool value : {true, false}) {
        a.set(var, value);
        bool sat = satisfier_wins(f, a, var + 1);
        a.unset(var);
        if (sat == satisfier_moves)
            return sat;
    }
    return !satisfier_moves;
}

} // namespace

QbfWinner solve_qbf_game(const QbfFormula& f)
{
    return solve_qbf_game(f, Assignment(f.num_vars()));
}

QbfWinner solve_qbf_game(const QbfFormula& f, const Assignment& fixed)
{
    if (fixed.num_vars() != f.num_vars())
        throw Error(ErrorCode::InvalidArgument, "assignment size does not match formula");
    Assignment a = fixed;
    return satisfier_wins(f, a, 1) ? QbfWinner::Satisfier : QbfWinner::Falsifier;
}

std::optional<bool> winning_choice(const QbfFormula& f, const Assignment& fixed, int var)
{
    if (var < 1 || var > f.num_vars())
        throw Error(ErrorCode::OutOfRange, "variable X" + std::to_string(var) + " out of range");
    QbfWinner owner = (var % 2 == 0) ? QbfWinner::Satisfier : QbfWinner::Falsifier;
    for (bool value : {true, false}) {
        Assignment a = fixed;
        a.set(var, value);
        if (solve_qbf_game(f, a) == owner)
            return value;
    }
    return std::nullopt;
}

} // namespace avoidgame
