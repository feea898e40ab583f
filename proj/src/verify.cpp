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

#include "avoidgame/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "avoidgame/reductions.hpp"
#include "avoidgame/reference.hpp"
#include "avoidgame/solver.hpp"
#include "avoidgame/strategies.hpp"

namespace avoidgame {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string hex(std::uint64_t v)
{
    std::ostringstream s;
    s << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

std::string fixed2(double v)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
}

struct Context {
    std::uint64_t seed;
    const LineSink& sink;

    /// Independent stream per suite so suites can be run alone and replayed.
    SplitMix64 stream(int criterion) const { return SplitMix64(seed ^ (0xA5A5A5A5ULL * static_cast<std::uint64_t>(criterion))); }
    void say(const std::string& line) const { sink(line); }
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int edges, int min_size, int max_size)
{
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    std::vector<Edge> es;
    for (int i = 0; i < edges; ++i) {
        int size = uniform(rng, std::min(min_size, n), std::min(max_size, n));
        std::shuffle(all.begin(), all.end(), rng);
        es.emplace_back(all.begin(), all.begin() + size);
    }
    return Hypergraph(n, std::move(es));
}

std::string describe(const Hypergraph& h)
{
    std::ostringstream s;
    s << "|V|=" << h.num_vertices() << " |E|=" << h.num_edges();
    return s.str();
}

std::string clause_text(const Clause& c)
{
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < 3; ++i)
        s << (i ? " v " : "") << (c[i].negated ? "-" : "") << 'X' << c[i].var;
    s << ')';
    return s.str();
}

std::string formula_text(const QbfFormula& f)
{
    std::string out;
    for (const Clause& c : f.clauses())
        out += clause_text(c);
    return out;
}

/// Every formula over X1, X2 with one or two clauses drawn from the 20
/// three-literal multisets.
std::vector<QbfFormula> all_one_round_formulas()
{
    std::vector<Literal> lits;
    for (int v = 1; v <= 2; ++v)
        for (bool neg : {false, true})
            lits.push_back({v, neg});
    std::vector<Clause> multisets;
    for (std::size_t a = 0; a < lits.size(); ++a)
        for (std::size_t b = a; b < lits.size(); ++b)
            for (std::size_t c = b; c < lits.size(); ++c)
                multisets.push_back({lits[a], lits[b], lits[c]});
    std::vector<QbfFormula> out;
    for (const Clause& c : multisets)
        out.emplace_back(1, std::vector<Clause>{c});
    for (std::size_t i = 0; i < multisets.size(); ++i)
        for (std::size_t j = i; j < multisets.size(); ++j)
            out.emplace_back(1, std::vector<Clause>{multisets[i], multisets[j]});
    return out;
}

SuiteResult finish(const Context& ctx, int criterion, const std::string& name, bool passed, const std::string& summary)
{
    ctx.say(std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(criterion) + "] " + name + ": " + summary);
    return {name, criterion, passed, summary};
}

// ---------------------------------------------------------------------------

SuiteResult qbf_equivalence(const Context& ctx)
{
    const auto t0 = Clock::now();
    const auto formulas = all_one_round_formulas();
    int mismatches = 0, satisfier = 0;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const QbfFormula& f = formulas[i];
        const QbfWinner w = solve_qbf_game(f);
        const QbfWinner naive = reference::solve_qbf(f);
        const Outcome ae = solve_ae(reduce_qbf_to_ae(f).hypergraph).outcome;
        const bool ok = w == naive && ((w == QbfWinner::Satisfier) == (ae == Outcome::AvoiderWins));
        satisfier += w == QbfWinner::Satisfier;
        if (!ok) {
            ++mismatches;
            ctx.say("  mismatch formula " + std::to_string(i) + " " + formula_text(f) + ": game " +
                    outcome_token(ae));
        }
    }
    return finish(ctx, 1, "qbf-equivalence", mismatches == 0,
                  std::to_string(formulas.size()) + " formulas, " + std::to_string(satisfier) + " satisfier wins, " +
                      std::to_string(mismatches) + " mismatches, " + fixed2(seconds_since(t0)) + " s");
}

SuiteResult stretch(const Context& ctx)
{
    auto L = [](int v) { return Literal{v < 0 ? -v : v, v < 0}; };
    auto C = [&](int a, int b, int c) { return Clause{L(a), L(b), L(c)}; };
    const std::vector<std::vector<Clause>> picks = {
        {C(1, 2, 3), C(-2, 4, 4)},
        {C(1, 1, 1)},
        {C(1, 2, 2), C(-1, -2, -2), C(3, 4, 4), C(-3, -4, -4)},
        {C(2, 4, 3), C(-2, -4, 1)},
        {C(1, 3, 3), C(2, 4, 4)},
        {C(-1, 2, 4), C(1, -2, 3), C(-3, -4, 2)},
    };
    SolveOptions opts;
    opts.timeout_s = 600.0;
    opts.transposition_budget = std::size_t{256} << 20;
    int mismatches = 0, timeouts = 0;
    for (std::size_t i = 0; i < picks.size(); ++i) {
        QbfFormula f(2, picks[i]);
        const QbfWinner w = solve_qbf_game(f);
        try {
            SolveReport r = solve_ae(reduce_qbf_to_ae(f).hypergraph, opts);
            bool ok = (w == QbfWinner::Satisfier) == (r.outcome == Outcome::AvoiderWins);
            mismatches += !ok;
            ctx.say("  formula " + std::to_string(i) + " " + formula_text(f) + ": qbf " +
                    (w == QbfWinner::Satisfier ? "SATISFIER" : "FALSIFIER") + ", game " + outcome_token(r.outcome) +
                    ", " + std::to_string(r.nodes) + " nodes, " + fixed2(r.elapsed_s) + " s" + (ok ? "" : " MISMATCH"));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Timeout && e.code() != ErrorCode::NodeLimit)
                throw;
            ++timeouts;
            ctx.say("  formula " + std::to_string(i) + " " + formula_text(f) + ": TIMEOUT");
        }
    }
    return finish(ctx, 2, "stretch", mismatches == 0,
                  std::to_string(picks.size()) + " formulas with 4 variables, " + std::to_string(mismatches) +
                      " mismatches, " + std::to_string(timeouts) + " timeouts");
}

SuiteResult legitimate(const Context& ctx)
{
    const auto formulas = all_one_round_formulas();
    int bad = 0, playouts = 0;
    for (std::size_t fi = 0; fi < formulas.size(); ++fi) {
        const QbfFormula& f = formulas[fi];
        const LabeledReduction red = reduce_qbf_to_ae(f);
        const auto order = legitimate_order(red.rounds);
        const int nv = red.hypergraph.num_vertices();
        bool local_ok = true;

        // Value of the restricted game where only the literal choices are free.
        std::function<bool(std::size_t, PlayState)> avoider_wins = [&](std::size_t t, PlayState s) -> bool {
            if (t == order.size()) {
                ++playouts;
                const Assignment val = underlying_valuation(red, s);
                bool d_filled = false;
                for (std::size_t e = 0; e < red.hypergraph.num_edges(); ++e) {
                    const bool filled = red.hypergraph.edge_set(e).subset_of(s.first());
                    if (red.edge_tags[e].kind == EdgeTagKind::D)
                        d_filled = d_filled || filled;
                    else if (filled)
                        local_ok = false; // an A, B or C edge without Enforcer
                }
                if (d_filled == evaluate(f.clauses(), val))
                    local_ok = false;
                return !d_filled;
            }
            const LegitimateSlot& slot = order[t];
            switch (slot.kind) {
            case SlotKind::Fixed:
                return avoider_wins(t + 1, s.apply(slot.vertex));
            case SlotKind::Remainder:
                return avoider_wins(t + 1, s.apply(s.claimed().contains(slot.vertex) ? slot.other : slot.vertex));
            case SlotKind::Choice: {
                bool a = avoider_wins(t + 1, s.apply(slot.vertex));
                bool b = avoider_wins(t + 1, s.apply(slot.other));
                return slot.mover == Player::Avoider ? (a || b) : (a && b);
            }
            }
            return false;
        };
        const bool restricted = avoider_wins(0, PlayState(nv));
        if (restricted != (solve_qbf_game(f) == QbfWinner::Satisfier))
            local_ok = false;
        if (!local_ok) {
            ++bad;
            ctx.say("  violation on formula " + std::to_string(fi) + " " + formula_text(f));
        }
    }
    return finish(ctx, 3, "legitimate", bad == 0,
                  std::to_string(formulas.size()) + " formulas, " + std::to_string(playouts) +
                      " legitimate playouts, " + std::to_string(bad) + " violations");
}

SuiteResult oracles(const Context& ctx)
{
    const auto t0 = Clock::now();
    const auto formulas = all_one_round_formulas();
    long lines = 0, failures = 0, fallbacks = 0;
    std::map<std::string, long> reasons;
    int falsifier_formulas = 0, satisfier_formulas = 0;
    for (std::size_t fi = 0; fi < formulas.size(); ++fi) {
        const QbfFormula& f = formulas[fi];
        const LabeledReduction red = reduce_qbf_to_ae(f);
        const int nv = red.hypergraph.num_vertices();
        const bool satisfier = solve_qbf_game(f) == QbfWinner::Satisfier;
        long before = failures;
        History h;
        if (!satisfier) {
            ++falsifier_formulas;
            EnforcerOracle oracle(red, f);
            std::function<void(PlayState)> rec = [&](PlayState s) {
                if (s.full()) {
                    ++lines;
                    failures += !avoider_filled(red.hypergraph, s.first()).has_value();
                    return;
                }
                if (s.to_move() == Side::First) {
                    for (Vertex v : s.unclaimed()) {
                        h.push_back(v);
                        rec(s.apply(v));
                        h.pop_back();
                    }
                } else {
                    Vertex v = oracle.move(h).vertex;
                    h.push_back(v);
                    rec(s.apply(v));
                    h.pop_back();
                }
            };
            rec(PlayState(nv));
        } else {
            ++satisfier_formulas;
            AvoiderOracle oracle(red, f);
            std::function<void(PlayState)> rec = [&](PlayState s) {
                if (s.full()) {
                    ++lines;
                    failures += avoider_filled(red.hypergraph, s.first()).has_value();
                    return;
                }
                if (s.to_move() == Side::Second) {
                    for (Vertex v : s.unclaimed()) {
                        h.push_back(v);
                        rec(s.apply(v));
                        h.pop_back();
                    }
                } else {
                    OracleMove m = oracle.move(h);
                    if (m.fallback) {
                        ++fallbacks;
                        ++reasons[m.note];
                    }
                    h.push_back(m.vertex);
                    rec(s.apply(m.vertex));
                    h.pop_back();
                }
            };
            rec(PlayState(nv));
        }
        if (failures != before)
            ctx.say("  oracle lost on formula " + std::to_string(fi) + " " + formula_text(f));
    }
    for (const auto& [why, count] : reasons)
        ctx.say("  solver fallback: " + why + " x" + std::to_string(count));
    return finish(ctx, 4, "oracles", failures == 0,
                  std::to_string(falsifier_formulas) + " falsifier and " + std::to_string(satisfier_formulas) +
                      " satisfier formulas, " + std::to_string(lines) + " adversary lines, " +
                      std::to_string(failures) + " lost, " + std::to_string(fallbacks) + " fallback moves, " +
                      fixed2(seconds_since(t0)) + " s");
}

SuiteResult uniformize(const Context& ctx)
{
    SplitMix64 seeds = ctx.stream(5);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = uniform(rng, 4, 12);
        const Hypergraph h = random_hypergraph(rng, n, uniform(rng, 1, 6), 4, 6);
        const Hypergraph u = to_k_uniform(h, 6);
        const Outcome a = solve_ae(h).outcome, b = solve_ae(u).outcome;
        const bool ok = u.is_uniform(6) && a == b;
        bad += !ok;
        ctx.say("  case " + std::to_string(i) + " seed " + hex(s) + " " + describe(h) + " -> " + describe(u) + ": " +
                outcome_token(a) + " / " + outcome_token(b) + (ok ? "" : " MISMATCH"));
    }
    return finish(ctx, 5, "uniformize", bad == 0, "100 hypergraphs, " + std::to_string(bad) + " mismatches");
}

SuiteResult aa_lift(const Context& ctx)
{
    SplitMix64 seeds = ctx.stream(6);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = 2 * uniform(rng, 1, 5);
        const Hypergraph h = random_hypergraph(rng, n, uniform(rng, 1, 6), 1, 4);
        const Outcome ae = solve_ae(h).outcome;
        const Outcome aa = solve_aa(ae_to_aa(h)).outcome;
        const bool ok = (ae == Outcome::AvoiderWins && aa == Outcome::Draw) ||
                        (ae == Outcome::EnforcerWins && aa == Outcome::FirstPlayerLoses);
        bad += !ok;
        ctx.say("  case " + std::to_string(i) + " seed " + hex(s) + " " + describe(h) + ": " + outcome_token(ae) +
                " / " + outcome_token(aa) + (ok ? "" : " MISMATCH"));
    }
    return finish(ctx, 6, "aa-lift", bad == 0, "50 hypergraphs, " + std::to_string(bad) + " mismatches");
}

SuiteResult dominated(const Context& ctx)
{
    SplitMix64 seeds = ctx.stream(7);
    int bad = 0, cross = 0;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = uniform(rng, 1, 11);
        const Hypergraph h = random_hypergraph(rng, n, uniform(rng, 1, 10), 1, 4);
        SolveOptions off;
        off.use_dominated_pruning = false;
        const Outcome with = solve_ae(h).outcome, without = solve_ae(h, off).outcome;
        bool ok = with == without;
        if (n <= 7) {
            ++cross;
            ok = ok && reference::solve_ae(h) == with;
        }
        bad += !ok;
        ctx.say("  case " + std::to_string(i) + " seed " + hex(s) + " " + describe(h) + ": " + outcome_token(with) +
                " / " + outcome_token(without) + (ok ? "" : " MISMATCH"));
    }
    return finish(ctx, 7, "dominated", bad == 0,
                  "100 hypergraphs (" + std::to_string(cross) + " also against plain minimax), " +
                      std::to_string(bad) + " mismatches");
}

/// All sets of at most `max_pairs` disjoint pairs on {1..n}.
void matchings(int n, int max_pairs, std::vector<std::pair<Vertex, Vertex>>& cur, Vertex from,
               const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&)>& visit)
{
    visit(cur);
    if (static_cast<int>(cur.size()) == max_pairs)
        return;
    for (Vertex a = from; a <= n; ++a) {
        bool used_a = std::any_of(cur.begin(), cur.end(), [a](auto p) { return p.first == a || p.second == a; });
        if (used_a)
            continue;
        for (Vertex b = a + 1; b <= n; ++b) {
            bool used_b = std::any_of(cur.begin(), cur.end(), [b](auto p) { return p.first == b || p.second == b; });
            if (used_b)
                continue;
            cur.emplace_back(a, b);
            matchings(n, max_pairs, cur, a + 1, visit);
            cur.pop_back();
        }
    }
}

/// Plays the pairing strategy against every adversary line; true when the
/// guarantee holds on all of them.
bool pairing_holds(int n, const PairSet& pairs, PairingRole role, long& lines)
{
    // The strategy player is Alice for LastMover and Bob otherwise; Alice
    // always claims the last vertex.
    const Side last = n % 2 == 1 ? Side::First : Side::Second;
    const Side strategist = role == PairingRole::LastMover ? last : other(last);
    std::function<bool(const PlayState&)> rec = [&](const PlayState& s) -> bool {
        if (s.full()) {
            ++lines;
            const VertexSet opp = s.claimed(other(strategist));
            for (auto [a, b] : pairs.pairs)
                if (!opp.contains(a) && !opp.contains(b))
                    return false;
            return !pairs.distinguished || opp.contains(*pairs.distinguished);
        }
        if (s.to_move() == strategist)
            return rec(s.apply(pairing_move(s, pairs, role)));
        for (Vertex v : s.unclaimed())
            if (!rec(s.apply(v)))
                return false;
        return true;
    };
    return rec(PlayState(n));
}

SuiteResult pairing(const Context& ctx)
{
    long boards = 0, lines = 0, bad = 0;
    for (int n = 1; n <= 9; ++n) {
        std::vector<std::pair<Vertex, Vertex>> cur;
        matchings(n, 3, cur, 1, [&](const std::vector<std::pair<Vertex, Vertex>>& m) {
            PairSet ps{m, std::nullopt};
            ++boards;
            if (!pairing_holds(n, ps, PairingRole::LastMover, lines)) {
                ++bad;
                ctx.say("  last-mover variant fails on n=" + std::to_string(n));
            }
            const VertexSet used = ps.vertices();
            for (Vertex v = 1; v <= n; ++v) {
                if (used.contains(v))
                    continue;
                PairSet with_v{m, v};
                ++boards;
                if (!pairing_holds(n, with_v, PairingRole::NotLastMover, lines)) {
                    ++bad;
                    ctx.say("  not-last-mover variant fails on n=" + std::to_string(n) + " v=" + std::to_string(v));
                }
            }
        });
    }
    return finish(ctx, 8, "pairing", bad == 0,
                  std::to_string(boards) + " boards, " + std::to_string(lines) + " adversary lines, " +
                      std::to_string(bad) + " failures");
}

SuiteResult domination(const Context& ctx)
{
    SplitMix64 seeds = ctx.stream(9);
    int bad = 0;
    for (int i = 0; i < 30; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        Hypergraph h;
        do {
            const int n = uniform(rng, 1, 4);
            h = random_hypergraph(rng, n, uniform(rng, 1, 3), 1, n);
            VertexSet covered;
            for (std::size_t e = 0; e < h.num_edges(); ++e)
                covered |= h.edge_set(e);
            if (covered == VertexSet::range(n))
                break;
        } while (true);
        const Outcome ae = solve_ae(h).outcome;
        const Graph g = ae_to_domination(h);
        const Outcome dom = solve_domination(g).outcome;
        bool ok = (ae == Outcome::AvoiderWins) == (dom == Outcome::StallerWins) && reference::solve_ae(h) == ae;
        if (g.num_vertices() <= 8)
            ok = ok && reference::solve_domination(g) == dom;
        bad += !ok;
        ctx.say("  case " + std::to_string(i) + " seed " + hex(s) + " " + describe(h) + ": " + outcome_token(ae) +
                " / " + outcome_token(dom) + (ok ? "" : " MISMATCH"));
    }
    return finish(ctx, 9, "domination", bad == 0,
                  "30 hypergraphs, Avoider <-> Staller, " + std::to_string(bad) + " mismatches");
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

bool same_edges(const Graph& a, const Graph& b) { return a.num_vertices() == b.num_vertices() && a.edges() == b.edges(); }

SuiteResult hgame(const Context& ctx)
{
    int bad = 0;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            ctx.say("  violated: " + what);
        }
    };

    // (a) graph algebra and the shape of the reduction.
    Graph k4(4);
    for (Vertex u = 1; u <= 4; ++u)
        for (Vertex v = u + 1; v <= 4; ++v)
            k4.add_edge(u, v);
    check(same_edges(strong_product(path2(), path2()), k4), "P2 x P2 = K4");
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            Graph j = join(independent_graph(a), independent_graph(b));
            bool ok = j.num_edges() == static_cast<std::size_t>(a * b);
            for (Vertex u = 1; u <= a; ++u)
                for (Vertex v = 1; v <= b; ++v)
                    ok = ok && j.adjacent(u, a + v);
            check(ok, "I" + std::to_string(a) + " join I" + std::to_string(b) + " = K" + std::to_string(a) + "," +
                          std::to_string(b));
        }

    SplitMix64 seeds = ctx.stream(10);
    const std::vector<Graph> h0s = {path2(), Graph(3, {{1, 2}, {2, 3}}), Graph(3, {{1, 2}, {2, 3}, {1, 3}})};
    int structures = 0;
    for (int i = 0; i < 12; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = uniform(rng, 6, 10);
        const Hypergraph h = random_hypergraph(rng, n, uniform(rng, 1, 3), 6, 6);
        PatternSpec spec{uniform(rng, 6, 8), h0s[static_cast<std::size_t>(i) % h0s.size()]};
        const HGameReduction r = reduce_ae_to_hgame(h, spec);
        const Graph gadget = strong_product(spec.h0, path2());
        const int m = static_cast<int>(h.num_edges());
        const int aux = 2 * (spec.k - 6), copy = gadget.num_vertices();
        bool ok = r.graph.num_vertices() == n + m * (aux + copy);
        std::size_t expected_edges = 0;
        for (int c = 0; c < m; ++c) {
            const Vertex base = n + m * aux + c * copy;
            for (Vertex a = 1; a <= copy; ++a)
                for (Vertex b = a + 1; b <= copy; ++b)
                    ok = ok && r.graph.adjacent(base + a, base + b) == gadget.adjacent(a, b);
            for (Vertex w = 1; w <= copy; ++w) {
                for (Vertex v : h.edge(static_cast<std::size_t>(c)))
                    ok = ok && r.graph.adjacent(base + w, v);
                for (int j = 1; j <= aux; ++j)
                    ok = ok && r.graph.adjacent(base + w, n + c * aux + j);
            }
            expected_edges += gadget.num_edges() + static_cast<std::size_t>(copy) * (6 + aux);
        }
        ok = ok && r.graph.num_edges() == expected_edges;
        ok = ok && same_edges(r.pattern, join(independent_graph(spec.k), spec.h0));
        ++structures;
        check(ok, "structure of case " + std::to_string(i) + " seed " + hex(s));
    }
    ctx.say("  " + std::to_string(structures) + " reductions checked for counts, gadget copies and joins");

    // (b) the Avoider-win direction on the smallest instance.
    {
        const Hypergraph src(6, {{1, 2, 3, 4, 5, 6}});
        const HGameReduction r = reduce_ae_to_hgame(src, PatternSpec{6, path2()});
        const Outcome target = solve_hgame(r.graph, r.pattern).outcome;
        const Outcome source = solve_ae(src).outcome;
        check(r.graph.num_vertices() == 10, "single 6-edge gives a 10-vertex graph");
        check(source == Outcome::AvoiderWins && target == Outcome::AvoiderWins, "Avoider wins both games");
        ctx.say(std::string("  single 6-edge: source ") + outcome_token(source) + ", H-game " + outcome_token(target));
    }

    // (c) containment against plain injection enumeration.
    int containment = 0;
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = uniform(rng, 1, 10);
        const Graph g = random_graph(rng, n, 0.5);
        const Graph p = random_graph(rng, uniform(rng, 1, 5), 0.5);
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(uniform(rng, 0, std::min(n, 8))));
        std::sort(all.begin(), all.end());
        const bool fast = subgraph_contains(g, VertexSet::from(all), p);
        const bool slow = reference::contains_subgraph(g, all, p);
        ++containment;
        check(fast == slow, "containment case " + std::to_string(i) + " seed " + hex(s));
    }
    ctx.say("  " + std::to_string(containment) + " containment queries against injection enumeration");
    return finish(ctx, 10, "hgame", bad == 0, std::to_string(bad) + " violated checks");
}

SuiteResult construction(const Context& ctx)
{
    SplitMix64 seeds = ctx.stream(11);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
        const std::uint64_t s = seeds.next();
        std::mt19937_64 rng(s);
        const int n = uniform(rng, 1, 3), m = uniform(rng, 1, 6);
        std::vector<Clause> clauses;
        for (int j = 0; j < m; ++j) {
            Clause c;
            for (auto& l : c)
                l = Literal{uniform(rng, 1, 2 * n), uniform(rng, 0, 1) == 1};
            clauses.push_back(c);
        }
        const QbfFormula f(n, clauses);
        const LabeledReduction red = reduce_qbf_to_ae(f);
        const Hypergraph& h = red.hypergraph;
        bool ok = h.num_vertices() == 10 * n && h.num_edges() == static_cast<std::size_t>(8 * n + m) &&
                  h.max_edge_size() <= 6;
        VertexSet prev = VertexSet::range(h.num_vertices());
        for (int k = 1; k <= 4 * n; ++k) {
            VertexSet sk = s_set(red, k);
            ok = ok && sk.size() % 2 == 1 && sk.subset_of(prev) && sk != prev;
            prev = sk;
        }
        VertexSet s1 = VertexSet::range(h.num_vertices());
        s1.erase(*red.u(1));
        ok = ok && s_set(red, 1) == s1;
        bad += !ok;
        ctx.say("  case " + std::to_string(i) + " seed " + hex(s) + " n=" + std::to_string(n) + " m=" +
                std::to_string(m) + " " + describe(h) + (ok ? "" : " VIOLATION"));
    }
    return finish(ctx, 11, "construction", bad == 0, "60 formulas up to n = 3, " + std::to_string(bad) + " violations");
}

using SuiteFn = SuiteResult (*)(const Context&);

struct Suite {
    const char* name;
    SuiteFn run;
    bool slow;
};

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"qbf-equivalence", qbf_equivalence, false},
        {"stretch", stretch, true},
        {"legitimate", legitimate, false},
        {"oracles", oracles, false},
        {"uniformize", uniformize, false},
        {"aa-lift", aa_lift, false},
        {"dominated", dominated, false},
        {"pairing", pairing, false},
        {"domination", domination, false},
        {"hgame", hgame, false},
        {"construction", construction, false},
    };
    return all;
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const Suite& s : suites())
        out.emplace_back(s.name);
    return out;
}

std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed, const LineSink& sink)
{
    const Context ctx{seed, sink};
    std::vector<SuiteResult> out;
    bool known = suite == "all" || suite == "reductions";
    for (const Suite& s : suites()) {
        bool selected = suite == s.name || suite == "all" || (suite == "reductions" && !s.slow);
        if (!selected)
            continue;
        known = true;
        ctx.say(std::string("suite ") + s.name + " seed " + hex(seed));
        out.push_back(s.run(ctx));
    }
    if (!known)
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
    return out;
}

} // namespace avoidgame
