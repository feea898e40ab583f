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

// Deliberately naive implementations used as independent oracles by the
// verification suites and tests. No memoisation, no pruning, no bitsets.

#include <vector>

#include "avoidgame/core.hpp"
#include "avoidgame/qbf.hpp"

namespace avoidgame::reference {

/// Plain minimax over every move order.
Outcome solve_ae(const Hypergraph& h);
Outcome solve_aa(const Hypergraph& h);
Outcome solve_domination(const Graph& g);
Outcome solve_hgame(const Graph& g, const Graph& pattern);

/// Tries every injective map from pattern vertices into `s`.
bool contains_subgraph(const Graph& g, const std::vector<Vertex>& s, const Graph& pattern);

/// Enumerates every Satisfier strategy table (a choice for each even
/// variable as a function of all earlier variables) and checks it against
/// every Falsifier line. Practical for at most two rounds.
QbfWinner solve_qbf(const QbfFormula& f);

} // namespace avoidgame::reference
