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

#include <string>
#include <string_view>
#include <vector>

#include "avoidgame/core.hpp"
#include "avoidgame/reductions.hpp"

namespace avoidgame {

/// Hypergraph text: "c" comments, "p hg <n> <m>", m lines "e v1 ... vk",
/// optional "n <id> <label>" lines. Repeated vertices inside an edge and
/// repeated edges are accepted and reported through `warnings`.
Hypergraph parse_hypergraph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_hypergraph(const Hypergraph& h);

/// DIMACS graph text: "c" comments, "p edge <n> <m>", m lines "e u v".
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// {"vertices": [{"id", "kind", "index", "sub"?}], "edges": [{"index", "tag", "truncated"?}]}
std::string metadata_to_json(const ReductionMetadata& meta);
ReductionMetadata metadata_from_json(std::string_view text);

/// Position file: "c" comments and "m v1 v2 ..." lines listing the moves in
/// order, first player first.
std::vector<Vertex> parse_position(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace avoidgame
