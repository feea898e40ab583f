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

#include <vector>

#include "avoidgame/core.hpp"

namespace avoidgame::detail {

/// Backtracking search for a pattern copy inside a vertex subset of a host
/// graph (at most 64 vertices). Pattern vertices are matched most-constrained
/// first; candidates need enough neighbours inside the subset.
class PatternMatcher {
public:
    PatternMatcher(const Graph& host, const Graph& pattern);

    int pattern_size() const { return static_cast<int>(order_.size()); }
    bool contains(VertexSet s) const;

private:
    bool extend(std::size_t depth, VertexSet s, VertexSet used, std::vector<Vertex>& image,
                const int* host_degree) const;

    std::vector<VertexSet> host_nbrs_;
    std::vector<Vertex> order_;
    std::vector<std::vector<int>> earlier_nbrs_; ///< per depth: depths of already-matched neighbours
    std::vector<int> degree_;                    ///< per depth
};

} // namespace avoidgame::detail
