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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace avoidgame {

struct SuiteResult {
    std::string name;
    int criterion = 0;
    bool passed = false;
    std::string summary;
};

using LineSink = std::function<void(const std::string&)>;

/// Names of the individual suites, in criterion order.
std::vector<std::string> suite_names();

/// Runs a suite by name. "reductions" runs every suite except the slow
/// n = 2 "stretch" one; "all" runs everything. Progress lines go to `sink`.
/// Throws InvalidArgument for an unknown name.
std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed, const LineSink& sink);

/// Deterministic 64-bit generator used to derive per-case seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace avoidgame
