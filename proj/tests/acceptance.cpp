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

// Runs every property suite and prints one line per acceptance criterion.
// Exit status is zero only when all criteria pass.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "avoidgame/avoidgame.h"

namespace {

struct Collected {
    std::map<int, std::string> lines;
    bool verbose = false;
};

void collect(const char* line, void* user)
{
    auto* c = static_cast<Collected*>(user);
    if (c->verbose)
        std::printf("%s\n", line);
    int criterion = 0;
    // Suite result lines look like "PASS [n] name: summary".
    if ((std::strncmp(line, "PASS [", 6) == 0 || std::strncmp(line, "FAIL [", 6) == 0) &&
        std::sscanf(line + 6, "%d]", &criterion) == 1)
        c->lines[criterion] = line;
}

} // namespace

int main(int argc, char** argv)
{
    uint64_t seed = 7;
    Collected c;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "-v") == 0)
            c.verbose = true;
    }
    int passed = 0;
    if (ag_verify("all", seed, collect, &c, &passed) != AG_OK) {
        std::printf("error: %s\n", ag_last_error());
        return 2;
    }
    bool ok = true;
    for (int criterion = 1; criterion <= 11; ++criterion) {
        auto it = c.lines.find(criterion);
        if (it == c.lines.end()) {
            std::printf("FAIL [%d] no result\n", criterion);
            ok = false;
            continue;
        }
        std::printf("%s\n", it->second.c_str());
        ok = ok && it->second.rfind("PASS", 0) == 0;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILED");
    return ok ? 0 : 1;
}
