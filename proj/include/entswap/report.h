// Copyright 2026 The entswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace entswap {

/// Outcome of one named verification check.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A verification suite result. Notes are informational and never fail the suite.
struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) {
            n += c.passed ? 0 : 1;
        }
        return n;
    }
};

}  // namespace entswap
