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

#include <ostream>
#include <string>
#include <vector>

namespace entswap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitProtocol = 4;

/// Environment variable that overrides the default seed (decimal uint64).
inline constexpr const char* kSeedEnv = "ENTSWAP_SEED";

/// Runs one command. `args` excludes the program name. Everything, including
/// the final status line, goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace entswap::cli
