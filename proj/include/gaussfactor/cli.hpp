// Copyright 2026 The gaussfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gaussfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Parses a decimal N >= 2 that fits in 64 bits; throws ConfigError otherwise.
[[nodiscard]] std::uint64_t parse_n(std::string_view text);

/**
 * @brief Runs one `scan`, `factorize` or `gauss-sum` invocation.
 *
 * @p args excludes the program name. Returns 0 on success, 2 for usage or
 * configuration errors and 1 for runtime failures (I/O, failed trial factors).
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, const char *const *argv);

} // namespace gaussfactor::cli
