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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaussfactor/scanner.hpp"

namespace gaussfactor {

enum class OutputFormat { csv, json };

/// Throws ConfigError for anything but "csv" or "json".
[[nodiscard]] OutputFormat parse_format(std::string_view name);

/// Header `j,normalized,classified,arithmetic_check`, normalized to 9
/// decimals, failed rows as `nan`. Ends with a newline.
[[nodiscard]] std::string to_csv(const ScanResult &result);

[[nodiscard]] nlohmann::json to_json(const ScanResult &result);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
[[nodiscard]] ScanResult scan_result_from_json(const nlohmann::json &doc);

/// `# N=... method=... M=...` followed by whitespace-separated `j normalized` lines.
[[nodiscard]] std::string plot_data(const ScanResult &result);

/// Writes @p contents to @p path; throws std::runtime_error naming the path
/// and the cause on failure.
void write_text_file(const std::filesystem::path &path, std::string_view contents);

void emit_results(const ScanResult &result, OutputFormat format,
                  const std::filesystem::path &path);
void emit_plot_data(const ScanResult &result, const std::filesystem::path &path);

[[nodiscard]] std::string factors_to_csv(const std::vector<FactorEntry> &factors);
[[nodiscard]] nlohmann::json factors_to_json(std::uint64_t n,
                                             const std::vector<FactorEntry> &factors);

} // namespace gaussfactor
