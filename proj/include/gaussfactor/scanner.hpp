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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaussfactor/core_math.hpp"
#include "gaussfactor/methods.hpp"

namespace gaussfactor {

enum class Method { differential, spatial };

[[nodiscard]] std::string_view to_string(Method method) noexcept;
/// Throws ConfigError for anything but "differential" or "spatial".
[[nodiscard]] Method parse_method(std::string_view name);

using MethodParams = std::variant<DifferentialParams, SpatialParams>;

struct ScanConfig {
    MethodParams params = DifferentialParams{};
    std::uint64_t j_min = 2;
    std::uint64_t j_max = 2;
    std::uint64_t M = 0;
    double threshold = 0.7;
    /// Worker threads; results do not depend on this.
    unsigned jobs = 1;
    std::size_t max_terms = kDefaultMaxTerms;

    [[nodiscard]] Method method() const noexcept {
        return std::holds_alternative<SpatialParams>(params) ? Method::spatial
                                                             : Method::differential;
    }
};

/// Throws ConfigError on an empty or inverted range, j_min < 2, threshold
/// outside (0, 1), jobs == 0, invalid method parameters or M beyond the cap.
void validate(const ScanConfig &cfg);

struct ScanRecord {
    std::uint64_t j = 0;
    double normalized = 0.0;
    std::complex<double> raw_transverse{0.0, 0.0};
    bool classified = false;
    /// N mod j == 0. Audit only, never consulted for classification.
    bool arithmetic_check = false;
    /// Set when the method failed for this j; normalized is then NaN.
    std::optional<std::string> error;
};

struct ScanResult {
    std::uint64_t n = 0;
    unsigned exponent = 2;
    MethodParams params = DifferentialParams{};
    std::uint64_t M = 0;
    double threshold = 0.7;
    std::uint64_t j_min = 0;
    std::uint64_t j_max = 0;
    /// ISO-8601 UTC; empty when suppressed.
    std::string timestamp;
    std::vector<std::string> warnings;
    std::vector<ScanRecord> records;

    [[nodiscard]] Method method() const noexcept {
        return std::holds_alternative<SpatialParams>(params) ? Method::spatial
                                                             : Method::differential;
    }
    /// j values with classified == true, ascending.
    [[nodiscard]] std::vector<std::uint64_t> classified_factors() const;
};

[[nodiscard]] bool operator==(const ScanRecord &a, const ScanRecord &b) noexcept;
[[nodiscard]] bool operator==(const ScanResult &a, const ScanResult &b) noexcept;

[[nodiscard]] bool classify(const SignalSample &sample, double threshold);

/// Signal for one trial factor with the method selected by @p params.
[[nodiscard]] SignalSample evaluate(const FactorizationTarget &target, std::uint64_t j,
                                    std::uint64_t M, const MethodParams &params,
                                    std::size_t max_terms = kDefaultMaxTerms);

/**
 * @brief Evaluates every integer j in [cfg.j_min, cfg.j_max].
 *
 * Records come back in ascending j regardless of cfg.jobs. A method failure
 * for one j is stored in that record and the scan continues. The timestamp
 * is left empty; callers stamp the result if they want one.
 */
[[nodiscard]] ScanResult scan(const FactorizationTarget &target, const ScanConfig &cfg);

struct FactorEntry {
    std::uint64_t value = 0;
    unsigned multiplicity = 0;
    /// Primality by arithmetic audit. false marks a cofactor the signal
    /// could not split.
    bool prime = false;

    friend bool operator==(const FactorEntry &, const FactorEntry &) = default;
};

/**
 * @brief Complete factorization driven by signal scans.
 *
 * Scans j in [2, floor(sqrt(current))], divides out every classified j that
 * also divides exactly, and repeats on the quotient until a scan yields
 * nothing. The j range in @p cfg_template is ignored. Entries are ascending
 * and their product with multiplicity equals N.
 *
 * Throws ConfigError or NormalizationError when the method configuration
 * cannot produce a signal at all.
 */
[[nodiscard]] std::vector<FactorEntry> full_factorize(const FactorizationTarget &target,
                                                      const ScanConfig &cfg_template);

/// "67 × 79 × 97 × 103", with "p^k" for repeated factors.
[[nodiscard]] std::string format_factorization(const std::vector<FactorEntry> &factors);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
[[nodiscard]] std::string utc_timestamp();

} // namespace gaussfactor
