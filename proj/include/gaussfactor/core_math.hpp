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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gaussfactor {

/// Largest number of pulses (M+1) a schedule may contain unless overridden.
inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/**
 * @brief The integer to factor together with the power applied to the
 * summation index in the phase, m^exponent * N / j.
 */
class FactorizationTarget {
  public:
    /// Throws ConfigError unless n >= 2 and exponent >= 1.
    explicit FactorizationTarget(std::uint64_t n, unsigned exponent = 2);

    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
    [[nodiscard]] unsigned exponent() const noexcept { return exponent_; }

  private:
    std::uint64_t n_;
    unsigned exponent_;
};

/**
 * @brief Pulse phases for one trial factor.
 *
 * residues[m] = (m^e * N) mod j exactly; phases[m] = 2*pi*residues[m]/j.
 */
struct PhaseSchedule {
    std::uint64_t j = 1;
    std::uint64_t truncation = 0;
    std::vector<std::uint64_t> residues;
    std::vector<double> phases;
};

struct GaussSumValue {
    double re = 0.0;
    double im = 0.0;
    double magnitude = 0.0;
};

/// (a * b) mod modulus without overflow for any 64-bit operands.
[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                    std::uint64_t modulus) noexcept;

/// base^exp mod modulus by square-and-multiply; modulus must be non-zero.
[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                    std::uint64_t modulus) noexcept;

/**
 * @brief Builds the phase schedule for trial factor @p j truncated at @p M.
 *
 * Throws ConfigError for j == 0 or when M+1 exceeds @p max_terms.
 */
[[nodiscard]] PhaseSchedule phase_schedule(const FactorizationTarget &target,
                                           std::uint64_t j, std::uint64_t M,
                                           std::size_t max_terms = kDefaultMaxTerms);

/// Normalized truncated Gauss sum (1/(M+1)) * sum_m exp(i * phi_m(j)).
[[nodiscard]] GaussSumValue gauss_sum_exact(const FactorizationTarget &target,
                                            std::uint64_t j, std::uint64_t M,
                                            std::size_t max_terms = kDefaultMaxTerms);

/// Throws ConfigError for j == 0.
[[nodiscard]] bool is_exact_factor(std::uint64_t n, std::uint64_t j);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// floor(sqrt(n)).
[[nodiscard]] std::uint64_t isqrt(std::uint64_t n) noexcept;

} // namespace gaussfactor
