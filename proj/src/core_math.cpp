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
#include "gaussfactor/core_math.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gaussfactor/errors.hpp"

namespace gaussfactor {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_trial_factor(std::uint64_t j) {
    if (j == 0) {
        throw ConfigError("trial factor j must be >= 1");
    }
}

} // namespace

FactorizationTarget::FactorizationTarget(std::uint64_t n, unsigned exponent)
    : n_(n), exponent_(exponent) {
    if (n < 2) {
        throw ConfigError("N must be >= 2, got " + std::to_string(n));
    }
    if (exponent < 1) {
        throw ConfigError("exponent must be >= 1");
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % modulus);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) noexcept {
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1U;
    }
    return result;
}

PhaseSchedule phase_schedule(const FactorizationTarget &target, std::uint64_t j,
                             std::uint64_t M, std::size_t max_terms) {
    check_trial_factor(j);
    if (M >= max_terms) {
        throw ConfigError("truncation M=" + std::to_string(M) + " exceeds the sequence cap of " +
                          std::to_string(max_terms) + " terms");
    }

    PhaseSchedule schedule;
    schedule.j = j;
    schedule.truncation = M;
    const auto terms = static_cast<std::size_t>(M) + 1;
    schedule.residues.reserve(terms);
    schedule.phases.reserve(terms);

    const std::uint64_t n_mod_j = target.n() % j;
    for (std::uint64_t m = 0; m <= M; ++m) {
        const std::uint64_t r = mul_mod(pow_mod(m, target.exponent(), j), n_mod_j, j);
        schedule.residues.push_back(r);
        // r < j, but for j beyond 2^53 the quotient may round up to 1.
        double phase = static_cast<double>(kTwoPi * (static_cast<long double>(r) /
                                                     static_cast<long double>(j)));
        if (phase >= kTwoPi) {
            phase = std::nextafter(kTwoPi, 0.0);
        }
        schedule.phases.push_back(phase);
    }
    return schedule;
}

GaussSumValue gauss_sum_exact(const FactorizationTarget &target, std::uint64_t j,
                              std::uint64_t M, std::size_t max_terms) {
    const PhaseSchedule schedule = phase_schedule(target, j, M, max_terms);
    std::complex<double> sum{0.0, 0.0};
    for (double phase : schedule.phases) {
        sum += std::polar(1.0, phase);
    }
    sum /= static_cast<double>(schedule.phases.size());
    return {sum.real(), sum.imag(), std::abs(sum)};
}

bool is_exact_factor(std::uint64_t n, std::uint64_t j) {
    check_trial_factor(j);
    return n % j == 0;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These witnesses are sufficient for all n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) {
        --r;
    }
    while (static_cast<u128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

} // namespace gaussfactor
