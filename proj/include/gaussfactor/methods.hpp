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
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussfactor/core_math.hpp"
#include "gaussfactor/spin.hpp"

namespace gaussfactor {

/// Pulse-cascade excitation of z-magnetization, read out against a
/// zero-phase reference run.
struct DifferentialParams {
    /// Per-pulse flip angle in radians.
    double theta = std::numbers::pi / 180.0;
    bool normalize = true;

    friend bool operator==(const DifferentialParams &, const DifferentialParams &) = default;
};

/// Gradient echo over a sample discretized into equally spaced dephasing angles.
struct SpatialParams {
    std::uint32_t n_slices = 256;
    /// Full 2*pi turns of dephasing across the sample.
    std::uint32_t windings = 1;

    friend bool operator==(const SpatialParams &, const SpatialParams &) = default;
};

struct SignalSample {
    std::uint64_t j = 0;
    /// <I_x> + i <I_y> at readout (slice-averaged for the spatial method).
    std::complex<double> raw_transverse{0.0, 0.0};
    double normalized = 0.0;
};

/// Below this magnitude the zero-phase reference is treated as no signal.
inline constexpr double kReferenceFloor = 1e-12;

/// Transverse magnetization after M+1 zero-phase pulses of flip @p theta
/// applied to (0, 0, 1); its magnitude is |sin((M+1) theta)|.
[[nodiscard]] std::complex<double> reference_signal(std::uint64_t M, double theta);

/// Returns a message when (M+1) theta leaves the small-angle regime (> pi/4).
[[nodiscard]] std::optional<std::string> small_angle_warning(std::uint64_t M, double theta);

/// Propagates @p start through pulses of flip @p theta with the given phases,
/// one pulse at a time in order.
[[nodiscard]] BlochState run_cascade(std::span<const double> phases, double theta,
                                     BlochState start);

/**
 * @brief Differential excitation signal for trial factor @p j.
 *
 * Starts from (0, 0, 1), applies M+1 pulses of flip theta with the scheduled
 * phases and reports the transverse magnitude, divided by the magnitude of
 * reference_signal(M, theta) when params.normalize is set. A factor's run is
 * the reference run, so its normalized value is exactly 1.
 *
 * Throws ConfigError for a non-positive theta and NormalizationError when the
 * reference magnitude falls below kReferenceFloor.
 */
[[nodiscard]] SignalSample simulate_differential(const FactorizationTarget &target,
                                                 std::uint64_t j, std::uint64_t M,
                                                 const DifferentialParams &params,
                                                 std::size_t max_terms = kDefaultMaxTerms);

/// Per-pulse flip used by the spatial method: the cascade totals pi for factors.
[[nodiscard]] double spatial_flip_angle(std::uint64_t M) noexcept;

/// alpha_k = 2*pi*windings*k/n_slices reduced into [0, 2*pi), k = 0..n_slices-1.
[[nodiscard]] std::vector<double> slice_phases(const SpatialParams &params);

/// Slice average of <I_x> + i <I_y> directly after the first gradient.
[[nodiscard]] std::complex<double> dephased_average(const SpatialParams &params);

/// Throws ConfigError unless n_slices >= 2, windings >= 1 and the grid
/// actually dephases (windings not a multiple of n_slices).
void validate(const SpatialParams &params);
void validate(const DifferentialParams &params);

/**
 * @brief Spatial-averaging (gradient echo) signal for trial factor @p j.
 *
 * Each slice starts from (1, 0, 0), precesses by alpha_k, experiences the
 * M+1 pulses of flip pi/(M+1) and precesses by alpha_k again. The slice
 * average is self-normalized: a perfect echo returns magnitude 1.
 */
[[nodiscard]] SignalSample simulate_spatial(const FactorizationTarget &target, std::uint64_t j,
                                            std::uint64_t M, const SpatialParams &params,
                                            std::size_t max_terms = kDefaultMaxTerms);

} // namespace gaussfactor
