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
#include "gaussfactor/methods.hpp"

#include <cmath>
#include <string>

#include "gaussfactor/errors.hpp"

namespace gaussfactor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr BlochState kThermal{0.0, 0.0, 1.0};
constexpr BlochState kExcited{1.0, 0.0, 0.0};

} // namespace

void validate(const DifferentialParams &params) {
    if (!(params.theta > 0.0) || !std::isfinite(params.theta)) {
        throw ConfigError("flip angle theta must be a finite positive angle");
    }
}

void validate(const SpatialParams &params) {
    if (params.n_slices < 2) {
        throw ConfigError("spatial method needs at least 2 slices");
    }
    if (params.windings < 1) {
        throw ConfigError("spatial method needs at least 1 dephasing winding");
    }
    if (params.windings % params.n_slices == 0) {
        throw ConfigError("windings=" + std::to_string(params.windings) +
                          " is a multiple of n_slices=" + std::to_string(params.n_slices) +
                          "; every slice would see the same phase");
    }
}

BlochState run_cascade(std::span<const double> phases, double theta, BlochState start) {
    for (double phi : phases) {
        start = pulse(theta, phi).apply(start);
    }
    return start;
}

std::complex<double> reference_signal(std::uint64_t M, double theta) {
    validate(DifferentialParams{theta, true});
    const std::vector<double> zeros(static_cast<std::size_t>(M) + 1, 0.0);
    return run_cascade(zeros, theta, kThermal).transverse();
}

std::optional<std::string> small_angle_warning(std::uint64_t M, double theta) {
    const double total = static_cast<double>(M + 1) * theta;
    if (total > std::numbers::pi / 4.0) {
        return "total flip (M+1)*theta = " + std::to_string(total) +
               " rad exceeds pi/4; the cascade no longer approximates the Gauss sum";
    }
    return std::nullopt;
}

SignalSample simulate_differential(const FactorizationTarget &target, std::uint64_t j,
                                   std::uint64_t M, const DifferentialParams &params,
                                   std::size_t max_terms) {
    validate(params);
    const PhaseSchedule schedule = phase_schedule(target, j, M, max_terms);

    SignalSample sample;
    sample.j = j;
    sample.raw_transverse = run_cascade(schedule.phases, params.theta, kThermal).transverse();
    sample.normalized = std::abs(sample.raw_transverse);
    if (params.normalize) {
        const double reference = std::abs(reference_signal(M, params.theta));
        if (reference < kReferenceFloor) {
            throw NormalizationError("reference signal vanishes for M=" + std::to_string(M) +
                                     ", theta=" + std::to_string(params.theta) +
                                     " rad: (M+1)*theta is a multiple of pi");
        }
        sample.normalized /= reference;
    }
    return sample;
}

double spatial_flip_angle(std::uint64_t M) noexcept {
    return std::numbers::pi / static_cast<double>(M + 1);
}

std::vector<double> slice_phases(const SpatialParams &params) {
    validate(params);
    std::vector<double> alphas;
    alphas.reserve(params.n_slices);
    for (std::uint64_t k = 0; k < params.n_slices; ++k) {
        const std::uint64_t turns = (params.windings * k) % params.n_slices;
        alphas.push_back(kTwoPi * static_cast<double>(turns) / params.n_slices);
    }
    return alphas;
}

std::complex<double> dephased_average(const SpatialParams &params) {
    std::complex<double> sum{0.0, 0.0};
    const std::vector<double> alphas = slice_phases(params);
    for (double alpha : alphas) {
        sum += z_rotation(alpha).apply(kExcited).transverse();
    }
    return sum / static_cast<double>(alphas.size());
}

SignalSample simulate_spatial(const FactorizationTarget &target, std::uint64_t j,
                              std::uint64_t M, const SpatialParams &params,
                              std::size_t max_terms) {
    const std::vector<double> alphas = slice_phases(params);
    const PhaseSchedule schedule = phase_schedule(target, j, M, max_terms);

    const double theta = spatial_flip_angle(M);
    std::vector<Rotation> pulses;
    pulses.reserve(schedule.phases.size());
    for (double phi : schedule.phases) {
        pulses.push_back(pulse(theta, phi));
    }
    // RF pulses are uniform across the sample, so one net rotation serves every slice.
    const Rotation cascade = compose(pulses);

    std::complex<double> sum{0.0, 0.0};
    for (double alpha : alphas) {
        const Rotation gradient = z_rotation(alpha);
        sum += gradient.apply(cascade.apply(gradient.apply(kExcited))).transverse();
    }

    SignalSample sample;
    sample.j = j;
    sample.raw_transverse = sum / static_cast<double>(alphas.size());
    sample.normalized = std::abs(sample.raw_transverse);
    return sample;
}

} // namespace gaussfactor
