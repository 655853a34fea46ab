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
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gaussfactor/errors.hpp"
#include "gaussfactor/methods.hpp"

namespace gaussfactor {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

struct GoldenRow {
    std::uint64_t j;
    double value;
    bool factor;
};

std::vector<GoldenRow> read_golden(const std::string &name) {
    std::ifstream in(std::string(GAUSSFACTOR_GOLDEN_DIR) + "/" + name);
    std::vector<GoldenRow> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string j, v, f;
        std::getline(ss, j, ',');
        std::getline(ss, v, ',');
        std::getline(ss, f, ',');
        rows.push_back({std::stoull(j), std::stod(v), f == "true"});
    }
    return rows;
}

// Slice-by-slice, pulse-by-pulse propagation with explicit matrices.
double spatial_oracle(std::uint64_t n, std::uint64_t j, std::uint64_t M, int slices) {
    auto rot = [](double ax, double ay, double az, double angle, std::array<double, 3> v) {
        const double c = std::cos(angle), s = std::sin(angle);
        const double d = ax * v[0] + ay * v[1] + az * v[2];
        const std::array<double, 3> cross{ay * v[2] - az * v[1], az * v[0] - ax * v[2],
                                          ax * v[1] - ay * v[0]};
        std::array<double, 3> out{};
        const std::array<double, 3> axis{ax, ay, az};
        for (int i = 0; i < 3; ++i) {
            out[i] = v[i] * c + cross[i] * s + axis[i] * d * (1.0 - c);
        }
        return out;
    };
    const double theta = kPi / static_cast<double>(M + 1);
    std::complex<double> acc{0, 0};
    for (int k = 0; k < slices; ++k) {
        const double alpha = 2.0 * kPi * k / slices;
        std::array<double, 3> v = rot(0, 0, 1, alpha, {1, 0, 0});
        for (std::uint64_t m = 0; m <= M; ++m) {
            const double phi = 2.0 * kPi * static_cast<double>((m * m * n) % j) / j;
            v = rot(std::cos(phi), std::sin(phi), 0, theta, v);
        }
        v = rot(0, 0, 1, alpha, v);
        acc += std::complex<double>(v[0], v[1]);
    }
    return std::abs(acc / static_cast<double>(slices));
}

TEST(ReferenceSignalTest, ClosedForm) {
    EXPECT_NEAR(std::abs(reference_signal(15, kDeg)), std::sin(16 * kDeg), 1e-15);
    EXPECT_NEAR(std::abs(reference_signal(0, kPi / 2)), 1.0, 1e-15);
    EXPECT_LT(std::abs(reference_signal(12, kPi / 13)), kReferenceFloor);
}

TEST(ReferenceSignalTest, RejectsNonPositiveFlip) {
    EXPECT_THROW((void)reference_signal(3, 0.0), ConfigError);
    EXPECT_THROW((void)reference_signal(3, -0.1), ConfigError);
    EXPECT_THROW((void)reference_signal(3, std::nan("")), ConfigError);
}

TEST(DifferentialTest, FactorRunIsTheReferenceRun) {
    const DifferentialParams params{kDeg, true};
    const auto s = simulate_differential(FactorizationTarget(16637), 127, 12, params);
    EXPECT_EQ(s.j, 127U);
    EXPECT_EQ(s.normalized, 1.0);
    EXPECT_EQ(s.raw_transverse, reference_signal(12, kDeg));
}

TEST(DifferentialTest, EveryDivisorNormalizesToExactlyOne) {
    const FactorizationTarget target(52882363);
    for (std::uint64_t j = 1; j <= 10000; ++j) {
        if (52882363 % j == 0) {
            EXPECT_EQ(simulate_differential(target, j, 15, {}).normalized, 1.0) << j;
        }
    }
}

TEST(DifferentialTest, NonFactorsAreSuppressed) {
    const FactorizationTarget target(52882363);
    for (std::uint64_t j = 50; j <= 120; ++j) {
        const double v = simulate_differential(target, j, 15, {}).normalized;
        if (52882363 % j == 0) {
            EXPECT_EQ(v, 1.0);
        } else {
            EXPECT_LT(v, 0.45) << j;
        }
    }
}

TEST(DifferentialTest, UnnormalizedReportsTransverseMagnitude) {
    const auto s = simulate_differential(FactorizationTarget(16637), 131, 12, {kDeg, false});
    EXPECT_NEAR(s.normalized, std::sin(13 * kDeg), 1e-15);
}

TEST(DifferentialTest, SmallFlipTracksGaussSum) {
    const FactorizationTarget target(16637);
    for (std::uint64_t j = 2; j <= 150; ++j) {
        const double signal = simulate_differential(target, j, 12, {0.01 * kDeg, true}).normalized;
        EXPECT_NEAR(signal, gauss_sum_exact(target, j, 12).magnitude, 1e-3) << j;
    }
}

TEST(DifferentialTest, DegenerateReferenceIsAnError) {
    EXPECT_THROW((void)simulate_differential(FactorizationTarget(16637), 129, 12, {kPi / 13, true}),
                 NormalizationError);
    EXPECT_NO_THROW(
        (void)simulate_differential(FactorizationTarget(16637), 129, 12, {kPi / 13, false}));
}

TEST(DifferentialTest, SmallAngleWarning) {
    EXPECT_FALSE(small_angle_warning(15, kDeg).has_value());
    EXPECT_TRUE(small_angle_warning(15, 3 * kDeg).has_value());
}

TEST(DifferentialTest, WorstDeviationShrinksWithFlip) {
    const FactorizationTarget target(16637);
    double previous = 1.0;
    for (double deg : {1.0, 0.1, 0.01}) {
        double worst = 0.0;
        for (std::uint64_t j = 2; j <= 200; ++j) {
            const double d = simulate_differential(target, j, 15, {deg * kDeg, true}).normalized -
                             gauss_sum_exact(target, j, 15).magnitude;
            worst = std::max(worst, std::abs(d));
        }
        EXPECT_LT(worst, previous) << deg;
        previous = worst;
    }
    EXPECT_LT(previous, 1e-4);
}

TEST(SpatialTest, FlipAngleTotalsPi) {
    EXPECT_DOUBLE_EQ(spatial_flip_angle(12) * 13, kPi);
    EXPECT_DOUBLE_EQ(spatial_flip_angle(0), kPi);
}

TEST(SpatialTest, DivisorsEchoFully) {
    for (std::uint64_t n : {16637ULL, 52882363ULL}) {
        const FactorizationTarget target(n);
        for (std::uint32_t slices : {2U, 17U, 256U}) {
            for (std::uint64_t j = 1; j * j <= n; ++j) {
                if (n % j != 0) {
                    continue;
                }
                for (std::uint64_t d : {j, n / j}) {
                    const auto s = simulate_spatial(target, d, 12, {slices, 1});
                    EXPECT_NEAR(s.normalized, 1.0, 1e-12) << "n=" << n << " j=" << d;
                }
            }
        }
    }
}

TEST(SpatialTest, MatchesPerSliceOracle) {
    const FactorizationTarget target(16637);
    for (std::uint64_t j = 120; j <= 140; ++j) {
        EXPECT_NEAR(simulate_spatial(target, j, 12, {256, 1}).normalized,
                    spatial_oracle(16637, j, 12, 256), 1e-12)
            << j;
    }
    EXPECT_LT(simulate_spatial(target, 129, 12, {256, 1}).normalized, 0.1);
}

TEST(SpatialTest, MatchesFrozenGolden) {
    const auto rows = read_golden("spatial_16637_m12.csv");
    ASSERT_EQ(rows.size(), 21U);
    for (const auto &row : rows) {
        EXPECT_NEAR(simulate_spatial(FactorizationTarget(16637), row.j, 12, {}).normalized,
                    row.value, 1e-12)
            << row.j;
    }
}

TEST(SpatialTest, GradientDephasesCompletely) {
    for (std::uint32_t slices : {2U, 3U, 17U, 256U, 1000U}) {
        for (std::uint32_t windings : {1U, 2U, 3U, 5U}) {
            if (windings % slices == 0) {
                continue;
            }
            EXPECT_NEAR(std::abs(dephased_average({slices, windings})), 0.0, 1e-12)
                << slices << "/" << windings;
        }
    }
}

TEST(SpatialTest, SlicePhaseGrid) {
    const auto alphas = slice_phases({4, 1});
    ASSERT_EQ(alphas.size(), 4U);
    EXPECT_DOUBLE_EQ(alphas[0], 0.0);
    EXPECT_DOUBLE_EQ(alphas[1], kPi / 2);
    EXPECT_DOUBLE_EQ(alphas[2], kPi);
    EXPECT_DOUBLE_EQ(alphas[3], 3 * kPi / 2);
    const auto wound = slice_phases({4, 3});
    EXPECT_DOUBLE_EQ(wound[1], 3 * kPi / 2);
}

TEST(SpatialTest, RejectsBadGrids) {
    const FactorizationTarget target(16637);
    EXPECT_THROW((void)simulate_spatial(target, 127, 12, {1, 1}), ConfigError);
    EXPECT_THROW((void)simulate_spatial(target, 127, 12, {16, 0}), ConfigError);
    EXPECT_THROW((void)simulate_spatial(target, 127, 12, {16, 32}), ConfigError);
}

} // namespace
} // namespace gaussfactor
