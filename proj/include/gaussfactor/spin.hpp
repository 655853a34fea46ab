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

#include <array>
#include <complex>
#include <span>

namespace gaussfactor {

/// Expectation values (<I_x>, <I_y>, <I_z>) of one spin sub-ensemble,
/// scaled so that a fully polarized state has unit norm.
struct BlochState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const noexcept;
    /// <I_x> + i <I_y>.
    [[nodiscard]] std::complex<double> transverse() const noexcept { return {x, y}; }

    friend bool operator==(const BlochState &, const BlochState &) = default;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/**
 * @brief A proper rotation of the Bloch sphere, held as a unit quaternion.
 *
 * The sense of rotation is right-handed: a positive angle about +z carries
 * +x into +y, and a positive angle about +x carries +z into -y. This is the
 * action of exp(-i angle n.I) on the spin operators.
 */
class Rotation {
  public:
    /// Identity.
    Rotation() = default;

    /// Rotation by @p angle radians about @p axis; the axis need not be unit
    /// length but must be non-zero.
    static Rotation from_axis_angle(const std::array<double, 3> &axis, double angle);

    /// Applies @p first, then *this.
    [[nodiscard]] Rotation operator*(const Rotation &first) const noexcept;
    [[nodiscard]] Rotation inverse() const noexcept;
    /// Rescales the quaternion to unit length, removing accumulated drift.
    [[nodiscard]] Rotation normalized() const noexcept;

    [[nodiscard]] BlochState apply(const BlochState &s) const noexcept;
    [[nodiscard]] Matrix3 matrix() const noexcept;

    /// Rotation angle in [0, pi] with the matching axis; the identity reports
    /// angle 0 about +x.
    [[nodiscard]] double angle() const noexcept;
    [[nodiscard]] std::array<double, 3> axis() const noexcept;

    /// Components (w, x, y, z) of the unit quaternion.
    [[nodiscard]] std::array<double, 4> quaternion() const noexcept { return {w_, x_, y_, z_}; }

  private:
    Rotation(double w, double x, double y, double z) noexcept : w_(w), x_(x), y_(y), z_(z) {}

    double w_ = 1.0;
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 0.0;
};

/// RF pulse of flip angle @p theta about the in-plane axis (cos phi, sin phi, 0).
[[nodiscard]] Rotation pulse(double theta, double phi);

/// Precession by @p alpha about +z, as produced by a field gradient.
[[nodiscard]] Rotation z_rotation(double alpha);

/// Net rotation of a pulse train; seq[0] acts first. Throws
/// std::invalid_argument for an empty sequence.
[[nodiscard]] Rotation compose(std::span<const Rotation> seq);

[[nodiscard]] inline BlochState apply(const Rotation &r, const BlochState &s) noexcept {
    return r.apply(s);
}

} // namespace gaussfactor
