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
#include "gaussfactor/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussfactor {

double BlochState::norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

Rotation Rotation::from_axis_angle(const std::array<double, 3> &axis, double angle) {
    const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(len > 0.0)) {
        throw std::invalid_argument("rotation axis must be non-zero");
    }
    const double s = std::sin(0.5 * angle) / len;
    return {std::cos(0.5 * angle), s * axis[0], s * axis[1], s * axis[2]};
}

Rotation Rotation::operator*(const Rotation &first) const noexcept {
    const Rotation &a = *this;
    const Rotation &b = first;
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

Rotation Rotation::normalized() const noexcept {
    const double len = std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_);
    return {w_ / len, x_ / len, y_ / len, z_ / len};
}

Rotation Rotation::inverse() const noexcept { return {w_, -x_, -y_, -z_}; }

BlochState Rotation::apply(const BlochState &s) const noexcept {
    // v' = v + 2w (u x v) + 2 u x (u x v)
    const double tx = 2.0 * (y_ * s.z - z_ * s.y);
    const double ty = 2.0 * (z_ * s.x - x_ * s.z);
    const double tz = 2.0 * (x_ * s.y - y_ * s.x);
    return {s.x + w_ * tx + (y_ * tz - z_ * ty), s.y + w_ * ty + (z_ * tx - x_ * tz),
            s.z + w_ * tz + (x_ * ty - y_ * tx)};
}

Matrix3 Rotation::matrix() const noexcept {
    const double xx = x_ * x_, yy = y_ * y_, zz = z_ * z_;
    const double xy = x_ * y_, xz = x_ * z_, yz = y_ * z_;
    const double wx = w_ * x_, wy = w_ * y_, wz = w_ * z_;
    return {{{1.0 - 2.0 * (yy + zz), 2.0 * (xy - wz), 2.0 * (xz + wy)},
             {2.0 * (xy + wz), 1.0 - 2.0 * (xx + zz), 2.0 * (yz - wx)},
             {2.0 * (xz - wy), 2.0 * (yz + wx), 1.0 - 2.0 * (xx + yy)}}};
}

double Rotation::angle() const noexcept {
    const double v = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    return 2.0 * std::atan2(v, std::abs(w_));
}

std::array<double, 3> Rotation::axis() const noexcept {
    const double v = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (v == 0.0) {
        return {1.0, 0.0, 0.0};
    }
    const double sign = w_ < 0.0 ? -1.0 : 1.0;
    return {sign * x_ / v, sign * y_ / v, sign * z_ / v};
}

Rotation pulse(double theta, double phi) {
    return Rotation::from_axis_angle({std::cos(phi), std::sin(phi), 0.0}, theta);
}

Rotation z_rotation(double alpha) { return Rotation::from_axis_angle({0.0, 0.0, 1.0}, alpha); }

Rotation compose(std::span<const Rotation> seq) {
    if (seq.empty()) {
        throw std::invalid_argument("compose: empty rotation sequence");
    }
    Rotation net = seq.front();
    for (const Rotation &r : seq.subspan(1)) {
        net = r * net;
    }
    return net.normalized();
}

} // namespace gaussfactor
