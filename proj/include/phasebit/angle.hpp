// Copyright 2026 The phasebit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <numbers>

#include "phasebit/error.hpp"

namespace phasebit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle in radians. Any finite value may be stored; `wrap_angle` yields
/// the canonical representative in (-pi, pi].
class Angle {
  public:
    constexpr Angle() = default;
    constexpr explicit Angle(double radians) : radians_(radians) {}

    [[nodiscard]] constexpr double radians() const { return radians_; }

    constexpr Angle operator-() const { return Angle(-radians_); }
    friend constexpr Angle operator+(Angle a, Angle b) { return Angle(a.radians_ + b.radians_); }
    friend constexpr Angle operator-(Angle a, Angle b) { return Angle(a.radians_ - b.radians_); }
    friend constexpr bool operator==(Angle a, Angle b) = default;

  private:
    double radians_ = 0.0;
};

/// Reduces `x` into (-pi, pi]. Throws DomainError on NaN or infinity.
inline Angle wrap_angle(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("wrap_angle: non-finite angle");
    }
    // fmod is exact, so r == x (mod 2pi) with |r| < 2pi.
    double r = std::fmod(x, kTwoPi);
    if (r > kPi) {
        r -= kTwoPi;
    } else if (r <= -kPi) {
        r += kTwoPi;
    }
    return Angle(r);
}

inline Angle wrap_angle(Angle a) { return wrap_angle(a.radians()); }

/// Reduces `x` into [0, 2pi). Used for phase samples.
inline double wrap_phase(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // r + 2pi can round up to exactly 2pi for tiny negative r.
    return r >= kTwoPi ? 0.0 : r;
}

}  // namespace phasebit
