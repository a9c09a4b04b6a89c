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

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/parallel.hpp"
#include "phasebit/phase.hpp"

namespace phasebit {

/// A two-valued signal, +1 or -1. +1 reads as bit 0 ("green", |0>) and -1 as
/// bit 1 ("red", |1>).
class DichotomicValue {
  public:
    static constexpr DichotomicValue plus() { return DichotomicValue(1); }
    static constexpr DichotomicValue minus() { return DichotomicValue(-1); }

    static DichotomicValue from_int(int v) {
        if (v != 1 && v != -1) {
            throw DomainError("DichotomicValue: value must be +1 or -1");
        }
        return DichotomicValue(v);
    }

    [[nodiscard]] constexpr int value() const { return value_; }
    [[nodiscard]] constexpr int bit() const { return value_ == 1 ? 0 : 1; }

    constexpr DichotomicValue operator-() const { return DichotomicValue(-value_); }
    friend constexpr int operator*(DichotomicValue a, DichotomicValue b) {
        return a.value_ * b.value_;
    }
    friend constexpr bool operator==(DichotomicValue, DichotomicValue) = default;

  private:
    constexpr explicit DichotomicValue(int v) : value_(v) {}
    int value_;
};

/// sign(cos(phi + alpha)), with the measure-zero tie cos(.) == 0 mapped to +1.
inline DichotomicValue dichotomic(const PhaseSample& sample, Angle alpha) {
    return std::cos(sample.phi + alpha.radians()) >= 0.0 ? DichotomicValue::plus()
                                                         : DichotomicValue::minus();
}

/// Triangular correlator of two signals offset by `delta`:
/// 1 - 2|d|/pi with d = delta wrapped into (-pi, pi].
inline double analytic_correlation(Angle delta) {
    return 1.0 - 2.0 * std::abs(wrap_angle(delta).radians()) / kPi;
}

/// Probability that two signals offset by `delta` read the same colour.
/// Satisfies analytic_correlation = 2 P - 1.
inline double conditional_same_color_probability(Angle delta) {
    return 1.0 - std::abs(wrap_angle(delta).radians()) / kPi;
}

/// Monte Carlo mean of +-1 products with its normal-approximation error.
struct CorrelationEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;

    /// Builds an estimate from the integer sum of `n` products in {-1, +1}.
    static CorrelationEstimate from_sum(std::int64_t sum, std::uint64_t n) {
        if (n == 0) {
            throw UsageError("CorrelationEstimate: sample count must be positive");
        }
        const double count = static_cast<double>(n);
        const double mean = static_cast<double>(sum) / count;
        const double variance = std::max(0.0, 1.0 - mean * mean);
        return {mean, std::sqrt(variance / count), n};
    }
};

/// Estimates <a(alpha1) a(alpha2)> from the next `n` trials of `stream`. The
/// caller's stream is not advanced. The result is identical for every
/// `workers` value.
inline CorrelationEstimate estimate_correlation(const PhaseStream& stream, Angle alpha1,
                                                Angle alpha2, std::uint64_t n,
                                                unsigned workers = 1) {
    if (n == 0) {
        throw UsageError("estimate_correlation: n must be positive");
    }
    const std::int64_t sum = sum_over_trials(stream.take(n), workers, [&](const PhaseSample& s) {
        return dichotomic(s, alpha1) * dichotomic(s, alpha2);
    });
    return CorrelationEstimate::from_sum(sum, n);
}

}  // namespace phasebit
