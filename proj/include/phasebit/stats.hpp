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
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/parallel.hpp"
#include "phasebit/phase.hpp"
#include "phasebit/signal.hpp"

namespace phasebit {

struct ChshAngles {
    Angle a1, a2, b1, b2;

    /// The settings at which the triangular correlator reaches S = 2 and the
    /// singlet reaches |S| = 2 sqrt(2).
    static constexpr ChshAngles standard() {
        return {Angle(0.0), Angle(kPi / 2), Angle(kPi / 4), Angle(3 * kPi / 4)};
    }
};

/// S = E(a1,b1) - E(a1,b2) + E(a2,b1) + E(a2,b2).
constexpr double chsh_combination(double e11, double e12, double e21, double e22) {
    return e11 - e12 + e21 + e22;
}

struct ChshResult {
    ChshAngles angles;
    /// E(a1,b1), E(a1,b2), E(a2,b1), E(a2,b2)
    std::array<CorrelationEstimate, 4> terms;
    double s_value = 0.0;
    double s_stderr = 0.0;
};

struct CurvePoint {
    Angle delta;
    double analytic = 0.0;
    CorrelationEstimate estimated;
};

/// How chsh_classical draws its four correlators.
enum class ChshSampling {
    SharedTrials,        ///< each trial yields all four products
    IndependentStreams,  ///< each correlator gets its own lane
};

/// Estimated M(delta) next to its closed form, for each delta. Point i reads
/// lane i of the model's stream, so points are mutually independent.
inline std::vector<CurvePoint> correlation_curve(const PhaseModel& model,
                                                 std::span<const Angle> deltas, std::uint64_t n,
                                                 unsigned workers = 1) {
    if (deltas.empty()) {
        throw UsageError("correlation_curve: delta grid is empty");
    }
    if (n == 0) {
        throw UsageError("correlation_curve: n must be positive");
    }
    const PhaseStream base(model);
    std::vector<CurvePoint> points;
    points.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const Angle delta = deltas[i];
        points.push_back({delta, analytic_correlation(delta),
                          estimate_correlation(base.with_lane(i), Angle(0.0), delta, n, workers)});
    }
    return points;
}

/// Closed-form CHSH value of the triangular correlator.
inline double analytic_chsh(const ChshAngles& a) {
    return chsh_combination(analytic_correlation(a.a1 - a.b1), analytic_correlation(a.a1 - a.b2),
                            analytic_correlation(a.a2 - a.b1), analytic_correlation(a.a2 - a.b2));
}

inline ChshResult assemble_chsh(const ChshAngles& angles,
                                const std::array<CorrelationEstimate, 4>& terms) {
    ChshResult out{angles, terms, 0.0, 0.0};
    out.s_value = chsh_combination(terms[0].mean, terms[1].mean, terms[2].mean, terms[3].mean);
    double var = 0.0;
    for (const auto& t : terms) {
        var += t.std_error * t.std_error;
    }
    out.s_stderr = std::sqrt(var);
    return out;
}

/// Monte Carlo CHSH experiment on the classical model: both parties read the
/// same phase sample with their own setting.
inline ChshResult chsh_classical(const PhaseModel& model, const ChshAngles& angles,
                                 std::uint64_t n,
                                 ChshSampling sampling = ChshSampling::SharedTrials,
                                 unsigned workers = 1) {
    if (n == 0) {
        throw UsageError("chsh_classical: n must be positive");
    }
    const std::array<std::pair<Angle, Angle>, 4> settings = {{{angles.a1, angles.b1},
                                                              {angles.a1, angles.b2},
                                                              {angles.a2, angles.b1},
                                                              {angles.a2, angles.b2}}};
    const PhaseStream base(model);
    std::array<CorrelationEstimate, 4> terms;

    if (sampling == ChshSampling::IndependentStreams) {
        for (std::size_t k = 0; k < 4; ++k) {
            terms[k] = estimate_correlation(base.with_lane(k), settings[k].first,
                                            settings[k].second, n, workers);
        }
        return assemble_chsh(angles, terms);
    }

    using Sums = std::array<std::int64_t, 4>;
    const auto partial = map_chunks(base.take(n), workers, [&](PhaseStream chunk) {
        Sums sums{};
        while (!chunk.done()) {
            const PhaseSample s = chunk.next();
            const DichotomicValue a[2] = {dichotomic(s, angles.a1), dichotomic(s, angles.a2)};
            const DichotomicValue b[2] = {dichotomic(s, angles.b1), dichotomic(s, angles.b2)};
            sums[0] += a[0] * b[0];
            sums[1] += a[0] * b[1];
            sums[2] += a[1] * b[0];
            sums[3] += a[1] * b[1];
        }
        return sums;
    });
    Sums total{};
    for (const auto& p : partial) {
        for (std::size_t k = 0; k < 4; ++k) {
            total[k] += p[k];
        }
    }
    for (std::size_t k = 0; k < 4; ++k) {
        terms[k] = CorrelationEstimate::from_sum(total[k], n);
    }
    return assemble_chsh(angles, terms);
}

struct KsResult {
    double statistic = 0.0;
    double critical_1pct = 0.0;

    [[nodiscard]] bool passes() const { return statistic < critical_1pct; }
};

/// One-sample Kolmogorov-Smirnov test of `samples` against the uniform CDF
/// on [0, 2pi), with the large-sample 1% critical value 1.63 / sqrt(n).
inline KsResult ks_uniformity(std::span<const double> samples) {
    constexpr std::size_t kMinSamples = 100;
    if (samples.size() < kMinSamples) {
        throw UsageError("ks_uniformity: need at least 100 samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = std::clamp(sorted[i] / kTwoPi, 0.0, 1.0);
        const double above = static_cast<double>(i + 1) / n - cdf;
        const double below = cdf - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return {d, 1.63 / std::sqrt(n)};
}

/// Collects the phases of the next `n` trials of `stream`.
inline std::vector<double> collect_phases(const PhaseStream& stream, std::uint64_t n) {
    PhaseStream s = stream.take(n);
    std::vector<double> out;
    out.reserve(n);
    while (!s.done()) {
        out.push_back(s.next().phi);
    }
    return out;
}

}  // namespace phasebit
