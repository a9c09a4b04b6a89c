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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/philox.hpp"

namespace phasebit {

enum class PhaseKind {
    IidUniform,          ///< independent uniform draw on [0, 2pi) per trial
    OscillatorEnsemble,  ///< wrapped sum of J oscillators with random frequencies
};

inline std::string_view to_string(PhaseKind kind) {
    return kind == PhaseKind::IidUniform ? "iid_uniform" : "oscillator_ensemble";
}

struct PhaseModel {
    PhaseKind kind = PhaseKind::IidUniform;
    std::uint64_t seed = 42;
    // The remaining fields only apply to OscillatorEnsemble.
    std::uint64_t ensemble_size = 32;
    double frequency_spread = 1.0;
    std::uint64_t burn_in = 100;

    friend bool operator==(const PhaseModel&, const PhaseModel&) = default;
};

inline void validate(const PhaseModel& model) {
    if (model.kind != PhaseKind::OscillatorEnsemble) {
        return;
    }
    if (model.ensemble_size < 1) {
        throw UsageError("phase model: ensemble_size must be >= 1");
    }
    if (!(model.frequency_spread > 0.0) || !std::isfinite(model.frequency_spread)) {
        throw UsageError("phase model: frequency_spread must be a positive finite number");
    }
}

struct PhaseSample {
    std::uint64_t t = 0;  ///< trial index
    double phi = 0.0;     ///< phase in [0, 2pi)
};

/// A seeded, reproducible sequence of phase samples over a trial range.
///
/// Every sample is a pure function of (model, lane, t); the stream itself only
/// holds configuration plus a cursor. Distinct lanes give statistically
/// independent sequences under the same seed. A stream instance must not be
/// advanced from two threads at once; use `substream` to split work.
class PhaseStream {
  public:
    static constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

    explicit PhaseStream(PhaseModel model, std::uint64_t lane = 0)
        : model_(model), lane_(lane) {
        validate(model_);
        if (model_.kind == PhaseKind::OscillatorEnsemble) {
            draw_frequencies();
        }
    }

    [[nodiscard]] const PhaseModel& model() const { return model_; }
    [[nodiscard]] std::uint64_t lane() const { return lane_; }
    [[nodiscard]] std::uint64_t position() const { return position_; }
    [[nodiscard]] std::uint64_t end() const { return end_; }
    [[nodiscard]] bool bounded() const { return end_ != kUnbounded; }
    [[nodiscard]] std::uint64_t remaining() const { return end_ - position_; }
    [[nodiscard]] const std::vector<double>& frequencies() const { return frequencies_; }

    /// Sample at absolute trial index `t`, independent of the cursor.
    [[nodiscard]] PhaseSample at(std::uint64_t t) const {
        if (model_.kind == PhaseKind::IidUniform) {
            return {t, wrap_phase(kTwoPi * uniform_at(model_.seed, lane_, t))};
        }
        const double time = static_cast<double>(t + model_.burn_in);
        double total = 0.0;
        for (double omega : frequencies_) {
            total += std::fmod(omega * time, kTwoPi);
        }
        return {t, wrap_phase(total)};
    }

    [[nodiscard]] bool done() const { return position_ >= end_; }

    PhaseSample next() {
        if (done()) {
            throw UsageError("PhaseStream::next: stream exhausted");
        }
        return at(position_++);
    }

    /// Skips `n` trials.
    void advance(std::uint64_t n) {
        if (n > remaining()) {
            throw UsageError("PhaseStream::advance: past end of stream");
        }
        position_ += n;
    }

    /// The next `n` trials of this stream as a bounded stream. Does not move
    /// this stream's cursor.
    [[nodiscard]] PhaseStream take(std::uint64_t n) const {
        if (n > remaining()) {
            throw UsageError("PhaseStream::take: not enough trials left in stream");
        }
        PhaseStream out = *this;
        out.end_ = position_ + n;
        return out;
    }

    /// Same model and cursor on a different lane.
    [[nodiscard]] PhaseStream with_lane(std::uint64_t lane) const {
        PhaseStream out(model_, lane);
        out.position_ = position_;
        out.end_ = end_;
        return out;
    }

    friend PhaseStream substream(const PhaseStream& stream, std::uint64_t chunk_index,
                                 std::uint64_t chunk_count);

  private:
    // Frequency draws use a separate key so they never coincide with the
    // per-trial uniform draws of the iid model.
    static constexpr std::uint64_t kFrequencyKeyTweak = 0x6a09e667f3bcc909ull;

    void draw_frequencies() {
        frequencies_.resize(model_.ensemble_size);
        for (std::uint64_t j = 0; j < model_.ensemble_size; ++j) {
            // (0, spread]
            const double u = uniform_at(model_.seed ^ kFrequencyKeyTweak, lane_, j);
            frequencies_[j] = model_.frequency_spread * (1.0 - u);
        }
    }

    PhaseModel model_;
    std::uint64_t lane_ = 0;
    std::uint64_t position_ = 0;
    std::uint64_t end_ = kUnbounded;
    std::vector<double> frequencies_;
};

inline PhaseStream make_phase_stream(const PhaseModel& model) { return PhaseStream(model); }

/// Chunk `chunk_index` of `chunk_count` contiguous, non-overlapping pieces of
/// the remaining range of a bounded stream. The first `remaining % count`
/// chunks get one extra trial. Concatenating the chunks in index order
/// reproduces the serial stream exactly.
inline PhaseStream substream(const PhaseStream& stream, std::uint64_t chunk_index,
                             std::uint64_t chunk_count) {
    if (chunk_count == 0) {
        throw UsageError("substream: chunk count must be positive");
    }
    if (chunk_index >= chunk_count) {
        throw UsageError("substream: chunk index " + std::to_string(chunk_index) +
                         " out of range for " + std::to_string(chunk_count) + " chunks");
    }
    if (!stream.bounded()) {
        throw UsageError("substream: stream must be bounded (use take)");
    }
    const std::uint64_t total = stream.remaining();
    const std::uint64_t base = total / chunk_count;
    const std::uint64_t extra = total % chunk_count;
    const std::uint64_t begin =
        stream.position() + chunk_index * base + std::min(chunk_index, extra);
    const std::uint64_t length = base + (chunk_index < extra ? 1 : 0);

    PhaseStream out = stream;
    out.position_ = begin;
    out.end_ = begin + length;
    return out;
}

}  // namespace phasebit
