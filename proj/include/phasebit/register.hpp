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

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>
#include <variant>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/parallel.hpp"
#include "phasebit/phase.hpp"
#include "phasebit/signal.hpp"

namespace phasebit {

/// State of one virtual qubit: either a determined bit, or a balanced
/// superposition realised as the signal a(alpha) on the shared phase.
class QubitState {
  public:
    struct Definite {
        int bit;
        friend bool operator==(const Definite&, const Definite&) = default;
    };
    struct Balanced {
        Angle alpha;
        friend bool operator==(const Balanced&, const Balanced&) = default;
    };

    static QubitState definite(int bit) {
        if (bit != 0 && bit != 1) {
            throw DomainError("QubitState: definite bit must be 0 or 1");
        }
        return QubitState(Definite{bit});
    }

    static QubitState balanced(Angle alpha) { return QubitState(Balanced{wrap_angle(alpha)}); }

    [[nodiscard]] bool is_definite() const { return std::holds_alternative<Definite>(state_); }
    [[nodiscard]] bool is_balanced() const { return std::holds_alternative<Balanced>(state_); }

    /// Bit of a Definite state. Throws UsageError for Balanced.
    [[nodiscard]] int bit() const {
        if (const auto* d = std::get_if<Definite>(&state_)) {
            return d->bit;
        }
        throw UsageError("QubitState::bit: state is balanced");
    }

    /// Angle of a Balanced state. Throws UsageError for Definite.
    [[nodiscard]] Angle alpha() const {
        if (const auto* b = std::get_if<Balanced>(&state_)) {
            return b->alpha;
        }
        throw UsageError("QubitState::alpha: state is definite");
    }

    /// Bit read out on a trial with phase `sample`.
    [[nodiscard]] int readout(const PhaseSample& sample) const {
        if (const auto* d = std::get_if<Definite>(&state_)) {
            return d->bit;
        }
        return dichotomic(sample, std::get<Balanced>(state_).alpha).bit();
    }

    friend bool operator==(const QubitState&, const QubitState&) = default;

  private:
    explicit QubitState(std::variant<Definite, Balanced> s) : state_(s) {}
    std::variant<Definite, Balanced> state_;
};

/// Hadamard as a state machine on virtual qubits:
///   Balanced(alpha) -> Definite(0)
///   Definite(0)     -> Balanced(default_alpha)
///   Definite(1)     -> Balanced(default_alpha)
/// This is not an involution; the oracle's unitary H is.
inline QubitState hadamard(const QubitState& q, Angle default_alpha = Angle(0.0)) {
    if (q.is_balanced()) {
        return QubitState::definite(0);
    }
    return QubitState::balanced(default_alpha);
}

/// Target bit after CNOT: flipped when control is 1, unchanged when 0.
inline int cnot(int control_bit, int target_bit) {
    if ((control_bit != 0 && control_bit != 1) || (target_bit != 0 && target_bit != 1)) {
        throw DomainError("cnot: bits must be 0 or 1");
    }
    return target_bit ^ control_bit;
}

struct TrialRecord {
    std::uint64_t t = 0;
    std::vector<std::uint8_t> bits;
    bool accepted = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// N virtual qubits reading one shared phase stream. The qubit at
/// `signal_index` gates acceptance: a trial is kept only when it reads 0.
class VirtualRegister {
  public:
    /// `home_angles[k]` is the angle qubit k takes when a Hadamard puts it
    /// into a balanced state. Defaults to 0 for every qubit.
    VirtualRegister(std::vector<QubitState> qubits, PhaseStream stream,
                    std::size_t signal_index = 0, std::vector<Angle> home_angles = {})
        : qubits_(std::move(qubits)),
          home_angles_(std::move(home_angles)),
          signal_index_(signal_index),
          stream_(std::move(stream)) {
        if (qubits_.empty()) {
            throw UsageError("VirtualRegister: needs at least one qubit");
        }
        if (signal_index_ >= qubits_.size()) {
            throw UsageError("VirtualRegister: signal index out of range");
        }
        if (home_angles_.empty()) {
            home_angles_.assign(qubits_.size(), Angle(0.0));
        } else if (home_angles_.size() != qubits_.size()) {
            throw UsageError("VirtualRegister: one home angle per qubit required");
        }
        for (auto& a : home_angles_) {
            a = wrap_angle(a);
        }
    }

    /// Register of Balanced qubits at the given angles, which double as the
    /// home angles.
    static VirtualRegister balanced(const std::vector<Angle>& alphas, PhaseStream stream,
                                    std::size_t signal_index = 0) {
        std::vector<QubitState> qubits;
        qubits.reserve(alphas.size());
        for (Angle a : alphas) {
            qubits.push_back(QubitState::balanced(a));
        }
        return VirtualRegister(std::move(qubits), std::move(stream), signal_index, alphas);
    }

    [[nodiscard]] std::size_t size() const { return qubits_.size(); }
    [[nodiscard]] std::size_t signal_index() const { return signal_index_; }
    [[nodiscard]] const QubitState& qubit(std::size_t k) const { return qubits_.at(k); }
    [[nodiscard]] const std::vector<QubitState>& qubits() const { return qubits_; }
    [[nodiscard]] Angle home_angle(std::size_t k) const { return home_angles_.at(k); }
    [[nodiscard]] const PhaseStream& stream() const { return stream_; }
    PhaseStream& stream() { return stream_; }

    void set_qubit(std::size_t k, QubitState q) { qubits_.at(k) = q; }

    void apply_hadamard(std::size_t k) { set_qubit(k, hadamard(qubit(k), home_angle(k))); }

    /// Outcome of the trial with phase `sample`; does not touch the stream.
    [[nodiscard]] TrialRecord record_for(const PhaseSample& sample) const {
        TrialRecord rec;
        rec.t = sample.t;
        rec.bits.reserve(qubits_.size());
        for (const auto& q : qubits_) {
            rec.bits.push_back(static_cast<std::uint8_t>(q.readout(sample)));
        }
        rec.accepted = rec.bits[signal_index_] == 0;
        return rec;
    }

  private:
    std::vector<QubitState> qubits_;
    std::vector<Angle> home_angles_;
    std::size_t signal_index_;
    PhaseStream stream_;
};

/// Draws one shared phase sample and reads every qubit on it.
inline TrialRecord measure_trial(VirtualRegister& reg) {
    return reg.record_for(reg.stream().next());
}

/// Runs `trials` trials and keeps only the accepted ones (signal read 0).
/// Advances the register's stream by `trials`. Output is independent of
/// `workers`.
inline std::vector<TrialRecord> initialize(VirtualRegister& reg, std::uint64_t trials,
                                           unsigned workers = 1) {
    if (trials == 0) {
        throw UsageError("initialize: trials must be positive");
    }
    const VirtualRegister& view = reg;
    auto chunks = map_chunks(reg.stream().take(trials), workers, [&](PhaseStream chunk) {
        std::vector<TrialRecord> kept;
        while (!chunk.done()) {
            TrialRecord rec = view.record_for(chunk.next());
            if (rec.accepted) {
                kept.push_back(std::move(rec));
            }
        }
        return kept;
    });
    reg.stream().advance(trials);

    std::vector<TrialRecord> out;
    for (auto& chunk : chunks) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    return out;
}

/// Applies CNOT per record: target bit becomes cnot(control bit, target bit).
inline std::vector<TrialRecord> apply_cnot_to_records(std::vector<TrialRecord> records,
                                                      std::size_t control, std::size_t target) {
    if (control == target) {
        throw UsageError("apply_cnot_to_records: control and target must differ");
    }
    for (auto& rec : records) {
        if (control >= rec.bits.size() || target >= rec.bits.size()) {
            throw UsageError("apply_cnot_to_records: qubit index out of range");
        }
        rec.bits[target] = static_cast<std::uint8_t>(cnot(rec.bits[control], rec.bits[target]));
    }
    return records;
}

}  // namespace phasebit
