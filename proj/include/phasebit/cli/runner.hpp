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
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/cli/config.hpp"
#include "phasebit/cli/table.hpp"
#include "phasebit/error.hpp"
#include "phasebit/phase.hpp"
#include "phasebit/quantum.hpp"
#include "phasebit/register.hpp"
#include "phasebit/signal.hpp"
#include "phasebit/stats.hpp"

namespace phasebit::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kConfigError = 2 };

/// 17 evenly spaced deltas k*pi/16, k = 0..16.
inline std::vector<double> default_delta_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 16; ++k) {
        grid.push_back(k * kPi / 16.0);
    }
    return grid;
}

namespace detail {

inline std::vector<Angle> to_angles(const std::vector<double>& radians) {
    std::vector<Angle> out;
    out.reserve(radians.size());
    for (double r : radians) {
        out.emplace_back(r);
    }
    return out;
}

inline std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

/// Human-readable amplitude expansion, e.g. "0.707106781187|0>-0.707106781187|1>".
inline std::string describe(const quantum::QuantumState& s) {
    std::string out;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        const auto a = s.amplitude(i);
        if (std::abs(a) < 1e-12) {
            continue;
        }
        std::string label;
        for (std::size_t q = 0; q < s.n_qubits(); ++q) {
            label += (i & s.bit_mask(q)) ? '1' : '0';
        }
        std::string coef;
        if (std::abs(a.imag()) < 1e-15) {
            coef = format_double(a.real());
            if (!out.empty() && a.real() >= 0) {
                coef = "+" + coef;
            }
        } else {
            coef = (out.empty() ? "(" : "+(") + format_double(a.real()) + "," +
                   format_double(a.imag()) + ")";
        }
        out += coef + "|" + label + ">";
    }
    return out;
}

inline std::string describe(const QubitState& q) {
    if (q.is_definite()) {
        return "definite(" + std::to_string(q.bit()) + ")";
    }
    return "balanced(" + format_double(q.alpha().radians()) + ")";
}

/// P(read 0) of a virtual qubit under a uniform phase.
inline double virtual_p0(const QubitState& q) {
    if (q.is_definite()) {
        return q.bit() == 0 ? 1.0 : 0.0;
    }
    return 0.5;
}

inline Table curve_table(const ExperimentConfig& cfg) {
    const auto deltas = to_angles(cfg.angles.empty() ? default_delta_grid() : cfg.angles);
    Table t{{"delta_alpha", "m_analytic", "m_estimated", "stderr", "n"}, {}};
    for (const auto& p : correlation_curve(cfg.phase_model, deltas, cfg.trials, cfg.workers)) {
        t.add_row({p.delta.radians(), p.analytic, p.estimated.mean, p.estimated.std_error,
                   as_int(p.estimated.n)});
    }
    return t;
}

inline Table compare_table(const ExperimentConfig& cfg) {
    const auto deltas = to_angles(cfg.angles.empty() ? default_delta_grid() : cfg.angles);
    Table t{{"delta_alpha", "m_analytic", "m_estimated", "stderr", "m_quantum", "n"}, {}};
    for (const auto& p : correlation_curve(cfg.phase_model, deltas, cfg.trials, cfg.workers)) {
        // Sign-flipped singlet correlation, so both series start at +1.
        const double m_quantum = -quantum::singlet_correlation(Angle(0.0), p.delta);
        t.add_row({p.delta.radians(), p.analytic, p.estimated.mean, p.estimated.std_error,
                   m_quantum, as_int(p.estimated.n)});
    }
    return t;
}

inline Table chsh_table(const ExperimentConfig& cfg) {
    const ChshAngles angles =
        cfg.angles.empty()
            ? ChshAngles::standard()
            : ChshAngles{Angle(cfg.angles[0]), Angle(cfg.angles[1]), Angle(cfg.angles[2]),
                         Angle(cfg.angles[3])};
    const ChshResult r =
        chsh_classical(cfg.phase_model, angles, cfg.trials, cfg.chsh_sampling, cfg.workers);
    const double s_quantum = quantum::chsh_quantum(angles);
    const double ratio = std::abs(s_quantum) / std::abs(r.s_value);
    Table t{{"a1", "a2", "b1", "b2", "e11", "e12", "e21", "e22", "s", "s_stderr", "s_quantum",
             "ratio"},
            {}};
    t.add_row({angles.a1.radians(), angles.a2.radians(), angles.b1.radians(),
               angles.b2.radians(), r.terms[0].mean, r.terms[1].mean, r.terms[2].mean,
               r.terms[3].mean, r.s_value, r.s_stderr, s_quantum, ratio});
    return t;
}

inline Table init_table(const ExperimentConfig& cfg) {
    const std::vector<double> alphas =
        cfg.angles.empty() ? std::vector<double>{0.0, kPi / 4} : cfg.angles;
    VirtualRegister reg = VirtualRegister::balanced(
        to_angles(alphas), PhaseStream(cfg.phase_model), cfg.signal_index);
    const auto records = initialize(reg, cfg.trials, cfg.workers);

    Table t{{"qubit", "alpha", "role", "trials", "accepted", "acceptance_rate", "fraction_zero",
             "stderr"},
            {}};
    const double accepted = static_cast<double>(records.size());
    for (std::size_t k = 0; k < reg.size(); ++k) {
        std::uint64_t zeros = 0;
        for (const auto& rec : records) {
            zeros += rec.bits[k] == 0 ? 1 : 0;
        }
        const double p = records.empty() ? std::nan("") : static_cast<double>(zeros) / accepted;
        const double se = records.empty() ? std::nan("") : std::sqrt(p * (1.0 - p) / accepted);
        t.add_row({static_cast<std::int64_t>(k), alphas[k],
                   std::string(k == reg.signal_index() ? "signal" : "target"),
                   as_int(cfg.trials), as_int(records.size()),
                   accepted / static_cast<double>(cfg.trials), p, se});
    }
    return t;
}

inline Table gates_table(const ExperimentConfig& cfg) {
    using quantum::QuantumState;
    Table t{{"gate", "input", "virtual_output", "virtual_p0", "oracle_output", "oracle_p0",
             "agree"},
            {}};
    const auto agree = [](double a, double b) -> std::int64_t {
        return std::abs(a - b) < 1e-12 ? 1 : 0;
    };

    // CNOT truth table, control qubit 0, target qubit 1.
    for (int c = 0; c <= 1; ++c) {
        for (int tg = 0; tg <= 1; ++tg) {
            const int out = cnot(c, tg);
            const QuantumState s =
                quantum::apply_cnot(QuantumState::basis(2, (c << 1) | tg), 0, 1);
            const double vp0 = out == 0 ? 1.0 : 0.0;
            const double op0 = s.probability_zero(1);
            t.add_row({std::string("cnot"), std::to_string(c) + std::to_string(tg),
                       std::to_string(c) + std::to_string(out), vp0, describe(s), op0,
                       agree(vp0, op0)});
        }
    }

    // Hadamard rules. A balanced virtual qubit stands for (|0>+|1>)/sqrt2.
    const Angle home(0.0);
    const QuantumState zero = QuantumState::basis(1, 0);
    const QuantumState one = QuantumState::basis(1, 1);
    const QuantumState plus = quantum::apply_hadamard(zero, 0);
    const std::vector<double> inputs = cfg.angles.empty() ? std::vector<double>{0.0} : cfg.angles;

    const auto add_rule = [&](const std::string& gate, const QubitState& in,
                              const QubitState& out, const QuantumState& oracle_out) {
        const double vp0 = virtual_p0(out);
        const double op0 = oracle_out.probability_zero(0);
        t.add_row({gate, describe(in), describe(out), vp0, describe(oracle_out), op0,
                   agree(vp0, op0)});
    };
    for (double alpha : inputs) {
        const QubitState in = QubitState::balanced(Angle(alpha));
        add_rule("hadamard", in, hadamard(in, home), quantum::apply_hadamard(plus, 0));
    }
    const QubitState d0 = QubitState::definite(0);
    const QubitState d1 = QubitState::definite(1);
    add_rule("hadamard", d0, hadamard(d0, home), quantum::apply_hadamard(zero, 0));
    add_rule("hadamard", d1, hadamard(d1, home), quantum::apply_hadamard(one, 0));
    add_rule("hadamard^2", d1, hadamard(hadamard(d1, home), home),
             quantum::apply_hadamard(quantum::apply_hadamard(one, 0), 0));
    return t;
}

}  // namespace detail

/// Runs the experiment named by `cfg.command` and returns its result table.
inline Table build_table(const ExperimentConfig& cfg) {
    switch (cfg.command) {
        case Command::Curve: return detail::curve_table(cfg);
        case Command::Chsh: return detail::chsh_table(cfg);
        case Command::Init: return detail::init_table(cfg);
        case Command::Gates: return detail::gates_table(cfg);
        case Command::Compare: return detail::compare_table(cfg);
    }
    throw ConfigError("unknown command");
}

/// Executes `cfg` and writes its table. Exit codes: 0 success, 2 config
/// error, 1 runtime failure. Diagnostics go to `err` as a single line.
inline int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        write_table(build_table(cfg), cfg.format, cfg.output_path, out);
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "phasebit: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const UsageError& e) {
        err << "phasebit: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "phasebit: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "phasebit: error: " << e.what() << '\n';
        return kRuntimeFailure;
    }
}

}  // namespace phasebit::cli
