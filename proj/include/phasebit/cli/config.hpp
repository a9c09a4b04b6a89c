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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/cli/table.hpp"
#include "phasebit/phase.hpp"
#include "phasebit/stats.hpp"

namespace phasebit::cli {

/// Malformed or inconsistent experiment configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Command { Curve, Chsh, Init, Gates, Compare };

struct ExperimentConfig {
    Command command = Command::Curve;
    PhaseModel phase_model;
    std::uint64_t trials = 100000;
    /// Radians. Empty means the command's default set.
    std::vector<double> angles;
    std::string output_path = "-";
    OutputFormat format = OutputFormat::Csv;
    unsigned workers = 1;
    std::uint64_t signal_index = 0;
    ChshSampling chsh_sampling = ChshSampling::SharedTrials;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline std::string_view to_string(Command c) {
    switch (c) {
        case Command::Curve: return "curve";
        case Command::Chsh: return "chsh";
        case Command::Init: return "init";
        case Command::Gates: return "gates";
        case Command::Compare: return "compare";
    }
    return "curve";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_real(std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

inline std::uint64_t parse_unsigned(std::string_view key, std::string_view s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                          std::string(s) + "'");
    }
    return v;
}

/// Shortest decimal text that parses back to the same double.
inline std::string format_exact(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Parses one angle: a plain number ("0.785") or a multiple of pi such as
/// "pi", "-pi/4", "3pi/4", "3*pi/4", "0.5pi".
inline double parse_angle(std::string_view text) {
    const std::string_view s = detail::trim(text);
    const auto bad = [&] { return ConfigError("bad angle '" + std::string(text) + "'"); };
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        if (auto v = detail::parse_real(s)) {
            return *v;
        }
        throw bad();
    }
    std::string_view coef = s.substr(0, pi_pos);
    if (!coef.empty() && coef.back() == '*') {
        coef.remove_suffix(1);
    }
    double scale = 1.0;
    if (coef == "-") {
        scale = -1.0;
    } else if (!coef.empty() && coef != "+") {
        const auto v = detail::parse_real(coef);
        if (!v) {
            throw bad();
        }
        scale = *v;
    }
    std::string_view rest = s.substr(pi_pos + 2);
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw bad();
        }
        const auto v = detail::parse_real(rest.substr(1));
        if (!v || *v == 0.0) {
            throw bad();
        }
        denom = *v;
    }
    return scale * kPi / denom;
}

/// Comma-separated angle list. An empty string gives an empty list.
inline std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    if (detail::trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_angle(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// Applies one `key = value` setting. Shared by config files and flags.
inline void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string_view value = detail::trim(raw);
    const std::string k(key);
    if (key == "command") {
        if (value == "curve") cfg.command = Command::Curve;
        else if (value == "chsh") cfg.command = Command::Chsh;
        else if (value == "init") cfg.command = Command::Init;
        else if (value == "gates") cfg.command = Command::Gates;
        else if (value == "compare") cfg.command = Command::Compare;
        else throw ConfigError("unknown command '" + std::string(value) + "'");
    } else if (key == "kind" || key == "model") {
        if (value == "iid_uniform" || value == "iid") {
            cfg.phase_model.kind = PhaseKind::IidUniform;
        } else if (value == "oscillator_ensemble" || value == "ensemble") {
            cfg.phase_model.kind = PhaseKind::OscillatorEnsemble;
        } else {
            throw ConfigError("unknown phase model '" + std::string(value) + "'");
        }
    } else if (key == "seed") {
        cfg.phase_model.seed = detail::parse_unsigned(key, value);
    } else if (key == "ensemble_size") {
        cfg.phase_model.ensemble_size = detail::parse_unsigned(key, value);
        if (cfg.phase_model.ensemble_size == 0) {
            throw ConfigError("ensemble_size must be >= 1");
        }
    } else if (key == "frequency_spread") {
        const auto v = detail::parse_real(value);
        if (!v || *v <= 0.0) {
            throw ConfigError("frequency_spread must be a positive number");
        }
        cfg.phase_model.frequency_spread = *v;
    } else if (key == "burn_in") {
        cfg.phase_model.burn_in = detail::parse_unsigned(key, value);
    } else if (key == "trials") {
        cfg.trials = detail::parse_unsigned(key, value);
        if (cfg.trials == 0) {
            throw ConfigError("trials must be >= 1");
        }
    } else if (key == "angles") {
        cfg.angles = parse_angle_list(value);
    } else if (key == "out") {
        if (value.empty()) {
            throw ConfigError("out: empty path");
        }
        cfg.output_path = std::string(value);
    } else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::Csv;
        else if (value == "json") cfg.format = OutputFormat::Json;
        else throw ConfigError("unknown format '" + std::string(value) + "'");
    } else if (key == "workers") {
        const auto w = detail::parse_unsigned(key, value);
        if (w == 0 || w > 1024) {
            throw ConfigError("workers must be in [1, 1024]");
        }
        cfg.workers = static_cast<unsigned>(w);
    } else if (key == "signal_index") {
        cfg.signal_index = detail::parse_unsigned(key, value);
    } else if (key == "chsh_sampling") {
        if (value == "shared") cfg.chsh_sampling = ChshSampling::SharedTrials;
        else if (value == "independent") cfg.chsh_sampling = ChshSampling::IndependentStreams;
        else throw ConfigError("chsh_sampling must be 'shared' or 'independent'");
    } else {
        throw ConfigError("unknown key '" + k + "'");
    }
}

/// Cross-field checks: angle arity per command, signal index range.
inline void validate(const ExperimentConfig& cfg) {
    const std::size_t n = cfg.angles.size();
    switch (cfg.command) {
        case Command::Chsh:
            if (n != 0 && n != 4) {
                throw ConfigError("chsh needs exactly 4 angles (a1,a2,b1,b2), got " +
                                  std::to_string(n));
            }
            break;
        case Command::Init:
            if (n != 0 && cfg.signal_index >= n) {
                throw ConfigError("signal_index " + std::to_string(cfg.signal_index) +
                                  " out of range for " + std::to_string(n) + " qubits");
            }
            if (n == 0 && cfg.signal_index >= 2) {
                throw ConfigError("signal_index out of range for the default 2-qubit register");
            }
            break;
        default:
            break;
    }
}

/// Parses a flat `key = value` file. '#' starts a comment; blank lines are
/// ignored. Later keys override earlier ones.
inline ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {}) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        try {
            apply_setting(base, detail::trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    validate(base);
    return base;
}

/// Canonical text form: every key, fixed order, shortest round-trip numbers.
inline std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    const auto& m = cfg.phase_model;
    out << "command = " << to_string(cfg.command) << '\n'
        << "kind = " << to_string(m.kind) << '\n'
        << "seed = " << m.seed << '\n'
        << "ensemble_size = " << m.ensemble_size << '\n'
        << "frequency_spread = " << detail::format_exact(m.frequency_spread) << '\n'
        << "burn_in = " << m.burn_in << '\n'
        << "trials = " << cfg.trials << '\n'
        << "angles = ";
    for (std::size_t i = 0; i < cfg.angles.size(); ++i) {
        out << (i ? "," : "") << detail::format_exact(cfg.angles[i]);
    }
    out << '\n'
        << "signal_index = " << cfg.signal_index << '\n'
        << "chsh_sampling = "
        << (cfg.chsh_sampling == ChshSampling::SharedTrials ? "shared" : "independent") << '\n'
        << "workers = " << cfg.workers << '\n'
        << "format = " << (cfg.format == OutputFormat::Csv ? "csv" : "json") << '\n'
        << "out = " << cfg.output_path << '\n';
    return out.str();
}

}  // namespace phasebit::cli
