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
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "phasebit/cli/config.hpp"
#include "phasebit/cli/runner.hpp"

namespace phasebit::cli {

inline constexpr const char* kSeedEnvVar = "PHASEBIT_SEED";

/// Command-line front end. `args` excludes the program name.
///
/// Settings are layered: built-in defaults, then $PHASEBIT_SEED, then the
/// --config file, then flags. Later layers win.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"phasebit: virtual-qubit phase model experiments"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::string command;
    std::string config_path;
    bool print_config = false;
    std::vector<std::pair<std::string, std::string>> flag_settings;

    app.add_option("command", command, "curve | chsh | init | gates | compare");
    app.add_option("--config", config_path, "key = value experiment file");
    app.add_flag("--print-config", print_config,
                 "Print the resolved configuration in canonical form and exit");

    const auto add_setting = [&](const std::string& flag, const std::string& key,
                                 const std::string& help) {
        app.add_option_function<std::string>(
            flag, [&flag_settings, key](const std::string& v) { flag_settings.emplace_back(key, v); },
            help);
    };
    add_setting("--seed", "seed", "64-bit seed (falls back to $PHASEBIT_SEED)");
    add_setting("--trials", "trials", "Trials per estimate");
    add_setting("--model", "kind", "iid_uniform | oscillator_ensemble");
    add_setting("--angles", "angles", "Comma-separated radians; accepts pi forms like 3pi/4");
    add_setting("--out", "out", "Output path, '-' for stdout");
    add_setting("--format", "format", "csv | json");
    add_setting("--workers", "workers", "Worker threads (does not change results)");
    add_setting("--signal-index", "signal_index", "init: index of the signal qubit");
    add_setting("--chsh-sampling", "chsh_sampling", "chsh: shared | independent");
    add_setting("--ensemble-size", "ensemble_size", "oscillator_ensemble: J");
    add_setting("--frequency-spread", "frequency_spread", "oscillator_ensemble: max frequency");
    add_setting("--burn-in", "burn_in", "oscillator_ensemble: skipped time steps");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "phasebit: usage error: " << e.what() << '\n';
        return kConfigError;
    }

    ExperimentConfig cfg;
    try {
        if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
            apply_setting(cfg, "seed", env);
        }
        if (!config_path.empty()) {
            std::ifstream file(config_path);
            if (!file) {
                throw ConfigError("cannot read config file '" + config_path + "'");
            }
            std::ostringstream text;
            text << file.rdbuf();
            cfg = parse_config(text.str(), cfg);
        } else if (command.empty()) {
            throw ConfigError("no command given (curve, chsh, init, gates, compare)");
        }
        if (!command.empty()) {
            apply_setting(cfg, "command", command);
        }
        for (const auto& [key, value] : flag_settings) {
            apply_setting(cfg, key, value);
        }
        validate(cfg);
    } catch (const ConfigError& e) {
        err << "phasebit: config error: " << e.what() << '\n';
        return kConfigError;
    }

    if (print_config) {
        out << serialize_config(cfg);
        return kSuccess;
    }
    return run(cfg, out, err);
}

}  // namespace phasebit::cli
