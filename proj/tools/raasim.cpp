// SPDX-License-Identifier: Apache-2.0
//
// raasim: ray antenna array simulation library
// Copyright (C) 2026 The raasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "raa/csv.hpp"
#include "raa/experiment.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::optional<std::int64_t> seed;
    std::optional<int> trials;
    std::string out;
    std::string methods;
    std::string pattern;
};

void add_common_options(CLI::App &sub, CommonOptions &options) {
    sub.add_option("--config", options.config, "flat key=value config file");
    sub.add_option("--seed", options.seed, "random seed (overrides config)");
    sub.add_option("--trials", options.trials, "Monte-Carlo trial count (overrides config)");
    sub.add_option("--out", options.out, "output CSV path (overrides config)");
    sub.add_option("--methods", options.methods,
                   "comma-separated selection methods (greedy,exhaustive,top_magnitude)");
    sub.add_option("--pattern", options.pattern, "element pattern kinds to run")
        ->check(CLI::IsMember({"isotropic", "directional", "both"}));
}

raa::ExperimentConfig build_config(raa::ExperimentKind kind, const CommonOptions &options) {
    raa::ExperimentConfig config =
        options.config.empty() ? raa::ExperimentConfig(kind)
                               : raa::load_config_file(options.config, kind);
    if (options.seed)
        config.seed = static_cast<std::uint64_t>(*options.seed);
    if (options.trials)
        config.trials = *options.trials;
    if (!options.out.empty())
        config.out = options.out;
    if (!options.methods.empty())
        raa::set_config_value(config, "methods", options.methods);
    if (!options.pattern.empty())
        raa::set_config_value(config, "pattern", options.pattern);
    return config;
}

void print_summary(const raa::ResultTable &table, const raa::ExperimentConfig &config) {
    std::cout << "wrote " << config.resolved_out() << " (" << table.rows.size()
              << " result rows)\n";
    // per-row echo is useful up to a screenful; beyond that the CSV is the record
    if (table.rows.size() > 64)
        return;
    for (const raa::ResultRow &row : table.rows) {
        std::cout << "  " << row.architecture;
        if (!row.pattern.empty())
            std::cout << ' ' << row.pattern;
        if (row.transmit_snr_db)
            std::cout << " snr=" << raa::format_number(*row.transmit_snr_db) << "dB";
        std::cout << ' ' << row.metric << '=' << raa::format_number(row.mean);
        if (row.trials > 1)
            std::cout << " (se=" << raa::format_number(row.std_error) << ", trials="
                      << row.trials << ")";
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"ray antenna array vs hybrid beamforming experiment harness"};
    app.require_subcommand(1);

    const std::pair<const char *, raa::ExperimentKind> experiments[] = {
        {"beam-pattern", raa::ExperimentKind::beam_pattern},
        {"single-user", raa::ExperimentKind::single_user},
        {"multi-user", raa::ExperimentKind::multi_user},
        {"cost", raa::ExperimentKind::cost},
    };
    const char *descriptions[] = {
        "sweep beam patterns over a theta grid and emit per-port magnitudes",
        "mean received SNR with best-magnitude port selection, per transmit SNR",
        "mean MMSE sum rate with greedy/exhaustive port selection, per transmit SNR",
        "hardware cost comparison for the configured geometry and price list",
    };

    CommonOptions options[4];
    for (int i = 0; i < 4; ++i) {
        CLI::App *sub = app.add_subcommand(experiments[i].first, descriptions[i]);
        add_common_options(*sub, options[i]);
    }

    CLI11_PARSE(app, argc, argv);

    for (int i = 0; i < 4; ++i) {
        if (!app.get_subcommand(experiments[i].first)->parsed())
            continue;
        try {
            const raa::ExperimentConfig config = build_config(experiments[i].second, options[i]);
            const raa::ResultTable table = raa::run_experiment(config);
            print_summary(table, config);
        } catch (const std::exception &error) {
            std::cerr << "error: " << error.what() << '\n';
            return 1;
        }
    }
    return 0;
}
