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

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "raa/channel_model.hpp"
#include "raa/csv.hpp"
#include "raa/experiment.hpp"
#include "raa/response_model.hpp"
#include "raa/selection_optim.hpp"

namespace raa {

namespace {

struct PatternPair {
    std::string name; // "isotropic" or "directional"
    AntennaPattern raa;
    AntennaPattern hbf;
};

std::vector<PatternPair> pattern_kinds(const ExperimentConfig &config) {
    std::vector<PatternPair> kinds;
    if (config.pattern != PatternChoice::directional)
        kinds.push_back({"isotropic", config.raa_element_pattern(false),
                         config.hbf_element_pattern(false)});
    if (config.pattern != PatternChoice::isotropic)
        kinds.push_back({"directional", config.raa_element_pattern(true),
                         config.hbf_element_pattern(true)});
    return kinds;
}

std::vector<double> linspace(double first, double last, int points) {
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = first;
        return grid;
    }
    const double step = (last - first) / (points - 1);
    for (int i = 0; i < points; ++i)
        grid[i] = first + i * step;
    return grid;
}

struct Summary {
    double mean = 0.0;
    double std_error = 0.0;
};

Summary summarize(std::span<const double> values) {
    Summary summary;
    if (values.empty())
        return summary;
    double total = 0.0;
    for (double value : values)
        total += value;
    summary.mean = total / static_cast<double>(values.size());
    if (values.size() > 1) {
        double squares = 0.0;
        for (double value : values)
            squares += (value - summary.mean) * (value - summary.mean);
        const double variance = squares / static_cast<double>(values.size() - 1);
        summary.std_error = std::sqrt(variance / static_cast<double>(values.size()));
    }
    return summary;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

// "runs/beam.csv" + "raa_isotropic" -> "runs/beam_raa_isotropic.csv"
std::string derived_path(const std::string &out, const std::string &suffix) {
    const auto dot = out.rfind('.');
    const auto slash = out.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + "_" + suffix + ".csv";
    return out.substr(0, dot) + "_" + suffix + out.substr(dot);
}

ScenarioConfig scenario_for(const ExperimentConfig &config) {
    ScenarioConfig scenario = config.experiment == ExperimentKind::multi_user
                                  ? ScenarioConfig::multi_user_default()
                                  : ScenarioConfig::single_user_default();
    if (config.users && config.experiment == ExperimentKind::multi_user)
        scenario.user_count = *config.users;
    if (config.paths_per_user)
        scenario.paths_per_user = *config.paths_per_user;
    if (config.gain_magnitude)
        scenario.gain_magnitude = *config.gain_magnitude;
    scenario.mean_angle_base = config.mean_angle_base;
    scenario.mean_angle_step = config.mean_angle_step;
    scenario.angle_spread = config.angle_spread;
    scenario.coverage = config.eta_max;
    return scenario;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

double from_db(double db) { return std::pow(10.0, db / 10.0); }

void require_kind(const ExperimentConfig &config, ExperimentKind kind) {
    if (config.experiment != kind)
        throw std::invalid_argument(std::string("run_") + to_string(kind) +
                                    ": config is for experiment '" +
                                    to_string(config.experiment) + "'");
}

} // namespace

ResultTable run_beam_pattern(const ExperimentConfig &config) {
    require_kind(config, ExperimentKind::beam_pattern);
    const RaaGeometry geometry = build_raa(config.elements_per_ray, config.eta_max,
                                           config.offset, config.wavelength);
    const HbfCodebook codebook = build_hbf_codebook(config.elements_per_ray);
    const std::vector<double> grid =
        linspace(config.theta_min, config.theta_max, config.theta_grid_points);
    const std::vector<std::string> echo = config.echo();

    // the grid point closest to boresight, for the summary metric
    std::size_t boresight = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::abs(grid[i]) < std::abs(grid[boresight]))
            boresight = i;

    ResultTable table;
    for (const PatternPair &kind : pattern_kinds(config)) {
        for (Architecture arch : {Architecture::raa, Architecture::hbf}) {
            const BeamPatternTable sweep =
                arch == Architecture::raa
                    ? beam_pattern_sweep(geometry, kind.raa, grid)
                    : beam_pattern_sweep(codebook, kind.hbf, grid);

            const std::string suffix = std::string(to_string(arch)) + "_" + kind.name;
            std::ofstream file = open_output(derived_path(config.resolved_out(), suffix));
            write_csv(file, sweep, echo);

            double peak = 0.0;
            for (const BeamPatternRow &row : sweep.rows)
                peak = std::max(peak, row.max_magnitude);

            ResultRow base;
            base.experiment = to_string(config.experiment);
            base.architecture = to_string(arch);
            base.pattern = kind.name;
            base.trials = 1;
            base.seed = config.seed;

            ResultRow boresight_row = base;
            boresight_row.metric = "boresight_gain_db";
            boresight_row.mean = 20.0 * std::log10(sweep.rows[boresight].max_magnitude);
            table.rows.push_back(boresight_row);

            ResultRow peak_row = base;
            peak_row.metric = "peak_gain_db";
            peak_row.mean = 20.0 * std::log10(peak);
            table.rows.push_back(peak_row);
        }
    }

    std::ofstream file = open_output(config.resolved_out());
    write_csv(file, table, echo);
    return table;
}

ResultTable run_single_user(const ExperimentConfig &config) {
    require_kind(config, ExperimentKind::single_user);
    const RaaGeometry geometry = build_raa(config.elements_per_ray, config.eta_max,
                                           config.offset, config.wavelength);
    const HbfCodebook codebook = build_hbf_codebook(config.elements_per_ray);
    const ScenarioConfig scenario = scenario_for(config);
    const int trials = config.resolved_trials();
    const std::vector<PatternPair> kinds = pattern_kinds(config);
    const std::vector<std::string> echo = config.echo();

    if (config.rf_chains > codebook.codeword_count() ||
        config.rf_chains > geometry.ray_count)
        throw std::invalid_argument("run_single-user: n_rf exceeds the port count");
    for (const std::string &method : config.resolved_methods())
        if (method != "top_magnitude")
            throw std::invalid_argument("run_single-user: method '" + method +
                                        "' is not applicable");

    // value streams indexed by (architecture, pattern name, grid point)
    std::map<std::pair<std::string, std::string>, std::vector<std::vector<double>>> snr_db;
    for (const PatternPair &kind : kinds)
        for (const char *arch : {"raa", "hbf"})
            snr_db[{arch, kind.name}].resize(config.snr_grid_db.size());

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
        const MultipathChannel channel = generate_single_user(scenario, rng);

        if (trial == 0 && !config.dump_channels.empty()) {
            std::ofstream dump = open_output(config.dump_channels);
            const MultipathChannel channels[] = {channel};
            write_csv(dump, channels, echo);
        }

        for (const PatternPair &kind : kinds) {
            const Eigen::VectorXcd h_raa = effective_channel(geometry, kind.raa, channel);
            const Eigen::VectorXcd h_hbf = effective_channel(codebook, kind.hbf, channel);
            const SelectionSet sel_raa = select_rays_single_user(h_raa, config.rf_chains);
            const SelectionSet sel_hbf = select_rays_single_user(h_hbf, config.rf_chains);

            for (std::size_t point = 0; point < config.snr_grid_db.size(); ++point) {
                LinkBudget budget{from_db(config.snr_grid_db[point]),
                                  config.elements_per_ray, Architecture::raa};
                snr_db[{"raa", kind.name}][point].push_back(
                    to_db(snr_single_user(h_raa, sel_raa, budget)));
                budget.architecture = Architecture::hbf;
                snr_db[{"hbf", kind.name}][point].push_back(
                    to_db(snr_single_user(h_hbf, sel_hbf, budget)));
            }
        }
    }

    ResultTable table;
    for (const PatternPair &kind : kinds) {
        for (const char *arch : {"raa", "hbf"}) {
            const auto &streams = snr_db[{arch, kind.name}];
            for (std::size_t point = 0; point < config.snr_grid_db.size(); ++point) {
                const Summary summary = summarize(streams[point]);
                ResultRow row;
                row.experiment = to_string(config.experiment);
                row.architecture = arch;
                row.pattern = kind.name;
                row.transmit_snr_db = config.snr_grid_db[point];
                row.metric = "snr_db";
                row.mean = summary.mean;
                row.std_error = summary.std_error;
                row.trials = trials;
                row.seed = config.seed;
                table.rows.push_back(row);
            }
        }
    }

    std::ofstream file = open_output(config.resolved_out());
    write_csv(file, table, echo);
    return table;
}

ResultTable run_multi_user(const ExperimentConfig &config) {
    require_kind(config, ExperimentKind::multi_user);
    const RaaGeometry geometry = build_raa(config.elements_per_ray, config.eta_max,
                                           config.offset, config.wavelength);
    const HbfCodebook codebook = build_hbf_codebook(config.elements_per_ray);
    const ScenarioConfig scenario = scenario_for(config);
    const int trials = config.resolved_trials();
    const std::vector<PatternPair> kinds = pattern_kinds(config);
    const std::vector<std::string> echo = config.echo();

    bool run_greedy = false;
    bool run_exhaustive = false;
    for (const std::string &method : config.resolved_methods()) {
        if (method == "greedy")
            run_greedy = true;
        else if (method == "exhaustive")
            run_exhaustive = true;
        else
            throw std::invalid_argument("run_multi-user: method '" + method +
                                        "' is not applicable");
    }

    if (config.rf_chains > codebook.codeword_count() ||
        config.rf_chains > geometry.ray_count)
        throw std::invalid_argument("run_multi-user: n_rf exceeds the port count");

    using Key = std::pair<std::string, std::string>; // (architecture, pattern)
    std::map<Key, std::vector<std::vector<double>>> greedy_rates;
    std::map<Key, std::vector<std::vector<double>>> exhaustive_rates;
    std::map<Key, std::vector<std::vector<double>>> gaps;
    for (const PatternPair &kind : kinds) {
        for (const char *arch : {"raa", "hbf"}) {
            greedy_rates[{arch, kind.name}].resize(config.snr_grid_db.size());
            exhaustive_rates[{arch, kind.name}].resize(config.snr_grid_db.size());
            gaps[{arch, kind.name}].resize(config.snr_grid_db.size());
        }
    }
    std::vector<SelectionRecord> records;

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
        const std::vector<MultipathChannel> channels = generate_multi_user(scenario, rng);

        if (trial == 0 && !config.dump_channels.empty()) {
            std::ofstream dump = open_output(config.dump_channels);
            write_csv(dump, channels, echo);
        }

        for (const PatternPair &kind : kinds) {
            Eigen::MatrixXcd h_raa(geometry.ray_count, scenario.user_count);
            Eigen::MatrixXcd h_hbf(codebook.codeword_count(), scenario.user_count);
            for (int user = 0; user < scenario.user_count; ++user) {
                h_raa.col(user) = effective_channel(geometry, kind.raa, channels[user]);
                h_hbf.col(user) = effective_channel(codebook, kind.hbf, channels[user]);
            }

            for (std::size_t point = 0; point < config.snr_grid_db.size(); ++point) {
                for (const char *arch : {"raa", "hbf"}) {
                    const Eigen::MatrixXcd &h =
                        std::string_view(arch) == "raa" ? h_raa : h_hbf;
                    const Architecture tag = std::string_view(arch) == "raa"
                                                 ? Architecture::raa
                                                 : Architecture::hbf;
                    const LinkBudget budget{from_db(config.snr_grid_db[point]),
                                            config.elements_per_ray, tag};
                    const Key key{arch, kind.name};
                    const std::string label = std::string(arch) + "_" + kind.name + "_" +
                                              format_number(config.snr_grid_db[point]) + "dB";

                    double greedy_rate = 0.0;
                    if (run_greedy) {
                        const GreedyResult greedy =
                            greedy_selection(h, config.rf_chains, budget);
                        greedy_rate = greedy.step_rates.back();
                        greedy_rates[key][point].push_back(greedy_rate);
                        if (!config.dump_selections.empty())
                            records.push_back({trial, label + "_greedy",
                                               greedy.selection.ports(), greedy_rate,
                                               greedy.evaluations});
                    }
                    if (run_exhaustive) {
                        const ExhaustiveResult exhaustive = exhaustive_selection(
                            h, config.rf_chains, budget, config.exhaustive_cap);
                        exhaustive_rates[key][point].push_back(exhaustive.rate);
                        if (run_greedy)
                            gaps[key][point].push_back(exhaustive.rate - greedy_rate);
                        if (!config.dump_selections.empty())
                            records.push_back({trial, label + "_exhaustive",
                                               exhaustive.selection.ports(),
                                               exhaustive.rate, exhaustive.candidates});
                    }
                }
            }
        }
    }

    ResultTable table;
    auto emit = [&](const std::map<Key, std::vector<std::vector<double>>> &streams,
                    const std::string &metric) {
        for (const PatternPair &kind : kinds) {
            for (const char *arch : {"raa", "hbf"}) {
                const auto &per_point = streams.at({arch, kind.name});
                for (std::size_t point = 0; point < config.snr_grid_db.size(); ++point) {
                    if (per_point[point].empty())
                        continue;
                    const Summary summary = summarize(per_point[point]);
                    ResultRow row;
                    row.experiment = to_string(config.experiment);
                    row.architecture = arch;
                    row.pattern = kind.name;
                    row.transmit_snr_db = config.snr_grid_db[point];
                    row.metric = metric;
                    row.mean = summary.mean;
                    row.std_error = summary.std_error;
                    row.trials = trials;
                    row.seed = config.seed;
                    table.rows.push_back(row);
                }
            }
        }
    };
    emit(greedy_rates, "sum_rate_greedy");
    emit(exhaustive_rates, "sum_rate_exhaustive");
    emit(gaps, "rate_gap_exhaustive_minus_greedy");

    if (!config.dump_selections.empty()) {
        std::ofstream dump = open_output(config.dump_selections);
        write_csv(dump, records, echo);
    }
    std::ofstream file = open_output(config.resolved_out());
    write_csv(file, table, echo);
    return table;
}

ResultTable run_cost(const ExperimentConfig &config) {
    require_kind(config, ExperimentKind::cost);
    const OrientationDesign design =
        design_orientations(config.elements_per_ray, config.eta_max);
    const std::vector<CostRow> report = cost_report(config.rf_chains, design.ray_count,
                                                    config.elements_per_ray, config.prices);
    const std::vector<std::string> echo = config.echo();

    std::ofstream file = open_output(config.resolved_out());
    write_csv(file, report, echo);

    ResultTable table;
    for (const CostRow &cost_row : report) {
        ResultRow row;
        row.experiment = to_string(config.experiment);
        row.architecture = cost_row.architecture;
        row.metric = "cost";
        row.mean = cost_row.cost;
        row.trials = 1;
        row.seed = config.seed;
        table.rows.push_back(row);
    }
    ResultRow ratio;
    ratio.experiment = to_string(config.experiment);
    ratio.architecture = "raa";
    ratio.metric = "cost_ratio_to_hbf";
    ratio.mean = report.front().ratio_to_hbf;
    ratio.trials = 1;
    ratio.seed = config.seed;
    table.rows.push_back(ratio);
    return table;
}

ResultTable run_experiment(const ExperimentConfig &config) {
    switch (config.experiment) {
    case ExperimentKind::beam_pattern:
        return run_beam_pattern(config);
    case ExperimentKind::single_user:
        return run_single_user(config);
    case ExperimentKind::multi_user:
        return run_multi_user(config);
    case ExperimentKind::cost:
        return run_cost(config);
    }
    throw std::logic_error("run_experiment: unknown experiment kind");
}

} // namespace raa
