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
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "raa/array_geometry.hpp"
#include "raa/channel_model.hpp"
#include "raa/csv.hpp"
#include "raa/experiment.hpp"

namespace raa {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string &text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string &text, char separator) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, separator))
        parts.push_back(trim(part));
    return parts;
}

double parse_double(const std::string &key, const std::string &value) {
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size() || !std::isfinite(parsed))
            throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception &) {
        throw std::invalid_argument("config: key '" + key + "' expects a finite number, got '" +
                                    value + "'");
    }
}

long long parse_integer(const std::string &key, const std::string &value) {
    try {
        std::size_t consumed = 0;
        const long long parsed = std::stoll(value, &consumed);
        if (consumed != value.size())
            throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception &) {
        throw std::invalid_argument("config: key '" + key + "' expects an integer, got '" +
                                    value + "'");
    }
}

int parse_int(const std::string &key, const std::string &value) {
    const long long parsed = parse_integer(key, value);
    if (parsed < std::numeric_limits<int>::min() || parsed > std::numeric_limits<int>::max())
        throw std::invalid_argument("config: key '" + key + "' value " + value +
                                    " is out of range");
    return static_cast<int>(parsed);
}

// "start:step:stop" (inclusive) or a comma-separated list; must be ascending
std::vector<double> parse_snr_grid(const std::string &value) {
    std::vector<double> grid;
    if (value.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(value, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("config: snr_db range needs start:step:stop");
        const double start = parse_double("snr_db", parts[0]);
        const double step = parse_double("snr_db", parts[1]);
        const double stop = parse_double("snr_db", parts[2]);
        if (!(step > 0.0) || stop < start)
            throw std::invalid_argument("config: snr_db range needs step > 0 and stop >= start");
        const int points = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (int i = 0; i < points; ++i)
            grid.push_back(start + i * step);
    } else {
        for (const std::string &part : split(value, ','))
            grid.push_back(parse_double("snr_db", part));
    }
    if (grid.empty())
        throw std::invalid_argument("config: snr_db grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("config: snr_db grid must be strictly ascending");
    return grid;
}

PatternChoice parse_pattern(const std::string &value) {
    if (value == "isotropic")
        return PatternChoice::isotropic;
    if (value == "directional")
        return PatternChoice::directional;
    if (value == "both")
        return PatternChoice::both;
    throw std::invalid_argument("config: pattern must be isotropic, directional or both, got '" +
                                value + "'");
}

std::vector<std::string> parse_methods(const std::string &value) {
    const std::vector<std::string> methods = split(value, ',');
    for (const std::string &method : methods)
        if (method != "greedy" && method != "exhaustive" && method != "top_magnitude")
            throw std::invalid_argument("config: unknown method '" + method + "'");
    if (methods.empty())
        throw std::invalid_argument("config: methods list is empty");
    return methods;
}

std::string join(std::span<const std::string> parts, char separator) {
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            joined += separator;
        joined += parts[i];
    }
    return joined;
}

std::string join_numbers(std::span<const double> values, char separator) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            joined += separator;
        joined += format_number(values[i]);
    }
    return joined;
}

} // namespace

const char *to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::beam_pattern:
        return "beam-pattern";
    case ExperimentKind::single_user:
        return "single-user";
    case ExperimentKind::multi_user:
        return "multi-user";
    case ExperimentKind::cost:
        return "cost";
    }
    return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string &name) {
    if (name == "beam-pattern" || name == "beam_pattern")
        return ExperimentKind::beam_pattern;
    if (name == "single-user" || name == "single_user")
        return ExperimentKind::single_user;
    if (name == "multi-user" || name == "multi_user")
        return ExperimentKind::multi_user;
    if (name == "cost")
        return ExperimentKind::cost;
    throw std::invalid_argument("config: unknown experiment '" + name + "'");
}

ExperimentConfig::ExperimentConfig() : ExperimentConfig(ExperimentKind::beam_pattern) {}

ExperimentConfig::ExperimentConfig(ExperimentKind kind) : experiment(kind) {
    eta_max = 0.5 * kPi;
    snr_grid_db = {-10.0, -5.0, 0.0, 5.0, 10.0};
    theta_min = -0.5 * kPi;
    theta_max = 0.5 * kPi;
    mean_angle_base = -0.5 * kPi;
    mean_angle_step = 0.15 * kPi;
    angle_spread = 0.1 * kPi;
    raa_theta3db = 0.3 * kPi;
    hbf_theta3db = kPi;
}

int ExperimentConfig::resolved_trials() const {
    if (trials) {
        if (*trials < 1)
            throw std::invalid_argument("config: trials must be >= 1");
        return *trials;
    }
    switch (experiment) {
    case ExperimentKind::single_user:
        return 1000;
    case ExperimentKind::multi_user:
        return 500;
    default:
        return 1;
    }
}

std::vector<std::string> ExperimentConfig::resolved_methods() const {
    if (!methods.empty())
        return methods;
    switch (experiment) {
    case ExperimentKind::single_user:
        return {"top_magnitude"};
    case ExperimentKind::multi_user:
        return {"greedy", "exhaustive"};
    default:
        return {};
    }
}

std::string ExperimentConfig::resolved_out() const {
    return out.empty() ? std::string(to_string(experiment)) + ".csv" : out;
}

AntennaPattern ExperimentConfig::raa_element_pattern(bool directional) const {
    return directional ? AntennaPattern::directional(raa_g0_db, raa_theta3db, amax_db)
                       : AntennaPattern::isotropic(iso_g0_db);
}

AntennaPattern ExperimentConfig::hbf_element_pattern(bool directional) const {
    return directional ? AntennaPattern::directional(hbf_g0_db, hbf_theta3db, amax_db)
                       : AntennaPattern::isotropic(iso_g0_db);
}

std::vector<std::string> ExperimentConfig::echo() const {
    const bool multi = experiment == ExperimentKind::multi_user;
    const int resolved_users = multi ? users.value_or(5) : 1;
    const int resolved_paths = paths_per_user.value_or(multi ? 2 : 5);
    const double resolved_gain = gain_magnitude.value_or(std::sqrt(multi ? 0.5 : 0.2));
    const double resolved_offset =
        offset ? *offset : min_ray_spacing(elements_per_ray, wavelength);

    std::vector<std::string> lines;
    lines.push_back(std::string("experiment=") + to_string(experiment));
    lines.push_back("m=" + std::to_string(elements_per_ray));
    lines.push_back("eta_max=" + format_number(eta_max));
    lines.push_back("d=" + format_number(resolved_offset));
    lines.push_back("lambda=" + format_number(wavelength));
    lines.push_back("n_rf=" + std::to_string(rf_chains));
    lines.push_back(std::string("pattern=") +
                    (pattern == PatternChoice::isotropic     ? "isotropic"
                     : pattern == PatternChoice::directional ? "directional"
                                                             : "both"));
    lines.push_back("snr_db=" + join_numbers(snr_grid_db, ','));
    lines.push_back("trials=" + std::to_string(resolved_trials()));
    lines.push_back("seed=" + std::to_string(seed));
    const std::vector<std::string> method_list = resolved_methods();
    lines.push_back("methods=" + join(method_list, ','));
    lines.push_back("out=" + resolved_out());
    lines.push_back("theta_grid_points=" + std::to_string(theta_grid_points));
    lines.push_back("theta_min=" + format_number(theta_min));
    lines.push_back("theta_max=" + format_number(theta_max));
    lines.push_back("exhaustive_cap=" + std::to_string(exhaustive_cap));
    lines.push_back("users=" + std::to_string(resolved_users));
    lines.push_back("paths_per_user=" + std::to_string(resolved_paths));
    lines.push_back("gain_magnitude=" + format_number(resolved_gain));
    lines.push_back("mean_angle_base=" + format_number(mean_angle_base));
    lines.push_back("mean_angle_step=" + format_number(mean_angle_step));
    lines.push_back("angle_spread=" + format_number(angle_spread));
    lines.push_back("raa_g0_db=" + format_number(raa_g0_db));
    lines.push_back("raa_theta3db=" + format_number(raa_theta3db));
    lines.push_back("hbf_g0_db=" + format_number(hbf_g0_db));
    lines.push_back("hbf_theta3db=" + format_number(hbf_theta3db));
    lines.push_back("iso_g0_db=" + format_number(iso_g0_db));
    lines.push_back("amax_db=" + format_number(amax_db));
    lines.push_back("p_sw=" + format_number(prices.rf_switch));
    lines.push_back("p_ant=" + format_number(prices.antenna_element));
    lines.push_back("p_ps=" + format_number(prices.phase_shifter));
    lines.push_back("dump_channels=" + dump_channels);
    lines.push_back("dump_selections=" + dump_selections);
    return lines;
}

void set_config_value(ExperimentConfig &config, const std::string &key,
                      const std::string &value) {
    if (key == "experiment") {
        if (experiment_kind_from_string(value) != config.experiment)
            throw std::invalid_argument("config: file experiment '" + value +
                                        "' does not match the requested experiment '" +
                                        to_string(config.experiment) + "'");
    } else if (key == "m") {
        config.elements_per_ray = parse_int(key, value);
    } else if (key == "eta_max") {
        config.eta_max = parse_double(key, value);
    } else if (key == "d") {
        if (value == "auto")
            config.offset.reset();
        else
            config.offset = parse_double(key, value);
    } else if (key == "lambda") {
        config.wavelength = parse_double(key, value);
    } else if (key == "n_rf") {
        config.rf_chains = parse_int(key, value);
    } else if (key == "pattern") {
        config.pattern = parse_pattern(value);
    } else if (key == "snr_db") {
        config.snr_grid_db = parse_snr_grid(value);
    } else if (key == "trials") {
        config.trials = parse_int(key, value);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "methods") {
        config.methods = parse_methods(value);
    } else if (key == "out") {
        config.out = value;
    } else if (key == "theta_grid_points") {
        config.theta_grid_points = parse_int(key, value);
        if (config.theta_grid_points < 1)
            throw std::invalid_argument("config: theta_grid_points must be >= 1");
    } else if (key == "theta_min") {
        config.theta_min = parse_double(key, value);
    } else if (key == "theta_max") {
        config.theta_max = parse_double(key, value);
    } else if (key == "exhaustive_cap") {
        config.exhaustive_cap = parse_integer(key, value);
    } else if (key == "users") {
        config.users = parse_int(key, value);
    } else if (key == "paths_per_user") {
        config.paths_per_user = parse_int(key, value);
    } else if (key == "gain_magnitude") {
        config.gain_magnitude = parse_double(key, value);
    } else if (key == "mean_angle_base") {
        config.mean_angle_base = parse_double(key, value);
    } else if (key == "mean_angle_step") {
        config.mean_angle_step = parse_double(key, value);
    } else if (key == "angle_spread") {
        config.angle_spread = parse_double(key, value);
    } else if (key == "raa_g0_db") {
        config.raa_g0_db = parse_double(key, value);
    } else if (key == "raa_theta3db") {
        config.raa_theta3db = parse_double(key, value);
    } else if (key == "hbf_g0_db") {
        config.hbf_g0_db = parse_double(key, value);
    } else if (key == "hbf_theta3db") {
        config.hbf_theta3db = parse_double(key, value);
    } else if (key == "iso_g0_db") {
        config.iso_g0_db = parse_double(key, value);
    } else if (key == "amax_db") {
        config.amax_db = parse_double(key, value);
    } else if (key == "p_sw") {
        config.prices.rf_switch = parse_double(key, value);
    } else if (key == "p_ant") {
        config.prices.antenna_element = parse_double(key, value);
    } else if (key == "p_ps") {
        config.prices.phase_shifter = parse_double(key, value);
    } else if (key == "dump_channels") {
        config.dump_channels = value;
    } else if (key == "dump_selections") {
        config.dump_selections = value;
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::string &path, ExperimentKind kind) {
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("config: cannot open '" + path + "'");

    ExperimentConfig config(kind);
    std::string line;
    int line_number = 0;
    while (std::getline(file, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos)
            line.erase(comment);
        line = trim(line);
        if (line.empty())
            continue;
        const auto equals = line.find('=');
        if (equals == std::string::npos)
            throw std::invalid_argument("config: " + path + ":" + std::to_string(line_number) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, equals));
        const std::string value = trim(line.substr(equals + 1));
        set_config_value(config, key, value);
    }
    return config;
}

const ResultRow *ResultTable::find(const std::string &architecture,
                                   const std::string &pattern,
                                   std::optional<double> snr_db,
                                   const std::string &metric) const {
    for (const ResultRow &row : rows) {
        if (row.architecture != architecture || row.pattern != pattern ||
            row.metric != metric)
            continue;
        if (snr_db.has_value() != row.transmit_snr_db.has_value())
            continue;
        if (snr_db && std::abs(*snr_db - *row.transmit_snr_db) > 1e-12)
            continue;
        return &row;
    }
    return nullptr;
}

void write_csv(std::ostream &out, const ResultTable &table,
               std::span<const std::string> comment_lines) {
    write_comment_header(out, comment_lines);
    out << "experiment,architecture,pattern,transmit_snr_db,metric,mean,std_error,trials,seed\n";
    for (const ResultRow &row : table.rows) {
        out << row.experiment << ',' << row.architecture << ',' << row.pattern << ',';
        if (row.transmit_snr_db)
            out << format_number(*row.transmit_snr_db);
        out << ',' << row.metric << ',' << format_number(row.mean) << ','
            << format_number(row.std_error) << ',' << row.trials << ',' << row.seed << '\n';
    }
}

} // namespace raa
