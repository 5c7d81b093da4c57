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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raa/antenna_pattern.hpp"
#include "raa/cost_model.hpp"

namespace raa {

enum class ExperimentKind { beam_pattern, single_user, multi_user, cost };

const char *to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string &name);

enum class PatternChoice { isotropic, directional, both };

/// Fully resolved harness settings: geometry, element patterns, scenario,
/// SNR grid, Monte-Carlo controls and output paths. Values come from built-in
/// defaults, then an optional flat key=value config file, then command-line
/// overrides, in that order.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::beam_pattern;

    // geometry
    int elements_per_ray = 16;    // m
    double eta_max = 0.0;         // default pi/2, set in constructor
    std::optional<double> offset; // d [wavelengths]; default = minimum spacing
    double wavelength = 1.0;

    // link + sweep
    int rf_chains = 5;
    PatternChoice pattern = PatternChoice::both;
    std::vector<double> snr_grid_db; // default -10:5:10
    std::optional<int> trials;       // default: 1000 single-user, 500 multi-user
    std::uint64_t seed = 1;
    std::vector<std::string> methods; // default: per-experiment
    std::string out;                  // default "<experiment>.csv"

    // beam-pattern grid
    int theta_grid_points = 2001;
    double theta_min = 0.0; // default -pi/2
    double theta_max = 0.0; // default +pi/2

    long long exhaustive_cap = 1'000'000;

    // scenario (optional keys fall back to per-experiment defaults)
    std::optional<int> users;
    std::optional<int> paths_per_user;
    std::optional<double> gain_magnitude;
    double mean_angle_base = 0.0; // default -0.5 pi
    double mean_angle_step = 0.0; // default 0.15 pi
    double angle_spread = 0.0;    // default 0.1 pi

    // element patterns
    double raa_g0_db = 5.1335;
    double raa_theta3db = 0.0; // default 0.3 pi
    double hbf_g0_db = 0.0;
    double hbf_theta3db = 0.0; // default pi
    double iso_g0_db = -2.816;
    double amax_db = 30.0;

    PriceList prices;

    // optional side dumps (first-trial reproducibility CSVs)
    std::string dump_channels;
    std::string dump_selections;

    ExperimentConfig();
    explicit ExperimentConfig(ExperimentKind kind);

    int resolved_trials() const;
    std::vector<std::string> resolved_methods() const;
    std::string resolved_out() const;

    AntennaPattern raa_element_pattern(bool directional) const;
    AntennaPattern hbf_element_pattern(bool directional) const;

    /// Every resolved key as "key=value", in a fixed order. Embedded in each
    /// output CSV so a file fully records the run that produced it.
    std::vector<std::string> echo() const;
};

/// Applies one "key=value" setting; throws std::invalid_argument on unknown
/// keys or malformed values.
void set_config_value(ExperimentConfig &config, const std::string &key,
                      const std::string &value);

/// Reads a flat key=value file ('#' starts a comment). The file may name the
/// experiment; if it does, it must agree with `kind`.
ExperimentConfig load_config_file(const std::string &path, ExperimentKind kind);

struct ResultRow {
    std::string experiment;
    std::string architecture;
    std::string pattern;
    std::optional<double> transmit_snr_db; // empty for beam-pattern/cost rows
    std::string metric;
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 1;
    std::uint64_t seed = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    const ResultRow *find(const std::string &architecture, const std::string &pattern,
                          std::optional<double> snr_db, const std::string &metric) const;
};

/// Columns: experiment, architecture, pattern, transmit_snr_db, metric, mean,
/// std_error, trials, seed.
void write_csv(std::ostream &out, const ResultTable &table,
               std::span<const std::string> comment_lines = {});

/// Beam patterns over a theta grid for both architectures and the selected
/// element-pattern kinds. Writes one sweep CSV per combination next to the
/// main output (stem + "_<arch>_<pattern>.csv") plus the summary table.
ResultTable run_beam_pattern(const ExperimentConfig &config);

/// Per-trial single-user channels; ratio combining on the best-magnitude
/// ports for both architectures; mean received SNR in dB per grid point.
ResultTable run_single_user(const ExperimentConfig &config);

/// Per-trial multi-user channels; greedy and/or exhaustive port selection
/// with MMSE combining; mean sum rates per grid point.
ResultTable run_multi_user(const ExperimentConfig &config);

/// Hardware cost comparison for the configured geometry and price list.
ResultTable run_cost(const ExperimentConfig &config);

/// Dispatch on config.experiment.
ResultTable run_experiment(const ExperimentConfig &config);

} // namespace raa
