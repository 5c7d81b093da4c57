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

#include "raa/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "raa/csv.hpp"
#include "raa/response_model.hpp"

namespace raa {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t state) {
    state += 0x9E3779B97F4A7C15ULL;
    state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ULL;
    state = (state ^ (state >> 27)) * 0x94D049BB133111EBULL;
    return state ^ (state >> 31);
}

std::complex<double> random_phase_gain(double magnitude, Rng &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
    return std::polar(magnitude, uniform(rng));
}

void check_scenario(const ScenarioConfig &config) {
    if (config.user_count < 1)
        throw std::invalid_argument("ScenarioConfig: user_count must be >= 1");
    if (config.paths_per_user < 1)
        throw std::invalid_argument("ScenarioConfig: paths_per_user must be >= 1");
    if (config.gain_magnitude < 0.0)
        throw std::invalid_argument("ScenarioConfig: gain_magnitude must be >= 0");
    if (!(config.coverage > 0.0))
        throw std::invalid_argument("ScenarioConfig: coverage must be positive");
}

} // namespace

ScenarioConfig ScenarioConfig::single_user_default() {
    ScenarioConfig config;
    config.mode = ScenarioMode::single_user;
    config.user_count = 1;
    config.paths_per_user = 5;
    config.gain_magnitude = std::sqrt(0.2);
    config.mean_angle_base = -0.5 * kPi;
    config.mean_angle_step = 0.15 * kPi;
    config.angle_spread = 0.0;
    config.coverage = 0.5 * kPi;
    return config;
}

ScenarioConfig ScenarioConfig::multi_user_default() {
    ScenarioConfig config;
    config.mode = ScenarioMode::multi_user;
    config.user_count = 5;
    config.paths_per_user = 2;
    config.gain_magnitude = std::sqrt(0.5);
    config.mean_angle_base = -0.5 * kPi;
    config.mean_angle_step = 0.15 * kPi;
    config.angle_spread = 0.1 * kPi;
    config.coverage = 0.5 * kPi;
    return config;
}

Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) + 0x9E3779B97F4A7C15ULL * (trial + 1)));
}

MultipathChannel generate_single_user(const ScenarioConfig &config, Rng &rng) {
    if (config.mode != ScenarioMode::single_user)
        throw std::invalid_argument("generate_single_user: config mode is not single_user");
    check_scenario(config);

    MultipathChannel channel;
    channel.user = 1;
    channel.paths.reserve(config.paths_per_user);
    for (int path = 1; path <= config.paths_per_user; ++path) {
        const double angle = config.mean_angle_base + config.mean_angle_step * path;
        if (std::abs(angle) > config.coverage)
            throw std::invalid_argument("generate_single_user: path angle " +
                                        std::to_string(angle) + " outside coverage");
        channel.paths.push_back({random_phase_gain(config.gain_magnitude, rng), angle});
    }
    return channel;
}

std::vector<MultipathChannel> generate_multi_user(const ScenarioConfig &config, Rng &rng) {
    if (config.mode != ScenarioMode::multi_user)
        throw std::invalid_argument("generate_multi_user: config mode is not multi_user");
    check_scenario(config);

    std::vector<MultipathChannel> channels;
    channels.reserve(config.user_count);
    for (int user = 1; user <= config.user_count; ++user) {
        const double mean_angle = config.mean_angle_base + config.mean_angle_step * user;
        MultipathChannel channel;
        channel.user = user;
        channel.paths.reserve(config.paths_per_user);
        std::normal_distribution<double> normal(mean_angle, config.angle_spread);
        for (int path = 0; path < config.paths_per_user; ++path) {
            // rejected draws are resampled rather than clamped, which keeps
            // the edge-of-coverage distribution free of atoms
            double angle = normal(rng);
            int attempts = 0;
            while (std::abs(angle) > config.coverage) {
                if (++attempts > 100000)
                    throw std::runtime_error("generate_multi_user: angle resampling did not "
                                             "terminate; spread too wide for coverage");
                angle = normal(rng);
            }
            channel.paths.push_back({random_phase_gain(config.gain_magnitude, rng), angle});
        }
        channels.push_back(std::move(channel));
    }
    return channels;
}

Eigen::VectorXcd effective_channel(const RaaGeometry &geometry,
                                   const AntennaPattern &pattern,
                                   const MultipathChannel &channel) {
    Eigen::VectorXcd effective = Eigen::VectorXcd::Zero(geometry.ray_count);
    for (const PathComponent &path : channel.paths)
        effective += path.gain * combined_response(geometry, pattern, path.angle).values;
    return effective;
}

Eigen::VectorXcd effective_channel(const HbfCodebook &codebook,
                                   const AntennaPattern &pattern,
                                   const MultipathChannel &channel) {
    Eigen::VectorXcd effective = Eigen::VectorXcd::Zero(codebook.codeword_count());
    for (const PathComponent &path : channel.paths)
        effective += path.gain * combined_response(codebook, pattern, path.angle).values;
    return effective;
}

void write_csv(std::ostream &out, std::span<const MultipathChannel> channels,
               std::span<const std::string> comment_lines) {
    write_comment_header(out, comment_lines);
    out << "user,path,re_alpha,im_alpha,theta_rad\n";
    for (const MultipathChannel &channel : channels) {
        int path_index = 1;
        for (const PathComponent &path : channel.paths) {
            out << channel.user << ',' << path_index++ << ','
                << format_number(path.gain.real()) << ','
                << format_number(path.gain.imag()) << ','
                << format_number(path.angle) << '\n';
        }
    }
}

} // namespace raa
