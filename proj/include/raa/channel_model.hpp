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

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "raa/antenna_pattern.hpp"
#include "raa/array_geometry.hpp"

namespace raa {

struct PathComponent {
    std::complex<double> gain; // alpha
    double angle = 0.0;        // arrival angle [rad]
};

struct MultipathChannel {
    int user = 0; // 1-based user id
    std::vector<PathComponent> paths;
};

enum class ScenarioMode { single_user, multi_user };

/// Monte-Carlo scenario description. Single-user channels place their paths
/// deterministically at mean_angle_base + mean_angle_step * l and randomize
/// only the path phases; multi-user channels draw each path angle from a
/// Gaussian around the per-user mean, resampling draws that land outside the
/// coverage range.
struct ScenarioConfig {
    ScenarioMode mode = ScenarioMode::single_user;
    int user_count = 1;           // K
    int paths_per_user = 5;       // L
    double gain_magnitude = 1.0;  // |alpha|, common to all paths
    double mean_angle_base = 0.0; // [rad]
    double mean_angle_step = 0.0; // [rad]
    double angle_spread = 0.0;    // Gaussian sigma [rad], multi-user only
    double coverage = 0.0;        // admissible |angle| bound [rad]

    static ScenarioConfig single_user_default();
    static ScenarioConfig multi_user_default();
};

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed);

/// Independently seeded stream for one Monte-Carlo trial. Trials drawn this
/// way can run concurrently without sharing generator state.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

MultipathChannel generate_single_user(const ScenarioConfig &config, Rng &rng);
std::vector<MultipathChannel> generate_multi_user(const ScenarioConfig &config, Rng &rng);

/// Effective channel at the combiner ports: the per-ray responses of every
/// path weighted by its complex gain and accumulated.
Eigen::VectorXcd effective_channel(const RaaGeometry &geometry,
                                   const AntennaPattern &pattern,
                                   const MultipathChannel &channel);
Eigen::VectorXcd effective_channel(const HbfCodebook &codebook,
                                   const AntennaPattern &pattern,
                                   const MultipathChannel &channel);

/// Columns: user, path, re_alpha, im_alpha, theta_rad.
void write_csv(std::ostream &out, std::span<const MultipathChannel> channels,
               std::span<const std::string> comment_lines = {});

} // namespace raa
