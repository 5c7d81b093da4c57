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
#include <complex>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "raa/channel_model.hpp"
#include "raa/response_model.hpp"

using namespace raa;

namespace {

constexpr double kPi = std::numbers::pi;

// path-by-path accumulation oracle with its own steering sum
Eigen::VectorXcd accumulate_paths(const RaaGeometry &geometry,
                                  const AntennaPattern &pattern,
                                  const MultipathChannel &channel) {
    Eigen::VectorXcd total = Eigen::VectorXcd::Zero(geometry.ray_count);
    for (const PathComponent &path : channel.paths) {
        for (int port = 0; port < geometry.ray_count; ++port) {
            const double relative = path.angle - geometry.orientations[port];
            std::complex<double> sum = 0.0;
            for (int m = 0; m < geometry.elements_per_ray; ++m)
                sum += std::polar(1.0, kPi * m * std::sin(relative));
            const std::complex<double> reference = std::polar(
                std::sqrt(element_gain(pattern, relative)),
                2.0 * kPi / geometry.wavelength * geometry.offset * std::sin(relative));
            total[port] += path.gain * reference * sum;
        }
    }
    return total;
}

} // namespace

TEST_SUITE("channel_model") {

    TEST_CASE("single-user paths sit on the configured angle ladder") {
        const ScenarioConfig config = ScenarioConfig::single_user_default();
        Rng rng = make_rng(42);
        const MultipathChannel channel = generate_single_user(config, rng);

        REQUIRE(channel.paths.size() == 5);
        CHECK(channel.user == 1);
        for (int path = 1; path <= 5; ++path)
            CHECK(channel.paths[path - 1].angle ==
                  doctest::Approx(-0.5 * kPi + 0.15 * kPi * path).epsilon(1e-15));
        CHECK(channel.paths[0].angle == doctest::Approx(-0.35 * kPi).epsilon(1e-15));

        double power = 0.0;
        for (const PathComponent &path : channel.paths) {
            power += std::norm(path.gain);
            CHECK(std::abs(std::abs(path.gain) - std::sqrt(0.2)) <= 1e-12);
        }
        CHECK(power == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("single-user generation rejects ladders beyond coverage") {
        ScenarioConfig config = ScenarioConfig::single_user_default();
        config.paths_per_user = 7; // seventh rung lands at 0.55 pi
        Rng rng = make_rng(1);
        CHECK_THROWS_AS(generate_single_user(config, rng), std::invalid_argument);

        const ScenarioConfig multi = ScenarioConfig::multi_user_default();
        Rng other = make_rng(1);
        CHECK_THROWS_AS(generate_single_user(multi, other), std::invalid_argument);
    }

    TEST_CASE("multi-user scenario fills the parameter table") {
        const ScenarioConfig config = ScenarioConfig::multi_user_default();
        CHECK(config.mean_angle_base + 3 * config.mean_angle_step ==
              doctest::Approx(-0.05 * kPi).epsilon(1e-15));

        Rng rng = make_rng(99);
        const std::vector<MultipathChannel> channels = generate_multi_user(config, rng);
        REQUIRE(channels.size() == 5);
        for (int user = 0; user < 5; ++user) {
            CHECK(channels[user].user == user + 1);
            REQUIRE(channels[user].paths.size() == 2);
            double power = 0.0;
            for (const PathComponent &path : channels[user].paths) {
                power += std::norm(path.gain);
                CHECK(std::abs(path.angle) <= config.coverage);
            }
            CHECK(power == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("angle draws stay inside coverage even with a wide spread") {
        ScenarioConfig config = ScenarioConfig::multi_user_default();
        config.angle_spread = 0.4 * kPi; // forces frequent resampling
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            Rng rng = trial_rng(5, trial);
            for (const MultipathChannel &channel : generate_multi_user(config, rng))
                for (const PathComponent &path : channel.paths)
                    CHECK(std::abs(path.angle) <= config.coverage);
        }
    }

    TEST_CASE("identical seeds reproduce identical channels") {
        const ScenarioConfig config = ScenarioConfig::multi_user_default();
        Rng first = trial_rng(123, 7);
        Rng second = trial_rng(123, 7);
        const auto lhs = generate_multi_user(config, first);
        const auto rhs = generate_multi_user(config, second);
        REQUIRE(lhs.size() == rhs.size());
        for (std::size_t user = 0; user < lhs.size(); ++user) {
            for (std::size_t path = 0; path < lhs[user].paths.size(); ++path) {
                CHECK(lhs[user].paths[path].gain == rhs[user].paths[path].gain);
                CHECK(lhs[user].paths[path].angle == rhs[user].paths[path].angle);
            }
        }

        Rng third = trial_rng(123, 8); // different trial, different draw
        const auto other = generate_multi_user(config, third);
        CHECK(other[0].paths[0].gain != lhs[0].paths[0].gain);
    }

    TEST_CASE("effective channel concentrates a boresight path on one port") {
        const RaaGeometry geometry = build_raa(16, 0.5 * kPi);
        const AntennaPattern unit = AntennaPattern::isotropic(0.0);
        const int port = 9;

        MultipathChannel channel;
        channel.user = 1;
        channel.paths.push_back({{1.0, 0.0}, geometry.orientations[port]});

        const Eigen::VectorXcd effective = effective_channel(geometry, unit, channel);
        CHECK(std::abs(effective[port]) == doctest::Approx(16.0).epsilon(1e-12));
        CHECK(std::abs(effective[port - 1]) <= 1e-9);
        CHECK(std::abs(effective[port + 1]) <= 1e-9);

        const MultipathChannel empty{1, {}};
        CHECK(effective_channel(geometry, unit, empty).norm() == 0.0);
    }

    TEST_CASE("effective channel matches the path accumulation oracle") {
        const RaaGeometry geometry = build_raa(8, 0.5 * kPi);
        const AntennaPattern pattern = AntennaPattern::directional(5.1335, 0.3 * kPi);
        const ScenarioConfig config = ScenarioConfig::multi_user_default();
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            Rng rng = trial_rng(31, trial);
            for (const MultipathChannel &channel : generate_multi_user(config, rng)) {
                const Eigen::VectorXcd direct = effective_channel(geometry, pattern, channel);
                const Eigen::VectorXcd oracle = accumulate_paths(geometry, pattern, channel);
                CHECK((direct - oracle).norm() <= 1e-9 * std::max(1.0, oracle.norm()));
            }
        }
    }

    TEST_CASE("effective channel is linear in the path gains") {
        const RaaGeometry geometry = build_raa(8, 0.5 * kPi);
        const AntennaPattern unit = AntennaPattern::isotropic(0.0);
        const ScenarioConfig config = ScenarioConfig::single_user_default();
        Rng rng = make_rng(77);
        MultipathChannel channel = generate_single_user(config, rng);

        const std::complex<double> scale{-0.3, 1.7};
        MultipathChannel scaled = channel;
        for (PathComponent &path : scaled.paths)
            path.gain *= scale;

        const Eigen::VectorXcd base = effective_channel(geometry, unit, channel);
        const Eigen::VectorXcd stretched = effective_channel(geometry, unit, scaled);
        CHECK((stretched - scale * base).norm() <= 1e-12 * stretched.norm());
    }

    TEST_CASE("baseline effective channel peaks at codeword-aligned paths") {
        const HbfCodebook codebook = build_hbf_codebook(16);
        const AntennaPattern unit = AntennaPattern::isotropic(0.0);
        MultipathChannel channel;
        channel.user = 1;
        channel.paths.push_back({{1.0, 0.0}, codebook.codeword_angles[11]});
        const Eigen::VectorXcd effective = effective_channel(codebook, unit, channel);
        CHECK(std::abs(effective[11]) == doctest::Approx(16.0).epsilon(1e-12));

        const MultipathChannel empty{1, {}};
        CHECK(effective_channel(codebook, unit, empty).norm() == 0.0);
    }

    TEST_CASE("channel dump uses the documented columns") {
        const ScenarioConfig config = ScenarioConfig::multi_user_default();
        Rng rng = make_rng(3);
        const std::vector<MultipathChannel> channels = generate_multi_user(config, rng);

        std::ostringstream csv;
        const std::string comments[] = {"trial=0"};
        write_csv(csv, channels, comments);
        const std::string text = csv.str();
        CHECK(text.find("# trial=0\n") == 0);
        CHECK(text.find("user,path,re_alpha,im_alpha,theta_rad\n") != std::string::npos);
        CHECK(text.find("\n1,1,") != std::string::npos);
        CHECK(text.find("\n5,2,") != std::string::npos);
    }
}
