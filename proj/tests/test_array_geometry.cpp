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
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "raa/array_geometry.hpp"

using namespace raa;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("array_geometry") {

    TEST_CASE("orientation design reproduces the reference configurations") {
        const OrientationDesign wide = design_orientations(16, 0.5 * kPi);
        CHECK(wide.ray_count == 25);
        // arcsin(1/8), frozen from an arbitrary-precision evaluation
        CHECK(wide.orientations[13] == doctest::Approx(0.12532783116806540).epsilon(1e-12));

        const OrientationDesign narrow = design_orientations(8, 0.5 * kPi);
        CHECK(narrow.ray_count == 13);

        for (const OrientationDesign &design : {wide, narrow}) {
            const int half = (design.ray_count - 1) / 2;
            const double step = design.orientations[half + 1];
            for (int port = 0; port < design.ray_count; ++port)
                CHECK(std::abs(design.orientations[port] - (port - half) * step) <= 1e-12);
        }
    }

    TEST_CASE("orientations are symmetric with constant spacing") {
        for (int elements : {2, 4, 8, 16, 32}) {
            for (double eta_max : {0.3 * kPi, 0.5 * kPi, 0.8 * kPi, kPi}) {
                const OrientationDesign design = design_orientations(elements, eta_max);
                CHECK(design.ray_count % 2 == 1);
                const double step = std::asin(2.0 / elements);
                for (int port = 1; port < design.ray_count; ++port) {
                    const double spacing =
                        design.orientations[port] - design.orientations[port - 1];
                    CHECK(std::abs(spacing - step) <= 1e-12);
                }
                // reversing and negating the list gives it back
                for (int port = 0; port < design.ray_count; ++port)
                    CHECK(design.orientations[port] ==
                          -design.orientations[design.ray_count - 1 - port]);
                CHECK(design.orientations[(design.ray_count - 1) / 2] == 0.0);
                for (int port = 0; port < design.ray_count; ++port)
                    CHECK(std::abs(design.orientations[port]) <= eta_max + 1e-12);
            }
        }
    }

    TEST_CASE("minimum ray spacing matches the closed form") {
        CHECK(min_ray_spacing(16) == doctest::Approx(3.9921490369466133).epsilon(1e-12));
        CHECK(min_ray_spacing(2) == doctest::Approx(0.35355339059327376).epsilon(1e-12));
        CHECK(min_ray_spacing(8) == doctest::Approx(1.9840593925343335).epsilon(1e-12));
        CHECK(min_ray_spacing(8, 2.0) ==
              doctest::Approx(2.0 * 1.9840593925343335).epsilon(1e-12));
    }

    TEST_CASE("adjacent first elements sit exactly half a wavelength apart") {
        for (int elements : {2, 4, 8, 16, 64}) {
            for (double wavelength : {1.0, 0.01}) {
                const RaaGeometry geometry = build_raa(elements, 0.5 * kPi, std::nullopt,
                                                       wavelength);
                const double step = geometry.orientations[1] - geometry.orientations[0];
                const double chord = 2.0 * geometry.offset * std::sin(0.5 * step);
                CHECK(std::abs(chord - 0.5 * wavelength) <= 1e-12 * wavelength);
            }
        }
    }

    TEST_CASE("build_raa validates the offset") {
        const RaaGeometry by_default = build_raa(16, 0.5 * kPi);
        CHECK(by_default.ray_count == 25);
        CHECK(by_default.offset == doctest::Approx(3.9921490369466133).epsilon(1e-12));

        CHECK_THROWS_AS(build_raa(16, 0.5 * kPi, 1.0), std::invalid_argument);

        const RaaGeometry generous = build_raa(8, 0.5 * kPi, 5.0);
        CHECK(generous.ray_count == 13);
        CHECK(generous.offset == 5.0);
    }

    TEST_CASE("invalid geometry arguments are rejected") {
        CHECK_THROWS_AS(design_orientations(1, 0.5 * kPi), std::invalid_argument);
        CHECK_THROWS_AS(design_orientations(16, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(design_orientations(16, 1.01 * kPi), std::invalid_argument);
        CHECK_THROWS_AS(min_ray_spacing(1), std::invalid_argument);
        CHECK_THROWS_AS(build_raa(16, -0.1), std::invalid_argument);
        const RaaGeometry geometry = build_raa(8, 0.5 * kPi);
        CHECK_THROWS_AS(geometry.orientation(-1), std::out_of_range);
        CHECK_THROWS_AS(geometry.orientation(13), std::out_of_range);
        CHECK(geometry.orientation(6) == 0.0);
        CHECK(geometry.ray_index(6) == 0);
    }

    TEST_CASE("DFT codebook samples the sine domain uniformly") {
        const HbfCodebook codebook = build_hbf_codebook(16);
        CHECK(codebook.codeword_count() == 16);
        CHECK(codebook.codeword_angles[8] == 0.0); // n = 0
        for (int n = -8; n < 8; ++n)
            CHECK(codebook.codeword_angles[n + 8] ==
                  doctest::Approx(std::asin(n / 8.0)).epsilon(1e-15));

        const HbfCodebook small = build_hbf_codebook(8);
        for (int port = 1; port < small.codeword_count(); ++port) {
            const double spacing = std::sin(small.codeword_angles[port]) -
                                   std::sin(small.codeword_angles[port - 1]);
            CHECK(std::abs(spacing - 0.25) <= 1e-12);
        }

        CHECK_THROWS_AS(build_hbf_codebook(15), std::invalid_argument);
        CHECK_THROWS_AS(build_hbf_codebook(0), std::invalid_argument);
    }

    TEST_CASE("describe emits the key-value geometry block") {
        const RaaGeometry geometry = build_raa(16, 0.5 * kPi);
        const std::string text = describe(geometry);
        CHECK(text.find("M=16\n") != std::string::npos);
        CHECK(text.find("N=25\n") != std::string::npos);
        CHECK(text.find("lambda=1\n") != std::string::npos);
        CHECK(text.find("eta=") != std::string::npos);
    }
}
