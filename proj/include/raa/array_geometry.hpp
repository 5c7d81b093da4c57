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
#include <optional>
#include <string>

namespace raa {

/// Fan of identical M-element uniform linear arrays ("rays") spread around a
/// common origin. Ray n is tilted by eta_n from the reference direction, all
/// M elements of a ray are hard-wired to one combiner port, and the first
/// element of every ray sits at distance `offset` from the origin. Immutable
/// after construction; safe to share across threads.
struct RaaGeometry {
    int elements_per_ray = 0;    // M
    int ray_count = 0;           // N, always odd
    double eta_max = 0.0;        // coverage half-angle [rad]
    double offset = 0.0;         // D, first-element distance [wavelengths]
    double wavelength = 1.0;
    Eigen::ArrayXd orientations; // eta_n in ascending order, size N

    // Ports are numbered 0..N-1; the boresight ray (eta = 0) is the middle one.
    double orientation(int port) const;
    int center_port() const { return (ray_count - 1) / 2; }
    int ray_index(int port) const { return port - center_port(); }
};

/// DFT codebook of the M-element half-wavelength ULA baseline. Codeword n
/// steers to sin(theta) = 2n/M for n = -M/2 .. M/2-1, so the codebook samples
/// the sine domain uniformly with pitch 2/M.
struct HbfCodebook {
    int elements = 0;               // M
    Eigen::ArrayXd codeword_angles; // theta_n in ascending order, size M

    int codeword_count() const { return static_cast<int>(codeword_angles.size()); }
};

/// Angular pitch between adjacent rays, asin(2/M). Aligns each ray's first
/// pattern null with the peaks of its neighbours.
double ray_angle_step(int elements_per_ray);

struct OrientationDesign {
    int ray_count;                // N = 2*floor(eta_max / asin(2/M)) + 1
    Eigen::ArrayXd orientations;  // n * asin(2/M), ascending
};

/// Number of rays and their orientations needed to cover [-eta_max, eta_max].
/// Requires elements_per_ray >= 2 and 0 < eta_max <= pi.
OrientationDesign design_orientations(int elements_per_ray, double eta_max);

/// Smallest first-element offset that keeps the first elements of adjacent
/// rays at least half a wavelength apart: lambda / (4 sin(asin(2/M)/2)).
double min_ray_spacing(int elements_per_ray, double wavelength = 1.0);

/// Assembles a validated geometry. When `offset` is omitted it defaults to
/// min_ray_spacing; an explicit offset below the minimum is rejected.
RaaGeometry build_raa(int elements_per_ray, double eta_max,
                      std::optional<double> offset = std::nullopt,
                      double wavelength = 1.0);

/// Full DFT codebook for an M-element ULA (M even, one codeword per element).
HbfCodebook build_hbf_codebook(int elements);

/// Key-value text block (M, N, D, eta_max, lambda and the orientation list)
/// used for config echoes and reproducibility logs.
std::string describe(const RaaGeometry &geometry);

} // namespace raa
