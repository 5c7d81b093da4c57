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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "raa/antenna_pattern.hpp"
#include "raa/architecture.hpp"
#include "raa/array_geometry.hpp"

namespace raa {

/// Complex per-port response at one arrival angle: one entry per combiner
/// port (ray array) or per codeword (ULA baseline).
struct BeamResponse {
    Architecture architecture = Architecture::raa;
    double angle = 0.0;
    Eigen::VectorXcd values;
};

/// Closed form of sum_{m=0}^{M-1} e^{j pi m u}. The removable singularity at
/// sin(pi u / 2) = 0 is evaluated through its limit, so u = 0 yields exactly
/// `elements`.
std::complex<double> dirichlet_kernel(int elements, double u);

/// Per-element phase ramp of one ray: entry m is e^{j pi m sin(theta - eta_n)}.
Eigen::VectorXcd sula_response(const RaaGeometry &geometry, int port, double theta);

/// Response of a ray's first element: the offset phase term times the square
/// root of the element gain at the ray-relative angle.
std::complex<double> ray_reference_gain(const RaaGeometry &geometry,
                                        const AntennaPattern &pattern,
                                        int port, double theta);

/// Combined outputs of all rays: entry n is
/// ray_reference_gain(n) * dirichlet_kernel(M, sin(theta - eta_n)).
BeamResponse combined_response(const RaaGeometry &geometry,
                               const AntennaPattern &pattern, double theta);

/// Beam pattern of the DFT-codebook ULA: entry n is
/// sqrt(G(theta)) * dirichlet_kernel(M, sin(theta) - sin(theta_n)).
BeamResponse combined_response(const HbfCodebook &codebook,
                               const AntennaPattern &pattern, double theta);

struct BeamPatternRow {
    double theta = 0.0;
    Eigen::ArrayXd port_magnitude; // |response| per port, linear
    double max_magnitude = 0.0;
};

struct BeamPatternTable {
    Architecture architecture = Architecture::raa;
    std::vector<BeamPatternRow> rows;    // in grid order
    int out_of_coverage_rows = 0;        // grid points beyond the design range
};

BeamPatternTable beam_pattern_sweep(const RaaGeometry &geometry,
                                    const AntennaPattern &pattern,
                                    std::span<const double> theta_grid);
BeamPatternTable beam_pattern_sweep(const HbfCodebook &codebook,
                                    const AntennaPattern &pattern,
                                    std::span<const double> theta_grid);

/// Columns: theta_rad, port_0..port_{N-1} linear magnitudes, max_magnitude_db
/// (20 log10 of the largest port magnitude). Optional leading comment lines
/// are prefixed with '#'.
void write_csv(std::ostream &out, const BeamPatternTable &table,
               std::span<const std::string> comment_lines = {});

} // namespace raa
