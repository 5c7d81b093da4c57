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

#include "raa/response_model.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "raa/csv.hpp"

namespace raa {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this the sine ratio in the kernel is replaced by its limit. The
// operating points u = 0 and u = +-2 must come out exact.
constexpr double kKernelSingularity = 1e-12;

void check_port(int port, int count, const char *where) {
    if (port < 0 || port >= count)
        throw std::out_of_range(std::string(where) + ": port " + std::to_string(port) +
                                " outside [0, " + std::to_string(count) + ")");
}

} // namespace

std::complex<double> dirichlet_kernel(int elements, double u) {
    const double denominator = std::sin(0.5 * kPi * u);
    double ratio;
    if (std::abs(denominator) < kKernelSingularity) {
        // limit of sin(pi M u / 2) / sin(pi u / 2) at the zeros of the denominator
        ratio = elements * std::cos(0.5 * kPi * elements * u) / std::cos(0.5 * kPi * u);
    } else {
        ratio = std::sin(0.5 * kPi * elements * u) / denominator;
    }
    const double phase = 0.5 * kPi * (elements - 1) * u;
    return std::polar(1.0, phase) * ratio;
}

Eigen::VectorXcd sula_response(const RaaGeometry &geometry, int port, double theta) {
    check_port(port, geometry.ray_count, "sula_response");
    const double u = std::sin(theta - geometry.orientations[port]);
    Eigen::VectorXcd response(geometry.elements_per_ray);
    for (int element = 0; element < geometry.elements_per_ray; ++element)
        response[element] = std::polar(1.0, kPi * element * u);
    return response;
}

std::complex<double> ray_reference_gain(const RaaGeometry &geometry,
                                        const AntennaPattern &pattern,
                                        int port, double theta) {
    check_port(port, geometry.ray_count, "ray_reference_gain");
    const double relative = theta - geometry.orientations[port];
    const double phase = 2.0 * kPi / geometry.wavelength * geometry.offset * std::sin(relative);
    return std::polar(std::sqrt(element_gain(pattern, relative)), phase);
}

BeamResponse combined_response(const RaaGeometry &geometry,
                               const AntennaPattern &pattern, double theta) {
    BeamResponse response;
    response.architecture = Architecture::raa;
    response.angle = theta;
    response.values.resize(geometry.ray_count);
    for (int port = 0; port < geometry.ray_count; ++port) {
        const double u = std::sin(theta - geometry.orientations[port]);
        response.values[port] =
            ray_reference_gain(geometry, pattern, port, theta) *
            dirichlet_kernel(geometry.elements_per_ray, u);
    }
    return response;
}

BeamResponse combined_response(const HbfCodebook &codebook,
                               const AntennaPattern &pattern, double theta) {
    BeamResponse response;
    response.architecture = Architecture::hbf;
    response.angle = theta;
    response.values.resize(codebook.codeword_count());
    const double amplitude = std::sqrt(element_gain(pattern, theta));
    const double sin_theta = std::sin(theta);
    for (int port = 0; port < codebook.codeword_count(); ++port) {
        const double u = sin_theta - std::sin(codebook.codeword_angles[port]);
        response.values[port] = amplitude * dirichlet_kernel(codebook.elements, u);
    }
    return response;
}

namespace {

template <typename Arrangement>
BeamPatternTable sweep(const Arrangement &arrangement, const AntennaPattern &pattern,
                       std::span<const double> theta_grid, double coverage) {
    if (theta_grid.empty())
        throw std::invalid_argument("beam_pattern_sweep: empty theta grid");

    BeamPatternTable table;
    table.rows.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        BeamResponse response = combined_response(arrangement, pattern, theta);
        table.architecture = response.architecture;
        BeamPatternRow row;
        row.theta = theta;
        row.port_magnitude = response.values.array().abs();
        row.max_magnitude = row.port_magnitude.maxCoeff();
        if (std::abs(theta) > coverage)
            ++table.out_of_coverage_rows;
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace

BeamPatternTable beam_pattern_sweep(const RaaGeometry &geometry,
                                    const AntennaPattern &pattern,
                                    std::span<const double> theta_grid) {
    return sweep(geometry, pattern, theta_grid, geometry.eta_max);
}

BeamPatternTable beam_pattern_sweep(const HbfCodebook &codebook,
                                    const AntennaPattern &pattern,
                                    std::span<const double> theta_grid) {
    return sweep(codebook, pattern, theta_grid, 0.5 * kPi);
}

void write_csv(std::ostream &out, const BeamPatternTable &table,
               std::span<const std::string> comment_lines) {
    write_comment_header(out, comment_lines);
    if (table.out_of_coverage_rows > 0)
        out << "# out_of_coverage_rows=" << table.out_of_coverage_rows << '\n';

    const Eigen::Index port_count = table.rows.empty() ? 0 : table.rows.front().port_magnitude.size();
    out << "theta_rad";
    for (Eigen::Index port = 0; port < port_count; ++port)
        out << ",port_" << port;
    out << ",max_magnitude_db\n";

    for (const BeamPatternRow &row : table.rows) {
        out << format_number(row.theta);
        for (Eigen::Index port = 0; port < port_count; ++port)
            out << ',' << format_number(row.port_magnitude[port]);
        out << ',' << format_number(20.0 * std::log10(row.max_magnitude)) << '\n';
    }
}

} // namespace raa
