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

#include "raa/array_geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "raa/csv.hpp"

namespace raa {

double RaaGeometry::orientation(int port) const {
    if (port < 0 || port >= ray_count)
        throw std::out_of_range("RaaGeometry::orientation: port " + std::to_string(port) +
                                " outside [0, " + std::to_string(ray_count) + ")");
    return orientations[port];
}

double ray_angle_step(int elements_per_ray) {
    if (elements_per_ray < 2)
        throw std::invalid_argument("ray_angle_step: need at least 2 elements per ray");
    return std::asin(2.0 / elements_per_ray);
}

OrientationDesign design_orientations(int elements_per_ray, double eta_max) {
    if (elements_per_ray < 2)
        throw std::invalid_argument("design_orientations: need at least 2 elements per ray");
    if (!(eta_max > 0.0) || eta_max > std::numbers::pi)
        throw std::invalid_argument("design_orientations: eta_max must lie in (0, pi]");

    const double step = ray_angle_step(elements_per_ray);
    const int half = static_cast<int>(std::floor(eta_max / step));
    const int ray_count = 2 * half + 1;

    Eigen::ArrayXd orientations(ray_count);
    for (int port = 0; port < ray_count; ++port)
        orientations[port] = (port - half) * step;

    return {ray_count, std::move(orientations)};
}

double min_ray_spacing(int elements_per_ray, double wavelength) {
    if (elements_per_ray < 2)
        throw std::invalid_argument("min_ray_spacing: need at least 2 elements per ray");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("min_ray_spacing: wavelength must be positive");
    return wavelength / (4.0 * std::sin(0.5 * ray_angle_step(elements_per_ray)));
}

RaaGeometry build_raa(int elements_per_ray, double eta_max,
                      std::optional<double> offset, double wavelength) {
    OrientationDesign design = design_orientations(elements_per_ray, eta_max);
    const double minimum = min_ray_spacing(elements_per_ray, wavelength);
    if (offset && *offset < minimum)
        throw std::invalid_argument("build_raa: offset " + std::to_string(*offset) +
                                    " is below the minimum ray spacing " +
                                    std::to_string(minimum));

    RaaGeometry geometry;
    geometry.elements_per_ray = elements_per_ray;
    geometry.ray_count = design.ray_count;
    geometry.eta_max = eta_max;
    geometry.offset = offset.value_or(minimum);
    geometry.wavelength = wavelength;
    geometry.orientations = std::move(design.orientations);
    return geometry;
}

HbfCodebook build_hbf_codebook(int elements) {
    if (elements < 2 || elements % 2 != 0)
        throw std::invalid_argument("build_hbf_codebook: element count must be even and >= 2");

    HbfCodebook codebook;
    codebook.elements = elements;
    codebook.codeword_angles.resize(elements);
    const int half = elements / 2;
    for (int n = -half; n < half; ++n)
        codebook.codeword_angles[n + half] = std::asin(static_cast<double>(n) / half);
    return codebook;
}

std::string describe(const RaaGeometry &geometry) {
    std::ostringstream out;
    out << "M=" << geometry.elements_per_ray << '\n'
        << "N=" << geometry.ray_count << '\n'
        << "D=" << format_number(geometry.offset) << '\n'
        << "eta_max=" << format_number(geometry.eta_max) << '\n'
        << "lambda=" << format_number(geometry.wavelength) << '\n';
    out << "eta=";
    for (int port = 0; port < geometry.ray_count; ++port) {
        if (port > 0)
            out << ' ';
        out << format_number(geometry.orientations[port]);
    }
    out << '\n';
    return out.str();
}

} // namespace raa
