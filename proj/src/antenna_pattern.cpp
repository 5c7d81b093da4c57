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

#include "raa/antenna_pattern.hpp"

#include <cmath>
#include <stdexcept>

namespace raa {

AntennaPattern AntennaPattern::isotropic(double peak_gain_db) {
    AntennaPattern pattern;
    pattern.kind = PatternKind::isotropic;
    pattern.peak_gain_db = peak_gain_db;
    return pattern;
}

AntennaPattern AntennaPattern::directional(double peak_gain_db, double beamwidth_3db,
                                           double max_attenuation_db) {
    if (!(beamwidth_3db > 0.0))
        throw std::invalid_argument("AntennaPattern::directional: beamwidth must be positive");
    if (!(max_attenuation_db > 0.0))
        throw std::invalid_argument("AntennaPattern::directional: attenuation floor must be positive");

    AntennaPattern pattern;
    pattern.kind = PatternKind::directional_3gpp;
    pattern.peak_gain_db = peak_gain_db;
    pattern.beamwidth_3db = beamwidth_3db;
    pattern.max_attenuation_db = max_attenuation_db;
    return pattern;
}

double element_gain(const AntennaPattern &pattern, double psi) {
    double gain_db = pattern.peak_gain_db;
    if (pattern.kind == PatternKind::directional_3gpp) {
        const double ratio = psi / pattern.beamwidth_3db;
        gain_db -= std::min(12.0 * ratio * ratio, pattern.max_attenuation_db);
    }
    return std::pow(10.0, gain_db / 10.0);
}

} // namespace raa
