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

namespace raa {

enum class PatternKind { isotropic, directional_3gpp };

/// Element radiation pattern. The directional kind is the parabolic-in-dB
/// model with a front-to-back attenuation floor; angles are measured from
/// the element boresight.
struct AntennaPattern {
    PatternKind kind = PatternKind::isotropic;
    double peak_gain_db = 0.0;        // G0 [dB]
    double beamwidth_3db = 0.0;       // theta_3dB [rad], directional only
    double max_attenuation_db = 30.0; // A_max [dB], directional only

    static AntennaPattern isotropic(double peak_gain_db);
    static AntennaPattern directional(double peak_gain_db, double beamwidth_3db,
                                      double max_attenuation_db = 30.0);
};

/// Linear power gain at angle psi off boresight. Directional patterns follow
/// 10^((G0 - min(12 (psi/theta_3dB)^2, A_max)) / 10); isotropic patterns
/// return 10^(G0/10) regardless of psi.
double element_gain(const AntennaPattern &pattern, double psi);

} // namespace raa
