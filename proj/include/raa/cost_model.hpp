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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace raa {

/// Component unit prices in arbitrary currency. Defaults are catalogue
/// quotations for a sub-6 GHz 6-bit digital phase shifter and RF switch.
struct PriceList {
    double rf_switch = 0.12;       // p_sw
    double antenna_element = 0.01; // p_ant
    double phase_shifter = 63.44;  // p_ps
};

/// Ray array hardware: rf_chains * ray_count switches plus
/// ray_count * elements_per_ray antenna elements.
double cost_raa(int rf_chains, int ray_count, int elements_per_ray,
                const PriceList &prices);

/// Hybrid beamforming hardware: rf_chains * elements phase shifters plus
/// `elements` antenna elements.
double cost_hbf(int rf_chains, int elements, const PriceList &prices);

struct CostRow {
    std::string architecture;
    int rf_chains = 0;
    int ray_count = 0; // 0 for the ULA baseline
    int elements = 0;  // per ray (raa) or total (hbf)
    double cost = 0.0;
    double ratio_to_hbf = 0.0;
};

/// Side-by-side report for one configuration. The ratio column is NaN when
/// the baseline cost is zero.
std::vector<CostRow> cost_report(int rf_chains, int ray_count, int elements_per_ray,
                                 const PriceList &prices);

/// Columns: architecture, n_rf, n, m, cost, ratio_to_hbf. Costs are printed
/// with two decimals and ratios with four, the report precision.
void write_csv(std::ostream &out, std::span<const CostRow> rows,
               std::span<const std::string> comment_lines = {});

} // namespace raa
