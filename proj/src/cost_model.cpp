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

#include "raa/cost_model.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "raa/csv.hpp"

namespace raa {

namespace {

void check_prices(const PriceList &prices) {
    if (prices.rf_switch < 0.0 || prices.antenna_element < 0.0 || prices.phase_shifter < 0.0)
        throw std::invalid_argument("PriceList: prices must be >= 0");
}

} // namespace

double cost_raa(int rf_chains, int ray_count, int elements_per_ray,
                const PriceList &prices) {
    if (rf_chains < 1 || ray_count < 1 || elements_per_ray < 1)
        throw std::invalid_argument("cost_raa: counts must be positive");
    check_prices(prices);
    return rf_chains * ray_count * prices.rf_switch +
           static_cast<double>(ray_count) * elements_per_ray * prices.antenna_element;
}

double cost_hbf(int rf_chains, int elements, const PriceList &prices) {
    if (rf_chains < 1 || elements < 1)
        throw std::invalid_argument("cost_hbf: counts must be positive");
    check_prices(prices);
    return rf_chains * elements * prices.phase_shifter + elements * prices.antenna_element;
}

std::vector<CostRow> cost_report(int rf_chains, int ray_count, int elements_per_ray,
                                 const PriceList &prices) {
    const double raa = cost_raa(rf_chains, ray_count, elements_per_ray, prices);
    const double hbf = cost_hbf(rf_chains, elements_per_ray, prices);
    const double ratio = hbf > 0.0 ? raa / hbf : std::numeric_limits<double>::quiet_NaN();

    std::vector<CostRow> rows;
    rows.push_back({"raa", rf_chains, ray_count, elements_per_ray, raa, ratio});
    rows.push_back({"hbf", rf_chains, 0, elements_per_ray, hbf,
                    hbf > 0.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN()});
    return rows;
}

void write_csv(std::ostream &out, std::span<const CostRow> rows,
               std::span<const std::string> comment_lines) {
    write_comment_header(out, comment_lines);
    bool ratio_undefined = false;
    for (const CostRow &row : rows)
        ratio_undefined = ratio_undefined || std::isnan(row.ratio_to_hbf);
    if (ratio_undefined)
        out << "# ratio undefined: baseline cost is zero\n";

    out << "architecture,n_rf,n,m,cost,ratio_to_hbf\n";
    for (const CostRow &row : rows) {
        out << row.architecture << ',' << row.rf_chains << ',' << row.ray_count << ','
            << row.elements << ',' << format_fixed(row.cost, 2) << ','
            << format_fixed(row.ratio_to_hbf, 4) << '\n';
    }
}

} // namespace raa
