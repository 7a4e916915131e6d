// SPDX-License-Identifier: Apache-2.0
//
// madoa: movable-antenna array design and 2D DOA estimation
// Copyright (C) 2026 The madoa authors
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

#include "madoa/crb.hpp"

#include "madoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace madoa {

namespace {

// Relative floor below which a variance or Schur complement is treated as zero.
constexpr double kSingularRel = 1e-12;

void require_spread(const MomentStats &s)
{
    const double scale = std::max({s.mean_x2, s.mean_y2, 1e-300});
    if (!(s.var_x > kSingularRel * scale))
        throw SingularGeometryError("singular geometry: var(x) is zero, CRB(theta_cos) denominator vanishes");
    if (!(s.var_y > kSingularRel * scale))
        throw SingularGeometryError("singular geometry: var(y) is zero, CRB(phi_cos) denominator vanishes");
}

} // namespace

double q_factor(double noise_var, std::size_t snapshots, double source_power, std::size_t n_antennas)
{
    if (!(noise_var > 0.0) || snapshots == 0 || !(source_power > 0.0) || n_antennas == 0)
        throw ContractError("q_factor inputs must all be positive");
    return noise_var /
           (8.0 * std::numbers::pi * std::numbers::pi * static_cast<double>(snapshots) * source_power *
            static_cast<double>(n_antennas));
}

CrbResult crb(const MomentStats &stats, double q)
{
    require_spread(stats);
    const double cov2 = stats.cov_xy * stats.cov_xy;
    const double det = stats.var_x * stats.var_y - cov2;
    if (!(det > kSingularRel * stats.var_x * stats.var_y))
        throw SingularGeometryError(
            "singular geometry: var(x)*var(y) = cov(x,y)^2 (collinear array), both CRB denominators vanish");

    CrbResult r;
    r.q_factor = q;
    r.crb_theta_cos = q / (stats.var_x - cov2 / stats.var_y);
    r.crb_phi_cos = q / (stats.var_y - cov2 / stats.var_x);
    return r;
}

double shape_position_objective(const MomentStats &stats)
{
    require_spread(stats);
    const double cov2 = stats.cov_xy * stats.cov_xy;
    return stats.var_x + stats.var_y - cov2 / stats.var_x - cov2 / stats.var_y;
}

} // namespace madoa
