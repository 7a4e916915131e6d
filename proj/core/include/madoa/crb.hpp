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

#pragma once

#include "madoa/geometry.hpp"

#include <cstddef>

namespace madoa {

/// Closed-form CRBs in the direction-cosine domain, lengths in wavelengths.
struct CrbResult {
    double crb_theta_cos = 0.0;
    double crb_phi_cos = 0.0;
    double q_factor = 0.0;

    [[nodiscard]] double total() const { return crb_theta_cos + crb_phi_cos; }
};

/// Q = noise_var / (8 pi^2 T source_power N), with the wavelength normalised to 1.
double q_factor(double noise_var, std::size_t snapshots, double source_power, std::size_t n_antennas);

/// CRB(theta_cos) = Q / (var_x - cov^2/var_y), CRB(phi_cos) = Q / (var_y - cov^2/var_x).
/// Throws SingularGeometryError when either denominator vanishes (collinear arrays).
CrbResult crb(const MomentStats &stats, double q);

/// var_x + var_y - cov^2/var_x - cov^2/var_y. Equals mean_rho2 once the layout has zero
/// mean and zero cross moment. Throws SingularGeometryError on zero variance.
double shape_position_objective(const MomentStats &stats);

} // namespace madoa
