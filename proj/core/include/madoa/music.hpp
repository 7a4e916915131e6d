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
#include "madoa/signal.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace madoa {

/// MUSIC pseudo-spectrum sampled on a uniform (theta_cos, phi_cos) grid covering [-1, 1]^2.
/// values(i, j) belongs to (theta_cos_axis[i], phi_cos_axis[j]).
struct SpectrumGrid {
    std::vector<double> theta_cos_axis;
    std::vector<double> phi_cos_axis;
    Eigen::MatrixXd values;
    double step = 0.0;
};

struct DoaEstimate {
    DirectionCosines cosines;
    Angles angles;
    double peak_value = 0.0;
};

struct PeakSearchResult {
    std::vector<DoaEstimate> peaks;
    /// Fewer than K visible local maxima were found.
    bool under_resolved = false;
};

struct EigenDecomposition {
    Eigen::VectorXd values;  ///< descending
    Eigen::MatrixXcd vectors; ///< column k pairs with values(k)
};

/// Floor applied to the MUSIC denominator before taking the reciprocal.
inline constexpr double kMusicDenominatorFloor = 1e-12;

/// R = Y Y^H / T, symmetrised so R == R^H exactly.
Eigen::MatrixXcd sample_covariance(const SnapshotMatrix &snapshots);

/// Dense Hermitian eigendecomposition. Throws ContractError when R deviates from R^H by
/// more than 1e-9 (relative to max(1, ||R||_F)).
EigenDecomposition hermitian_eig(const Eigen::MatrixXcd &r);

/// Samples of [-1, 1] with the given step; both endpoints included. Throws ContractError
/// unless step is in (0, 0.5] and divides 2 evenly.
std::vector<double> cosine_axis(double step);

/// P(theta_cos, phi_cos) = 1 / max(a^H Un Un^H a, floor) with Un the N-K eigenvectors of
/// the smallest eigenvalues. Requires 1 <= K < N.
SpectrumGrid music_spectrum(const Eigen::MatrixXcd &r, const ArrayLayout &layout, std::size_t num_sources,
                            double grid_step);

/// Picks the K largest strict 8-neighbourhood maxima lying in the visible region and
/// refines each one with a quadratic fit of the MUSIC denominator (1/P) over its 3x3
/// neighbourhood. Ties are broken by lexicographic (theta_cos, phi_cos).
PeakSearchResult find_peaks(const SpectrumGrid &grid, std::size_t num_sources,
                            CosineConvention convention = CosineConvention::Elevation);

/// Area (cosine units squared) of the 4-connected region around the global maximum whose
/// level is within `level_db` of the peak.
double main_lobe_area(const SpectrumGrid &grid, double level_db = -3.0);

/// `theta_cos,phi_cos,power`, row-major over theta_cos, 9 significant digits.
void write_spectrum_csv(std::ostream &out, const SpectrumGrid &grid);

} // namespace madoa
