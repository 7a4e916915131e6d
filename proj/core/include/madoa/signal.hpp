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

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace madoa {

/// Direction-cosine pair (theta_cos, phi_cos). The phase of an antenna at (x, y)
/// wavelengths is 2*pi*(x*theta_cos + y*phi_cos).
struct DirectionCosines {
    double theta_cos = 0.0;
    double phi_cos = 0.0;
};

/// Elevation theta and azimuth phi, degrees.
struct Angles {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

/// How the second direction cosine is formed from (theta, phi).
///   Elevation:    phi_cos = cos(theta)             (default)
///   Conventional: phi_cos = sin(theta) * sin(phi)
/// theta_cos = sin(theta) * cos(phi) in both.
enum class CosineConvention { Elevation, Conventional };

struct Source {
    double theta_deg = 90.0;
    double phi_deg = 90.0;
    double power = 1.0;
};

using SourceSet = std::vector<Source>;

/// Throws ConfigError if the set is empty, a power is not positive or theta is outside (0, 180).
void validate_sources(const SourceSet &sources);

enum class SourceModel {
    Gaussian,        ///< i.i.d. circular complex Gaussian with variance = power
    ConstantModulus, ///< sqrt(power) * exp(j*u), u uniform on [0, 2*pi)
};

struct SnapshotMatrix {
    Eigen::MatrixXcd data; ///< N antennas x T snapshots
    double noise_variance = 0.0;
};

DirectionCosines direction_cosines(double theta_deg, double phi_deg,
                                   CosineConvention convention = CosineConvention::Elevation);
inline DirectionCosines direction_cosines(const Source &s,
                                          CosineConvention convention = CosineConvention::Elevation)
{
    return direction_cosines(s.theta_deg, s.phi_deg, convention);
}

/// Inverse of direction_cosines with phi restricted to [0, 180] degrees (Elevation) or
/// theta to (0, 90] degrees (Conventional). Throws InvalidDirectionError outside the
/// visible region (1e-12 slack).
Angles inverse_direction_cosines(DirectionCosines dc,
                                 CosineConvention convention = CosineConvention::Elevation);

Eigen::VectorXcd steering_vector(const ArrayLayout &layout, DirectionCosines dc);

/// N x K steering matrix, one column per source.
Eigen::MatrixXcd steering_matrix(const ArrayLayout &layout, const SourceSet &sources,
                                 CosineConvention convention = CosineConvention::Elevation);

/// Pass as snr_db for noise-free snapshots.
inline constexpr double kNoiseless = std::numeric_limits<double>::infinity();

struct SnapshotOptions {
    SourceModel source_model = SourceModel::Gaussian;
    CosineConvention convention = CosineConvention::Elevation;
};

/// Y = A S + N. Noise variance is the mean source power divided by 10^(snr_db/10).
/// Deterministic for a fixed seed.
SnapshotMatrix synthesize_snapshots(const ArrayLayout &layout, const SourceSet &sources, std::size_t snapshots,
                                    double snr_db, std::uint64_t seed, SnapshotOptions options = {});

} // namespace madoa
