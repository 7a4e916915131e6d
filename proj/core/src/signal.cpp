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

#include "madoa/signal.hpp"

#include "madoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

namespace madoa {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kVisibleSlack = 1e-12;

} // namespace

void validate_sources(const SourceSet &sources)
{
    if (sources.empty())
        throw ConfigError("source set must contain at least one source");
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const auto &s = sources[k];
        if (!(s.power > 0.0) || !std::isfinite(s.power))
            throw ConfigError("source " + std::to_string(k) + ": power must be positive");
        if (!(s.theta_deg > 0.0 && s.theta_deg < 180.0))
            throw ConfigError("source " + std::to_string(k) + ": theta must lie in (0, 180) degrees");
        if (!std::isfinite(s.phi_deg))
            throw ConfigError("source " + std::to_string(k) + ": phi must be finite");
    }
}

DirectionCosines direction_cosines(double theta_deg, double phi_deg, CosineConvention convention)
{
    const double th = theta_deg * kDeg;
    const double ph = phi_deg * kDeg;
    if (convention == CosineConvention::Conventional)
        return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph)};
    return {std::sin(th) * std::cos(ph), std::cos(th)};
}

Angles inverse_direction_cosines(DirectionCosines dc, CosineConvention convention)
{
    if (convention == CosineConvention::Conventional) {
        const double s = std::hypot(dc.theta_cos, dc.phi_cos);
        if (s > 1.0 + kVisibleSlack || s == 0.0)
            throw InvalidDirectionError("direction cosines outside the visible hemisphere");
        return {std::asin(std::min(1.0, s)) / kDeg, std::atan2(dc.phi_cos, dc.theta_cos) / kDeg};
    }

    if (!(std::abs(dc.phi_cos) < 1.0))
        throw InvalidDirectionError("|phi_cos| must be < 1");
    const double theta = std::acos(dc.phi_cos);
    const double sin_theta = std::sin(theta);
    if (std::abs(dc.theta_cos) > sin_theta + kVisibleSlack)
        throw InvalidDirectionError("|theta_cos| exceeds sin(theta): direction is not visible");
    const double ratio = std::clamp(dc.theta_cos / sin_theta, -1.0, 1.0);
    return {theta / kDeg, std::acos(ratio) / kDeg};
}

Eigen::VectorXcd steering_vector(const ArrayLayout &layout, DirectionCosines dc)
{
    const auto n = static_cast<Eigen::Index>(layout.size());
    Eigen::VectorXcd a(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto &p = layout.positions[static_cast<std::size_t>(i)];
        a(i) = std::polar(1.0, 2.0 * std::numbers::pi * (p.x * dc.theta_cos + p.y * dc.phi_cos));
    }
    return a;
}

Eigen::MatrixXcd steering_matrix(const ArrayLayout &layout, const SourceSet &sources, CosineConvention convention)
{
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(layout.size()), static_cast<Eigen::Index>(sources.size()));
    for (std::size_t k = 0; k < sources.size(); ++k)
        a.col(static_cast<Eigen::Index>(k)) = steering_vector(layout, direction_cosines(sources[k], convention));
    return a;
}

SnapshotMatrix synthesize_snapshots(const ArrayLayout &layout, const SourceSet &sources, std::size_t snapshots,
                                    double snr_db, std::uint64_t seed, SnapshotOptions options)
{
    if (snapshots == 0)
        throw ContractError("snapshot count must be >= 1");
    if (layout.positions.empty())
        throw ContractError("layout has no antennas");
    validate_sources(sources);

    const auto n = static_cast<Eigen::Index>(layout.size());
    const auto k = static_cast<Eigen::Index>(sources.size());
    const auto t = static_cast<Eigen::Index>(snapshots);

    double mean_power = 0.0;
    for (const auto &s : sources)
        mean_power += s.power;
    mean_power /= static_cast<double>(sources.size());
    const double noise_var = std::isinf(snr_db) && snr_db > 0.0 ? 0.0 : mean_power / std::pow(10.0, snr_db / 10.0);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    // Signals first, then noise, each column-major, so the draw order is fixed.
    Eigen::MatrixXcd s(k, t);
    for (Eigen::Index col = 0; col < t; ++col) {
        for (Eigen::Index row = 0; row < k; ++row) {
            const double power = sources[static_cast<std::size_t>(row)].power;
            if (options.source_model == SourceModel::ConstantModulus) {
                s(row, col) = std::polar(std::sqrt(power), phase(rng));
            } else {
                const double re = normal(rng);
                const double im = normal(rng);
                s(row, col) = std::sqrt(power / 2.0) * std::complex<double>(re, im);
            }
        }
    }

    SnapshotMatrix out;
    out.noise_variance = noise_var;
    out.data = steering_matrix(layout, sources, options.convention) * s;
    if (noise_var > 0.0) {
        const double scale = std::sqrt(noise_var / 2.0);
        for (Eigen::Index col = 0; col < t; ++col) {
            for (Eigen::Index row = 0; row < n; ++row) {
                const double re = normal(rng);
                const double im = normal(rng);
                out.data(row, col) += scale * std::complex<double>(re, im);
            }
        }
    }
    return out;
}

} // namespace madoa
