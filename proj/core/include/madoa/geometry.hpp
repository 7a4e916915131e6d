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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace madoa {

/// Tolerance for every geometric comparison, in wavelengths.
inline constexpr double kGeometryEps = 1e-9;

/// Planar antenna coordinate, in wavelengths.
struct Position2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position2D &, const Position2D &) = default;
};

enum class LayoutFamily { PMA, SMA, UCA, URA, Custom };

std::string_view to_string(LayoutFamily family);

/// Parses "pma", "sma", "uca", "ura" or "custom" (case-insensitive). Throws ConfigError.
LayoutFamily parse_layout_family(std::string_view text);

/// Movable region. `size` is the side length for triangles and squares and the
/// radius for circles. The centroid is always the origin.
struct RegionSpec {
    enum class Shape { EquilateralTriangle, Square, Circle, None };

    Shape shape = Shape::None;
    double size = 0.0;

    static RegionSpec triangle(double side);
    static RegionSpec square(double side);
    static RegionSpec circle(double radius);
    static RegionSpec none() { return {}; }

    [[nodiscard]] double area() const;

    /// Point-in-region test with kGeometryEps slack. A region of shape None contains everything.
    /// The triangle has a vertex on the +y axis and a horizontal base.
    [[nodiscard]] bool contains(Position2D p) const;
};

struct ArrayLayout {
    std::vector<Position2D> positions;
    LayoutFamily family = LayoutFamily::Custom;
    RegionSpec region;
    double d_min = 0.0;

    [[nodiscard]] std::size_t size() const { return positions.size(); }
};

/// Sample moments of the antenna coordinates (divisor N).
struct MomentStats {
    double mean_x = 0.0;
    double mean_y = 0.0;
    double mean_x2 = 0.0;
    double mean_y2 = 0.0;
    double mean_xy = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    double cov_xy = 0.0;
    double mean_rho2 = 0.0;
};

/// Triangular candidate lattice with m = side/d_min rows holding 1, 2, ..., m points
/// (m(m+1)/2 in total), row pitch d_min*sqrt(3)/2 and in-row pitch d_min, recentred on
/// the origin. Throws ConfigError unless side/d_min is a positive integer within 1e-9.
std::vector<Position2D> build_triangular_lattice(double side, double d_min);

/// Square lattice with pitch d_min and floor(side/d_min)+1 nodes per side, centred on the origin.
std::vector<Position2D> build_square_lattice(double side, double d_min);

/// Picks the `n` candidates farthest from the candidate centroid.
///
/// Ordering is total and deterministic: distance descending, then polar angle reduced
/// modulo 2*pi/symmetry_order ascending, then polar angle ascending, then radius ascending.
/// Reducing the angle keeps each rotation orbit of a symmetric lattice contiguous, so a
/// selection of whole orbits is returned whenever n is a multiple of the orbit size.
/// Distances and angles are compared after quantisation to kGeometryEps.
///
/// The returned layout has family Custom, region None and d_min equal to the minimum
/// pairwise distance of the selection (0 for a single point). Throws InfeasibleError
/// when n exceeds the candidate count.
ArrayLayout select_farthest_from_centroid(std::span<const Position2D> candidates, std::size_t n,
                                          int symmetry_order = 3);

/// Proposed layout: triangular lattice on an equilateral region followed by farthest selection.
ArrayLayout build_pma_layout(double side, double d_min, std::size_t n);

/// Square-region baseline built the same way on a square lattice (4-fold tie-break).
ArrayLayout build_sma_layout(double side, double d_min, std::size_t n);

/// n points equally spaced on a circle, first at angle 0.
ArrayLayout build_uca_layout(double radius, std::size_t n);

/// rows x cols grid with the given pitch, centred on the origin, row-major from the
/// bottom-left corner.
ArrayLayout build_ura_layout(std::size_t rows, std::size_t cols, double pitch);

MomentStats moment_stats(std::span<const Position2D> positions);
inline MomentStats moment_stats(const ArrayLayout &layout) { return moment_stats(layout.positions); }

struct SpacingReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Checks every pair against layout.d_min (with kGeometryEps slack).
SpacingReport validate_min_spacing(const ArrayLayout &layout);

/// Smallest pairwise distance, or 0 for fewer than two points.
double min_pairwise_distance(std::span<const Position2D> positions);

struct AreaEstimate {
    double area = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of the area covered by three disks of equal radius, sampling
/// uniformly over their bounding box. Deterministic for a fixed seed. Requires samples >= 1e4.
AreaEstimate disk_union_area(std::span<const Position2D, 3> centers, double radius,
                             std::size_t samples, std::uint64_t seed);

} // namespace madoa
