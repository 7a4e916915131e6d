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

#include "madoa/geometry.hpp"

#include "madoa/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

namespace madoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string lower(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void require_positive(double value, const char *what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw ConfigError(std::string(what) + " must be positive and finite");
}

Position2D centroid_of(std::span<const Position2D> pts)
{
    Position2D c;
    for (const auto &p : pts) {
        c.x += p.x;
        c.y += p.y;
    }
    const auto n = static_cast<double>(pts.size());
    return {c.x / n, c.y / n};
}

void recenter(std::vector<Position2D> &pts)
{
    const auto c = centroid_of(pts);
    for (auto &p : pts) {
        p.x -= c.x;
        p.y -= c.y;
    }
}

} // namespace

std::string_view to_string(LayoutFamily family)
{
    switch (family) {
    case LayoutFamily::PMA: return "PMA";
    case LayoutFamily::SMA: return "SMA";
    case LayoutFamily::UCA: return "UCA";
    case LayoutFamily::URA: return "URA";
    case LayoutFamily::Custom: return "Custom";
    }
    return "Custom";
}

LayoutFamily parse_layout_family(std::string_view text)
{
    const auto t = lower(text);
    if (t == "pma") return LayoutFamily::PMA;
    if (t == "sma") return LayoutFamily::SMA;
    if (t == "uca") return LayoutFamily::UCA;
    if (t == "ura") return LayoutFamily::URA;
    if (t == "custom") return LayoutFamily::Custom;
    throw ConfigError("unknown layout family '" + std::string(text) + "' (expected pma, sma, uca, ura)");
}

RegionSpec RegionSpec::triangle(double side)
{
    require_positive(side, "triangle side");
    return {Shape::EquilateralTriangle, side};
}

RegionSpec RegionSpec::square(double side)
{
    require_positive(side, "square side");
    return {Shape::Square, side};
}

RegionSpec RegionSpec::circle(double radius)
{
    require_positive(radius, "circle radius");
    return {Shape::Circle, radius};
}

double RegionSpec::area() const
{
    switch (shape) {
    case Shape::EquilateralTriangle: return std::sqrt(3.0) / 4.0 * size * size;
    case Shape::Square: return size * size;
    case Shape::Circle: return std::numbers::pi * size * size;
    case Shape::None: return 0.0;
    }
    return 0.0;
}

bool RegionSpec::contains(Position2D p) const
{
    switch (shape) {
    case Shape::EquilateralTriangle: {
        // Outward edge normals of an apex-up triangle; every edge sits at the inradius.
        const double inradius = size / (2.0 * std::sqrt(3.0));
        static const std::array<Position2D, 3> normals{{
            {0.0, -1.0},
            {std::cos(std::numbers::pi / 6.0), std::sin(std::numbers::pi / 6.0)},
            {-std::cos(std::numbers::pi / 6.0), std::sin(std::numbers::pi / 6.0)},
        }};
        return std::all_of(normals.begin(), normals.end(), [&](const Position2D &n) {
            return p.x * n.x + p.y * n.y <= inradius + kGeometryEps;
        });
    }
    case Shape::Square:
        return std::abs(p.x) <= size / 2.0 + kGeometryEps && std::abs(p.y) <= size / 2.0 + kGeometryEps;
    case Shape::Circle: return std::hypot(p.x, p.y) <= size + kGeometryEps;
    case Shape::None: return true;
    }
    return true;
}

std::vector<Position2D> build_triangular_lattice(double side, double d_min)
{
    require_positive(side, "region side");
    require_positive(d_min, "d_min");
    const double ratio = side / d_min;
    const double m_real = std::round(ratio);
    if (m_real < 1.0)
        throw ConfigError("region side must be at least d_min (m = 0)");
    if (std::abs(ratio - m_real) >= 1e-9)
        throw ConfigError("region side must be an integer multiple of d_min (side/d_min = " +
                          std::to_string(ratio) + ")");
    const auto m = static_cast<std::size_t>(m_real);
    const double row_pitch = d_min * std::sqrt(3.0) / 2.0;

    std::vector<Position2D> pts;
    pts.reserve(m * (m + 1) / 2);
    for (std::size_t row = 0; row < m; ++row) {
        const double y = -static_cast<double>(row) * row_pitch;
        for (std::size_t col = 0; col <= row; ++col) {
            const double x = (static_cast<double>(col) - static_cast<double>(row) / 2.0) * d_min;
            pts.push_back({x, y});
        }
    }
    recenter(pts);
    return pts;
}

std::vector<Position2D> build_square_lattice(double side, double d_min)
{
    require_positive(side, "square side");
    require_positive(d_min, "d_min");
    const auto per_side = static_cast<std::size_t>(std::floor(side / d_min + 1e-9)) + 1;
    const double half = static_cast<double>(per_side - 1) / 2.0;

    std::vector<Position2D> pts;
    pts.reserve(per_side * per_side);
    for (std::size_t r = 0; r < per_side; ++r)
        for (std::size_t c = 0; c < per_side; ++c)
            pts.push_back({(static_cast<double>(c) - half) * d_min, (static_cast<double>(r) - half) * d_min});
    return pts;
}

ArrayLayout select_farthest_from_centroid(std::span<const Position2D> candidates, std::size_t n,
                                          int symmetry_order)
{
    if (n > candidates.size())
        throw InfeasibleError("cannot select " + std::to_string(n) + " antennas from " +
                              std::to_string(candidates.size()) + " candidates");
    if (symmetry_order < 1)
        throw ContractError("symmetry_order must be >= 1");
    if (n == 0)
        return {};

    const auto c = centroid_of(candidates);
    const double period = kTwoPi / symmetry_order;
    const auto quantise = [](double v) { return std::llround(v / kGeometryEps); };

    using Key = std::tuple<long long, long long, long long, long long>;
    std::vector<std::pair<Key, std::size_t>> keyed;
    keyed.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double dx = candidates[i].x - c.x;
        const double dy = candidates[i].y - c.y;
        const double dist = std::hypot(dx, dy);
        double angle = std::atan2(dy, dx);
        if (angle < 0.0)
            angle += kTwoPi;
        if (angle >= kTwoPi - kGeometryEps)
            angle = 0.0;
        double reduced = std::fmod(angle, period);
        if (reduced >= period - kGeometryEps)
            reduced = 0.0;
        // Larger distance first; the remaining fields only break ties.
        keyed.push_back({Key{-quantise(dist), quantise(reduced), quantise(angle), quantise(dist)}, i});
    }
    std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(n), keyed.end());

    ArrayLayout out;
    out.positions.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.positions.push_back(candidates[keyed[k].second]);
    out.d_min = min_pairwise_distance(out.positions);
    return out;
}

ArrayLayout build_pma_layout(double side, double d_min, std::size_t n)
{
    const auto lattice = build_triangular_lattice(side, d_min);
    auto layout = select_farthest_from_centroid(lattice, n, 3);
    layout.family = LayoutFamily::PMA;
    layout.region = RegionSpec::triangle(side);
    layout.d_min = d_min;
    return layout;
}

ArrayLayout build_sma_layout(double side, double d_min, std::size_t n)
{
    const auto lattice = build_square_lattice(side, d_min);
    if (n > lattice.size())
        throw InfeasibleError("square region of side " + std::to_string(side) + " holds only " +
                              std::to_string(lattice.size()) + " lattice points, need " + std::to_string(n));
    auto layout = select_farthest_from_centroid(lattice, n, 4);
    layout.family = LayoutFamily::SMA;
    layout.region = RegionSpec::square(side);
    layout.d_min = d_min;
    return layout;
}

ArrayLayout build_uca_layout(double radius, std::size_t n)
{
    require_positive(radius, "circle radius");
    if (n == 0)
        throw ConfigError("UCA needs at least one element");
    ArrayLayout layout;
    layout.family = LayoutFamily::UCA;
    layout.region = RegionSpec::circle(radius);
    layout.positions.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        layout.positions.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    // Chord between neighbours; a single element has no spacing constraint.
    layout.d_min = n > 1 ? 2.0 * radius * std::sin(std::numbers::pi / static_cast<double>(n)) : 0.0;
    return layout;
}

ArrayLayout build_ura_layout(std::size_t rows, std::size_t cols, double pitch)
{
    if (rows * cols == 0)
        throw ConfigError("URA needs rows*cols >= 1");
    require_positive(pitch, "URA pitch");
    ArrayLayout layout;
    layout.family = LayoutFamily::URA;
    layout.d_min = pitch;
    layout.positions.reserve(rows * cols);
    const double hx = static_cast<double>(cols - 1) / 2.0;
    const double hy = static_cast<double>(rows - 1) / 2.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            layout.positions.push_back({(static_cast<double>(c) - hx) * pitch, (static_cast<double>(r) - hy) * pitch});
    return layout;
}

MomentStats moment_stats(std::span<const Position2D> positions)
{
    MomentStats s;
    if (positions.empty())
        return s;
    for (const auto &p : positions) {
        s.mean_x += p.x;
        s.mean_y += p.y;
        s.mean_x2 += p.x * p.x;
        s.mean_y2 += p.y * p.y;
        s.mean_xy += p.x * p.y;
    }
    const auto n = static_cast<double>(positions.size());
    s.mean_x /= n;
    s.mean_y /= n;
    s.mean_x2 /= n;
    s.mean_y2 /= n;
    s.mean_xy /= n;
    s.var_x = s.mean_x2 - s.mean_x * s.mean_x;
    s.var_y = s.mean_y2 - s.mean_y * s.mean_y;
    s.cov_xy = s.mean_xy - s.mean_x * s.mean_y;
    s.mean_rho2 = s.mean_x2 + s.mean_y2;
    return s;
}

double min_pairwise_distance(std::span<const Position2D> positions)
{
    if (positions.size() < 2)
        return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            best = std::min(best, std::hypot(positions[i].x - positions[j].x, positions[i].y - positions[j].y));
    return best;
}

SpacingReport validate_min_spacing(const ArrayLayout &layout)
{
    SpacingReport report;
    const auto &p = layout.positions;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (std::hypot(p[i].x - p[j].x, p[i].y - p[j].y) < layout.d_min - kGeometryEps) {
                report.ok = false;
                report.violations.emplace_back(i, j);
            }
        }
    }
    return report;
}

AreaEstimate disk_union_area(std::span<const Position2D, 3> centers, double radius, std::size_t samples,
                             std::uint64_t seed)
{
    if (samples < 10'000)
        throw ContractError("disk_union_area needs at least 1e4 samples");
    require_positive(radius, "disk radius");

    double xmin = centers[0].x, xmax = centers[0].x, ymin = centers[0].y, ymax = centers[0].y;
    for (const auto &c : centers) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    xmin -= radius;
    ymin -= radius;
    xmax += radius;
    ymax += radius;
    const double box = (xmax - xmin) * (ymax - ymin);
    const double r2 = radius * radius;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(xmin, xmax);
    std::uniform_real_distribution<double> uy(ymin, ymax);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const double x = ux(rng);
        const double y = uy(rng);
        for (const auto &c : centers) {
            const double dx = x - c.x;
            const double dy = y - c.y;
            if (dx * dx + dy * dy <= r2) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

} // namespace madoa
