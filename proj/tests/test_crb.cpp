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
#include "madoa/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

using namespace madoa;

namespace {
constexpr double kPi = std::numbers::pi;

MomentStats stats_with(double var_x, double var_y, double cov)
{
    MomentStats s;
    s.var_x = var_x;
    s.var_y = var_y;
    s.cov_xy = cov;
    return s;
}
} // namespace

TEST(QFactor, Examples)
{
    EXPECT_NEAR(q_factor(1, 1, 1, 1), 1.0 / (8 * kPi * kPi), 1e-18);
    EXPECT_NEAR(q_factor(1, 1, 1, 1), 0.0126651, 1e-7);
    EXPECT_DOUBLE_EQ(q_factor(1, 2, 1, 1), q_factor(1, 1, 1, 1) / 2);
    EXPECT_NEAR(q_factor(0.01, 1, 1, 36), 0.01 / (8 * kPi * kPi * 36), 1e-20);
}

TEST(QFactor, RejectsNonPositiveInputs)
{
    EXPECT_THROW(q_factor(0, 1, 1, 1), ContractError);
    EXPECT_THROW(q_factor(1, 0, 1, 1), ContractError);
    EXPECT_THROW(q_factor(1, 1, -1, 1), ContractError);
    EXPECT_THROW(q_factor(1, 1, 1, 0), ContractError);
}

TEST(Crb, DecoupledAxes)
{
    const auto r = crb(stats_with(0.7, 0.7, 0), 0.3);
    EXPECT_DOUBLE_EQ(r.crb_theta_cos, 0.3 / 0.7);
    EXPECT_DOUBLE_EQ(r.crb_phi_cos, 0.3 / 0.7);
    EXPECT_DOUBLE_EQ(r.q_factor, 0.3);
}

TEST(Crb, UnitCircleTriad)
{
    const auto r = crb(moment_stats(build_uca_layout(1, 3)), 1.0);
    EXPECT_NEAR(r.crb_theta_cos, 2.0, 1e-14);
    EXPECT_NEAR(r.crb_phi_cos, 2.0, 1e-14);
    EXPECT_NEAR(r.total(), 4.0, 1e-14);
}

TEST(Crb, CoupledAxesMatchInverseFisherBlock)
{
    // Fisher matrix of (u, v) is proportional to [[vx, c], [c, vy]]; the bound is its inverse diagonal.
    const double vx = 2.0, vy = 1.0, c = 0.5, q = 0.1;
    const double det = vx * vy - c * c;
    const auto r = crb(stats_with(vx, vy, c), q);
    EXPECT_NEAR(r.crb_theta_cos, q * vy / det, 1e-15);
    EXPECT_NEAR(r.crb_phi_cos, q * vx / det, 1e-15);
}

TEST(Crb, CollinearLayoutIsSingular)
{
    ArrayLayout line{{{0, 0}, {0.5, 0}, {1.0, 0}}, LayoutFamily::Custom, {}, 0.5};
    try {
        (void)crb(moment_stats(line), 1.0);
        FAIL() << "expected SingularGeometryError";
    } catch (const SingularGeometryError &e) {
        EXPECT_NE(std::string(e.what()).find("phi"), std::string::npos) << e.what();
    }
    ArrayLayout diagonal{{{0, 0}, {1, 1}, {2, 2}}, LayoutFamily::Custom, {}, 0.5};
    EXPECT_THROW((void)crb(moment_stats(diagonal), 1.0), SingularGeometryError);
}

TEST(Objective, Examples)
{
    EXPECT_NEAR(shape_position_objective(moment_stats(build_ura_layout(2, 2, 1.0))), 0.5, 1e-15);
    EXPECT_THROW((void)shape_position_objective(stats_with(0, 1, 0)), SingularGeometryError);

    const double pma = shape_position_objective(moment_stats(build_pma_layout(8, 0.5, 36)));
    const double sma = shape_position_objective(moment_stats(build_sma_layout(5.26, 0.5, 36)));
    EXPECT_GT(pma, sma);
}

TEST(Objective, ReducesToMeanRhoSquaredForWholeOrbits)
{
    for (int m = 2; m <= 20; ++m) {
        const auto lattice = build_triangular_lattice(m * 0.5, 0.5);
        for (std::size_t n = 3; n <= lattice.size(); n += 3) {
            const auto s = moment_stats(select_farthest_from_centroid(lattice, n));
            if (s.var_x <= 0 || s.var_y <= 0)
                continue;
            ASSERT_NEAR(shape_position_objective(s), s.mean_rho2, 1e-9) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Crb, ScalingPositionsScalesBoundByInverseSquare)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3, 3), scale(1.1, 5);
    for (int t = 0; t < 50; ++t) {
        std::vector<Position2D> p(12);
        for (auto &q : p) q = {u(rng), u(rng)};
        const double c = scale(rng);
        auto scaled = p;
        for (auto &q : scaled) {
            q.x *= c;
            q.y *= c;
        }
        const auto a = crb(moment_stats(p), 1.0);
        const auto b = crb(moment_stats(scaled), 1.0);
        EXPECT_NEAR(b.crb_theta_cos * c * c / a.crb_theta_cos, 1.0, 1e-9);
        EXPECT_NEAR(b.crb_phi_cos * c * c / a.crb_phi_cos, 1.0, 1e-9);
    }
}

TEST(Objective, RotationInvariantForBalancedLayout)
{
    const auto base = build_pma_layout(8, 0.5, 36);
    const double ref = shape_position_objective(moment_stats(base));
    for (double deg : {17.0, 45.0, 90.0, 133.0}) {
        const double a = deg * kPi / 180;
        auto rot = base.positions;
        for (auto &p : rot)
            p = {p.x * std::cos(a) - p.y * std::sin(a), p.x * std::sin(a) + p.y * std::cos(a)};
        const auto s = moment_stats(rot);
        ASSERT_LT(std::abs(s.cov_xy), 1e-9);
        EXPECT_NEAR(shape_position_objective(s), ref, 1e-9) << deg;
    }
}

TEST(Objective, RankingMatchesCrbRanking)
{
    const std::vector<ArrayLayout> layouts{build_pma_layout(8, 0.5, 36), build_sma_layout(5.26, 0.5, 36),
                                           build_uca_layout(2.86, 36), build_ura_layout(6, 6, 0.5)};
    std::vector<std::pair<double, double>> v; // (objective, crb total)
    for (const auto &l : layouts) {
        const auto s = moment_stats(l);
        v.emplace_back(shape_position_objective(s), crb(s, q_factor(0.01, 1, 1, 36)).total());
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[i].first > v[j].first)
                EXPECT_LT(v[i].second, v[j].second) << i << " vs " << j;
    // the triangular layout wins both
    for (std::size_t j = 1; j < v.size(); ++j)
        EXPECT_LT(v[0].second, v[j].second);
}
