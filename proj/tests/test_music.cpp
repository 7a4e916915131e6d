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

#include "madoa/errors.hpp"
#include "madoa/geometry.hpp"
#include "madoa/music.hpp"
#include "madoa/signal.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace madoa;

namespace {

std::vector<ArrayLayout> reference_layouts()
{
    return {build_pma_layout(8, 0.5, 36), build_sma_layout(5.26, 0.5, 36), build_uca_layout(2.86, 36),
            build_ura_layout(6, 6, 0.5)};
}

Eigen::MatrixXcd random_hermitian(std::mt19937_64 &rng, Eigen::Index n)
{
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = {g(rng), g(rng)};
    return (m + m.adjoint()) / 2.0;
}

// exhaustive argmax, independent of the peak search
std::pair<Eigen::Index, Eigen::Index> grid_argmax(const SpectrumGrid &g)
{
    Eigen::Index bi = 0, bj = 0;
    g.values.maxCoeff(&bi, &bj);
    return {bi, bj};
}

Source on_grid_source(double u, double v)
{
    const auto a = inverse_direction_cosines({u, v});
    return {a.theta_deg, a.phi_deg, 1.0};
}

} // namespace

TEST(Covariance, SingleSnapshotIsOuterProduct)
{
    const auto layout = build_ura_layout(3, 3, 0.5);
    const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 1, 10, 4);
    const Eigen::MatrixXcd r = sample_covariance(y);
    EXPECT_LT((r - y.data * y.data.adjoint()).norm(), 1e-12);
    EXPECT_TRUE(r == r.adjoint());
}

TEST(Covariance, WhiteNoiseApproachesScaledIdentity)
{
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g(0, std::sqrt(0.5));
    SnapshotMatrix y;
    y.data.resize(8, 100'000);
    for (Eigen::Index c = 0; c < y.data.cols(); ++c)
        for (Eigen::Index r = 0; r < 8; ++r)
            y.data(r, c) = {g(rng), g(rng)};
    const Eigen::MatrixXcd r = sample_covariance(y);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(8, 8);
    EXPECT_LT((r - eye).norm() / eye.norm(), 0.02);
}

TEST(Covariance, LeadingEigenvectorAlignsWithSteering)
{
    const auto layout = build_pma_layout(8, 0.5, 36);
    const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 64, kNoiseless, 2);
    const auto eig = hermitian_eig(sample_covariance(y));
    const auto a = steering_vector(layout, direction_cosines(45, 60));
    EXPECT_NEAR(std::abs(eig.vectors.col(0).dot(a)) / a.norm(), 1.0, 1e-9);
}

TEST(HermitianEig, Identity)
{
    const auto e = hermitian_eig(Eigen::MatrixXcd::Identity(5, 5));
    for (Eigen::Index i = 0; i < 5; ++i)
        EXPECT_NEAR(e.values(i), 1.0, 1e-14);
}

TEST(HermitianEig, RankOne)
{
    const auto layout = build_uca_layout(2.86, 12);
    const auto a = steering_vector(layout, direction_cosines(60, 20));
    const auto e = hermitian_eig(a * a.adjoint());
    EXPECT_NEAR(e.values(0), 12.0, 1e-12);
    for (Eigen::Index i = 1; i < 12; ++i)
        EXPECT_NEAR(e.values(i), 0.0, 1e-12);
}

TEST(HermitianEig, RandomReconstruction)
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        const auto r = random_hermitian(rng, 8);
        const auto e = hermitian_eig(r);
        const Eigen::MatrixXcd lambda = e.values.cast<std::complex<double>>().asDiagonal();
        EXPECT_LT((r * e.vectors - e.vectors * lambda).norm(), 1e-8 * r.norm());
        EXPECT_LT((e.vectors.adjoint() * e.vectors - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-12);
        for (Eigen::Index i = 1; i < 8; ++i)
            EXPECT_GE(e.values(i - 1), e.values(i));
    }
}

TEST(HermitianEig, RejectsNonHermitian)
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    m(0, 1) = {0.5, 0.0};
    EXPECT_THROW(hermitian_eig(m), ContractError);
    EXPECT_THROW(hermitian_eig(Eigen::MatrixXcd(2, 3)), ContractError);
}

TEST(HermitianEig, NoiselessRankEqualsSourceCount)
{
    const auto layout = build_pma_layout(8, 0.5, 36);
    const SourceSet s{{135, 115, 1}, {45, 60, 1}, {70, 20, 1}};
    const auto e = hermitian_eig(sample_covariance(synthesize_snapshots(layout, s, 50, kNoiseless, 6)));
    for (Eigen::Index i = 0; i < 3; ++i)
        EXPECT_GT(e.values(i), 1e-8 * e.values(0));
    for (Eigen::Index i = 3; i < 36; ++i)
        EXPECT_LT(std::abs(e.values(i)), 1e-8 * e.values(0));
}

TEST(CosineAxis, Shape)
{
    const auto axis = cosine_axis(0.005);
    ASSERT_EQ(axis.size(), 401u);
    EXPECT_EQ(axis.front(), -1.0);
    EXPECT_EQ(axis.back(), 1.0);
    EXPECT_NEAR(axis[200], 0.0, 1e-15);
    EXPECT_THROW(cosine_axis(0.0), ContractError);
    EXPECT_THROW(cosine_axis(0.6), ContractError);
    EXPECT_THROW(cosine_axis(0.3), ContractError);
}

TEST(MusicSpectrum, NoiselessOnGridArgmaxIsExactForEveryFamily)
{
    const double u = 0.35, v = 0.7;
    for (const auto &layout : reference_layouts()) {
        const auto y = synthesize_snapshots(layout, {on_grid_source(u, v)}, 1, kNoiseless, 1);
        const auto grid = music_spectrum(sample_covariance(y), layout, 1, 0.005);
        const auto [i, j] = grid_argmax(grid);
        EXPECT_NEAR(grid.theta_cos_axis[i], u, 1e-12) << to_string(layout.family);
        EXPECT_NEAR(grid.phi_cos_axis[j], v, 1e-12) << to_string(layout.family);
    }
}

TEST(MusicSpectrum, MatchesDirectNoiseSubspaceSum)
{
    const auto layout = build_pma_layout(8, 0.5, 36);
    const SourceSet s{{45, 60, 1}, {120, 100, 1}};
    const auto r = sample_covariance(synthesize_snapshots(layout, s, 40, 5, 31));
    const auto grid = music_spectrum(r, layout, 2, 0.05);
    for (std::size_t i = 0; i < grid.theta_cos_axis.size(); i += 3)
        for (std::size_t j = 0; j < grid.phi_cos_axis.size(); j += 5) {
            const double d = oracle::music_denominator_direct(r, layout.positions, 2, grid.theta_cos_axis[i],
                                                              grid.phi_cos_axis[j]);
            const double p = grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            EXPECT_NEAR(p * d, 1.0, 1e-7) << i << "," << j;
        }
}

TEST(MusicSpectrum, FinitePositiveValues)
{
    for (const auto &layout : reference_layouts()) {
        const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 1, 20, 3);
        const auto grid = music_spectrum(sample_covariance(y), layout, 1, 0.01);
        EXPECT_TRUE(grid.values.allFinite());
        EXPECT_GT(grid.values.minCoeff(), 0.0);
        EXPECT_LE(grid.values.maxCoeff(), 1.0 / kMusicDenominatorFloor);
    }
}

TEST(MusicSpectrum, AntennaPermutationInvariance)
{
    auto layout = build_sma_layout(5.26, 0.5, 36);
    const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 4, 10, 8);
    const auto base = music_spectrum(sample_covariance(y), layout, 1, 0.02);

    std::vector<Eigen::Index> perm(36);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(5);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto permuted = layout;
    SnapshotMatrix py = y;
    for (std::size_t i = 0; i < 36; ++i) {
        permuted.positions[i] = layout.positions[static_cast<std::size_t>(perm[i])];
        py.data.row(static_cast<Eigen::Index>(i)) = y.data.row(perm[i]);
    }
    const auto other = music_spectrum(sample_covariance(py), permuted, 1, 0.02);
    EXPECT_LT(((other.values - base.values).array().abs() / base.values.array()).maxCoeff(), 1e-9);
}

TEST(MusicSpectrum, RejectsBadSubspaceSizes)
{
    const auto layout = build_ura_layout(2, 2, 0.5);
    const Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(4, 4);
    EXPECT_THROW(music_spectrum(r, layout, 0, 0.05), ContractError);
    EXPECT_THROW(music_spectrum(r, layout, 4, 0.05), ContractError);
    EXPECT_THROW(music_spectrum(Eigen::MatrixXcd::Identity(3, 3), layout, 1, 0.05), ContractError);
}

TEST(FindPeaks, SingleNoiselessSource)
{
    const auto layout = build_pma_layout(8, 0.5, 36);
    const auto truth = direction_cosines(45, 60);
    const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 1, kNoiseless, 1);
    const auto grid = music_spectrum(sample_covariance(y), layout, 1, 0.005);
    const auto [i, j] = grid_argmax(grid);
    const double node_err = std::hypot(grid.theta_cos_axis[i] - truth.theta_cos, grid.phi_cos_axis[j] - truth.phi_cos);
    EXPECT_LE(std::abs(grid.theta_cos_axis[i] - truth.theta_cos), 0.0025 + 1e-12);
    EXPECT_LE(std::abs(grid.phi_cos_axis[j] - truth.phi_cos), 0.0025 + 1e-12);

    const auto res = find_peaks(grid, 1);
    ASSERT_EQ(res.peaks.size(), 1u);
    EXPECT_FALSE(res.under_resolved);
    const auto &p = res.peaks[0];
    const double err = std::hypot(p.cosines.theta_cos - truth.theta_cos, p.cosines.phi_cos - truth.phi_cos);
    EXPECT_LT(err, node_err);
    EXPECT_LT(err, 1e-4);
    EXPECT_NEAR(p.angles.theta_deg, 45, 0.05);
    EXPECT_NEAR(p.angles.phi_deg, 60, 0.05);
}

TEST(FindPeaks, TwoSeparatedSourcesAtHighSnr)
{
    const auto layout = build_pma_layout(8, 0.5, 36);
    const SourceSet s{on_grid_source(0.35, 0.7), on_grid_source(-0.3, -0.5)};
    const auto y = synthesize_snapshots(layout, s, 100, 30, 10);
    const auto grid = music_spectrum(sample_covariance(y), layout, 2, 0.005);
    const auto res = find_peaks(grid, 2);
    ASSERT_EQ(res.peaks.size(), 2u);
    EXPECT_FALSE(res.under_resolved);
    auto ests = res.peaks;
    std::sort(ests.begin(), ests.end(), [](auto &a, auto &b) { return a.cosines.theta_cos < b.cosines.theta_cos; });
    EXPECT_NEAR(ests[0].cosines.theta_cos, -0.3, 0.0025);
    EXPECT_NEAR(ests[0].cosines.phi_cos, -0.5, 0.0025);
    EXPECT_NEAR(ests[1].cosines.theta_cos, 0.35, 0.0025);
    EXPECT_NEAR(ests[1].cosines.phi_cos, 0.7, 0.0025);
    EXPECT_GE(res.peaks[0].peak_value, res.peaks[1].peak_value);
}

TEST(FindPeaks, FlatGridIsUnderResolved)
{
    SpectrumGrid g;
    g.step = 0.5;
    g.theta_cos_axis = cosine_axis(0.5);
    g.phi_cos_axis = cosine_axis(0.5);
    g.values = Eigen::MatrixXd::Ones(5, 5);
    const auto res = find_peaks(g, 1);
    EXPECT_TRUE(res.under_resolved);
    EXPECT_TRUE(res.peaks.empty());
    EXPECT_THROW(find_peaks(g, 0), ContractError);
}

TEST(FindPeaks, EstimatesStayInVisibleRegion)
{
    const auto layout = build_ura_layout(6, 6, 0.5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto y = synthesize_snapshots(layout, {{45, 60, 1}}, 1, -10, seed);
        const auto res = find_peaks(music_spectrum(sample_covariance(y), layout, 1, 0.02), 3);
        for (const auto &p : res.peaks) {
            EXPECT_LE(std::abs(p.cosines.theta_cos), 1.0);
            EXPECT_LE(std::abs(p.cosines.phi_cos), 1.0);
            EXPECT_LE(p.cosines.theta_cos * p.cosines.theta_cos + p.cosines.phi_cos * p.cosines.phi_cos, 1.0 + 1e-12);
        }
    }
}

TEST(MainLobe, TriangularLayoutIsNarrowerThanRectangular)
{
    const auto pma = build_pma_layout(8, 0.5, 36);
    const auto ura = build_ura_layout(6, 6, 0.5);
    const auto area = [](const ArrayLayout &l) {
        const auto y = synthesize_snapshots(l, {{45, 60, 1}}, 1, 20, 20260101);
        return main_lobe_area(music_spectrum(sample_covariance(y), l, 1, 0.005));
    };
    const double a_pma = area(pma), a_ura = area(ura);
    EXPECT_GT(a_pma, 0.0);
    EXPECT_LT(a_pma, a_ura);
}

TEST(SpectrumCsv, HeaderAndRowMajorOrder)
{
    SpectrumGrid g;
    g.step = 1.0 / 3.0;
    g.theta_cos_axis = {-1, 1};
    g.phi_cos_axis = {-1, 1};
    g.values.resize(2, 2);
    g.values << 1, 2, 3, 1.0 / 3.0;
    std::ostringstream os;
    write_spectrum_csv(os, g);
    EXPECT_EQ(os.str(), "theta_cos,phi_cos,power\n-1,-1,1\n-1,1,2\n1,-1,3\n1,1,0.333333333\n");
}
