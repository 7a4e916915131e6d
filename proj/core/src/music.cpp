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

#include "madoa/music.hpp"

#include "madoa/errors.hpp"
#include "madoa/format.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <queue>
#include <string>

namespace madoa {

namespace {

bool visible(double u, double v, CosineConvention convention)
{
    if (convention == CosineConvention::Elevation && !(std::abs(v) < 1.0))
        return false;
    if (convention == CosineConvention::Conventional && u == 0.0 && v == 0.0)
        return false;
    return u * u + v * v <= 1.0 + 1e-12;
}

// Per-axis parabola through three samples; vertex offset in units of the step, or 0
// when the samples are not convex.
double parabola_offset(double lo, double mid, double hi)
{
    const double curvature = lo - 2.0 * mid + hi;
    if (!(curvature > 0.0))
        return 0.0;
    return std::clamp(0.5 * (lo - hi) / curvature, -0.5, 0.5);
}

} // namespace

Eigen::MatrixXcd sample_covariance(const SnapshotMatrix &snapshots)
{
    const auto t = snapshots.data.cols();
    if (t < 1)
        throw ContractError("sample_covariance needs at least one snapshot");
    Eigen::MatrixXcd r = snapshots.data * snapshots.data.adjoint() / static_cast<double>(t);
    Eigen::MatrixXcd sym = 0.5 * (r + r.adjoint());
    return sym;
}

EigenDecomposition hermitian_eig(const Eigen::MatrixXcd &r)
{
    if (r.rows() != r.cols() || r.rows() == 0)
        throw ContractError("hermitian_eig needs a non-empty square matrix");
    const double asym = (r - r.adjoint()).norm();
    if (asym > 1e-9 * std::max(1.0, r.norm()))
        throw ContractError("hermitian_eig: input is not Hermitian (||R - R^H||_F = " + std::to_string(asym) + ")");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r);
    if (solver.info() != Eigen::Success)
        throw ContractError("hermitian_eig: eigensolver did not converge");

    // Eigen returns ascending order.
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

std::vector<double> cosine_axis(double step)
{
    if (!(step > 0.0 && step <= 0.5))
        throw ContractError("grid step must lie in (0, 0.5]");
    const double intervals = 2.0 / step;
    const double rounded = std::round(intervals);
    if (std::abs(intervals - rounded) > 1e-9 * rounded)
        throw ContractError("grid step must divide 2 evenly");
    const auto n = static_cast<std::size_t>(rounded) + 1;
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i)
        axis[i] = -1.0 + static_cast<double>(i) * 2.0 / rounded;
    axis.back() = 1.0;
    return axis;
}

SpectrumGrid music_spectrum(const Eigen::MatrixXcd &r, const ArrayLayout &layout, std::size_t num_sources,
                            double grid_step)
{
    const auto n = layout.size();
    if (static_cast<std::size_t>(r.rows()) != n)
        throw ContractError("covariance size does not match the layout");
    if (num_sources < 1 || num_sources >= n)
        throw ContractError("MUSIC needs 1 <= K < N (K = " + std::to_string(num_sources) +
                            ", N = " + std::to_string(n) + ")");

    SpectrumGrid grid;
    grid.step = grid_step;
    grid.theta_cos_axis = cosine_axis(grid_step);
    grid.phi_cos_axis = grid.theta_cos_axis;

    const auto eig = hermitian_eig(r);
    const auto k = static_cast<Eigen::Index>(num_sources);
    const auto ne = static_cast<Eigen::Index>(n);
    const Eigen::MatrixXcd signal_conj = eig.vectors.leftCols(k).transpose().conjugate(); // K x N

    // The steering vector factorises per axis: a_n = exp(j2pi x_n u) * exp(j2pi y_n v).
    const auto nu = static_cast<Eigen::Index>(grid.theta_cos_axis.size());
    const auto nv = static_cast<Eigen::Index>(grid.phi_cos_axis.size());
    Eigen::MatrixXcd phase_x(ne, nu);
    Eigen::MatrixXcd phase_y(ne, nv);
    for (Eigen::Index e = 0; e < ne; ++e) {
        const auto &p = layout.positions[static_cast<std::size_t>(e)];
        for (Eigen::Index i = 0; i < nu; ++i)
            phase_x(e, i) = std::polar(1.0, 2.0 * std::numbers::pi * p.x * grid.theta_cos_axis[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < nv; ++j)
            phase_y(e, j) = std::polar(1.0, 2.0 * std::numbers::pi * p.y * grid.phi_cos_axis[static_cast<std::size_t>(j)]);
    }

    // a^H Un Un^H a = ||a||^2 - ||Us^H a||^2 with ||a||^2 = N; only K projections per node.
    grid.values.resize(nu, nv);
    Eigen::MatrixXcd weighted(k, ne);
    Eigen::MatrixXcd proj(k, nv);
    const double norm2 = static_cast<double>(n);
    for (Eigen::Index i = 0; i < nu; ++i) {
        weighted = signal_conj * phase_x.col(i).asDiagonal();
        proj.noalias() = weighted * phase_y;
        for (Eigen::Index j = 0; j < nv; ++j) {
            const double denom = norm2 - proj.col(j).squaredNorm();
            grid.values(i, j) = 1.0 / std::max(denom, kMusicDenominatorFloor);
        }
    }
    return grid;
}

PeakSearchResult find_peaks(const SpectrumGrid &grid, std::size_t num_sources, CosineConvention convention)
{
    if (num_sources < 1)
        throw ContractError("find_peaks needs K >= 1");
    const auto &p = grid.values;
    const auto nu = p.rows();
    const auto nv = p.cols();

    struct Node {
        Eigen::Index i, j;
        double value;
    };
    std::vector<Node> maxima;
    for (Eigen::Index i = 0; i < nu; ++i) {
        for (Eigen::Index j = 0; j < nv; ++j) {
            const double v = p(i, j);
            bool strict = true;
            for (Eigen::Index di = -1; di <= 1 && strict; ++di) {
                for (Eigen::Index dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0)
                        continue;
                    const auto ii = i + di;
                    const auto jj = j + dj;
                    if (ii < 0 || jj < 0 || ii >= nu || jj >= nv)
                        continue;
                    if (!(v > p(ii, jj))) {
                        strict = false;
                        break;
                    }
                }
            }
            if (strict && visible(grid.theta_cos_axis[static_cast<std::size_t>(i)],
                                  grid.phi_cos_axis[static_cast<std::size_t>(j)], convention))
                maxima.push_back({i, j, v});
        }
    }
    std::sort(maxima.begin(), maxima.end(), [](const Node &a, const Node &b) {
        if (a.value != b.value)
            return a.value > b.value;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    });

    PeakSearchResult result;
    result.under_resolved = maxima.size() < num_sources;
    maxima.resize(std::min(maxima.size(), num_sources));

    for (const auto &m : maxima) {
        const double u0 = grid.theta_cos_axis[static_cast<std::size_t>(m.i)];
        const double v0 = grid.phi_cos_axis[static_cast<std::size_t>(m.j)];
        double du = 0.0;
        double dv = 0.0;
        if (m.i > 0 && m.j > 0 && m.i + 1 < nu && m.j + 1 < nv) {
            const auto d = [&](Eigen::Index di, Eigen::Index dj) { return 1.0 / p(m.i + di, m.j + dj); };
            const double c = d(0, 0);
            const double gu = 0.5 * (d(1, 0) - d(-1, 0));
            const double gv = 0.5 * (d(0, 1) - d(0, -1));
            const double huu = d(1, 0) - 2.0 * c + d(-1, 0);
            const double hvv = d(0, 1) - 2.0 * c + d(0, -1);
            const double huv = 0.25 * (d(1, 1) - d(1, -1) - d(-1, 1) + d(-1, -1));
            const double det = huu * hvv - huv * huv;
            bool solved = false;
            if (huu > 0.0 && det > 0.0) {
                du = -(hvv * gu - huv * gv) / det;
                dv = -(huu * gv - huv * gu) / det;
                solved = std::abs(du) <= 1.0 && std::abs(dv) <= 1.0;
            }
            if (!solved) {
                du = parabola_offset(d(-1, 0), c, d(1, 0));
                dv = parabola_offset(d(0, -1), c, d(0, 1));
            }
        }
        DirectionCosines est{u0 + du * grid.step, v0 + dv * grid.step};
        if (!visible(est.theta_cos, est.phi_cos, convention))
            est = {u0, v0};

        DoaEstimate doa;
        doa.cosines = est;
        doa.peak_value = m.value;
        const double limit = std::sqrt(std::max(0.0, 1.0 - est.phi_cos * est.phi_cos));
        doa.angles = inverse_direction_cosines({std::clamp(est.theta_cos, -limit, limit), est.phi_cos}, convention);
        result.peaks.push_back(doa);
    }
    return result;
}

double main_lobe_area(const SpectrumGrid &grid, double level_db)
{
    const auto &p = grid.values;
    if (p.size() == 0)
        return 0.0;
    Eigen::Index mi = 0, mj = 0;
    const double peak = p.maxCoeff(&mi, &mj);
    const double threshold = peak * std::pow(10.0, level_db / 10.0);

    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(p.rows(), p.cols(), false);
    std::queue<std::pair<Eigen::Index, Eigen::Index>> frontier;
    frontier.emplace(mi, mj);
    seen(mi, mj) = true;
    std::size_t count = 0;
    while (!frontier.empty()) {
        const auto [i, j] = frontier.front();
        frontier.pop();
        ++count;
        constexpr Eigen::Index di[] = {1, -1, 0, 0};
        constexpr Eigen::Index dj[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const auto ii = i + di[k];
            const auto jj = j + dj[k];
            if (ii < 0 || jj < 0 || ii >= p.rows() || jj >= p.cols() || seen(ii, jj))
                continue;
            if (p(ii, jj) >= threshold) {
                seen(ii, jj) = true;
                frontier.emplace(ii, jj);
            }
        }
    }
    return static_cast<double>(count) * grid.step * grid.step;
}

void write_spectrum_csv(std::ostream &out, const SpectrumGrid &grid)
{
    out << "theta_cos,phi_cos,power\n";
    for (std::size_t i = 0; i < grid.theta_cos_axis.size(); ++i) {
        for (std::size_t j = 0; j < grid.phi_cos_axis.size(); ++j) {
            out << format_sig(grid.theta_cos_axis[i], 9) << ',' << format_sig(grid.phi_cos_axis[j], 9) << ','
                << format_sig(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), 9) << '\n';
        }
    }
}

} // namespace madoa
