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

#include "madoa/config.hpp"
#include "madoa/crb.hpp"
#include "madoa/geometry.hpp"
#include "madoa/music.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace madoa {

/// Layout for one family at the configured (or overridden) region size.
ArrayLayout build_family_layout(LayoutFamily family, const ExperimentConfig &config);

/// Triangle side for a target area, snapped down to a multiple of d_min. A 1% of d_min
/// slack absorbs areas quoted to two decimals (27.71 for a 8-wavelength side).
double snap_triangle_side(double area, double d_min);
double snap_square_side(double area, double d_min);

/// Per-trial seed derived from the experiment seed, the sweep-point index and the trial
/// index. Families share it, so every family sees the same random draws.
std::uint64_t derive_seed(std::uint64_t seed, std::size_t point, std::size_t trial);

/// Pairs estimates with truths by minimum total (theta_cos, phi_cos) distance; returns
/// assignment[truth] = estimate index. Needs estimates.size() >= truths.size() <= 8.
std::vector<std::size_t> match_estimates(const std::vector<DirectionCosines> &truths,
                                         const std::vector<DirectionCosines> &estimates);

struct SweepRow {
    double sweep_value = 0.0;
    LayoutFamily family = LayoutFamily::PMA;
    bool skipped = false;
    std::size_t trials = 0;
    std::size_t failures = 0;

    // RMSE experiments (direction-cosine and angle domain)
    double rmse_theta_cos = 0.0;
    double rmse_phi_cos = 0.0;
    double se_rmse_theta_cos = 0.0;
    double se_rmse_phi_cos = 0.0;
    double sqrt_crb_theta_cos = 0.0;
    double sqrt_crb_phi_cos = 0.0;
    double rmse_theta_deg = 0.0;
    double rmse_phi_deg = 0.0;

    // PSR experiments
    std::size_t successes = 0;
    double psr = 0.0;

    // Area sweep: region size actually used (side or radius) and its area.
    double region_size = 0.0;
    double actual_area = 0.0;
};

struct RunMetadata {
    std::string experiment;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;
    unsigned threads = 1;
    std::vector<std::string> warnings;
};

struct SweepResult {
    ExperimentKind kind = ExperimentKind::RmseVsSnr;
    std::vector<SweepRow> rows; ///< sorted by sweep value, then family
    RunMetadata metadata;
};

struct SpectrumSummaryRow {
    LayoutFamily family = LayoutFamily::PMA;
    DoaEstimate peak;
    double main_lobe_area = 0.0;
};

struct SpectrumRun {
    std::vector<std::pair<LayoutFamily, SpectrumGrid>> grids;
    std::vector<SpectrumSummaryRow> summary;
    RunMetadata metadata;
};

SpectrumRun run_spectrum(const ExperimentConfig &config);
SweepResult run_rmse_vs_snr(const ExperimentConfig &config);
SweepResult run_psr_vs_separation(const ExperimentConfig &config);
SweepResult run_rmse_vs_area(const ExperimentConfig &config);

struct CrbTableRow {
    LayoutFamily family = LayoutFamily::PMA;
    MomentStats stats;
    double objective = 0.0;
    CrbResult bound;
};

std::vector<CrbTableRow> crb_table(const ExperimentConfig &config);

void write_sweep_csv(std::ostream &out, const SweepResult &result);
void write_spectrum_summary_csv(std::ostream &out, const SpectrumRun &run);
void write_crb_table_csv(std::ostream &out, const std::vector<CrbTableRow> &rows);
std::string metadata_json(const RunMetadata &meta);

/// Writes `<output_dir>/<experiment>.csv` plus `<experiment>.meta.json`; returns the CSV path.
std::filesystem::path write_outputs(const SweepResult &result, const std::filesystem::path &output_dir);

/// Writes one `spectrum_<family>.csv` per family, `spectrum_summary.csv` and the sidecar.
std::vector<std::filesystem::path> write_outputs(const SpectrumRun &run, const std::filesystem::path &output_dir);

} // namespace madoa
