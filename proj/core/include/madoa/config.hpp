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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace madoa {

enum class ExperimentKind {
    Spectrum,
    RmseVsSnr,
    PsrVsSeparation,
    RmseVsArea,
    CrbTable, ///< closed-form bounds only, no simulation
};

/// Config-file section holding the experiment's settings: spectrum, rmse_snr, psr, rmse_area, crb.
std::string_view section_name(ExperimentKind kind);

enum class SeparationAxis { Theta, Phi };

/// Region and array dimensions in wavelengths.
struct ArrayDimensions {
    double triangle_side = 8.0;
    double square_side = 5.26;
    double circle_radius = 2.86;
    std::size_t ura_rows = 6;
    std::size_t ura_cols = 6;
    double ura_pitch = 0.5;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::RmseVsSnr;
    std::vector<LayoutFamily> families{LayoutFamily::PMA, LayoutFamily::SMA, LayoutFamily::UCA, LayoutFamily::URA};
    std::size_t n = 36;
    double d_min = 0.5;
    ArrayDimensions dims;
    CosineConvention convention = CosineConvention::Elevation;

    /// For PSR runs the last source is the base of the closely spaced pair; its shifted
    /// copy is appended per separation.
    SourceSet sources{{45.0, 60.0, 1.0}};
    std::vector<double> snr_db{20.0};
    std::vector<double> separations_deg;
    SeparationAxis separation_axis = SeparationAxis::Theta;
    std::vector<double> areas;
    std::size_t snapshots = 1;
    std::size_t trials = 500;
    std::uint64_t seed = 20260101;
    double grid_step = 0.005;
    SourceModel source_model = SourceModel::ConstantModulus;
    bool noiseless = false;

    std::filesystem::path output_dir = "out";
    unsigned threads = 0;
};

/// Built-in settings for each experiment, matching configs/paper.defaults.
ExperimentConfig default_config(ExperimentKind kind);

/// Reads an INI-style file: an [array] section shared by every experiment plus one
/// section per experiment. Only [array] and the section for `kind` are applied, but
/// every section is checked: unknown sections or keys, malformed values and failed
/// validation throw ConfigError naming the offending field.
ExperimentConfig parse_config(std::istream &in, ExperimentKind kind);
ExperimentConfig load_config(const std::filesystem::path &path, ExperimentKind kind);

/// Throws ConfigError when a field is out of range for the experiment kind.
void validate_config(const ExperimentConfig &config);

/// Stable text form of every field that influences results (output_dir and threads excluded).
std::string canonical_text(const ExperimentConfig &config);

/// FNV-1a 64 of canonical_text.
std::uint64_t config_hash(const ExperimentConfig &config);

/// Comma-separated list parsers shared with the CLI; throw ConfigError naming `field`.
std::vector<double> parse_number_list(std::string_view text, std::string_view field);
std::vector<LayoutFamily> parse_family_list(std::string_view text, std::string_view field);
SourceSet parse_source_list(std::string_view text, std::string_view field);

} // namespace madoa
