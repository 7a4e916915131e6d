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

#include "cli.hpp"

#include "madoa/config.hpp"
#include "madoa/errors.hpp"
#include "madoa/harness.hpp"
#include "madoa/layout_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace madoa::cli {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> snr;
    std::optional<std::string> family;
    std::optional<unsigned> threads;
    bool noiseless = false;
};

void add_experiment_options(CLI::App *cmd, Overrides &o, bool simulation)
{
    cmd->add_option("--config", o.config_path, "Experiment config file (INI sections, see configs/paper.defaults)")
        ->required();
    cmd->add_option("--snr", o.snr, "SNR in dB; comma-separated list for rmse-snr");
    cmd->add_option("--family", o.family, "Comma-separated families: pma,sma,uca,ura");
    cmd->add_option("--out", o.out, simulation ? "Output directory" : "Output CSV file (default: stdout)");
    if (simulation) {
        cmd->add_option("--trials", o.trials, "Monte Carlo trials per sweep point")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "Experiment seed");
        cmd->add_option("--threads", o.threads, "Worker threads (0 = auto, capped by MA_DOA_THREADS)");
    }
}

ExperimentConfig resolve(ExperimentKind kind, const Overrides &o)
{
    auto c = load_config(o.config_path, kind);
    if (o.trials) c.trials = *o.trials;
    if (o.seed) c.seed = *o.seed;
    if (o.out) c.output_dir = *o.out;
    if (o.snr) c.snr_db = parse_number_list(*o.snr, "--snr");
    if (o.family) c.families = parse_family_list(*o.family, "--family");
    if (o.threads) c.threads = *o.threads;
    if (o.noiseless) c.noiseless = true;
    validate_config(c);
    return c;
}

int run_layout(const std::string &family_name, std::optional<double> side, double d_min, std::size_t n,
               double radius, std::size_t rows, std::size_t cols, double pitch, const std::optional<std::string> &out_path,
               std::ostream &out)
{
    const auto family = parse_layout_family(family_name);
    ArrayLayout layout;
    switch (family) {
    case LayoutFamily::PMA: layout = build_pma_layout(side.value_or(8.0), d_min, n); break;
    case LayoutFamily::SMA: layout = build_sma_layout(side.value_or(5.26), d_min, n); break;
    case LayoutFamily::UCA: layout = build_uca_layout(radius, n); break;
    case LayoutFamily::URA: layout = build_ura_layout(rows, cols, pitch); break;
    case LayoutFamily::Custom: throw ConfigError("--family: 'custom' layouts are read, not generated");
    }
    if (out_path) {
        std::ofstream file(*out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write '" + *out_path + "'");
        write_layout_csv(file, layout);
    } else {
        write_layout_csv(out, layout);
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"madoa: movable-antenna array design and 2D DOA experiments"};
    app.name("madoa");
    app.require_subcommand(1);

    auto *layout_cmd = app.add_subcommand("layout", "Emit an array layout as CSV (x_lambda,y_lambda)");
    std::string family = "pma";
    std::optional<double> side;
    double d_min = 0.5, radius = 2.86, pitch = 0.5;
    std::size_t n = 36, rows = 6, cols = 6;
    std::optional<std::string> layout_out;
    layout_cmd->add_option("--family", family, "pma, sma, uca or ura")->capture_default_str();
    layout_cmd->add_option("--side", side, "Region side in wavelengths (pma default 8, sma default 5.26)");
    layout_cmd->add_option("--dmin", d_min, "Minimum spacing / lattice pitch in wavelengths")->capture_default_str();
    layout_cmd->add_option("--n", n, "Number of antennas (pma, sma, uca)")->capture_default_str();
    layout_cmd->add_option("--radius", radius, "UCA radius in wavelengths")->capture_default_str();
    layout_cmd->add_option("--rows", rows, "URA rows")->capture_default_str();
    layout_cmd->add_option("--cols", cols, "URA columns")->capture_default_str();
    layout_cmd->add_option("--pitch", pitch, "URA pitch in wavelengths")->capture_default_str();
    layout_cmd->add_option("--out", layout_out, "Output CSV file (default: stdout)");

    Overrides crb_o, spec_o, snr_o, psr_o, area_o;
    auto *crb_cmd = app.add_subcommand("crb", "Print the closed-form CRB table for every family");
    add_experiment_options(crb_cmd, crb_o, false);
    auto *spec_cmd = app.add_subcommand("spectrum", "MUSIC power spectrum per family");
    add_experiment_options(spec_cmd, spec_o, true);
    spec_cmd->add_flag("--noiseless", spec_o.noiseless, "Disable receiver noise");
    auto *snr_cmd = app.add_subcommand("rmse-snr", "RMSE versus SNR sweep");
    add_experiment_options(snr_cmd, snr_o, true);
    auto *psr_cmd = app.add_subcommand("psr", "Probability of successful resolution versus separation");
    add_experiment_options(psr_cmd, psr_o, true);
    auto *area_cmd = app.add_subcommand("rmse-area", "RMSE versus movable-region area");
    add_experiment_options(area_cmd, area_o, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (layout_cmd->parsed())
            return run_layout(family, side, d_min, n, radius, rows, cols, pitch, layout_out, out);

        if (crb_cmd->parsed()) {
            const auto cfg = resolve(ExperimentKind::CrbTable, crb_o);
            const auto rows_out = crb_table(cfg);
            if (crb_o.out) {
                std::ofstream file(*crb_o.out, std::ios::binary);
                if (!file)
                    throw std::runtime_error("cannot write '" + *crb_o.out + "'");
                write_crb_table_csv(file, rows_out);
            } else {
                write_crb_table_csv(out, rows_out);
            }
            return 0;
        }
        if (spec_cmd->parsed()) {
            const auto cfg = resolve(ExperimentKind::Spectrum, spec_o);
            const auto run = run_spectrum(cfg);
            for (const auto &p : write_outputs(run, cfg.output_dir))
                out << p.string() << "\n";
            return 0;
        }
        const std::pair<CLI::App *, std::pair<ExperimentKind, Overrides *>> sweeps[] = {
            {snr_cmd, {ExperimentKind::RmseVsSnr, &snr_o}},
            {psr_cmd, {ExperimentKind::PsrVsSeparation, &psr_o}},
            {area_cmd, {ExperimentKind::RmseVsArea, &area_o}},
        };
        for (const auto &[cmd, what] : sweeps) {
            if (!cmd->parsed())
                continue;
            const auto cfg = resolve(what.first, *what.second);
            SweepResult result;
            switch (what.first) {
            case ExperimentKind::RmseVsSnr: result = run_rmse_vs_snr(cfg); break;
            case ExperimentKind::PsrVsSeparation: result = run_psr_vs_separation(cfg); break;
            default: result = run_rmse_vs_area(cfg); break;
            }
            out << write_outputs(result, cfg.output_dir).string() << "\n";
            for (const auto &w : result.metadata.warnings)
                err << "warning: " << w << "\n";
            return 0;
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError &e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace madoa::cli
