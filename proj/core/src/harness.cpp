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

#include "madoa/harness.hpp"

#include "madoa/errors.hpp"
#include "madoa/format.hpp"
#include "madoa/parallel.hpp"
#include "madoa/signal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#ifndef MADOA_VERSION
#define MADOA_VERSION "unknown"
#endif

namespace madoa {

namespace {

// Error charged to an axis when a trial yields no usable peak.
constexpr double kFailureCosineError = 2.0;
constexpr double kFailureAngleError = 180.0;

std::string family_tag(LayoutFamily f) { return std::string(to_string(f)); }

template <typename Fn>
auto with_family_context(LayoutFamily family, Fn &&fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const ConfigError &e) {
        throw ConfigError(family_tag(family) + ": " + e.what());
    } catch (const InfeasibleError &e) {
        throw InfeasibleError(family_tag(family) + ": " + e.what());
    } catch (const SingularGeometryError &e) {
        throw SingularGeometryError(family_tag(family) + ": " + e.what());
    } catch (const ContractError &e) {
        throw ContractError(family_tag(family) + ": " + e.what());
    }
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunMetadata make_metadata(const ExperimentConfig &config)
{
    RunMetadata m;
    m.experiment = std::string(section_name(config.kind));
    m.config_hash = config_hash(config);
    m.seed = config.seed;
    m.version = MADOA_VERSION;
    m.timestamp = utc_timestamp();
    m.threads = resolve_thread_count(config.threads);
    return m;
}

double noise_variance(const SourceSet &sources, double snr_db)
{
    double mean_power = 0.0;
    for (const auto &s : sources)
        mean_power += s.power;
    return mean_power / static_cast<double>(sources.size()) / std::pow(10.0, snr_db / 10.0);
}

struct TrialError {
    double du = 0.0;
    double dv = 0.0;
    double dtheta = 0.0;
    double dphi = 0.0;
    bool failed = false;
};

TrialError single_source_trial(const ArrayLayout &layout, const ExperimentConfig &config, double snr_db,
                               std::uint64_t seed)
{
    const auto &src = config.sources.front();
    const auto truth = direction_cosines(src, config.convention);
    const auto snaps = synthesize_snapshots(layout, config.sources, config.snapshots, snr_db, seed,
                                            {config.source_model, config.convention});
    const auto grid = music_spectrum(sample_covariance(snaps), layout, 1, config.grid_step);
    const auto found = find_peaks(grid, 1, config.convention);

    TrialError e;
    if (found.peaks.empty()) {
        e = {kFailureCosineError, kFailureCosineError, kFailureAngleError, kFailureAngleError, true};
        return e;
    }
    const auto &peak = found.peaks.front();
    e.du = peak.cosines.theta_cos - truth.theta_cos;
    e.dv = peak.cosines.phi_cos - truth.phi_cos;
    e.dtheta = peak.angles.theta_deg - src.theta_deg;
    e.dphi = peak.angles.phi_deg - src.phi_deg;
    return e;
}

struct RmseSummary {
    double rmse = 0.0;
    double se = 0.0;
};

// Root mean square with a delta-method standard error.
RmseSummary summarise(const std::vector<double> &errors)
{
    const auto n = static_cast<double>(errors.size());
    double mse = 0.0;
    for (double e : errors)
        mse += e * e;
    mse /= n;
    RmseSummary s;
    s.rmse = std::sqrt(mse);
    if (errors.size() > 1 && s.rmse > 0.0) {
        double var = 0.0;
        for (double e : errors)
            var += (e * e - mse) * (e * e - mse);
        var /= n - 1.0;
        s.se = std::sqrt(var / n) / (2.0 * s.rmse);
    }
    return s;
}

void fill_rmse(SweepRow &row, const std::vector<TrialError> &trials)
{
    std::vector<double> du, dv, dt, dp;
    for (const auto &t : trials) {
        du.push_back(t.du);
        dv.push_back(t.dv);
        dt.push_back(t.dtheta);
        dp.push_back(t.dphi);
        row.failures += t.failed ? 1 : 0;
    }
    row.trials = trials.size();
    const auto su = summarise(du);
    const auto sv = summarise(dv);
    row.rmse_theta_cos = su.rmse;
    row.se_rmse_theta_cos = su.se;
    row.rmse_phi_cos = sv.rmse;
    row.se_rmse_phi_cos = sv.se;
    row.rmse_theta_deg = summarise(dt).rmse;
    row.rmse_phi_deg = summarise(dp).rmse;
}

void fill_crb(SweepRow &row, const ArrayLayout &layout, const ExperimentConfig &config, double snr_db)
{
    const double q = q_factor(noise_variance(config.sources, snr_db), config.snapshots, config.sources.front().power,
                              layout.size());
    const auto bound = crb(moment_stats(layout), q);
    row.sqrt_crb_theta_cos = std::sqrt(bound.crb_theta_cos);
    row.sqrt_crb_phi_cos = std::sqrt(bound.crb_phi_cos);
}

void sort_rows(std::vector<SweepRow> &rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        if (a.sweep_value != b.sweep_value)
            return a.sweep_value < b.sweep_value;
        return static_cast<int>(a.family) < static_cast<int>(b.family);
    });
}

double region_area(LayoutFamily family, const ExperimentConfig &c)
{
    switch (family) {
    case LayoutFamily::PMA: return RegionSpec::triangle(c.dims.triangle_side).area();
    case LayoutFamily::SMA: return RegionSpec::square(c.dims.square_side).area();
    case LayoutFamily::UCA: return RegionSpec::circle(c.dims.circle_radius).area();
    case LayoutFamily::URA:
        return static_cast<double>(c.dims.ura_cols - 1) * c.dims.ura_pitch * static_cast<double>(c.dims.ura_rows - 1) *
               c.dims.ura_pitch;
    case LayoutFamily::Custom: return 0.0;
    }
    return 0.0;
}

double region_size(LayoutFamily family, const ExperimentConfig &c)
{
    switch (family) {
    case LayoutFamily::PMA: return c.dims.triangle_side;
    case LayoutFamily::SMA: return c.dims.square_side;
    case LayoutFamily::UCA: return c.dims.circle_radius;
    case LayoutFamily::URA: return c.dims.ura_pitch;
    case LayoutFamily::Custom: return 0.0;
    }
    return 0.0;
}

void require_kind(const ExperimentConfig &config, ExperimentKind kind)
{
    if (config.kind != kind)
        throw ConfigError("config is for experiment '" + std::string(section_name(config.kind)) + "', expected '" +
                          std::string(section_name(kind)) + "'");
    validate_config(config);
}

} // namespace

double snap_triangle_side(double area, double d_min)
{
    const double side = std::sqrt(4.0 * area / std::sqrt(3.0));
    return std::floor(side / d_min + 0.01) * d_min;
}

double snap_square_side(double area, double d_min)
{
    return std::floor(std::sqrt(area) / d_min + 0.01) * d_min;
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t point, std::size_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(point), static_cast<std::uint32_t>(trial)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<std::size_t> match_estimates(const std::vector<DirectionCosines> &truths,
                                         const std::vector<DirectionCosines> &estimates)
{
    if (truths.size() > 8 || estimates.size() < truths.size())
        throw ContractError("match_estimates needs truths <= estimates and at most 8 truths");
    std::vector<std::size_t> perm(estimates.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best;
    double best_cost = std::numeric_limits<double>::infinity();
    // Exhaustive assignment; permutations differing only past truths.size() repeat harmlessly.
    do {
        double cost = 0.0;
        for (std::size_t t = 0; t < truths.size(); ++t)
            cost += std::hypot(estimates[perm[t]].theta_cos - truths[t].theta_cos,
                               estimates[perm[t]].phi_cos - truths[t].phi_cos);
        if (cost < best_cost) {
            best_cost = cost;
            best.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(truths.size()));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ArrayLayout build_family_layout(LayoutFamily family, const ExperimentConfig &c)
{
    return with_family_context(family, [&] {
        switch (family) {
        case LayoutFamily::PMA: return build_pma_layout(c.dims.triangle_side, c.d_min, c.n);
        case LayoutFamily::SMA: return build_sma_layout(c.dims.square_side, c.d_min, c.n);
        case LayoutFamily::UCA: return build_uca_layout(c.dims.circle_radius, c.n);
        case LayoutFamily::URA: return build_ura_layout(c.dims.ura_rows, c.dims.ura_cols, c.dims.ura_pitch);
        case LayoutFamily::Custom: break;
        }
        throw ConfigError("custom layouts are not an experiment family");
    });
}

SpectrumRun run_spectrum(const ExperimentConfig &config)
{
    require_kind(config, ExperimentKind::Spectrum);
    SpectrumRun run;
    run.metadata = make_metadata(config);

    const auto nf = config.families.size();
    run.grids.resize(nf);
    run.summary.resize(nf);
    const double snr = config.noiseless ? kNoiseless : config.snr_db.front();
    const auto seed = derive_seed(config.seed, 0, 0);

    parallel_for(nf, run.metadata.threads, [&](std::size_t f) {
        const auto family = config.families[f];
        with_family_context(family, [&] {
            const auto layout = build_family_layout(family, config);
            const auto snaps = synthesize_snapshots(layout, config.sources, config.snapshots, snr, seed,
                                                    {config.source_model, config.convention});
            auto grid = music_spectrum(sample_covariance(snaps), layout, 1, config.grid_step);
            const auto peaks = find_peaks(grid, 1, config.convention);
            SpectrumSummaryRow row;
            row.family = family;
            if (!peaks.peaks.empty())
                row.peak = peaks.peaks.front();
            row.main_lobe_area = main_lobe_area(grid, -3.0);
            run.summary[f] = row;
            run.grids[f] = {family, std::move(grid)};
        });
    });
    return run;
}

SweepResult run_rmse_vs_snr(const ExperimentConfig &config)
{
    require_kind(config, ExperimentKind::RmseVsSnr);
    SweepResult result;
    result.kind = config.kind;
    result.metadata = make_metadata(config);

    std::vector<ArrayLayout> layouts;
    for (auto f : config.families)
        layouts.push_back(build_family_layout(f, config));

    const auto np = config.snr_db.size();
    const auto nf = layouts.size();
    const auto nt = config.trials;
    std::vector<TrialError> errors(np * nf * nt);
    parallel_for(errors.size(), result.metadata.threads, [&](std::size_t idx) {
        const auto t = idx % nt;
        const auto f = (idx / nt) % nf;
        const auto p = idx / (nt * nf);
        errors[idx] = with_family_context(config.families[f], [&] {
            return single_source_trial(layouts[f], config, config.snr_db[p], derive_seed(config.seed, p, t));
        });
    });

    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t f = 0; f < nf; ++f) {
            SweepRow row;
            row.sweep_value = config.snr_db[p];
            row.family = config.families[f];
            const auto first = errors.begin() + static_cast<std::ptrdiff_t>((p * nf + f) * nt);
            fill_rmse(row, std::vector<TrialError>(first, first + static_cast<std::ptrdiff_t>(nt)));
            fill_crb(row, layouts[f], config, config.snr_db[p]);
            row.region_size = region_size(row.family, config);
            row.actual_area = region_area(row.family, config);
            result.rows.push_back(row);
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_psr_vs_separation(const ExperimentConfig &config)
{
    require_kind(config, ExperimentKind::PsrVsSeparation);
    SweepResult result;
    result.kind = config.kind;
    result.metadata = make_metadata(config);

    std::vector<ArrayLayout> layouts;
    for (auto f : config.families)
        layouts.push_back(build_family_layout(f, config));

    const auto np = config.separations_deg.size();
    const auto nf = layouts.size();
    const auto nt = config.trials;
    const bool theta_axis = config.separation_axis == SeparationAxis::Theta;

    std::vector<SourceSet> scenarios;
    for (double delta : config.separations_deg) {
        auto sources = config.sources;
        auto shifted = sources.back();
        (theta_axis ? shifted.theta_deg : shifted.phi_deg) += delta;
        sources.push_back(shifted);
        try {
            validate_sources(sources);
        } catch (const ConfigError &e) {
            throw ConfigError("psr.separations_deg: separation " + format_sig(delta, 6) + " deg gives " + e.what());
        }
        scenarios.push_back(std::move(sources));
    }

    // 0 = failure, 1 = success, 2 = under-resolved
    std::vector<unsigned char> outcome(np * nf * nt, 0);
    parallel_for(outcome.size(), result.metadata.threads, [&](std::size_t idx) {
        const auto t = idx % nt;
        const auto f = (idx / nt) % nf;
        const auto p = idx / (nt * nf);
        const auto &sources = scenarios[p];
        const double half = config.separations_deg[p] / 2.0;
        outcome[idx] = with_family_context(config.families[f], [&]() -> unsigned char {
            const auto &layout = layouts[f];
            const auto snaps = synthesize_snapshots(layout, sources, config.snapshots, config.snr_db.front(),
                                                    derive_seed(config.seed, p, t),
                                                    {config.source_model, config.convention});
            const auto grid = music_spectrum(sample_covariance(snaps), layout, sources.size(), config.grid_step);
            const auto found = find_peaks(grid, sources.size(), config.convention);
            if (found.under_resolved)
                return 2;
            std::vector<DirectionCosines> truths, estimates;
            for (const auto &s : sources)
                truths.push_back(direction_cosines(s, config.convention));
            for (const auto &pk : found.peaks)
                estimates.push_back(pk.cosines);
            const auto assign = match_estimates(truths, estimates);
            for (std::size_t k = sources.size() - 2; k < sources.size(); ++k) {
                const auto &est = found.peaks[assign[k]].angles;
                const double err = theta_axis ? est.theta_deg - sources[k].theta_deg
                                              : est.phi_deg - sources[k].phi_deg;
                if (!(std::abs(err) < half))
                    return 0;
            }
            return 1;
        });
    });

    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t f = 0; f < nf; ++f) {
            SweepRow row;
            row.sweep_value = config.separations_deg[p];
            row.family = config.families[f];
            row.trials = nt;
            for (std::size_t t = 0; t < nt; ++t) {
                const auto o = outcome[(p * nf + f) * nt + t];
                row.successes += o == 1 ? 1 : 0;
                row.failures += o == 2 ? 1 : 0;
            }
            row.psr = static_cast<double>(row.successes) / static_cast<double>(nt);
            result.rows.push_back(row);
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_rmse_vs_area(const ExperimentConfig &config)
{
    require_kind(config, ExperimentKind::RmseVsArea);
    SweepResult result;
    result.kind = config.kind;
    result.metadata = make_metadata(config);

    const auto np = config.areas.size();
    const auto nf = config.families.size();
    const auto nt = config.trials;

    struct Cell {
        bool ok = false;
        ArrayLayout layout;
        ExperimentConfig scaled;
    };
    std::vector<Cell> cells(np * nf);
    for (std::size_t p = 0; p < np; ++p) {
        auto scaled = config;
        scaled.dims.triangle_side = snap_triangle_side(config.areas[p], config.d_min);
        scaled.dims.square_side = snap_square_side(config.areas[p], config.d_min);
        for (std::size_t f = 0; f < nf; ++f) {
            auto &cell = cells[p * nf + f];
            cell.scaled = scaled;
            try {
                cell.layout = build_family_layout(config.families[f], scaled);
                cell.ok = true;
            } catch (const ConfigError &e) {
                result.metadata.warnings.push_back("area " + format_sig(config.areas[p], 6) + ": " + e.what());
            } catch (const InfeasibleError &e) {
                result.metadata.warnings.push_back("area " + format_sig(config.areas[p], 6) + ": " + e.what());
            }
        }
    }

    std::vector<TrialError> errors(np * nf * nt);
    parallel_for(errors.size(), result.metadata.threads, [&](std::size_t idx) {
        const auto t = idx % nt;
        const auto cell_index = idx / nt;
        const auto &cell = cells[cell_index];
        if (!cell.ok)
            return;
        const auto p = cell_index / nf;
        errors[idx] = with_family_context(config.families[cell_index % nf], [&] {
            return single_source_trial(cell.layout, config, config.snr_db.front(), derive_seed(config.seed, p, t));
        });
    });

    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t f = 0; f < nf; ++f) {
            const auto &cell = cells[p * nf + f];
            SweepRow row;
            row.sweep_value = config.areas[p];
            row.family = config.families[f];
            row.region_size = region_size(row.family, cell.scaled);
            row.actual_area = region_area(row.family, cell.scaled);
            if (!cell.ok) {
                row.skipped = true;
            } else {
                const auto first = errors.begin() + static_cast<std::ptrdiff_t>((p * nf + f) * nt);
                fill_rmse(row, std::vector<TrialError>(first, first + static_cast<std::ptrdiff_t>(nt)));
                fill_crb(row, cell.layout, config, config.snr_db.front());
            }
            result.rows.push_back(row);
        }
    }
    sort_rows(result.rows);
    return result;
}

std::vector<CrbTableRow> crb_table(const ExperimentConfig &config)
{
    validate_config(config);
    std::vector<CrbTableRow> rows;
    for (auto family : config.families) {
        rows.push_back(with_family_context(family, [&] {
            const auto layout = build_family_layout(family, config);
            CrbTableRow row;
            row.family = family;
            row.stats = moment_stats(layout);
            row.objective = shape_position_objective(row.stats);
            const double q = q_factor(noise_variance(config.sources, config.snr_db.front()), config.snapshots,
                                      config.sources.front().power, layout.size());
            row.bound = crb(row.stats, q);
            return row;
        }));
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const SweepResult &result)
{
    const auto num = [](double v) { return format_sig(v, 9); };
    if (result.kind == ExperimentKind::PsrVsSeparation) {
        out << "separation_deg,family,trials,successes,under_resolved,psr\n";
        for (const auto &r : result.rows)
            out << num(r.sweep_value) << ',' << to_string(r.family) << ',' << r.trials << ',' << r.successes << ','
                << r.failures << ',' << num(r.psr) << '\n';
        return;
    }

    const bool area = result.kind == ExperimentKind::RmseVsArea;
    out << (area ? "area" : "snr_db") << ",family,region_size,actual_area,status,trials,failures,"
        << "rmse_theta_cos,rmse_phi_cos,se_rmse_theta_cos,se_rmse_phi_cos,sqrt_crb_theta_cos,sqrt_crb_phi_cos,"
        << "rmse_theta_deg,rmse_phi_deg\n";
    for (const auto &r : result.rows) {
        out << num(r.sweep_value) << ',' << to_string(r.family) << ',' << num(r.region_size) << ','
            << num(r.actual_area) << ',';
        if (r.skipped) {
            out << "skipped,0,0,,,,,,,,\n";
            continue;
        }
        out << "ok," << r.trials << ',' << r.failures << ',' << num(r.rmse_theta_cos) << ',' << num(r.rmse_phi_cos)
            << ',' << num(r.se_rmse_theta_cos) << ',' << num(r.se_rmse_phi_cos) << ',' << num(r.sqrt_crb_theta_cos)
            << ',' << num(r.sqrt_crb_phi_cos) << ',' << num(r.rmse_theta_deg) << ',' << num(r.rmse_phi_deg) << '\n';
    }
}

void write_spectrum_summary_csv(std::ostream &out, const SpectrumRun &run)
{
    const auto num = [](double v) { return format_sig(v, 9); };
    out << "family,peak_theta_cos,peak_phi_cos,peak_theta_deg,peak_phi_deg,main_lobe_area_3db\n";
    for (const auto &r : run.summary)
        out << to_string(r.family) << ',' << num(r.peak.cosines.theta_cos) << ',' << num(r.peak.cosines.phi_cos) << ','
            << num(r.peak.angles.theta_deg) << ',' << num(r.peak.angles.phi_deg) << ',' << num(r.main_lobe_area)
            << '\n';
}

void write_crb_table_csv(std::ostream &out, const std::vector<CrbTableRow> &rows)
{
    const auto num = [](double v) { return format_sig(v, 9); };
    out << "family,var_x,var_y,cov_xy,mean_rho2,objective,q_factor,crb_theta_cos,crb_phi_cos,crb_sum\n";
    for (const auto &r : rows)
        out << to_string(r.family) << ',' << num(r.stats.var_x) << ',' << num(r.stats.var_y) << ','
            << num(r.stats.cov_xy) << ',' << num(r.stats.mean_rho2) << ',' << num(r.objective) << ','
            << num(r.bound.q_factor) << ',' << num(r.bound.crb_theta_cos) << ',' << num(r.bound.crb_phi_cos) << ','
            << num(r.bound.total()) << '\n';
}

std::string metadata_json(const RunMetadata &meta)
{
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(meta.config_hash));
    nlohmann::ordered_json j;
    j["experiment"] = meta.experiment;
    j["config_hash"] = hash;
    j["seed"] = meta.seed;
    j["version"] = meta.version;
    j["timestamp"] = meta.timestamp;
    j["threads"] = meta.threads;
    j["warnings"] = meta.warnings;
    return j.dump(2) + "\n";
}

namespace {

std::ofstream open_output(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

} // namespace

std::filesystem::path write_outputs(const SweepResult &result, const std::filesystem::path &output_dir)
{
    std::filesystem::create_directories(output_dir);
    const auto csv = output_dir / (result.metadata.experiment + ".csv");
    {
        auto out = open_output(csv);
        write_sweep_csv(out, result);
    }
    auto meta = open_output(output_dir / (result.metadata.experiment + ".meta.json"));
    meta << metadata_json(result.metadata);
    return csv;
}

std::vector<std::filesystem::path> write_outputs(const SpectrumRun &run, const std::filesystem::path &output_dir)
{
    std::filesystem::create_directories(output_dir);
    std::vector<std::filesystem::path> written;
    for (const auto &[family, grid] : run.grids) {
        std::string name = "spectrum_" + std::string(to_string(family)) + ".csv";
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
        const auto path = output_dir / name;
        auto out = open_output(path);
        write_spectrum_csv(out, grid);
        written.push_back(path);
    }
    const auto summary = output_dir / "spectrum_summary.csv";
    {
        auto out = open_output(summary);
        write_spectrum_summary_csv(out, run);
    }
    written.push_back(summary);
    auto meta = open_output(output_dir / "spectrum.meta.json");
    meta << metadata_json(run.metadata);
    return written;
}

} // namespace madoa
