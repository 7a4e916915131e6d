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

#include "madoa/config.hpp"

#include "madoa/errors.hpp"
#include "madoa/format.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace madoa {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] void fail(std::string_view field, const std::string &why)
{
    throw ConfigError("config field '" + std::string(field) + "': " + why);
}

double parse_double(std::string_view text, std::string_view field)
{
    const auto t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        fail(field, "'" + t + "' is not a finite number");
    return v;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view field)
{
    const auto t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        fail(field, "'" + t + "' is not a non-negative integer");
    return v;
}

bool parse_bool(std::string_view text, std::string_view field)
{
    const auto t = lower(trim(text));
    if (t == "true" || t == "yes" || t == "1" || t == "on")
        return true;
    if (t == "false" || t == "no" || t == "0" || t == "off")
        return false;
    fail(field, "'" + t + "' is not a boolean");
}

const std::set<std::string> &array_keys()
{
    static const std::set<std::string> keys{"families", "n", "d_min", "triangle_side", "square_side",
                                            "circle_radius", "ura_rows", "ura_cols", "ura_pitch",
                                            "cosine_convention"};
    return keys;
}

const std::map<std::string, std::set<std::string>> &experiment_keys()
{
    static const std::set<std::string> common{"sources", "snr_db", "snapshots", "trials", "seed",
                                              "grid_step", "source_model", "output", "threads"};
    static const auto with = [](std::initializer_list<std::string> extra) {
        auto k = common;
        k.insert(extra.begin(), extra.end());
        return k;
    };
    static const std::map<std::string, std::set<std::string>> keys{
        {"spectrum", with({"noiseless"})},
        {"rmse_snr", common},
        {"psr", with({"separations_deg", "axis"})},
        {"rmse_area", with({"areas"})},
        {"crb", {"sources", "snr_db", "snapshots"}},
    };
    return keys;
}

void apply_array(const pt::ptree &sec, ExperimentConfig &c)
{
    for (const auto &[key, node] : sec) {
        const std::string field = "array." + key;
        const auto &v = node.data();
        if (key == "families") c.families = parse_family_list(v, field);
        else if (key == "n") c.n = parse_unsigned(v, field);
        else if (key == "d_min") c.d_min = parse_double(v, field);
        else if (key == "triangle_side") c.dims.triangle_side = parse_double(v, field);
        else if (key == "square_side") c.dims.square_side = parse_double(v, field);
        else if (key == "circle_radius") c.dims.circle_radius = parse_double(v, field);
        else if (key == "ura_rows") c.dims.ura_rows = parse_unsigned(v, field);
        else if (key == "ura_cols") c.dims.ura_cols = parse_unsigned(v, field);
        else if (key == "ura_pitch") c.dims.ura_pitch = parse_double(v, field);
        else if (key == "cosine_convention") {
            const auto t = lower(trim(v));
            if (t == "elevation") c.convention = CosineConvention::Elevation;
            else if (t == "conventional") c.convention = CosineConvention::Conventional;
            else fail(field, "expected 'elevation' or 'conventional'");
        }
    }
}

void apply_experiment(const pt::ptree &sec, std::string_view name, ExperimentConfig &c)
{
    for (const auto &[key, node] : sec) {
        const std::string field = std::string(name) + "." + key;
        const auto &v = node.data();
        if (key == "sources") c.sources = parse_source_list(v, field);
        else if (key == "snr_db") c.snr_db = parse_number_list(v, field);
        else if (key == "snapshots") c.snapshots = parse_unsigned(v, field);
        else if (key == "trials") c.trials = parse_unsigned(v, field);
        else if (key == "seed") c.seed = parse_unsigned(v, field);
        else if (key == "grid_step") c.grid_step = parse_double(v, field);
        else if (key == "output") c.output_dir = trim(v);
        else if (key == "threads") c.threads = static_cast<unsigned>(parse_unsigned(v, field));
        else if (key == "noiseless") c.noiseless = parse_bool(v, field);
        else if (key == "separations_deg") c.separations_deg = parse_number_list(v, field);
        else if (key == "areas") c.areas = parse_number_list(v, field);
        else if (key == "source_model") {
            const auto t = lower(trim(v));
            if (t == "gaussian") c.source_model = SourceModel::Gaussian;
            else if (t == "constant_modulus") c.source_model = SourceModel::ConstantModulus;
            else fail(field, "expected 'gaussian' or 'constant_modulus'");
        } else if (key == "axis") {
            const auto t = lower(trim(v));
            if (t == "theta") c.separation_axis = SeparationAxis::Theta;
            else if (t == "phi") c.separation_axis = SeparationAxis::Phi;
            else fail(field, "expected 'theta' or 'phi'");
        }
    }
}

} // namespace

std::string_view section_name(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Spectrum: return "spectrum";
    case ExperimentKind::RmseVsSnr: return "rmse_snr";
    case ExperimentKind::PsrVsSeparation: return "psr";
    case ExperimentKind::RmseVsArea: return "rmse_area";
    case ExperimentKind::CrbTable: return "crb";
    }
    return "crb";
}

std::vector<double> parse_number_list(std::string_view text, std::string_view field)
{
    std::vector<double> out;
    for (const auto &item : split(text, ','))
        out.push_back(parse_double(item, field));
    return out;
}

std::vector<LayoutFamily> parse_family_list(std::string_view text, std::string_view field)
{
    std::vector<LayoutFamily> out;
    for (const auto &item : split(text, ',')) {
        LayoutFamily f;
        try {
            f = parse_layout_family(item);
        } catch (const ConfigError &e) {
            fail(field, e.what());
        }
        if (f == LayoutFamily::Custom)
            fail(field, "'custom' is not an experiment family");
        if (std::find(out.begin(), out.end(), f) != out.end())
            fail(field, "family '" + item + "' listed twice");
        out.push_back(f);
    }
    return out;
}

SourceSet parse_source_list(std::string_view text, std::string_view field)
{
    SourceSet out;
    for (const auto &item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() < 2 || parts.size() > 3)
            fail(field, "source '" + item + "' must be theta:phi or theta:phi:power");
        Source s;
        s.theta_deg = parse_double(parts[0], field);
        s.phi_deg = parse_double(parts[1], field);
        if (parts.size() == 3)
            s.power = parse_double(parts[2], field);
        out.push_back(s);
    }
    return out;
}

ExperimentConfig default_config(ExperimentKind kind)
{
    ExperimentConfig c;
    c.kind = kind;
    switch (kind) {
    case ExperimentKind::Spectrum:
        c.snr_db = {20.0};
        c.trials = 1;
        c.output_dir = "out/spectrum";
        break;
    case ExperimentKind::RmseVsSnr:
        c.snr_db = {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
        c.output_dir = "out/rmse_snr";
        break;
    case ExperimentKind::PsrVsSeparation:
        c.sources = {{135.0, 115.0, 1.0}, {45.0, 60.0, 1.0}};
        c.snr_db = {0.0};
        c.snapshots = 100;
        c.separations_deg = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
        c.output_dir = "out/psr";
        break;
    case ExperimentKind::RmseVsArea:
        c.snr_db = {10.0};
        c.areas = {20.0, 27.71, 35.0, 40.0};
        c.output_dir = "out/rmse_area";
        break;
    case ExperimentKind::CrbTable:
        c.snr_db = {20.0};
        c.output_dir = "out/crb";
        break;
    }
    return c;
}

ExperimentConfig parse_config(std::istream &in, ExperimentKind kind)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError("malformed config: " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }

    const auto &sections = experiment_keys();
    for (const auto &[name, sec] : tree) {
        if (sec.empty() && !sec.data().empty())
            throw ConfigError("config field '" + name + "': keys must live inside a [section]");
        const std::set<std::string> *allowed = nullptr;
        if (name == "array")
            allowed = &array_keys();
        else if (auto it = sections.find(name); it != sections.end())
            allowed = &it->second;
        else
            throw ConfigError("config section '[" + name + "]' is not recognised");
        for (const auto &[key, node] : sec) {
            if (!allowed->count(key))
                throw ConfigError("config field '" + name + "." + key + "' is not a recognised key");
            (void)node;
        }
    }

    auto c = default_config(kind);
    if (auto arr = tree.get_child_optional("array"))
        apply_array(*arr, c);
    const std::string own(section_name(kind));
    for (const auto &[name, sec] : tree) {
        if (name == own) {
            apply_experiment(sec, own, c);
        } else if (name != "array") {
            // values of other experiments are still type-checked
            auto scratch = default_config(kind);
            apply_experiment(sec, name, scratch);
        }
    }
    validate_config(c);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path, ExperimentKind kind)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    return parse_config(in, kind);
}

void validate_config(const ExperimentConfig &c)
{
    if (c.families.empty()) fail("array.families", "must name at least one family");
    if (c.n == 0) fail("array.n", "must be >= 1");
    if (!(c.d_min > 0.0)) fail("array.d_min", "must be positive");
    if (!(c.dims.triangle_side > 0.0)) fail("array.triangle_side", "must be positive");
    if (!(c.dims.square_side > 0.0)) fail("array.square_side", "must be positive");
    if (!(c.dims.circle_radius > 0.0)) fail("array.circle_radius", "must be positive");
    if (c.dims.ura_rows * c.dims.ura_cols == 0) fail("array.ura_rows", "ura_rows * ura_cols must be >= 1");
    if (!(c.dims.ura_pitch > 0.0)) fail("array.ura_pitch", "must be positive");

    const std::string sec(section_name(c.kind));
    try {
        validate_sources(c.sources);
    } catch (const ConfigError &e) {
        fail(sec + ".sources", e.what());
    }
    if (c.snr_db.empty()) fail(sec + ".snr_db", "must not be empty");
    if (c.snapshots == 0) fail(sec + ".snapshots", "must be >= 1");
    if (c.trials == 0) fail(sec + ".trials", "must be >= 1");
    if (!(c.grid_step > 0.0 && c.grid_step <= 0.5)) fail(sec + ".grid_step", "must lie in (0, 0.5]");
    {
        const double k = 2.0 / c.grid_step;
        if (std::abs(k - std::round(k)) > 1e-9 * k) fail(sec + ".grid_step", "must divide 2 evenly");
    }

    switch (c.kind) {
    case ExperimentKind::Spectrum:
    case ExperimentKind::RmseVsSnr:
    case ExperimentKind::RmseVsArea:
        if (c.sources.size() != 1) fail(sec + ".sources", "this experiment takes exactly one source");
        if (c.kind != ExperimentKind::RmseVsSnr && c.snr_db.size() != 1)
            fail(sec + ".snr_db", "this experiment takes a single SNR");
        if (c.kind == ExperimentKind::RmseVsArea) {
            if (c.areas.empty()) fail(sec + ".areas", "must not be empty");
            for (double a : c.areas)
                if (!(a > 0.0)) fail(sec + ".areas", "areas must be positive");
        }
        break;
    case ExperimentKind::PsrVsSeparation:
        if (c.sources.size() < 2)
            fail(sec + ".sources", "needs at least one fixed source followed by the base of the close pair");
        if (c.separations_deg.empty()) fail(sec + ".separations_deg", "must not be empty");
        for (double d : c.separations_deg)
            if (d < 0.0) fail(sec + ".separations_deg", "separations must be >= 0");
        if (c.snr_db.size() != 1) fail(sec + ".snr_db", "this experiment takes a single SNR");
        if (c.sources.size() + 1 > 8) fail(sec + ".sources", "at most 7 sources are supported");
        break;
    case ExperimentKind::CrbTable:
        if (c.snr_db.size() != 1) fail(sec + ".snr_db", "the CRB table takes a single SNR");
        break;
    }
}

std::string canonical_text(const ExperimentConfig &c)
{
    std::ostringstream o;
    const auto num = [](double v) { return format_sig(v, 17); };
    const auto list = [&](const std::vector<double> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + num(v[i]);
        return s;
    };
    o << "experiment=" << section_name(c.kind) << '\n';
    o << "families=";
    for (std::size_t i = 0; i < c.families.size(); ++i)
        o << (i ? "," : "") << to_string(c.families[i]);
    o << "\nn=" << c.n << "\nd_min=" << num(c.d_min) << "\ntriangle_side=" << num(c.dims.triangle_side)
      << "\nsquare_side=" << num(c.dims.square_side) << "\ncircle_radius=" << num(c.dims.circle_radius)
      << "\nura=" << c.dims.ura_rows << 'x' << c.dims.ura_cols << '@' << num(c.dims.ura_pitch)
      << "\ncosine_convention=" << (c.convention == CosineConvention::Elevation ? "elevation" : "conventional")
      << "\nsources=";
    for (std::size_t i = 0; i < c.sources.size(); ++i)
        o << (i ? "," : "") << num(c.sources[i].theta_deg) << ':' << num(c.sources[i].phi_deg) << ':'
          << num(c.sources[i].power);
    o << "\nsnr_db=" << list(c.snr_db) << "\nseparations_deg=" << list(c.separations_deg)
      << "\naxis=" << (c.separation_axis == SeparationAxis::Theta ? "theta" : "phi") << "\nareas=" << list(c.areas)
      << "\nsnapshots=" << c.snapshots << "\ntrials=" << c.trials << "\nseed=" << c.seed
      << "\ngrid_step=" << num(c.grid_step)
      << "\nsource_model=" << (c.source_model == SourceModel::Gaussian ? "gaussian" : "constant_modulus")
      << "\nnoiseless=" << (c.noiseless ? "true" : "false") << '\n';
    return o.str();
}

std::uint64_t config_hash(const ExperimentConfig &config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_text(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace madoa
