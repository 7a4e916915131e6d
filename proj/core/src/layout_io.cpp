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

#include "madoa/layout_io.hpp"

#include "madoa/errors.hpp"
#include "madoa/format.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace madoa {

void write_layout_csv(std::ostream &out, const ArrayLayout &layout)
{
    out << "x_lambda,y_lambda\n";
    for (const auto &p : layout.positions)
        out << format_sig(p.x, 12) << ',' << format_sig(p.y, 12) << '\n';
}

ArrayLayout read_layout_csv(std::istream &in, double d_min)
{
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("layout CSV is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "x_lambda,y_lambda")
        throw ConfigError("layout CSV header must be 'x_lambda,y_lambda', got '" + line + "'");

    ArrayLayout layout;
    layout.d_min = d_min;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("layout CSV line " + std::to_string(lineno) + ": expected two columns");
        try {
            std::size_t used_x = 0, used_y = 0;
            const std::string xs = line.substr(0, comma);
            const std::string ys = line.substr(comma + 1);
            const double x = std::stod(xs, &used_x);
            const double y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size() || !std::isfinite(x) || !std::isfinite(y))
                throw std::invalid_argument("trailing characters");
            layout.positions.push_back({x, y});
        } catch (const std::logic_error &) {
            throw ConfigError("layout CSV line " + std::to_string(lineno) + ": not a pair of finite numbers");
        }
    }
    return layout;
}

} // namespace madoa
