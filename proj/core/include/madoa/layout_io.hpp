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

#include <iosfwd>

namespace madoa {

/// Writes `x_lambda,y_lambda` followed by one row per antenna, 12 significant digits.
void write_layout_csv(std::ostream &out, const ArrayLayout &layout);

/// Reads the format produced by write_layout_csv. The result is a Custom layout without
/// a region; d_min is taken from the argument. Throws ConfigError on malformed input.
ArrayLayout read_layout_csv(std::istream &in, double d_min = 0.0);

} // namespace madoa
