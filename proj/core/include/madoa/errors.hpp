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

#include <stdexcept>
#include <string>

namespace madoa {

// Malformed or inconsistent configuration (bad lattice ratio, unknown key, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A request that cannot be satisfied by the given candidates or region.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Layout whose moment matrix is singular (e.g. collinear antennas).
class SingularGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (non-Hermitian input, K >= N, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Direction-cosine pair outside the visible region.
class InvalidDirectionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace madoa
