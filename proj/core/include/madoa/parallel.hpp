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

#include <cstddef>
#include <functional>

namespace madoa {

/// Worker count for a run. `requested` = 0 means hardware concurrency. A positive
/// MA_DOA_THREADS caps the result; MA_DOA_THREADS=0 leaves it alone.
unsigned resolve_thread_count(unsigned requested);

/// Calls task(i) for every i in [0, count) on up to `threads` workers. Tasks must write
/// only to their own slot; the first exception thrown is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &task);

} // namespace madoa
