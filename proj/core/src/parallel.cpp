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

#include "madoa/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace madoa {

unsigned resolve_thread_count(unsigned requested)
{
    unsigned n = requested;
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("MA_DOA_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap > 0)
                n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception &) {
            // ignore unparsable values
        }
    }
    return n;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &task)
{
    if (count == 0)
        return;
    const auto workers = static_cast<std::size_t>(std::max(1u, threads));
    if (workers == 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const auto i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(std::min(workers, count));
        for (std::size_t w = 0; w < std::min(workers, count); ++w)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace madoa
