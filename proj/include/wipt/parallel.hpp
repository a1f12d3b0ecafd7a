// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
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
#ifndef WIPT_PARALLEL_HPP
#define WIPT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wipt
{

// Number of workers to use when the caller passes threads = 0.
inline unsigned default_thread_count() noexcept
{
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

// Calls body(i) for i in [0, n) using contiguous chunks on up to `threads` workers.
// Results must be written to per-index storage; callers reduce afterwards in index order,
// which keeps every reduction independent of the thread count.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body &&body)
{
    if (threads == 0)
        threads = default_thread_count();
    const std::size_t workers = std::min<std::size_t>(threads, n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&, begin, end] {
                try
                {
                    for (std::size_t i = begin; i < end; ++i)
                        body(i);
                }
                catch (...)
                {
                    std::lock_guard guard(failure_lock);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace wipt

#endif
