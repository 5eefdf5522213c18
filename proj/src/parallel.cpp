// SPDX-License-Identifier: Apache-2.0
//
// uavcov: coverage and backhaul analysis for urban UAV networks
// Copyright (C) 2026 The uavcov Authors
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

#include <uavcov/parallel.hpp>

#include <omp.h>

#include <atomic>
#include <exception>
#include <mutex>

namespace uavcov
{

namespace
{
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs = jobs < 0 ? 0 : jobs; }

int jobs()
{
    const int j = g_jobs.load();
    return j > 0 ? j : omp_get_max_threads();
}

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body)
{
    if (exec == Exec::Serial || n < 2)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    // exceptions cannot cross an OpenMP region; keep the lowest-index one
    std::exception_ptr first_error;
    std::size_t first_index = n;
    std::mutex guard;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(jobs())
    for (long long i = 0; i < count; ++i)
    {
        try
        {
            body(static_cast<std::size_t>(i));
        }
        catch (...)
        {
            std::lock_guard lock(guard);
            if (static_cast<std::size_t>(i) < first_index)
            {
                first_index = static_cast<std::size_t>(i);
                first_error = std::current_exception();
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace uavcov
