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

#ifndef UAVCOV_PARALLEL_HPP
#define UAVCOV_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace uavcov
{

/// Serial execution is the reference path; the OpenMP path must produce
/// bit-identical results (tests compare them).
enum class Exec
{
    Serial,
    Parallel
};

/// Worker threads used by Exec::Parallel; 0 restores the OpenMP default.
void set_jobs(int jobs);
int jobs();

/// Calls body(i) for i in [0, n). Parallel mode schedules indices dynamically,
/// so body must only write to per-index state.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body);

} // namespace uavcov

#endif
