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

#ifndef UAVCOV_CLI_HPP
#define UAVCOV_CLI_HPP

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace uavcov::cli
{

enum ExitCode : int
{
    kSuccess = 0,
    kPartialFailure = 1, // some sweep points failed, or a run-time error
    kUsageError = 2,     // bad flags, config or parameters
};

using EnvLookup = std::function<const char*(const char*)>;

/// Runs one command line (args exclude the program name). Data goes to
/// `out` unless --out names a file; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env);

/// "v1,v2,..." or "start:stop:step" (stop included when hit within 1e-9 of a step).
std::vector<double> parse_values(std::string_view text);

struct Axis
{
    std::string key;
    std::vector<double> values;
};

/// "key=values" with a config key on the left.
Axis parse_axis(std::string_view text);

} // namespace uavcov::cli

#endif
