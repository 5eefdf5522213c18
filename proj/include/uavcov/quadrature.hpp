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

#ifndef UAVCOV_QUADRATURE_HPP
#define UAVCOV_QUADRATURE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace uavcov::quad
{

struct Result
{
    double value = 0;
    double abs_error = 0; // Kronrod-Gauss difference estimate, summed over panels
    int evaluations = 0;
};

class QuadratureError : public std::runtime_error
{
  public:
    QuadratureError(const std::string& what, double worst_lower, double worst_upper, double worst_error)
        : std::runtime_error(what), lower(worst_lower), upper(worst_upper), error(worst_error)
    {
    }
    double lower;
    double upper;
    double error;
};

struct Options
{
    double abs_tol = 1e-4;
    double rel_tol = 0.0;
    int max_panels = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. `breaks` (any order,
/// values outside (a, b) ignored) seed the initial panels so that jumps or
/// kinks of the integrand land on panel edges. The panel with the largest
/// error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |value|); running out of panels throws
/// QuadratureError naming the worst panel.
Result integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks = {},
                 const Options& options = {});

} // namespace uavcov::quad

#endif
