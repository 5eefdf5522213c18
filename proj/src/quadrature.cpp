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

#include <uavcov/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace uavcov::quad
{

namespace
{

// Kronrod nodes on [0, 1] (odd indices are the Gauss-7 nodes) and weights.
constexpr std::array<double, 8> kNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel rule(const std::function<double(double)>& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = kKronrod[7] * fc;
    double gauss = kGauss[3] * fc;
    for (int i = 0; i < 7; ++i)
    {
        const double dx = half * kNodes[i];
        const double sum = f(mid - dx) + f(mid + dx);
        kronrod += kKronrod[i] * sum;
        if (i % 2 == 1)
            gauss += kGauss[i / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks,
                 const Options& options)
{
    Result out;
    if (a == b)
        return out;
    const double sign = a < b ? 1.0 : -1.0;
    if (a > b)
        std::swap(a, b);

    std::vector<double> edges{a};
    for (double x : breaks)
        if (x > a && x < b)
            edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> heap;
    double value = 0;
    double error = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        auto p = rule(f, edges[i], edges[i + 1]);
        value += p.value;
        error += p.error;
        out.evaluations += 15;
        heap.push(p);
    }

    auto target = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(value)); };
    while (error > target())
    {
        if (static_cast<int>(heap.size()) >= options.max_panels)
        {
            const auto& worst = heap.top();
            std::ostringstream os;
            os.precision(10);
            os << "adaptive quadrature did not reach tolerance " << target() << " (estimate " << error
               << "); worst panel [" << worst.a << ", " << worst.b << "] error " << worst.error;
            throw QuadratureError(os.str(), worst.a, worst.b, worst.error);
        }
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
        {
            // panel is at machine resolution; accept it as is
            error -= worst.error;
            heap.push({worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        const auto left = rule(f, worst.a, mid);
        const auto right = rule(f, mid, worst.b);
        out.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // re-sum to shed accumulated cancellation from the running updates
    value = 0;
    error = 0;
    while (!heap.empty())
    {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    out.value = sign * value;
    out.abs_error = error;
    return out;
}

} // namespace uavcov::quad
