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

#include <uavcov/specfun.hpp>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace uavcov::specfun
{

namespace
{

constexpr int kMaxTerms = 10000;
constexpr double kTailTol = 1e-15;
constexpr double kDegenerateGap = 1e-3;

bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

double rgamma(double x) { return is_nonpositive_integer(x) ? 0.0 : 1.0 / std::tgamma(x); }

[[noreturn]] void fail(const char* what, double a, double b, double c, double z, double last_term, double sum)
{
    std::ostringstream os;
    os.precision(17);
    os << "2F1 " << what << " after " << kMaxTerms << " terms: a=" << a << " b=" << b << " c=" << c << " z=" << z
       << " last term=" << last_term << " partial sum=" << sum;
    throw ConvergenceError(os.str());
}

// Sums the series without checking |z|; terminates exactly when a or b is a
// non-positive integer.
double series(double a, double b, double c, double z)
{
    double sum = 1.0;
    double term = 1.0;
    int small_run = 0;
    for (int n = 0; n < kMaxTerms; ++n)
    {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (term == 0.0)
            return sum;
        if (std::abs(term) <= kTailTol * std::abs(sum))
        {
            if (++small_run == 2)
                return sum;
        }
        else
        {
            small_run = 0;
        }
    }
    fail("series did not converge", a, b, c, z, term, sum);
}

double pfaff(double a, double b, double c, double z)
{
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * series(a, c - b, c, w);
}

// z < -1, a - b not an integer.
double inverse_argument(double a, double b, double c, double z)
{
    const double x = -z;
    const double gc = std::tgamma(c);
    const double t1 = gc * std::tgamma(a - b) * rgamma(a) * rgamma(c - b) * std::pow(x, -b) *
                      series(b, b - c + 1.0, b - a + 1.0, 1.0 / z);
    const double t2 = gc * std::tgamma(b - a) * rgamma(b) * rgamma(c - a) * std::pow(x, -a) *
                      series(a, a - c + 1.0, a - b + 1.0, 1.0 / z);
    return t1 + t2;
}

// Euler integral, needs c > b > 0.
double euler_integral(double a, double b, double c, double z)
{
    boost::math::quadrature::tanh_sinh<double> rule;
    auto f = [&](double t) {
        return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) * std::pow(1.0 - z * t, -a);
    };
    const double split = std::min(0.5, 1.0 / std::abs(z));
    const double integral = rule.integrate(f, 0.0, split) + rule.integrate(f, split, 1.0);
    return std::tgamma(c) * rgamma(b) * rgamma(c - b) * integral;
}

} // namespace

double hyp2f1_series(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c))
        throw std::domain_error("2F1: c must not be a non-positive integer");
    if (!(std::abs(z) < 1.0) && !is_nonpositive_integer(a) && !is_nonpositive_integer(b))
        throw std::domain_error("2F1 series needs |z| < 1");
    return series(a, b, c, z);
}

double hyp2f1_pfaff(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c))
        throw std::domain_error("2F1: c must not be a non-positive integer");
    if (!(z <= 0.0))
        throw std::domain_error("2F1: only real z <= 0 is supported");
    return pfaff(a, b, c, z);
}

double hyp2f1(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c))
        throw std::domain_error("2F1: c must not be a non-positive integer");
    if (!(z <= 0.0))
        throw std::domain_error("2F1: only real z <= 0 is supported");
    if (z == 0.0)
        return 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || z >= -0.5)
        return series(a, b, c, z);
    if (z >= -2.0)
        return pfaff(a, b, c, z);

    const double gap = std::abs((a - b) - std::round(a - b));
    if (gap >= kDegenerateGap)
        return inverse_argument(a, b, c, z);

    if (z / (z - 1.0) <= 0.95)
        return pfaff(a, b, c, z);
    if (c > b && b > 0)
        return euler_integral(a, b, c, z);
    if (c > a && a > 0)
        return euler_integral(b, a, c, z);
    fail("has degenerate a-b with no convergent representation", a, b, c, z, 0.0, 0.0);
}

double rising_factorial(double x, int n)
{
    double out = 1.0;
    for (int k = 0; k < n; ++k)
        out *= x + k;
    return out;
}

double factorial(int n)
{
    double out = 1.0;
    for (int k = 2; k <= n; ++k)
        out *= k;
    return out;
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return std::round(out);
}

std::vector<MultinomialTerm> multinomial_tuples(int n)
{
    std::vector<MultinomialTerm> out;
    if (n < 0)
        return out;
    const double nf = factorial(n);
    for (int il = 0; il <= n; ++il)
        for (int in = 0; in <= n - il; ++in)
        {
            const int is = n - il - in;
            out.push_back({il, in, is, nf / (factorial(il) * factorial(in) * factorial(is))});
        }
    return out;
}

namespace
{

void partitions(int remaining, int largest, std::vector<int>& j, std::vector<std::vector<int>>& out)
{
    if (remaining == 0)
    {
        out.push_back(j);
        return;
    }
    if (largest == 0)
        return;
    for (int count = remaining / largest; count >= 0; --count)
    {
        j[largest - 1] = count;
        partitions(remaining - count * largest, largest - 1, j, out);
    }
    j[largest - 1] = 0;
}

} // namespace

std::vector<PartitionTuple> faa_di_bruno_tuples(int n)
{
    std::vector<PartitionTuple> out;
    if (n < 1)
        return out;
    std::vector<int> j(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> all;
    partitions(n, n, j, all);

    const double nf = factorial(n);
    for (auto& tuple : all)
    {
        double denom = 1.0;
        for (int i = 1; i <= n; ++i)
        {
            const int ji = tuple[i - 1];
            denom *= factorial(ji) * std::pow(factorial(i), ji);
        }
        out.push_back({std::move(tuple), nf / denom});
    }
    return out;
}

const std::vector<PartitionTuple>& faa_di_bruno_cached(int n)
{
    static const auto cache = [] {
        std::array<std::vector<PartitionTuple>, kCachedOrders + 1> table;
        for (int k = 1; k <= kCachedOrders; ++k)
            table[k] = faa_di_bruno_tuples(k);
        return table;
    }();
    if (n < 1 || n > kCachedOrders)
        throw std::out_of_range("Faa di Bruno cache holds orders 1.." + std::to_string(kCachedOrders));
    return cache[n];
}

std::vector<double> exp_composite_derivatives(std::span<const double> y)
{
    std::vector<double> out;
    if (y.empty())
        return out;
    const double base = std::exp(y[0]);
    out.push_back(base);
    const int order = static_cast<int>(y.size()) - 1;
    for (int n = 1; n <= order; ++n)
    {
        const auto& tuples = n <= kCachedOrders ? faa_di_bruno_cached(n) : faa_di_bruno_tuples(n);
        double acc = 0.0;
        for (const auto& t : tuples)
        {
            double prod = t.coefficient;
            for (int i = 1; i <= n; ++i)
                if (t.j[i - 1] != 0)
                    prod *= std::pow(y[i], t.j[i - 1]);
            acc += prod;
        }
        out.push_back(base * acc);
    }
    return out;
}

} // namespace uavcov::specfun
