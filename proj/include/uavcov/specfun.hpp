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

#ifndef UAVCOV_SPECFUN_HPP
#define UAVCOV_SPECFUN_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavcov::specfun
{

class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Gauss hypergeometric 2F1(a, b; c; z) for real z <= 0.
///
/// Regions:
///   |z| <= 1/2      defining series
///   1/2 < |z| <= 2  Pfaff transform, series in z/(z-1) (at most 2/3)
///   |z| > 2         1/z connection formula, series in 1/z
/// When a - b is within 1e-3 of an integer the 1/z formula degenerates; those
/// cases fall back to Pfaff (w <= 0.95) or to tanh-sinh quadrature of the
/// Euler integral. Throws std::domain_error for z > 0 or c a non-positive
/// integer, ConvergenceError if a series exceeds 10^4 terms.
double hyp2f1(double a, double b, double c, double z);

/// The defining power series only, no transformations (|z| < 1).
double hyp2f1_series(double a, double b, double c, double z);

/// Pfaff form (1-z)^-a 2F1(a, c-b; c; z/(z-1)) only, for z <= 0.
double hyp2f1_pfaff(double a, double b, double c, double z);

/// x (x+1) ... (x+n-1); 1 for n = 0.
double rising_factorial(double x, int n);

double binomial(int n, int k);
double factorial(int n);

struct MultinomialTerm
{
    int i_l;
    int i_n;
    int i_sigma;
    double coefficient; // n! / (i_l! i_n! i_sigma!)
};

/// All (i_l, i_n, i_sigma) >= 0 summing to n, lexicographic in (i_l, i_n).
std::vector<MultinomialTerm> multinomial_tuples(int n);

/// Integer partition of n in multiplicity form: j[i-1] parts of size i.
struct PartitionTuple
{
    std::vector<int> j;
    /// n! / prod(j_i! (i!)^{j_i}), the Faa di Bruno weight applied to raw
    /// derivatives y^{(i)}.
    double coefficient;
};

std::vector<PartitionTuple> faa_di_bruno_tuples(int n);

/// Same enumeration, built once per order and shared (orders 1..kCachedOrders).
const std::vector<PartitionTuple>& faa_di_bruno_cached(int n);
inline constexpr int kCachedOrders = 16;

/// Derivatives 0..n of exp(y(s)) given y(s), y'(s), ..., y^{(n)}(s).
std::vector<double> exp_composite_derivatives(std::span<const double> y);

} // namespace uavcov::specfun

#endif
