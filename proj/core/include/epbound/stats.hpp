// Copyright 2026 The epbound authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace epbound::stats {

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
/// series for x < a + 1 and continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Survival probability of a chi-squared variable: P(X >= stat | dof).
double chi_squared_pvalue(double stat, long dof);

/// Two-sample Kolmogorov-Smirnov statistic (inputs copied and sorted).
double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic two-sample critical value at the given significance:
/// sqrt(-ln(alpha/2)/2) * sqrt((n + m)/(n m)).
double ks_two_sample_critical(double significance, std::size_t n,
                              std::size_t m);

/// Sample quantile by linear interpolation of the order statistics.
double quantile(std::vector<double> values, double q);

/// Freedman-Diaconis histogram bin width, 2 IQR n^{-1/3}.
double freedman_diaconis_width(const std::vector<double>& values);

}  // namespace epbound::stats
