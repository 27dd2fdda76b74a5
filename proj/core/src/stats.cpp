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

#include "epbound/stats.hpp"

#include <algorithm>
#include <cmath>

#include "epbound/errors.hpp"

namespace epbound::stats {
namespace {

constexpr int kMaxIter = 2000;
constexpr double kEps = 1e-16;

double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for the upper tail.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw DomainError("regularized_gamma_q: a must be positive");
  if (x < 0.0) throw DomainError("regularized_gamma_q: x must be >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_squared_pvalue(double stat, long dof) {
  if (dof < 1) throw DomainError("chi_squared_pvalue: dof must be >= 1");
  if (stat < 0.0) throw DomainError("chi_squared_pvalue: stat must be >= 0");
  return regularized_gamma_q(0.5 * static_cast<double>(dof), 0.5 * stat);
}

double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw InsufficientData("ks_two_sample_statistic: empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double worst = 0.0;
  while (i < a.size() && j < b.size()) {
    // step past the full tie group in both samples before comparing CDFs
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / na -
                                     static_cast<double>(j) / nb));
  }
  return worst;
}

double ks_two_sample_critical(double significance, std::size_t n,
                              std::size_t m) {
  if (!(significance > 0.0) || !(significance < 1.0)) {
    throw DomainError("ks_two_sample_critical: significance in (0, 1)");
  }
  if (n == 0 || m == 0) {
    throw InsufficientData("ks_two_sample_critical: empty sample");
  }
  const double c = std::sqrt(-0.5 * std::log(0.5 * significance));
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return c * std::sqrt((nn + mm) / (nn * mm));
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InsufficientData("quantile: empty sample");
  if (!(q >= 0.0) || !(q <= 1.0)) {
    throw DomainError("quantile: q must be in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

double freedman_diaconis_width(const std::vector<double>& values) {
  if (values.size() < 2) {
    throw InsufficientData("freedman_diaconis_width: need at least 2 values");
  }
  const double iqr = quantile(values, 0.75) - quantile(values, 0.25);
  const double n = static_cast<double>(values.size());
  return 2.0 * iqr / std::cbrt(n);
}

}  // namespace epbound::stats
