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

#include "epbound/models/bosonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "detail/monotone_solve.hpp"
#include "epbound/errors.hpp"

namespace epbound::models {
namespace {

constexpr double kMassTol = 1e-14;

struct Series {
  double x;  // ratio of the positive branch, exp((1 - alpha) delta / 2)
  double y;  // ratio of the negative branch, exp(-(1 + alpha) delta / 2)
};

Series branch_ratios(const BosonicParams& p) {
  return Series{std::exp(0.5 * (1.0 - p.alpha) * p.delta),
                std::exp(-0.5 * (1.0 + p.alpha) * p.delta)};
}

}  // namespace

void BosonicParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("BosonicParams: delta must be positive");
  }
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw DomainError("BosonicParams: alpha must exceed 1 (normalizability)");
  }
}

double bosonic_partition(const BosonicParams& p) {
  p.validate();
  const auto [x, y] = branch_ratios(p);
  return 1.0 + x / (1.0 - x) + y / (1.0 - y);
}

double bosonic_mean(const BosonicParams& p) {
  p.validate();
  const auto [x, y] = branch_ratios(p);
  const double a = bosonic_partition(p);
  return p.delta * (x / ((1.0 - x) * (1.0 - x)) - y / ((1.0 - y) * (1.0 - y))) /
         a;
}

double bosonic_abs_mean(const BosonicParams& p) {
  p.validate();
  const auto [x, y] = branch_ratios(p);
  const double a = bosonic_partition(p);
  return p.delta * (x / ((1.0 - x) * (1.0 - x)) + y / ((1.0 - y) * (1.0 - y))) /
         a;
}

double bosonic_entropy(const BosonicParams& p) {
  return std::log(bosonic_partition(p)) - 0.5 * bosonic_mean(p) +
         0.5 * p.alpha * bosonic_abs_mean(p);
}

Pmf bosonic_pmf(const BosonicParams& p) {
  p.validate();
  const auto [x, y] = branch_ratios(p);
  const double a = bosonic_partition(p);

  // Smallest m with both geometric tails below kMassTol * A.
  const auto tail_cut = [&](double ratio) {
    const double budget = 0.5 * kMassTol * a * (1.0 - ratio);
    return static_cast<long>(std::ceil(std::log(budget) / std::log(ratio)));
  };
  const long m_max = std::max({tail_cut(x), tail_cut(y), 4L});

  std::vector<double> values;
  std::vector<double> weights;
  values.reserve(2 * m_max + 1);
  weights.reserve(2 * m_max + 1);
  for (long m = -m_max; m <= m_max; ++m) {
    const double s = m * p.delta;
    values.push_back(s);
    weights.push_back(std::exp(0.5 * s - 0.5 * p.alpha * std::abs(s)));
  }
  return Pmf::from_weights(SymmetricSupport::finite(std::move(values)),
                           std::move(weights));
}

double bosonic_limit_check(const BosonicParams& p) {
  p.validate();
  const auto [x, y] = branch_ratios(p);
  const double a = bosonic_partition(p);
  const long m_max = std::max(
      {static_cast<long>(
           std::ceil(std::log(0.5 * kMassTol * a * (1.0 - x)) / std::log(x))),
       static_cast<long>(
           std::ceil(std::log(0.5 * kMassTol * a * (1.0 - y)) / std::log(y))),
       4L});
  // The discrepancy s/2 (1 - tanh(s/2)) peaks near |s| ~ 1.1 and decays on
  // both sides, so the scan over the retained lattice points captures it.
  double worst = 0.0;
  for (long m = 1; m <= m_max; ++m) {
    const double s = m * p.delta;
    worst = std::max(worst, 0.5 * s * (1.0 - std::tanh(0.5 * s)));
  }
  return worst;
}

double bosonic_alpha_from_mean(double delta, double target_mean, double tol) {
  if (!(delta > 0.0)) {
    throw DomainError("bosonic_alpha_from_mean: delta must be positive");
  }
  if (!(target_mean > 0.0)) {
    throw UnattainableMean(
        "bosonic_alpha_from_mean: target mean must be positive");
  }
  // mean is decreasing in alpha; bracket on u = ln(alpha - 1).
  const auto f = [&](double u) {
    return bosonic_mean({delta, 1.0 + std::exp(u)}) - target_mean;
  };
  double u_lo = 0.0;
  double f_lo = f(u_lo);
  double u_hi = u_lo;
  double f_hi = f_lo;
  if (f_lo >= 0.0) {
    for (int k = 0; f_hi > 0.0; ++k) {
      if (k > 60) throw UnattainableMean("bosonic_alpha_from_mean: bracket");
      u_hi += 2.0;
      f_hi = f(u_hi);
    }
  } else {
    for (int k = 0; f_lo < 0.0; ++k) {
      if (k > 40) {
        throw UnattainableMean(
            "bosonic_alpha_from_mean: target mean too large");
      }
      u_lo -= 2.0;
      f_lo = f(u_lo);
    }
  }
  const double u = detail::solve_decreasing(f, u_lo, f_lo, u_hi, f_hi, tol);
  return 1.0 + std::exp(u);
}

}  // namespace epbound::models
