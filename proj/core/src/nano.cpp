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

#include "epbound/models/nano.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "detail/monotone_solve.hpp"
#include "epbound/entropy.hpp"
#include "epbound/errors.hpp"

namespace epbound::models {
namespace {

// Below this argument the small-x limit of |s|^nu K_nu is used.
constexpr double kSmallArg = 1e-8;

// log of |s|^{n+1/2} K_{n+1/2}(alpha |s|), finite at s = 0.
double log_bessel_body(int n, double alpha, double abs_s) {
  const double nu = n + 0.5;
  const double x = alpha * abs_s;
  if (x < kSmallArg) {
    return (nu - 1.0) * std::numbers::ln2 + std::lgamma(nu) -
           nu * std::log(alpha);
  }
  return nu * std::log(abs_s) + log_bessel_k_half(n, x);
}

}  // namespace

void NanoParams::validate() const {
  if (d < 1 || d > 3) {
    throw DomainError("NanoParams: d must be 1, 2 or 3");
  }
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw DomainError("NanoParams: alpha must exceed 1/2 (integrable tail)");
  }
}

double log_bessel_k_half(int n, double x) {
  if (n < 0 || n > 3) {
    throw DomainError("log_bessel_k_half: order index out of range");
  }
  if (!(x > 0.0)) {
    throw DomainError("log_bessel_k_half: argument must be positive");
  }
  // Polynomial factor q_n(1/x): q_0 = 1, q_1 = 1 + 1/x,
  // q_{n+1} = q_{n-1} + (2n+1)/x q_n.
  const double u = 1.0 / x;
  double q_prev = 1.0;
  double q = (n == 0) ? 1.0 : 1.0 + u;
  for (int k = 1; k < n; ++k) {
    const double q_next = q_prev + (2.0 * k + 1.0) * u * q;
    q_prev = q;
    q = q_next;
  }
  return 0.5 * std::log(0.5 * std::numbers::pi / x) - x + std::log(q);
}

DensitySpec nano_density(const NanoParams& p, const QuadratureConfig& cfg) {
  p.validate();
  const int n = p.d;
  const double alpha = p.alpha;
  const auto log_unnorm = [n, alpha](double s) {
    return 0.5 * s + log_bessel_body(n, alpha, std::abs(s));
  };

  DensitySpec d;
  d.log_density = log_unnorm;
  d.tail_rate = alpha - 0.5;
  d.center_hint = 0.0;
  const double log_norm = std::log(normalization(d, cfg));
  d.log_density = [log_unnorm, log_norm](double s) {
    return log_unnorm(s) - log_norm;
  };
  return d;
}

double nano_mean(const NanoParams& p, const QuadratureConfig& cfg) {
  return mean(nano_density(p, cfg), cfg);
}

double nano_alpha_from_mean(int d, double target_mean, double tol,
                            const QuadratureConfig& cfg) {
  if (d < 1 || d > 3) {
    throw DomainError("nano_alpha_from_mean: d must be 1, 2 or 3");
  }
  if (!(target_mean > 0.0)) {
    throw UnattainableMean(
        "nano_alpha_from_mean: target mean must be positive");
  }
  // mean is decreasing in alpha; bracket on u = ln(alpha - 1/2).
  const auto f = [&](double u) {
    return nano_mean({d, 0.5 + std::exp(u)}, cfg) - target_mean;
  };
  double u_lo = 0.0;
  double f_lo = f(u_lo);
  double u_hi = u_lo;
  double f_hi = f_lo;
  if (f_lo >= 0.0) {
    for (int k = 0; f_hi > 0.0; ++k) {
      if (k > 60) throw UnattainableMean("nano_alpha_from_mean: bracket");
      u_hi += 2.0;
      f_hi = f(u_hi);
    }
  } else {
    for (int k = 0; f_lo < 0.0; ++k) {
      if (k > 40) {
        throw UnattainableMean("nano_alpha_from_mean: target mean too large");
      }
      u_lo -= 2.0;
      f_lo = f(u_lo);
    }
  }
  const double u = detail::solve_decreasing(f, u_lo, f_lo, u_hi, f_hi, tol);
  return 0.5 + std::exp(u);
}

}  // namespace epbound::models
