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

#include "epbound/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "detail/monotone_solve.hpp"
#include "epbound/errors.hpp"

namespace epbound {
namespace {

using detail::solve_decreasing;

constexpr double kLatticeTermTol = 1e-16;
constexpr int kLatticeQuietRun = 50;
constexpr long kLatticeMaxTerms = 20'000'000;

void require_normalizable_unbounded(double lambda) {
  if (!(lambda > 1.0)) {
    throw DivergentPartition(
        "partition function diverges for lambda <= 1 on unbounded support "
        "(lambda = " +
        std::to_string(lambda) + ")");
  }
}

// The positive-tail exponent slope is (1 - lambda)/2 exactly, so the
// truncation halfwidth for continuous integrals can be fixed analytically
// instead of relying on the caller's default cap.
QuadratureConfig continuous_cfg(double lambda, const QuadratureConfig& cfg) {
  QuadratureConfig out = cfg;
  const double rate = 0.5 * (lambda - 1.0);
  out.max_halfwidth = std::max(cfg.max_halfwidth, 70.0 / rate);
  return out;
}

// Probe value used while bracketing: a lambda too close to 1 for the
// quadrature behaves as "mean effectively infinite".
constexpr double kMeanOverflow = 1e12;

// Accumulated lattice series for Z and the tilt-statistic expectation.
struct LatticeSums {
  double z = 0.0;
  double t_weighted = 0.0;
};

LatticeSums lattice_sums(double delta, double lambda) {
  require_normalizable_unbounded(lambda);
  LatticeSums acc;
  acc.z = 1.0;  // m = 0 term
  int quiet = 0;
  for (long m = 1; m <= kLatticeMaxTerms; ++m) {
    const double s = m * delta;
    const double w_pos = std::exp(maximal_log_weight(s, lambda));
    const double term = w_pos * (1.0 + std::exp(-s));  // +s and -s points
    acc.z += term;
    acc.t_weighted += tilt_statistic(s) * term;
    if (term < kLatticeTermTol * acc.z) {
      if (++quiet >= kLatticeQuietRun) return acc;
    } else {
      quiet = 0;
    }
  }
  throw DivergentPartition("lattice series did not settle (lambda too close "
                           "to 1 for this spacing)");
}

struct FiniteSums {
  double log_z = 0.0;
  double mean = 0.0;
};

FiniteSums finite_sums(const SymmetricSupport& support, double lambda) {
  const auto& values = support.values();
  double max_lw = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    max_lw = std::max(max_lw, maximal_log_weight(v, lambda));
  }
  double z = 0.0;
  double tw = 0.0;
  for (double v : values) {
    const double w = std::exp(maximal_log_weight(v, lambda) - max_lw);
    z += w;
    tw += tilt_statistic(v) * w;
  }
  return FiniteSums{max_lw + std::log(z), tw / z};
}

LambdaSolution solve_unbounded(const std::function<double(double)>& mean_fn,
                               const std::function<double(double)>& log_z_fn,
                               double target_mean, double tol,
                               SupportKind kind) {
  if (!(target_mean >= 0.0)) {
    throw DomainError("solve_lambda: target mean must be >= 0");
  }
  if (target_mean == 0.0) {
    throw DegenerateMean(
        "solve_lambda: mean 0 is reached only as lambda -> infinity");
  }
  // Bracket on u = ln(lambda - 1); mean is decreasing in lambda. Probes too
  // close to lambda = 1 can exhaust the quadrature truncation; monotonicity
  // lets them stand in for an arbitrarily large mean.
  const auto f = [&](double u) {
    try {
      return mean_fn(1.0 + std::exp(u)) - target_mean;
    } catch (const QuadratureFailure&) {
      return kMeanOverflow;
    }
  };
  double u_lo = 0.0;  // lambda = 2
  double f_lo = f(u_lo);
  double u_hi = u_lo;
  double f_hi = f_lo;
  if (f_lo >= 0.0) {
    for (int k = 0; f_hi > 0.0; ++k) {
      if (k > 60) throw UnattainableMean("solve_lambda: bracket overflow");
      u_hi += 2.0;
      f_hi = f(u_hi);
    }
  } else {
    for (int k = 0; f_lo < 0.0; ++k) {
      if (k > 40) {
        throw UnattainableMean(
            "solve_lambda: target mean too large for this support");
      }
      u_lo -= 2.0;
      f_lo = f(u_lo);
    }
  }
  const double u = solve_decreasing(f, u_lo, f_lo, u_hi, f_hi, tol);
  const double lambda = 1.0 + std::exp(u);
  return LambdaSolution{lambda, log_z_fn(lambda), mean_fn(lambda) , kind};
}

}  // namespace

double tilt_statistic(double s) { return s * std::tanh(0.5 * s); }

double maximal_log_weight(double s, double lambda) {
  return 0.5 * s - 0.5 * lambda * tilt_statistic(s);
}

double log_partition(const SymmetricSupport& support, double lambda,
                     const QuadratureConfig& cfg) {
  (void)cfg;
  if (support.is_finite()) {
    return finite_sums(support, lambda).log_z;
  }
  return std::log(lattice_sums(support.spacing(), lambda).z);
}

double log_partition_continuous(double lambda, const QuadratureConfig& cfg) {
  require_normalizable_unbounded(lambda);
  const double rate = 0.5 * (lambda - 1.0);
  const double z = integrate_line(
      [lambda](double s) { return std::exp(maximal_log_weight(s, lambda)); },
      0.0, rate, continuous_cfg(lambda, cfg));
  return std::log(z);
}

Pmf maximal_pmf(const SymmetricSupport& support, double lambda) {
  if (support.is_finite()) {
    const auto& values = support.values();
    double max_lw = -std::numeric_limits<double>::infinity();
    for (double v : values) {
      max_lw = std::max(max_lw, maximal_log_weight(v, lambda));
    }
    std::vector<double> weights(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      weights[i] = std::exp(maximal_log_weight(values[i], lambda) - max_lw);
    }
    return Pmf::from_weights(support, std::move(weights));
  }

  require_normalizable_unbounded(lambda);
  const double delta = support.spacing();
  std::vector<double> pos_weights;  // m = 1, 2, ...
  double z = 1.0;
  int quiet = 0;
  for (long m = 1; m <= kLatticeMaxTerms; ++m) {
    const double s = m * delta;
    const double w_pos = std::exp(maximal_log_weight(s, lambda));
    const double term = w_pos * (1.0 + std::exp(-s));
    pos_weights.push_back(w_pos);
    z += term;
    if (term < kLatticeTermTol * z) {
      if (++quiet >= kLatticeQuietRun) break;
    } else {
      quiet = 0;
    }
    if (m == kLatticeMaxTerms) {
      throw DivergentPartition("lattice truncation did not settle");
    }
  }
  const long m_max = static_cast<long>(pos_weights.size());
  std::vector<double> values;
  std::vector<double> weights;
  values.reserve(2 * m_max + 1);
  weights.reserve(2 * m_max + 1);
  for (long m = -m_max; m <= m_max; ++m) {
    const double s = m * delta;
    values.push_back(s);
    if (m == 0) {
      weights.push_back(1.0);
    } else {
      const double w_pos = pos_weights[static_cast<std::size_t>(std::labs(m)) - 1];
      weights.push_back(m > 0 ? w_pos : w_pos * std::exp(-std::abs(s)));
    }
  }
  return Pmf::from_weights(SymmetricSupport::finite(std::move(values)),
                           std::move(weights));
}

DensitySpec maximal_density(double lambda, const QuadratureConfig& cfg) {
  const double log_z = log_partition_continuous(lambda, cfg);
  DensitySpec d;
  d.log_density = [lambda, log_z](double s) {
    return maximal_log_weight(s, lambda) - log_z;
  };
  d.tail_rate = 0.5 * (lambda - 1.0);
  d.center_hint = 0.0;
  return d;
}

double mean_of_lambda(const SymmetricSupport& support, double lambda,
                      const QuadratureConfig& cfg) {
  (void)cfg;
  if (support.is_finite()) {
    return finite_sums(support, lambda).mean;
  }
  const LatticeSums acc = lattice_sums(support.spacing(), lambda);
  return acc.t_weighted / acc.z;
}

double mean_of_lambda_continuous(double lambda, const QuadratureConfig& cfg) {
  require_normalizable_unbounded(lambda);
  const double log_z = log_partition_continuous(lambda, cfg);
  const double rate = 0.5 * (lambda - 1.0);
  return integrate_line(
      [lambda, log_z](double s) {
        return tilt_statistic(s) *
               std::exp(maximal_log_weight(s, lambda) - log_z);
      },
      0.0, rate, continuous_cfg(lambda, cfg));
}

LambdaSolution solve_lambda(const SymmetricSupport& support, double target_mean,
                            double tol, const QuadratureConfig& cfg) {
  if (!(target_mean >= 0.0)) {
    throw DomainError("solve_lambda: target mean must be >= 0");
  }
  if (support.is_lattice()) {
    return solve_unbounded(
        [&](double lam) { return mean_of_lambda(support, lam, cfg); },
        [&](double lam) { return log_partition(support, lam, cfg); },
        target_mean, tol, SupportKind::lattice);
  }

  const auto& values = support.values();
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    const double t = tilt_statistic(v);
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }

  if (t_max - t_min < 1e-14 * (1.0 + t_max)) {
    // Tilt statistic constant on the support: the compliant distribution is
    // unique and its mean is fixed.
    if (std::abs(target_mean - t_max) <= std::max(tol, 1e-12)) {
      const FiniteSums sums = finite_sums(support, 0.0);
      return LambdaSolution{0.0, sums.log_z, sums.mean, SupportKind::finite};
    }
    throw UnattainableMean(
        "solve_lambda: support admits only mean = " + std::to_string(t_max));
  }
  if (target_mean >= t_max) {
    throw UnattainableMean("solve_lambda: target mean " +
                           std::to_string(target_mean) +
                           " is at or above the supremum " +
                           std::to_string(t_max));
  }
  if (target_mean <= t_min) {
    if (t_min == 0.0) {
      throw DegenerateMean(
          "solve_lambda: mean 0 is reached only as lambda -> infinity");
    }
    throw UnattainableMean("solve_lambda: target mean " +
                           std::to_string(target_mean) +
                           " is at or below the infimum " +
                           std::to_string(t_min));
  }

  const auto f = [&](double lam) {
    return finite_sums(support, lam).mean - target_mean;
  };
  double lo = 0.0;
  double f_lo = f(lo);
  double hi = 0.0;
  double f_hi = f_lo;
  if (f_lo >= 0.0) {
    double step = 1.0;
    while (f_hi > 0.0) {
      hi += step;
      step *= 2.0;
      if (hi > 1e7) throw Error("solve_lambda: bracket overflow (upper)");
      f_hi = f(hi);
    }
  } else {
    double step = 1.0;
    while (f_lo < 0.0) {
      lo -= step;
      step *= 2.0;
      if (lo < -1e7) throw Error("solve_lambda: bracket overflow (lower)");
      f_lo = f(lo);
    }
  }
  const double lambda = solve_decreasing(f, lo, f_lo, hi, f_hi, tol);
  const FiniteSums sums = finite_sums(support, lambda);
  return LambdaSolution{lambda, sums.log_z, sums.mean, SupportKind::finite};
}

LambdaSolution solve_lambda_continuous(double target_mean, double tol,
                                       const QuadratureConfig& cfg) {
  return solve_unbounded(
      [&](double lam) { return mean_of_lambda_continuous(lam, cfg); },
      [&](double lam) { return log_partition_continuous(lam, cfg); },
      target_mean, tol, SupportKind::continuous);
}

BoundValue bound_discrete(const SymmetricSupport& support, double target_mean,
                          double tol, const QuadratureConfig& cfg) {
  if (!(target_mean >= 0.0)) {
    throw DomainError("bound_discrete: target mean must be >= 0");
  }
  if (target_mean == 0.0) {
    if (!support.contains_zero()) {
      throw UnattainableMean(
          "bound_discrete: mean 0 needs 0 in the support");
    }
    // Point mass at 0: zero entropy, approached as lambda -> infinity.
    return BoundValue{0.0, 0.0, std::numeric_limits<double>::infinity()};
  }
  const LambdaSolution sol = solve_lambda(support, target_mean, tol, cfg);
  const double bound = sol.log_z + 0.5 * (sol.lambda - 1.0) * target_mean;
  return BoundValue{target_mean, bound, sol.lambda};
}

BoundValue bound_continuous(double target_mean, double tol,
                            const QuadratureConfig& cfg) {
  if (!(target_mean >= 0.0)) {
    throw DomainError("bound_continuous: target mean must be >= 0");
  }
  const LambdaSolution sol = solve_lambda_continuous(target_mean, tol, cfg);
  const double bound = sol.log_z + 0.5 * (sol.lambda - 1.0) * target_mean;
  return BoundValue{target_mean, bound, sol.lambda};
}

}  // namespace epbound
