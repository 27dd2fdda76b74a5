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

#include "epbound/density.hpp"
#include "epbound/pmf.hpp"
#include "epbound/quadrature.hpp"
#include "epbound/support.hpp"

namespace epbound {

enum class SupportKind { finite, lattice, continuous };

/// Solved Lagrange multiplier with its log-partition value.
struct LambdaSolution {
  double lambda = 0.0;
  double log_z = 0.0;
  double achieved_mean = 0.0;
  SupportKind support_kind = SupportKind::finite;
};

/// Entropy bound at a given mean, in nats.
struct BoundValue {
  double mean = 0.0;
  double bound_nats = 0.0;
  double lambda = 0.0;
};

/// The even statistic s * tanh(s/2) appearing in the tilted exponent.
double tilt_statistic(double s);

/// Log-weight s/2 - lambda (s/2) tanh(s/2) of the maximal distribution.
double maximal_log_weight(double s, double lambda);

/// ln Z(lambda) = ln sum_i exp(maximal_log_weight(sigma_i, lambda)).
/// Lattice supports require lambda > 1 (DivergentPartition otherwise); the
/// series is summed until 50 consecutive terms fall below 1e-16 relative.
double log_partition(const SymmetricSupport& support, double lambda,
                     const QuadratureConfig& cfg = {});

/// ln Z(lambda) over the real line; requires lambda > 1.
double log_partition_continuous(double lambda,
                                const QuadratureConfig& cfg = {});

/// The maximal distribution itself. Lattice supports are truncated keeping
/// all points down to 1e-16 relative weight and renormalized (the trimmed
/// tail carries less than 1e-14 of the mass; renormalization preserves the
/// fluctuation-theorem ratio exactly).
Pmf maximal_pmf(const SymmetricSupport& support, double lambda);
DensitySpec maximal_density(double lambda, const QuadratureConfig& cfg = {});

/// Mean of the maximal distribution at a given lambda, computed as the
/// expectation of the tilt statistic (equal to <Sigma> by the sign-symmetry
/// identity, and to -2 d/dlambda ln Z analytically).
double mean_of_lambda(const SymmetricSupport& support, double lambda,
                      const QuadratureConfig& cfg = {});
double mean_of_lambda_continuous(double lambda,
                                 const QuadratureConfig& cfg = {});

/// Inverts mean_of_lambda by bracketed bisection refined with secant steps
/// (the map lambda -> mean is strictly decreasing). Throws UnattainableMean
/// when the target lies outside the support's attainable range and
/// DegenerateMean when it is reached only in the lambda -> infinity limit.
LambdaSolution solve_lambda(const SymmetricSupport& support, double target_mean,
                            double tol = 1e-8, const QuadratureConfig& cfg = {});
LambdaSolution solve_lambda_continuous(double target_mean, double tol = 1e-8,
                                       const QuadratureConfig& cfg = {});

/// Entropy bound ln Z(lambda) + (lambda - 1) mean / 2 with lambda solved for
/// the requested mean. Discrete supports containing zero return the
/// point-mass limit (bound 0, lambda = +infinity) at mean 0; the continuous
/// case throws DegenerateMean there.
BoundValue bound_discrete(const SymmetricSupport& support, double target_mean,
                          double tol = 1e-8, const QuadratureConfig& cfg = {});
BoundValue bound_continuous(double target_mean, double tol = 1e-8,
                            const QuadratureConfig& cfg = {});

}  // namespace epbound
