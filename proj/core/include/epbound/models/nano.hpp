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
#include "epbound/quadrature.hpp"

namespace epbound::models {

/// Levitated-nanoparticle entropy production in d = 1, 2 or 3 trap
/// dimensions. The density on the real line is proportional to
///   exp(sigma/2) |sigma|^{d+1/2} K_{d+1/2}(alpha |sigma|),
/// with K the modified Bessel function of the second kind. alpha > 1/2 keeps
/// the positive tail integrable.
struct NanoParams {
  int d = 1;
  double alpha = 1.5;

  void validate() const;
};

/// ln K_{n+1/2}(x) for n in {0, 1, 2, 3} and x > 0, evaluated through the
/// closed form K_{1/2}(x) = sqrt(pi/(2x)) e^{-x} and the upward recurrence
/// K_{nu+1}(x) = K_{nu-1}(x) + (2 nu / x) K_nu(x) on the polynomial factor.
double log_bessel_k_half(int n, double x);

/// Numerically normalized density. The removable dip at sigma = 0 is filled
/// with the small-argument limit |s|^nu K_nu(alpha |s|) -> 2^{nu-1}
/// Gamma(nu) / alpha^nu, so the log-density stays finite everywhere.
DensitySpec nano_density(const NanoParams& p, const QuadratureConfig& cfg = {});

/// Mean of the density (numeric quadrature).
double nano_mean(const NanoParams& p, const QuadratureConfig& cfg = {});

/// Inverts the monotone map alpha -> mean at fixed d.
double nano_alpha_from_mean(int d, double target_mean, double tol = 1e-8,
                            const QuadratureConfig& cfg = {});

}  // namespace epbound::models
