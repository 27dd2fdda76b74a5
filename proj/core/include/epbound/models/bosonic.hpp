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

#include "epbound/pmf.hpp"

namespace epbound::models {

/// Heat transfer through a single bosonic mode between two baths.
///
/// Entropy production lives on the lattice {m * delta : m integer} with
/// P(sigma) proportional to exp(sigma/2 - alpha |sigma|/2). delta is the
/// dimensionless level spacing (the product of the inverse-temperature gap
/// and the mode quantum); alpha > 1 is the decay exponent fixed by the bath
/// temperatures and the elapsed time.
struct BosonicParams {
  double delta = 1.0;
  double alpha = 2.0;

  void validate() const;
};

/// Normalization A(alpha) via the two geometric series.
double bosonic_partition(const BosonicParams& p);

/// Closed-form lattice moments.
double bosonic_mean(const BosonicParams& p);
double bosonic_abs_mean(const BosonicParams& p);

/// Closed-form entropy ln A - <sigma>/2 + alpha <|sigma|>/2 in nats.
double bosonic_entropy(const BosonicParams& p);

/// The lattice pmf truncated so the retained mass is at least 1 - 1e-14,
/// then renormalized (which preserves the fluctuation-theorem ratio).
Pmf bosonic_pmf(const BosonicParams& p);

/// Max over lattice points of |s/2 tanh(s/2) - |s|/2|: how far the model's
/// exponent is from the entropy-maximizing one. Tends to 0 as delta grows.
double bosonic_limit_check(const BosonicParams& p);

/// Inverts the monotone map alpha -> mean at fixed delta.
double bosonic_alpha_from_mean(double delta, double target_mean,
                               double tol = 1e-8);

}  // namespace epbound::models
