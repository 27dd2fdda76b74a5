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

#include <functional>

namespace epbound {

/// Tolerances and truncation limits for the adaptive integrator.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_halfwidth = 400.0;

  void validate() const;
};

using Integrand = std::function<double(double)>;

/// Adaptive Simpson integration of f over [a, b].
///
/// The interval is bisected recursively until the local Richardson error
/// estimate drops below the tolerance share of the subinterval. Throws
/// QuadratureFailure if the recursion depth limit is reached first.
double integrate(const Integrand& f, double a, double b,
                 const QuadratureConfig& cfg = {});

/// Integral of an exponentially decaying integrand over the real line.
///
/// The domain is truncated to [center - L, center + L] with L grown
/// geometrically until |f| at both boundaries falls below abs_tol, capped at
/// max_halfwidth (QuadratureFailure if the cap is hit while the boundary
/// integrand is still significant). tail_rate is the known decay rate
/// |f| <= C exp(-tail_rate |x|) used to pick the initial halfwidth.
double integrate_line(const Integrand& f, double center, double tail_rate,
                      const QuadratureConfig& cfg = {});

}  // namespace epbound
