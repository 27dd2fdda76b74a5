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

#include "epbound/quadrature.hpp"

namespace epbound {

/// Continuous distribution on the real line, held as a log-density.
///
/// log_density must return a finite value for every finite argument (use the
/// analytic continuation / limit value at removable singularities). tail_rate
/// is a decay rate r with log p(x) <= C - r |x| for large |x|; it drives the
/// truncation of every integral against the density. center_hint marks the
/// location of the bulk of the mass.
struct DensitySpec {
  std::function<double(double)> log_density;
  double tail_rate = 1.0;
  double center_hint = 0.0;

  double log_at(double x) const { return log_density(x); }
  double at(double x) const;

  void validate() const;
};

/// Returns a copy of d whose density integrates to one: the log-density is
/// shifted by -ln of the numeric normalization integral.
DensitySpec normalized(const DensitySpec& d, const QuadratureConfig& cfg = {});

/// Numeric normalization integral of the (possibly unnormalized) density.
double normalization(const DensitySpec& d, const QuadratureConfig& cfg = {});

}  // namespace epbound
