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

#include "epbound/models/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "epbound/errors.hpp"

namespace epbound::models {

DensitySpec gaussian_density(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw DomainError("gaussian_density: mean must be positive");
  }
  const double log_norm = -0.5 * std::log(4.0 * std::numbers::pi * mean);
  DensitySpec d;
  d.log_density = [mean, log_norm](double s) {
    const double dev = s - mean;
    return log_norm - dev * dev / (4.0 * mean);
  };
  // Effective linear decay rate at the point where the density crosses the
  // truncation floor; the growth loop in the integrator does the fine work.
  d.tail_rate = 0.5 * std::sqrt(28.0 / mean);
  d.center_hint = mean;
  return d;
}

double gaussian_entropy(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw DomainError("gaussian_entropy: mean must be positive");
  }
  return 0.5 * std::log(4.0 * std::numbers::pi * std::numbers::e * mean);
}

}  // namespace epbound::models
