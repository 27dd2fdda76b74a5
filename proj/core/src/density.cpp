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

#include "epbound/density.hpp"

#include <cmath>

#include "epbound/errors.hpp"

namespace epbound {

double DensitySpec::at(double x) const { return std::exp(log_density(x)); }

void DensitySpec::validate() const {
  if (!log_density) {
    throw DomainError("DensitySpec: missing log_density evaluator");
  }
  if (!(tail_rate > 0.0)) {
    throw DomainError("DensitySpec: tail_rate must be positive");
  }
  if (!std::isfinite(center_hint)) {
    throw DomainError("DensitySpec: center_hint must be finite");
  }
}

double normalization(const DensitySpec& d, const QuadratureConfig& cfg) {
  d.validate();
  return integrate_line([&d](double x) { return d.at(x); }, d.center_hint,
                        d.tail_rate, cfg);
}

DensitySpec normalized(const DensitySpec& d, const QuadratureConfig& cfg) {
  const double log_norm = std::log(normalization(d, cfg));
  DensitySpec out = d;
  out.log_density = [inner = d.log_density, log_norm](double x) {
    return inner(x) - log_norm;
  };
  return out;
}

}  // namespace epbound
