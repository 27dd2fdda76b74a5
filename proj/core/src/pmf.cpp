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

#include "epbound/pmf.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "epbound/errors.hpp"

namespace epbound {

namespace {
constexpr double kSumTol = 1e-12;
}

Pmf::Pmf(SymmetricSupport support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (!support_.is_finite()) {
    throw DomainError("Pmf: support must be finite");
  }
  if (probs_.size() != support_.size()) {
    throw DomainError("Pmf: probability vector does not match support size");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DomainError("Pmf: probabilities must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw DomainError("Pmf: probabilities sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

Pmf Pmf::from_weights(SymmetricSupport support, std::vector<double> weights) {
  if (weights.size() != support.size()) {
    throw DomainError("Pmf: weight vector does not match support size");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("Pmf: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw DomainError("Pmf: weights sum to zero");
  }
  for (double& w : weights) {
    w /= sum;
  }
  return Pmf(std::move(support), std::move(weights));
}

}  // namespace epbound
