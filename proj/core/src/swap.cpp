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

#include "epbound/models/swap.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "epbound/errors.hpp"

namespace epbound::models {
namespace {

constexpr double kMergeTol = 1e-12;

void require_positive_gap(double a, const char* who) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(who) + ": gap parameter must be positive");
  }
}

}  // namespace

double swap_partition(double half_gap) {
  require_positive_gap(half_gap, "swap_partition");
  return 1.0 + std::exp(half_gap) + std::exp(-half_gap);
}

double swap_mean(double half_gap) {
  require_positive_gap(half_gap, "swap_mean");
  return 2.0 * half_gap * (std::exp(half_gap) - std::exp(-half_gap)) /
         swap_partition(half_gap);
}

double swap_entropy(double half_gap) {
  return std::log(swap_partition(half_gap)) - 0.5 * swap_mean(half_gap);
}

Pmf swap_pmf(double half_gap) {
  require_positive_gap(half_gap, "swap_pmf");
  const double a = half_gap;
  return Pmf::from_weights(
      SymmetricSupport::finite({-2.0 * a, 0.0, 2.0 * a}),
      {std::exp(-a), 1.0, std::exp(a)});
}

Pmf swap_pmf(const SwapParams& params) {
  if (params.composite_unit) {
    return composite_swap_pmf(*params.composite_unit);
  }
  return swap_pmf(params.half_gap);
}

Pmf compose_swaps(const Pmf& p1, const Pmf& p2) {
  std::vector<std::pair<double, double>> terms;
  terms.reserve(p1.size() * p2.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < p2.size(); ++j) {
      const double s = p1.value(i) + p2.value(j);
      terms.emplace_back(s, p1.prob(i) * p2.prob(j));
      scale = std::max(scale, std::abs(s));
    }
  }
  std::sort(terms.begin(), terms.end());

  const double tol = kMergeTol * std::max(1.0, scale);
  std::vector<double> values;
  std::vector<double> probs;
  for (const auto& [s, q] : terms) {
    if (!values.empty() && s - values.back() <= tol) {
      probs.back() += q;
    } else {
      values.push_back(s);
      probs.push_back(q);
    }
  }
  return Pmf::from_weights(SymmetricSupport::finite(std::move(values)),
                           std::move(probs));
}

Pmf composite_swap_pmf(double unit) {
  require_positive_gap(unit, "composite_swap_pmf");
  return compose_swaps(swap_pmf(unit), swap_pmf(1.5 * unit));
}

}  // namespace epbound::models
