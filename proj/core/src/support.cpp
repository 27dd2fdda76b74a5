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

#include "epbound/support.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epbound/errors.hpp"

namespace epbound {
namespace {

constexpr double kPairTol = 1e-12;

bool nearly_negated(double a, double b) {
  // a should equal -b up to rounding noise in the construction of the set.
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a + b) <= kPairTol * scale;
}

}  // namespace

SymmetricSupport SymmetricSupport::finite(std::vector<double> values) {
  if (values.empty()) {
    throw DomainError("SymmetricSupport: empty value set");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DomainError("SymmetricSupport: non-finite value");
    }
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw DomainError("SymmetricSupport: duplicate value " +
                        std::to_string(values[i]));
    }
  }

  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n / 2 + 1 && i < n; ++i) {
    const std::size_t j = n - 1 - i;
    if (!nearly_negated(values[i], values[j])) {
      throw SupportAsymmetry("SymmetricSupport: value " +
                             std::to_string(values[j]) +
                             " lacks its negation");
    }
  }

  // Canonicalize so that pairs are exact negations and an odd middle is 0.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t j = n - 1 - i;
    const double w = 0.5 * (values[j] - values[i]);
    values[i] = -w;
    values[j] = w;
  }
  if (n % 2 == 1) {
    values[n / 2] = 0.0;
  }

  SymmetricSupport s;
  s.kind_ = Kind::finite;
  s.values_ = std::move(values);
  s.contains_zero_ = (n % 2 == 1);
  return s;
}

SymmetricSupport SymmetricSupport::lattice(double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DomainError("SymmetricSupport: lattice spacing must be positive");
  }
  SymmetricSupport s;
  s.kind_ = Kind::lattice;
  s.spacing_ = spacing;
  s.contains_zero_ = true;
  return s;
}

double SymmetricSupport::spacing() const {
  if (!is_lattice()) {
    throw DomainError("SymmetricSupport: spacing() requires a lattice");
  }
  return spacing_;
}

const std::vector<double>& SymmetricSupport::values() const {
  if (!is_finite()) {
    throw DomainError("SymmetricSupport: values() requires a finite support");
  }
  return values_;
}

std::size_t SymmetricSupport::size() const { return values().size(); }

}  // namespace epbound
