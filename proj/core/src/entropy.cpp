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

#include "epbound/entropy.hpp"

#include <cmath>

#include "epbound/errors.hpp"

namespace epbound {
namespace {

constexpr double kProbFloor = 1e-300;

bool same_support(const Pmf& p, const Pmf& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p.value(i);
    const double b = q.value(i);
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) return false;
  }
  return true;
}

}  // namespace

double shannon_entropy(const Pmf& p) {
  double h = 0.0;
  for (double pi : p.probs()) {
    if (pi > 0.0) h -= pi * std::log(pi);
  }
  return h < 0.0 ? 0.0 : h;  // clip -0.0 from rounding
}

double differential_entropy(const DensitySpec& d, const QuadratureConfig& cfg) {
  d.validate();
  const auto integrand = [&d](double x) {
    const double lp = d.log_density(x);
    const double p = std::exp(lp);
    return p > 0.0 ? -p * lp : 0.0;
  };
  return integrate_line(integrand, d.center_hint, d.tail_rate, cfg);
}

double mean(const Pmf& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    m += p.value(i) * p.prob(i);
  }
  return m;
}

double mean(const DensitySpec& d, const QuadratureConfig& cfg) {
  d.validate();
  return integrate_line([&d](double x) { return x * d.at(x); }, d.center_hint,
                        d.tail_rate, cfg);
}

double kl_divergence(const Pmf& p, const Pmf& q) {
  if (!same_support(p, q)) {
    throw SupportMismatch("kl_divergence: supports differ");
  }
  double div = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.prob(i);
    if (pi <= 0.0) continue;
    const double qi = q.prob(i);
    if (qi <= kProbFloor) {
      throw SupportMismatch(
          "kl_divergence: p has mass where q vanishes (sigma = " +
          std::to_string(p.value(i)) + ")");
    }
    div += pi * (std::log(pi) - std::log(qi));
  }
  return div;
}

double kl_divergence(const DensitySpec& p, const DensitySpec& q,
                     const QuadratureConfig& cfg) {
  p.validate();
  q.validate();
  const auto integrand = [&p, &q](double x) {
    const double lp = p.log_density(x);
    const double px = std::exp(lp);
    if (px <= 0.0) return 0.0;
    return px * (lp - q.log_density(x));
  };
  return integrate_line(integrand, p.center_hint, p.tail_rate, cfg);
}

}  // namespace epbound
