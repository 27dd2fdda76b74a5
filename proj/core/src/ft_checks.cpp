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

#include "epbound/ft_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "epbound/entropy.hpp"
#include "epbound/errors.hpp"

namespace epbound {
namespace {

constexpr double kProbFloor = std::numeric_limits<double>::min();

double log_prob(double p) { return std::log(std::max(p, kProbFloor)); }

}  // namespace

SignLaw conditional_sign_prob(double eps) {
  if (eps < 0.0 || !std::isfinite(eps)) {
    throw DomainError("conditional_sign_prob: eps must be finite and >= 0");
  }
  if (eps == 0.0) {
    return SignLaw{1.0, 0.0, true};
  }
  const double p_plus = 1.0 / (1.0 + std::exp(-eps));
  return SignLaw{p_plus, 1.0 - p_plus, false};
}

double check_dft(const Pmf& p) {
  const auto& values = p.values();
  const std::size_t n = p.size();
  double worst = 0.0;
  for (std::size_t i = 0; 2 * i < n; ++i) {
    const std::size_t j = n - 1 - i;
    const double pj = p.prob(j);  // P(+sigma)
    const double pi = p.prob(i);  // P(-sigma)
    if (pj <= 0.0 && pi <= 0.0) continue;
    const double gap = log_prob(pj) - log_prob(pi) - values[j];
    worst = std::max(worst, std::abs(gap));
  }
  return worst;
}

double check_dft(const DensitySpec& d, std::span<const double> positive_grid,
                 const QuadratureConfig& cfg) {
  d.validate();
  double worst = 0.0;
  for (double s : positive_grid) {
    if (!(s > 0.0)) {
      throw DomainError("check_dft: grid values must be positive");
    }
    const double lp = d.log_density(s);
    const double lm = d.log_density(-s);
    if (std::exp(lp) < cfg.abs_tol && std::exp(lm) < cfg.abs_tol) continue;
    worst = std::max(worst, std::abs(lp - lm - s));
  }
  return worst;
}

double check_ift(const Pmf& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p.prob(i) * std::exp(-p.value(i));
  }
  return acc;
}

double check_ift(const DensitySpec& d, const QuadratureConfig& cfg,
                 IftMode mode) {
  d.validate();
  if (mode == IftMode::dft_substitution) {
    // <e^{-S}> = int p(-S) dS whenever the theorem holds.
    return integrate_line([&d](double x) { return d.at(-x); },
                          -d.center_hint, d.tail_rate, cfg);
  }
  // Raw integration; the negative tail of e^{-S} p(S) decays at rate
  // tail_rate - 1, so start from a wider truncation and let the boundary
  // growth loop do the rest.
  const double rate = std::max(d.tail_rate - 1.0, 0.05);
  return integrate_line(
      [&d](double x) { return std::exp(d.log_density(x) - x); },
      -std::abs(d.center_hint), rate, cfg);
}

double check_identity(const Pmf& p) {
  double gap = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double s = p.value(i);
    gap += p.prob(i) * s * (1.0 - std::tanh(0.5 * s));
  }
  return gap;
}

double check_identity(const DensitySpec& d, const QuadratureConfig& cfg) {
  d.validate();
  // <S> - <S tanh(S/2)> computed as one integral to avoid cancellation.
  const auto integrand = [&d](double x) {
    return x * (1.0 - std::tanh(0.5 * x)) * d.at(x);
  };
  return integrate_line(integrand, d.center_hint, d.tail_rate, cfg);
}

FtReport ft_report(const Pmf& p) {
  FtReport r;
  r.max_dft_violation = check_dft(p);
  r.ift_value = check_ift(p);
  r.identity_gap = check_identity(p);
  r.mean = mean(p);
  r.entropy = shannon_entropy(p);
  return r;
}

FtReport ft_report(const DensitySpec& d, std::span<const double> positive_grid,
                   const QuadratureConfig& cfg) {
  FtReport r;
  r.max_dft_violation = check_dft(d, positive_grid, cfg);
  r.ift_value = check_ift(d, cfg);
  r.identity_gap = check_identity(d, cfg);
  r.mean = mean(d, cfg);
  r.entropy = differential_entropy(d, cfg);
  return r;
}

std::vector<double> default_dft_grid() { return {0.5, 1.0, 2.0, 5.0}; }

}  // namespace epbound
