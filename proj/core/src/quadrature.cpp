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

#include "epbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "epbound/errors.hpp"

namespace epbound {
namespace {

constexpr int kMaxDepth = 48;

double simpson(double fa, double fm, double fb, double h) {
  return (h / 6.0) * (fa + 4.0 * fm + fb);
}

// Recursive bisection with Richardson error estimate (S_left + S_right vs S).
double adapt(const Integrand& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol) {
    return left + right + err;
  }
  if (depth >= kMaxDepth) {
    throw QuadratureFailure("adaptive Simpson: depth limit reached on [" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            "]");
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

// Starts the recursion from a uniform composite so narrow features cannot
// slip between the first-level sample points.
double integrate_with_tol(const Integrand& f, double a, double b, double tol) {
  constexpr int kStartPanels = 16;
  if (!(b > a)) return 0.0;
  const double h = (b - a) / kStartPanels;
  double total = 0.0;
  for (int i = 0; i < kStartPanels; ++i) {
    const double x0 = a + i * h;
    const double x1 = (i == kStartPanels - 1) ? b : x0 + h;
    const double fa = f(x0);
    const double fm = f(0.5 * (x0 + x1));
    const double fb = f(x1);
    const double whole = simpson(fa, fm, fb, x1 - x0);
    total += adapt(f, x0, x1, fa, fm, fb, whole, tol / kStartPanels, 0);
  }
  return total;
}

// Coarse composite Simpson used only to size the relative tolerance.
double coarse_estimate(const Integrand& f, double a, double b) {
  constexpr int kPanels = 64;
  const double h = (b - a) / kPanels;
  double acc = 0.0;
  double left = f(a);
  for (int i = 0; i < kPanels; ++i) {
    const double x0 = a + i * h;
    const double mid = f(x0 + 0.5 * h);
    const double right = f(x0 + h);
    acc += simpson(left, mid, right, h);
    left = right;
  }
  return acc;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (!(max_halfwidth > 0.0)) {
    throw DomainError("quadrature max_halfwidth must be positive");
  }
}

double integrate(const Integrand& f, double a, double b,
                 const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw DomainError("integrate: empty interval (a > b)");
  }
  const double scale = std::abs(coarse_estimate(f, a, b));
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale);
  return integrate_with_tol(f, a, b, tol);
}

double integrate_line(const Integrand& f, double center, double tail_rate,
                      const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(tail_rate > 0.0)) {
    throw DomainError("integrate_line: tail_rate must be positive");
  }

  // Geometric knot ladder around the bulk: panel widths double away from the
  // center, so structure on any scale >= O(1) is resolved regardless of how
  // wide the truncated domain is. A knot at zero keeps integrand kinks on a
  // panel edge.
  const auto knots_for = [center](double half) {
    std::vector<double> knots{center - half, center, center + half};
    for (double step = 1.0; step < half; step *= 2.0) {
      knots.push_back(center - step);
      knots.push_back(center + step);
    }
    if (center - half < 0.0 && 0.0 < center + half) {
      knots.push_back(0.0);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
  };
  const auto coarse_total = [&f, &knots_for](double half) {
    double acc = 0.0;
    const auto knots = knots_for(half);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      acc += coarse_estimate(f, knots[i], knots[i + 1]);
    }
    return acc;
  };

  // Initial halfwidth from the decay rate, then grow until the estimated
  // missing tail mass (boundary value / decay rate) is inside the tolerance
  // of the integral itself.
  const double log_inv_abs = -std::log(cfg.abs_tol);
  double half = std::min(cfg.max_halfwidth,
                         std::max(8.0, (log_inv_abs + 4.0) / tail_rate));
  double coarse = coarse_total(half);
  for (;;) {
    const double tail_estimate =
        (std::abs(f(center - half)) + std::abs(f(center + half))) / tail_rate;
    const double budget =
        std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));
    if (tail_estimate <= budget) break;
    if (half >= cfg.max_halfwidth) {
      throw QuadratureFailure(
          "integrate_line: integrand still significant at max_halfwidth");
    }
    half = std::min(2.0 * half, cfg.max_halfwidth);
    coarse = coarse_total(half);
  }

  const auto knots = knots_for(half);
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse)) /
                     static_cast<double>(knots.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    total += integrate_with_tol(f, knots[i], knots[i + 1], tol);
  }
  return total;
}

}  // namespace epbound
