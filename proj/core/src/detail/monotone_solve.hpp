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

#include <cmath>
#include <functional>
#include <string>

#include "epbound/errors.hpp"

namespace epbound::detail {

// Root of a strictly decreasing f given a bracket f(lo) >= 0 >= f(hi).
// Bisection with secant acceleration; converges on |f| <= tol.
inline double solve_decreasing(const std::function<double(double)>& f,
                               double lo, double f_lo, double hi, double f_hi,
                               double tol) {
  double best_x = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
  double best_f = std::abs(f_lo) < std::abs(f_hi) ? f_lo : f_hi;
  for (int it = 0; it < 300; ++it) {
    if (std::abs(best_f) <= tol) return best_x;
    double x;
    if (f_lo > f_hi) {
      x = lo + (hi - lo) * f_lo / (f_lo - f_hi);  // secant proposal
      const double margin = 0.01 * (hi - lo);
      if (!(x > lo + margin) || !(x < hi - margin) || (it % 3 == 2)) {
        x = 0.5 * (lo + hi);  // keep bisection progress
      }
    } else {
      x = 0.5 * (lo + hi);
    }
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best_f)) {
      best_f = fx;
      best_x = x;
    }
    if (fx >= 0.0) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    if (hi - lo < 1e-15 * (1.0 + std::abs(lo) + std::abs(hi))) break;
  }
  if (std::abs(best_f) <= 10.0 * tol) return best_x;
  throw Error("monotone solve: refinement stalled (residual " +
              std::to_string(best_f) + ")");
}

}  // namespace epbound::detail
