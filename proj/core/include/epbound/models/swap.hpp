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

#include <optional>

#include "epbound/pmf.hpp"

namespace epbound::models {

/// Two-qubit swap engine. half_gap is a in the three-outcome support
/// {0, +-2a}; composite_unit, when set, is the unit b of the four-qubit
/// engine whose support is {0, +-b, +-2b, +-3b, +-5b}.
struct SwapParams {
  double half_gap = 1.0;
  std::optional<double> composite_unit;
};

/// P(sigma) = exp(sigma/2) / Z0 on {0, +-2a}, Z0 = 1 + e^a + e^-a.
Pmf swap_pmf(double half_gap);

/// Builds the engine described by the bundle: the three-outcome pmf, or the
/// nine-outcome composite when composite_unit is set.
Pmf swap_pmf(const SwapParams& params);

/// Z0 = 1 + e^a + e^-a.
double swap_partition(double half_gap);

/// <sigma> = 2a (e^a - e^-a) / Z0.
double swap_mean(double half_gap);

/// H = ln Z0 - <sigma>/2, exact.
double swap_entropy(double half_gap);

/// Distribution of the sum of two independent entropy productions
/// (convolution). Numerically equal sums are merged; when both inputs carry
/// exp(sigma/2)-shaped weights the output does too, on the summed support.
Pmf compose_swaps(const Pmf& p1, const Pmf& p2);

/// Four-qubit preset: pair supports {0, +-2b} and {0, +-3b}, giving the
/// nine-outcome support {0, +-b, +-2b, +-3b, +-5b}.
Pmf composite_swap_pmf(double unit);

}  // namespace epbound::models
