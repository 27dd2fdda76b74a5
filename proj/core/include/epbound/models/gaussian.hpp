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

#include "epbound/density.hpp"

namespace epbound::models {

/// Gaussian entropy-production density with variance pinned to twice the
/// mean, which is what the fluctuation theorem forces on a Gaussian.
/// Requires mean > 0.
DensitySpec gaussian_density(double mean);

/// Closed-form differential entropy (1/2) ln(4 pi e mean) in nats.
double gaussian_entropy(double mean);

}  // namespace epbound::models
