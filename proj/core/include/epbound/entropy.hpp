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
#include "epbound/pmf.hpp"
#include "epbound/quadrature.hpp"

namespace epbound {

/// Shannon entropy -sum p_i ln p_i in nats, with 0 ln 0 = 0.
double shannon_entropy(const Pmf& p);

/// Differential entropy -integral p ln p in nats.
double differential_entropy(const DensitySpec& d,
                            const QuadratureConfig& cfg = {});

/// First moment of the distribution.
double mean(const Pmf& p);
double mean(const DensitySpec& d, const QuadratureConfig& cfg = {});

/// Kullback-Leibler divergence D(p || q) >= 0 in nats.
///
/// Discrete inputs must share the same support; throws SupportMismatch when
/// p carries mass where q has none.
double kl_divergence(const Pmf& p, const Pmf& q);
double kl_divergence(const DensitySpec& p, const DensitySpec& q,
                     const QuadratureConfig& cfg = {});

}  // namespace epbound
