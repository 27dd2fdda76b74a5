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

#include <span>
#include <vector>

#include "epbound/density.hpp"
#include "epbound/pmf.hpp"
#include "epbound/quadrature.hpp"

namespace epbound {

/// Fluctuation-theorem compliance summary of one distribution.
struct FtReport {
  double max_dft_violation = 0.0;
  double ift_value = 1.0;   // <e^{-Sigma}>, equals 1 under the theorem
  double identity_gap = 0.0;  // <Sigma> - <Sigma tanh(Sigma/2)>
  double mean = 0.0;
  double entropy = 0.0;
};

/// Conditional sign law p(sign | |Sigma| = eps) fixed by the theorem.
/// eps == 0 is the degenerate single-outcome case: (1, 0) with the flag set.
struct SignLaw {
  double p_plus = 1.0;
  double p_minus = 0.0;
  bool degenerate = false;
};

SignLaw conditional_sign_prob(double eps);

/// Max over sign pairs of |ln p(s) - ln p(-s) - s|. Pairs where both
/// probabilities (densities) are negligible are skipped.
double check_dft(const Pmf& p);
double check_dft(const DensitySpec& d, std::span<const double> positive_grid,
                 const QuadratureConfig& cfg = {});

/// <e^{-Sigma}>; equals 1 for compliant distributions.
double check_ift(const Pmf& p);

/// Continuous integration strategy for check_ift. dft_substitution integrates
/// the mirrored density p(-Sigma), which is exact under the theorem and free
/// of tail amplification; raw integrates e^{-Sigma} p(Sigma) directly with a
/// widened truncation and works for non-compliant densities too.
enum class IftMode { dft_substitution, raw };
double check_ift(const DensitySpec& d, const QuadratureConfig& cfg = {},
                 IftMode mode = IftMode::dft_substitution);

/// <Sigma> - <Sigma tanh(Sigma/2)>; vanishes for compliant distributions.
double check_identity(const Pmf& p);
double check_identity(const DensitySpec& d, const QuadratureConfig& cfg = {});

/// Runs the full check suite plus mean and entropy.
FtReport ft_report(const Pmf& p);
FtReport ft_report(const DensitySpec& d, std::span<const double> positive_grid,
                   const QuadratureConfig& cfg = {});

/// Default positive grid used for continuous DFT spot checks.
std::vector<double> default_dft_grid();

}  // namespace epbound
