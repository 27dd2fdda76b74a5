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
#include "epbound/quadrature.hpp"
#include "epbound/sde/oracle.hpp"

namespace epbound::sde {

/// One mirrored histogram pair in the empirical sign-symmetry check.
struct DftBin {
  double sigma_center = 0.0;
  long count_pos = 0;
  long count_neg = 0;
  double gap = 0.0;      // ln(count_pos / count_neg) - sigma_center
  double std_err = 0.0;  // sqrt(1/count_pos + 1/count_neg)
};

struct EmpiricalDftReport {
  std::vector<DftBin> bins;  // qualifying pairs only (>= 25 counts each side)
  double max_abs_gap = 0.0;
  double max_abs_gap_se = 0.0;  // standard error of the worst bin
  double max_abs_z = 0.0;       // worst |gap| / std_err
};

/// Bins the batch symmetrically about zero (Freedman-Diaconis width unless
/// n_bins > 0 fixes the count per side) and compares ln(count ratio) of each
/// mirrored pair against its center. Requires >= 10^4 samples and at least
/// one qualifying pair; throws InsufficientData otherwise.
EmpiricalDftReport empirical_dft_check(const SampleBatch& batch,
                                       int n_bins = 0);

/// Chi-squared goodness-of-fit verdict of a sample against a density.
struct GofReport {
  double alpha_fitted = 0.0;   // density parameter chosen by mean matching
  double empirical_mean = 0.0;
  double chi_squared = 0.0;
  long dof = 0;
  double p_value = 0.0;
  bool accepted = false;
  long bins_used = 0;
};

/// Pearson chi-squared test of values against a normalized density. Bins via
/// Freedman-Diaconis, tail mass folded into the edge groups, groups merged
/// until every expected count is >= 5; dof = groups - 1 - n_fitted_params.
GofReport chi_squared_gof(std::span<const double> values,
                          const DensitySpec& density, int n_fitted_params,
                          double significance = 0.01,
                          const QuadratureConfig& cfg = {});

/// Fits the nanoparticle density parameter by matching the batch mean, then
/// runs chi_squared_gof against it. Requires >= 10^5 samples.
GofReport validate_against_eq22(const SampleBatch& batch,
                                double significance = 0.01,
                                const QuadratureConfig& cfg = {});

/// Plug-in differential entropy of a histogram (diagnostic estimator).
double histogram_entropy(std::span<const double> values);

}  // namespace epbound::sde
