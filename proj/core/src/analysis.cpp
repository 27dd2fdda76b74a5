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

#include "epbound/sde/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "epbound/errors.hpp"
#include "epbound/models/nano.hpp"
#include "epbound/stats.hpp"

namespace epbound::sde {
namespace {

constexpr long kMinDftSamples = 10000;
constexpr long kMinGofSamples = 100000;
constexpr long kMinPairCount = 25;
constexpr double kMinExpected = 5.0;

// Composite Simpson over one narrow histogram bin.
double bin_mass(const DensitySpec& density, double lo, double hi) {
  constexpr int kSteps = 8;  // 2 panels per step point
  const double h = (hi - lo) / (2 * kSteps);
  double acc = density.at(lo) + density.at(hi);
  for (int i = 1; i < 2 * kSteps; ++i) {
    acc += density.at(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

}  // namespace

EmpiricalDftReport empirical_dft_check(const SampleBatch& batch, int n_bins) {
  const auto& sigma = batch.sigma_values;
  if (static_cast<long>(sigma.size()) < kMinDftSamples) {
    throw InsufficientData("empirical_dft_check: need at least 10^4 samples");
  }
  double max_abs = 0.0;
  for (double s : sigma) max_abs = std::max(max_abs, std::abs(s));
  if (!(max_abs > 0.0)) {
    throw InsufficientData("empirical_dft_check: all samples are zero");
  }
  double width;
  if (n_bins > 0) {
    width = max_abs / n_bins;
  } else {
    width = stats::freedman_diaconis_width(sigma);
    if (!(width > 0.0)) {
      throw InsufficientData("empirical_dft_check: degenerate sample spread");
    }
  }
  const long side_bins = static_cast<long>(std::ceil(max_abs / width));

  std::vector<long> pos(static_cast<std::size_t>(side_bins), 0);
  std::vector<long> neg(static_cast<std::size_t>(side_bins), 0);
  for (double s : sigma) {
    if (s == 0.0) continue;  // the zero atom has no sign partner bin
    const double a = std::abs(s);
    long k = static_cast<long>(a / width);
    if (k >= side_bins) k = side_bins - 1;
    (s > 0.0 ? pos : neg)[static_cast<std::size_t>(k)] += 1;
  }

  EmpiricalDftReport report;
  for (long k = 0; k < side_bins; ++k) {
    const long np = pos[static_cast<std::size_t>(k)];
    const long nm = neg[static_cast<std::size_t>(k)];
    if (np < kMinPairCount || nm < kMinPairCount) continue;
    DftBin bin;
    bin.sigma_center = (static_cast<double>(k) + 0.5) * width;
    bin.count_pos = np;
    bin.count_neg = nm;
    bin.gap = std::log(static_cast<double>(np) / static_cast<double>(nm)) -
              bin.sigma_center;
    bin.std_err = std::sqrt(1.0 / static_cast<double>(np) +
                            1.0 / static_cast<double>(nm));
    if (std::abs(bin.gap) >= report.max_abs_gap) {
      report.max_abs_gap = std::abs(bin.gap);
      report.max_abs_gap_se = bin.std_err;
    }
    report.max_abs_z = std::max(report.max_abs_z,
                                std::abs(bin.gap) / bin.std_err);
    report.bins.push_back(bin);
  }
  if (report.bins.empty()) {
    throw InsufficientData(
        "empirical_dft_check: no mirrored bin pair has 25 counts per side");
  }
  return report;
}

GofReport chi_squared_gof(std::span<const double> values,
                          const DensitySpec& density, int n_fitted_params,
                          double significance, const QuadratureConfig& cfg) {
  if (values.size() < 100) {
    throw InsufficientData("chi_squared_gof: sample too small");
  }
  density.validate();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double width = stats::freedman_diaconis_width(sorted);
  if (!(width > 0.0)) {
    throw InsufficientData("chi_squared_gof: degenerate sample spread");
  }
  const double lo_edge = std::floor(sorted.front() / width) * width;
  const long n_bins =
      static_cast<long>(std::ceil((sorted.back() - lo_edge) / width)) + 1;
  const double n = static_cast<double>(sorted.size());

  std::vector<long> counts(static_cast<std::size_t>(n_bins), 0);
  for (double v : sorted) {
    long k = static_cast<long>((v - lo_edge) / width);
    if (k < 0) k = 0;
    if (k >= n_bins) k = n_bins - 1;
    counts[static_cast<std::size_t>(k)] += 1;
  }

  std::vector<double> expected(static_cast<std::size_t>(n_bins), 0.0);
  for (long k = 0; k < n_bins; ++k) {
    const double a = lo_edge + k * width;
    expected[static_cast<std::size_t>(k)] =
        n * bin_mass(density, a, a + width);
  }
  // Fold the mass outside the binned range into the edge bins.
  const double span_lo = lo_edge;
  const double span_hi = lo_edge + n_bins * width;
  const double reach = 60.0 / density.tail_rate;
  expected.front() +=
      n * integrate([&density](double x) { return density.at(x); },
                    span_lo - reach, span_lo, cfg);
  expected.back() +=
      n * integrate([&density](double x) { return density.at(x); },
                    span_hi, span_hi + reach, cfg);

  // Merge bins until every group's expectation reaches the Pearson floor;
  // an underfilled remainder at the upper end joins the last group.
  std::vector<double> grp_obs;
  std::vector<double> grp_exp;
  double acc_obs = 0.0;
  double acc_exp = 0.0;
  for (long k = 0; k < n_bins; ++k) {
    acc_obs += static_cast<double>(counts[static_cast<std::size_t>(k)]);
    acc_exp += expected[static_cast<std::size_t>(k)];
    if (acc_exp >= kMinExpected) {
      grp_obs.push_back(acc_obs);
      grp_exp.push_back(acc_exp);
      acc_obs = 0.0;
      acc_exp = 0.0;
    }
  }
  if ((acc_exp > 0.0 || acc_obs > 0.0) && !grp_exp.empty()) {
    grp_obs.back() += acc_obs;
    grp_exp.back() += acc_exp;
  }
  double chi2 = 0.0;
  for (std::size_t g = 0; g < grp_exp.size(); ++g) {
    const double diff = grp_obs[g] - grp_exp[g];
    chi2 += diff * diff / grp_exp[g];
  }
  const long groups = static_cast<long>(grp_exp.size());

  GofReport report;
  report.empirical_mean = 0.0;
  for (double v : sorted) report.empirical_mean += v;
  report.empirical_mean /= n;
  report.chi_squared = chi2;
  report.bins_used = groups;
  report.dof = groups - 1 - n_fitted_params;
  if (report.dof < 1) {
    throw InsufficientData("chi_squared_gof: too few populated bins");
  }
  report.p_value = stats::chi_squared_pvalue(chi2, report.dof);
  report.accepted = report.p_value > significance;
  return report;
}

GofReport validate_against_eq22(const SampleBatch& batch, double significance,
                                const QuadratureConfig& cfg) {
  const auto& sigma = batch.sigma_values;
  if (static_cast<long>(sigma.size()) < kMinGofSamples) {
    throw InsufficientData("validate_against_eq22: need at least 10^5 samples");
  }
  double mean = 0.0;
  for (double s : sigma) mean += s;
  mean /= static_cast<double>(sigma.size());
  if (!(mean > 0.0)) {
    throw UnattainableMean(
        "validate_against_eq22: batch mean must be positive");
  }
  const double alpha =
      models::nano_alpha_from_mean(batch.config.d, mean, 1e-8, cfg);
  const DensitySpec density =
      models::nano_density({batch.config.d, alpha}, cfg);
  GofReport report =
      chi_squared_gof(sigma, density, /*n_fitted_params=*/1, significance, cfg);
  report.alpha_fitted = alpha;
  report.empirical_mean = mean;
  return report;
}

double histogram_entropy(std::span<const double> values) {
  if (values.size() < 100) {
    throw InsufficientData("histogram_entropy: sample too small");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double width = stats::freedman_diaconis_width(sorted);
  if (!(width > 0.0)) {
    throw InsufficientData("histogram_entropy: degenerate sample spread");
  }
  const double lo = std::floor(sorted.front() / width) * width;
  const long n_bins =
      static_cast<long>(std::ceil((sorted.back() - lo) / width)) + 1;
  std::vector<long> counts(static_cast<std::size_t>(n_bins), 0);
  for (double v : sorted) {
    long k = static_cast<long>((v - lo) / width);
    if (k < 0) k = 0;
    if (k >= n_bins) k = n_bins - 1;
    counts[static_cast<std::size_t>(k)] += 1;
  }
  const double n = static_cast<double>(sorted.size());
  double h = 0.0;
  for (long c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p / width);
  }
  return h;
}

}  // namespace epbound::sde
