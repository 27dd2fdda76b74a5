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

// Acceptance suite: every release criterion as one pass/fail line. Run with
// no arguments for the full suite or name criteria to run a subset.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "epbound/entropy.hpp"
#include "epbound/errors.hpp"
#include "epbound/ft_checks.hpp"
#include "epbound/maximal.hpp"
#include "epbound/models/bosonic.hpp"
#include "epbound/models/gaussian.hpp"
#include "epbound/models/nano.hpp"
#include "epbound/models/swap.hpp"
#include "epbound/sde/analysis.hpp"
#include "epbound/sde/oracle.hpp"
#include "epbound/stats.hpp"

namespace {

using namespace epbound;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. fluctuation-theorem suite over every model distribution

Outcome run_ft_suite() {
  Outcome o;
  int checked = 0;
  const auto check_report = [&](const FtReport& r, const std::string& tag) {
    ++checked;
    note(o, r.max_dft_violation < 1e-10, tag + " dft=" + num(r.max_dft_violation));
    note(o, std::abs(r.ift_value - 1.0) < 1e-8,
         tag + " ift=" + num(r.ift_value));
    note(o, std::abs(r.identity_gap) < 1e-8,
         tag + " identity=" + num(r.identity_gap));
    note(o, r.mean >= 0.0, tag + " mean=" + num(r.mean));
  };

  for (double alpha : {1.1, 1.5, 2.0, 3.0, 5.0}) {
    check_report(ft_report(models::bosonic_pmf({1.0, alpha})),
                 "bosonic(a=" + num(alpha) + ")");
  }
  const auto grid = default_dft_grid();
  for (double mean : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    check_report(ft_report(models::gaussian_density(mean), grid),
                 "gaussian(m=" + num(mean) + ")");
  }
  for (int d : {1, 2, 3}) {
    for (double alpha : {0.6, 1.0, 1.5, 3.0}) {
      check_report(ft_report(models::nano_density({d, alpha}), grid),
                   "nano(d=" + std::to_string(d) + ",a=" + num(alpha) + ")");
    }
  }
  for (double a : {0.1, 1.0, 3.0}) {
    check_report(ft_report(models::swap_pmf(a)), "swap(a=" + num(a) + ")");
  }
  for (double b : {0.5, 1.0}) {
    check_report(ft_report(models::composite_swap_pmf(b)),
                 "composite(b=" + num(b) + ")");
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " distributions within tolerances";
  }
  return o;
}

// ---------------------------------------------------------------------------
// 2. bound equals the entropy of the constructed maximal distribution

Outcome run_bound_consistency() {
  Outcome o;
  const auto finite = SymmetricSupport::finite({-1.0, 0.0, 1.0});
  const double sup_finite = std::tanh(0.5);
  for (int k = 1; k <= 20; ++k) {
    const double target = sup_finite * k / 21.0;
    const auto b = bound_discrete(finite, target, 1e-12);
    const auto sol = solve_lambda(finite, target, 1e-12);
    const double h = shannon_entropy(maximal_pmf(finite, sol.lambda));
    note(o, std::abs(b.bound_nats - h) < 1e-8,
         "finite target=" + num(target) + " gap=" + num(b.bound_nats - h));
  }

  const auto lattice = SymmetricSupport::lattice(1.0);
  for (int k = 1; k <= 20; ++k) {
    const double target = 0.25 * k;
    const auto b = bound_discrete(lattice, target, 1e-10);
    const auto sol = solve_lambda(lattice, target, 1e-10);
    const double h = shannon_entropy(maximal_pmf(lattice, sol.lambda));
    note(o, std::abs(b.bound_nats - h) < 1e-8,
         "lattice target=" + num(target) + " gap=" + num(b.bound_nats - h));
  }

  for (int k = 1; k <= 20; ++k) {
    const double target = 0.4 * k;
    const auto b = bound_continuous(target, 1e-10);
    const auto sol = solve_lambda_continuous(target, 1e-10);
    const double h = differential_entropy(maximal_density(sol.lambda));
    note(o, std::abs(b.bound_nats - h) < 1e-8,
         "continuous target=" + num(target) + " gap=" + num(b.bound_nats - h));
  }
  if (o.pass) o.detail = "60 means across finite, lattice and continuous";
  return o;
}

// ---------------------------------------------------------------------------
// 3. bosonic curve sits under the lattice bound; gap closes as spacing grows

Outcome run_figure1() {
  Outcome o;
  const auto lattice1 = SymmetricSupport::lattice(1.0);
  for (int i = 0; i < 40; ++i) {
    const double alpha =
        std::exp(std::log(1.05) + (std::log(8.0) - std::log(1.05)) * i / 39.0);
    const models::BosonicParams prm{1.0, alpha};
    const double h = models::bosonic_entropy(prm);
    const double m = bound_discrete(lattice1, models::bosonic_mean(prm))
                         .bound_nats;
    note(o, h <= m && m - h > 0.0,
         "alpha=" + num(alpha) + " gap=" + num(m - h));
  }

  double previous_gap = 1e300;
  double final_gap = 1e300;
  for (double delta : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    const double alpha = models::bosonic_alpha_from_mean(delta, 1.0);
    const models::BosonicParams prm{delta, alpha};
    const double h = models::bosonic_entropy(prm);
    const double m =
        bound_discrete(SymmetricSupport::lattice(delta), 1.0, 1e-10)
            .bound_nats;
    const double gap = m - h;
    note(o, gap >= -1e-12, "delta=" + num(delta) + " negative gap");
    note(o, gap <= previous_gap + 1e-12,
         "delta=" + num(delta) + " gap not decreasing");
    previous_gap = gap;
    final_gap = gap;
  }
  note(o, final_gap < 1e-4, "gap at spacing 20 = " + num(final_gap));
  if (o.pass) {
    o.detail = "40-point sweep below bound; gap at spacing 20 = " +
               num(final_gap);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 4. continuous curve family ordering against the bound

Outcome run_figure2() {
  Outcome o;
  for (int i = 0; i < 32; ++i) {
    const double mean = 0.25 + (8.0 - 0.25) * i / 31.0;
    const double m = bound_continuous(mean).bound_nats;
    const double h_gauss = models::gaussian_entropy(mean);
    note(o, h_gauss <= m + 1e-9,
         "gaussian above bound at mean=" + num(mean));
    double h_nano[3];
    for (int d = 1; d <= 3; ++d) {
      const double alpha = models::nano_alpha_from_mean(d, mean);
      h_nano[d - 1] =
          differential_entropy(models::nano_density({d, alpha}));
      note(o, h_nano[d - 1] <= m + 1e-9,
           "nano d=" + std::to_string(d) + " above bound at mean=" +
               num(mean));
    }
    if (mean >= 2.0 && mean <= 6.0) {
      note(o, h_nano[0] > h_nano[1] && h_nano[1] > h_nano[2],
           "size ordering broken at mean=" + num(mean));
      note(o, m - h_nano[0] < m - h_gauss,
           "d=1 not closer than gaussian at mean=" + num(mean));
    }
  }
  if (o.pass) o.detail = "32-point grid ordered and below the bound";
  return o;
}

// ---------------------------------------------------------------------------
// 5. swap engines saturate the bound; composite support is the 9-point set

Outcome run_swap_saturation() {
  Outcome o;
  for (double a : {0.1, 1.0, 3.0}) {
    const auto p = models::swap_pmf(a);
    const double h = shannon_entropy(p);
    const double m = bound_discrete(p.support(), mean(p), 1e-12).bound_nats;
    note(o, std::abs(h - m) < 1e-10,
         "single a=" + num(a) + " |H-M|=" + num(std::abs(h - m)));
  }
  for (double b : {0.5, 1.0}) {
    const auto p = models::composite_swap_pmf(b);
    note(o, p.size() == 9, "composite b=" + num(b) + " support size " +
                               std::to_string(p.size()));
    const std::vector<double> multiples{-5, -3, -2, -1, 0, 1, 2, 3, 5};
    for (std::size_t i = 0; i < 9 && i < p.size(); ++i) {
      note(o, std::abs(p.value(i) - multiples[i] * b) < 1e-12 * (1.0 + b),
           "composite b=" + num(b) + " point " + num(p.value(i)));
    }
    const double h = shannon_entropy(p);
    const double m = bound_discrete(p.support(), mean(p), 1e-12).bound_nats;
    note(o, std::abs(h - m) < 1e-10,
         "composite b=" + num(b) + " |H-M|=" + num(std::abs(h - m)));
  }
  if (o.pass) o.detail = "H = M exactly for singles and composites";
  return o;
}

// ---------------------------------------------------------------------------
// 6. numeric differential entropy matches the Gaussian closed form

Outcome run_gaussian_closed_form() {
  Outcome o;
  double worst = 0.0;
  for (double mean : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double numeric =
        differential_entropy(models::gaussian_density(mean));
    const double closed = models::gaussian_entropy(mean);
    worst = std::max(worst, std::abs(numeric - closed));
    note(o, std::abs(numeric - closed) < 1e-8,
         "mean=" + num(mean) + " |diff|=" + num(std::abs(numeric - closed)));
  }
  if (o.pass) o.detail = "6 means, worst |numeric - closed| = " + num(worst);
  return o;
}

// ---------------------------------------------------------------------------
// 7. Monte Carlo oracle of the energy diffusion

DensitySpec order_shifted_density(int d, double alpha,
                                  const QuadratureConfig& cfg) {
  // Bessel family one order below the published one: the exact law of the
  // sampled protocol (difference of two equal-shape gamma energies).
  const double nu = d - 0.5;
  const auto log_unnorm = [d, alpha, nu](double s) {
    const double a = std::abs(s);
    const double x = alpha * a;
    double body;
    if (x < 1e-8) {
      body = (nu - 1.0) * std::log(2.0) + std::lgamma(nu) -
             nu * std::log(alpha);
    } else {
      body = nu * std::log(a) + models::log_bessel_k_half(d - 1, x);
    }
    return 0.5 * s + body;
  };
  DensitySpec spec;
  spec.log_density = log_unnorm;
  spec.tail_rate = alpha - 0.5;
  spec.center_hint = 0.0;
  const double log_norm = std::log(normalization(spec, cfg));
  spec.log_density = [log_unnorm, log_norm](double s) {
    return log_unnorm(s) - log_norm;
  };
  return spec;
}

double shifted_alpha_from_mean(int d, double target,
                               const QuadratureConfig& cfg) {
  double lo = 0.5 + 1e-3;
  double hi = 64.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double m = mean(order_shifted_density(d, mid, cfg), cfg);
    if (m > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-11) break;
  }
  return 0.5 * (lo + hi);
}

Outcome run_mc_oracle() {
  Outcome o;
  const QuadratureConfig cfg;
  sde::SdeRunConfig run;
  run.d = 1;
  run.t1 = 2.0;
  run.t2 = 1.0;
  run.gamma_t = 1.0;
  run.n_samples = 1000000;
  run.seed = 42;
  const auto batch = sde::sample_entropy_production(run);

  // (a) mirrored-bin sign symmetry within 3 standard errors everywhere
  const auto dft = sde::empirical_dft_check(batch);
  note(o, dft.max_abs_z <= 3.0,
       "dft worst |z| = " + num(dft.max_abs_z) + " over " +
           std::to_string(dft.bins.size()) + " bins");

  // (b) chi-squared against the published density, alpha by mean matching
  const auto gof = sde::validate_against_eq22(batch, 0.01, cfg);
  note(o, gof.accepted,
       "published-density fit REJECTED: chi2=" + num(gof.chi_squared) +
           " dof=" + std::to_string(gof.dof) + " p=" + num(gof.p_value) +
           " (alpha=" + num(gof.alpha_fitted) + ")");

  // Diagnostic for the line above: the same batch against the Bessel family
  // one order lower, which is what the sampled diffusion actually implies.
  const double alpha_shift =
      shifted_alpha_from_mean(run.d, gof.empirical_mean, cfg);
  const auto gof_shift = sde::chi_squared_gof(
      batch.sigma_values, order_shifted_density(run.d, alpha_shift, cfg), 1,
      0.01, cfg);
  std::printf(
      "       [diagnostic] order d-1/2 fit: chi2=%.1f dof=%ld p=%.3g -> %s "
      "(alpha=%.4f)\n",
      gof_shift.chi_squared, gof_shift.dof, gof_shift.p_value,
      gof_shift.accepted ? "accepted" : "rejected", alpha_shift);

  // (c) independent integrator agreement at dt = 1e-4
  sde::SdeRunConfig euler = run;
  euler.method = sde::SdeMethod::euler_maruyama;
  euler.dt = 1e-4;
  euler.n_samples = 50000;
  euler.seed = 555;
  sde::SdeRunConfig exact_small = run;
  exact_small.n_samples = 50000;
  exact_small.seed = 556;
  const auto euler_batch = sde::sample_entropy_production(euler);
  const auto exact_batch = sde::sample_entropy_production(exact_small);
  const double ks = stats::ks_two_sample_statistic(euler_batch.sigma_values,
                                                   exact_batch.sigma_values);
  const double ks_crit = stats::ks_two_sample_critical(
      0.01, euler_batch.sigma_values.size(), exact_batch.sigma_values.size());
  note(o, ks < ks_crit,
       "euler vs exact KS=" + num(ks) + " critical=" + num(ks_crit));

  // (d) negative controls must be rejected
  sde::SampleBatch gauss_batch;
  gauss_batch.config = run;
  gauss_batch.sigma_values.resize(200000);
  {
    const double gm = gof.empirical_mean;
    const double sd = std::sqrt(2.0 * gm);
    for (std::size_t i = 0; i < gauss_batch.sigma_values.size(); ++i) {
      sde::SampleRng rng(777, i);
      gauss_batch.sigma_values[i] = gm + sd * rng.normal();
    }
  }
  const auto gof_gauss = sde::validate_against_eq22(gauss_batch, 0.01, cfg);
  note(o, !gof_gauss.accepted, "gaussian control was not rejected");

  sde::SampleBatch shifted;
  shifted.config = run;
  shifted.sigma_values.resize(200000);
  for (std::size_t i = 0; i < shifted.sigma_values.size(); ++i) {
    sde::SampleRng rng(778, i);
    shifted.sigma_values[i] = 1.0 + rng.normal();  // variance 1, not 2
  }
  const auto dft_shifted = sde::empirical_dft_check(shifted);
  note(o, dft_shifted.max_abs_z > 5.0,
       "non-compliant control not flagged (worst z = " +
           num(dft_shifted.max_abs_z) + ")");

  if (o.pass) o.detail = "all oracle checks passed";
  return o;
}

// ---------------------------------------------------------------------------
// 8. random compliant perturbations never beat the bound

Outcome run_maximality() {
  Outcome o;
  const double lambda0 = 2.0;
  const double target = mean_of_lambda_continuous(lambda0);
  const double m_bound =
      log_partition_continuous(lambda0) + 0.5 * (lambda0 - 1.0) * target;

  sde::SampleRng rng(1234, 0);
  int tested = 0;
  double worst = -1e300;
  for (int rep = 0; rep < 10; ++rep) {
    // random smooth even bump field on the positive half, mirrored through
    // the compliance ratio by construction (even exponent terms only)
    double c[3], w[3], x0[3];
    for (int k = 0; k < 3; ++k) {
      c[k] = 0.3 * (rng.uniform() - 0.5);
      w[k] = 0.3 + 1.7 * rng.uniform();
      x0[k] = 6.0 * rng.uniform();
    }
    const auto bump = [&](double s) {
      const double a = std::abs(s);
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double z = (a - x0[k]) / w[k];
        acc += c[k] * std::exp(-z * z);
      }
      return acc;
    };
    // mean restored by re-tilting with the even statistic
    const auto log_weight = [&](double s, double t) {
      return maximal_log_weight(s, lambda0) + bump(s) -
             0.5 * t * tilt_statistic(s);
    };
    const auto mean_at = [&](double t) {
      QuadratureConfig cfg;
      const double rate = 0.5 * (lambda0 + std::min(t, 0.0) - 1.0);
      DensitySpec d;
      d.log_density = [&, t](double s) { return log_weight(s, t); };
      d.tail_rate = std::max(rate, 0.01);
      d.center_hint = 0.0;
      const double z = normalization(d, cfg);
      return integrate_line(
                 [&](double s) {
                   return tilt_statistic(s) * std::exp(log_weight(s, t));
                 },
                 0.0, d.tail_rate, cfg) /
             z;
    };
    double lo = -0.8;
    double hi = 8.0;
    for (int it = 0; it < 120; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mean_at(mid) > target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double t = 0.5 * (lo + hi);
    DensitySpec perturbed;
    perturbed.log_density = [&, t](double s) { return log_weight(s, t); };
    perturbed.tail_rate =
        std::max(0.5 * (lambda0 + std::min(t, 0.0) - 1.0), 0.01);
    perturbed.center_hint = 0.0;
    const double h = differential_entropy(normalized(perturbed));
    worst = std::max(worst, h - m_bound);
    ++tested;
    note(o, h <= m_bound + 1e-9,
         "perturbation " + std::to_string(rep) + " exceeds bound by " +
             num(h - m_bound));
  }
  if (o.pass) {
    o.detail = std::to_string(tested) +
               " perturbations, worst entropy - bound = " + num(worst);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<Outcome()>> criteria{
      {"ft_suite", run_ft_suite},
      {"bound_consistency", run_bound_consistency},
      {"figure1", run_figure1},
      {"figure2", run_figure2},
      {"swap_saturation", run_swap_saturation},
      {"gaussian_closed_form", run_gaussian_closed_form},
      {"mc_oracle", run_mc_oracle},
      {"maximality", run_maximality},
  };

  std::vector<std::string> selected;
  for (int i = 1; i < argc; ++i) selected.emplace_back(argv[i]);
  if (selected.empty()) {
    for (const auto& [name, fn] : criteria) selected.push_back(name);
  }

  int failures = 0;
  for (const auto& name : selected) {
    const auto it = criteria.find(name);
    if (it == criteria.end()) {
      std::printf("FAIL — %s: unknown criterion\n", name.c_str());
      ++failures;
      continue;
    }
    Outcome outcome;
    try {
      outcome = it->second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s — %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
