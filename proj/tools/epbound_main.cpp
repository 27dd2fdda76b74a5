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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
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

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// Invariant tolerances shared by verify and the figure emitters.
constexpr double kDftTol = 1e-10;
constexpr double kIftTol = 1e-8;
constexpr double kIdentityTol = 1e-8;
constexpr double kMeanFloor = -1e-12;
constexpr double kRowSlack = 1e-9;

// Exit codes: 0 success, 1 check failure, 2 input/domain error,
// 3 internal numeric failure.
enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kNumericFailure = 3 };

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_manifest(const std::string& out_path, const std::string& command,
                    std::optional<std::uint64_t> seed) {
  json manifest;
  manifest["command_line"] = command;
  if (seed) {
    manifest["seed"] = *seed;
  } else {
    manifest["seed"] = nullptr;
  }
  manifest["tolerances"] = {
      {"dft", kDftTol},
      {"ift", kIftTol},
      {"identity", kIdentityTol},
      {"row_entropy_vs_bound", kRowSlack},
      {"quad_rel", epbound::QuadratureConfig{}.rel_tol},
      {"quad_abs", epbound::QuadratureConfig{}.abs_tol},
  };
  manifest["artifact_version"] = kVersion;
  manifest["timestamp"] = iso_timestamp();
  std::ofstream out(out_path + ".manifest.json");
  if (!out) {
    throw epbound::Error("cannot write manifest next to " + out_path);
  }
  out << manifest.dump(2) << '\n';
}

std::string join_args(int argc, char** argv) {
  std::string joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

// Accepts "start:stop:step" (inclusive stop, within half a step) or a comma
// separated list.
std::vector<double> parse_means(const std::string& text) {
  std::vector<double> means;
  if (text.find(':') != std::string::npos) {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        !(step > 0.0)) {
      throw epbound::DomainError("means range must be start:stop:step");
    }
    for (double v = start; v <= stop + 0.5 * step; v += step) {
      means.push_back(v);
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      means.push_back(std::stod(item));
    }
  }
  if (means.empty()) {
    throw epbound::DomainError("no means given");
  }
  return means;
}

struct SupportChoice {
  bool continuous = false;
  std::optional<epbound::SymmetricSupport> support;
};

SupportChoice parse_support(const std::string& text) {
  SupportChoice choice;
  if (text == "continuous") {
    choice.continuous = true;
    return choice;
  }
  if (text.rfind("lattice:", 0) == 0) {
    choice.support =
        epbound::SymmetricSupport::lattice(std::stod(text.substr(8)));
    return choice;
  }
  // anything else is a file of support points, one value per line
  std::ifstream in(text);
  if (!in) {
    throw epbound::DomainError("cannot open support file " + text);
  }
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    values.push_back(std::stod(line));
  }
  choice.support = epbound::SymmetricSupport::finite(std::move(values));
  return choice;
}

struct VerifyResult {
  epbound::FtReport report;
  double bound = 0.0;
  double gap = 0.0;
  std::string model;
};

bool verify_passes(const VerifyResult& r) {
  return r.report.max_dft_violation < kDftTol &&
         std::abs(r.report.ift_value - 1.0) < kIftTol &&
         std::abs(r.report.identity_gap) < kIdentityTol &&
         r.report.mean >= kMeanFloor;
}

void print_verify(const VerifyResult& r, bool as_json) {
  if (as_json) {
    json out;
    out["model"] = r.model;
    out["max_dft_violation"] = r.report.max_dft_violation;
    out["ift_value"] = r.report.ift_value;
    out["identity_gap"] = r.report.identity_gap;
    out["mean"] = r.report.mean;
    out["entropy_nats"] = r.report.entropy;
    out["bound_nats"] = r.bound;
    out["gap_to_bound"] = r.gap;
    out["passed"] = verify_passes(r);
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << "model:             " << r.model << '\n'
            << "max dft violation: " << fmt12(r.report.max_dft_violation)
            << '\n'
            << "ift value:         " << fmt12(r.report.ift_value) << '\n'
            << "identity gap:      " << fmt12(r.report.identity_gap) << '\n'
            << "mean:              " << fmt12(r.report.mean) << '\n'
            << "entropy (nats):    " << fmt12(r.report.entropy) << '\n'
            << "bound (nats):      " << fmt12(r.bound) << '\n'
            << "gap to bound:      " << fmt12(r.gap) << '\n'
            << "verdict:           " << (verify_passes(r) ? "pass" : "FAIL")
            << '\n';
}

// ---------------------------------------------------------------------------
// bound-curve

int run_bound_curve(const std::string& support_text, const std::string& means_text,
                    const std::string& out_path, const std::string& command) {
  const SupportChoice choice = parse_support(support_text);
  const std::vector<double> means_in = parse_means(means_text);
  std::vector<double> means = means_in;
  std::sort(means.begin(), means.end());

  std::ostringstream csv;
  csv << "mean,lambda,bound_nats\n";
  for (double mean : means) {
    const epbound::BoundValue b =
        choice.continuous
            ? epbound::bound_continuous(mean)
            : epbound::bound_discrete(*choice.support, mean);
    csv << fmt12(b.mean) << ',' << fmt12(b.lambda) << ','
        << fmt12(b.bound_nats) << '\n';
  }

  std::ofstream out(out_path);
  if (!out) throw epbound::Error("cannot write " + out_path);
  out << csv.str();
  out.close();
  write_manifest(out_path, command, std::nullopt);
  std::cout << "wrote " << means.size() << " rows to " << out_path << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// figure

int run_figure(int which, const std::string& out_path,
               const std::string& command) {
  std::ostringstream csv;
  if (which == 1) {
    // alpha sweep at unit spacing; rows sorted by mean.
    const int n_points = 40;
    const double a_lo = std::log(1.05);
    const double a_hi = std::log(8.0);
    const auto lattice = epbound::SymmetricSupport::lattice(1.0);
    struct Row {
      double mean, h, bound;
    };
    std::vector<Row> rows;
    for (int i = 0; i < n_points; ++i) {
      const double alpha =
          std::exp(a_lo + (a_hi - a_lo) * i / (n_points - 1));
      const epbound::models::BosonicParams prm{1.0, alpha};
      Row row;
      row.mean = epbound::models::bosonic_mean(prm);
      row.h = epbound::models::bosonic_entropy(prm);
      row.bound = epbound::bound_discrete(lattice, row.mean).bound_nats;
      if (row.h > row.bound + kRowSlack) {
        throw epbound::Error("figure 1: entropy exceeds the bound at mean " +
                             std::to_string(row.mean));
      }
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.mean < b.mean; });
    csv << "mean,H_bosonic,M_bound\n";
    for (const Row& r : rows) {
      csv << fmt12(r.mean) << ',' << fmt12(r.h) << ',' << fmt12(r.bound)
          << '\n';
    }
  } else if (which == 2) {
    const int n_points = 32;
    const double m_lo = 0.25;
    const double m_hi = 8.0;
    csv << "mean,h_nano_d1,h_nano_d2,h_nano_d3,h_gauss,m_bound\n";
    for (int i = 0; i < n_points; ++i) {
      const double mean = m_lo + (m_hi - m_lo) * i / (n_points - 1);
      const double bound = epbound::bound_continuous(mean).bound_nats;
      double h_nano[3];
      for (int d = 1; d <= 3; ++d) {
        const double alpha = epbound::models::nano_alpha_from_mean(d, mean);
        h_nano[d - 1] = epbound::differential_entropy(
            epbound::models::nano_density({d, alpha}));
      }
      const double h_gauss = epbound::models::gaussian_entropy(mean);
      for (double h : {h_nano[0], h_nano[1], h_nano[2], h_gauss}) {
        if (h > bound + kRowSlack) {
          throw epbound::Error("figure 2: entropy exceeds the bound at mean " +
                               std::to_string(mean));
        }
      }
      csv << fmt12(mean) << ',' << fmt12(h_nano[0]) << ',' << fmt12(h_nano[1])
          << ',' << fmt12(h_nano[2]) << ',' << fmt12(h_gauss) << ','
          << fmt12(bound) << '\n';
    }
  } else {
    throw epbound::DomainError("--which must be 1 or 2");
  }

  std::ofstream out(out_path);
  if (!out) throw epbound::Error("cannot write " + out_path);
  out << csv.str();
  out.close();
  write_manifest(out_path, command, std::nullopt);
  std::cout << "wrote figure " << which << " data to " << out_path << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& model, double delta, double alpha,
               double mean_param, int d, double a_gap, double b_unit,
               double lambda, bool as_json) {
  VerifyResult r;
  r.model = model;
  const auto grid = epbound::default_dft_grid();

  if (model == "bosonic") {
    const epbound::models::BosonicParams prm{delta, alpha};
    r.report = epbound::ft_report(epbound::models::bosonic_pmf(prm));
    r.bound = epbound::bound_discrete(epbound::SymmetricSupport::lattice(delta),
                                      r.report.mean)
                  .bound_nats;
  } else if (model == "gaussian") {
    r.report =
        epbound::ft_report(epbound::models::gaussian_density(mean_param), grid);
    r.bound = epbound::bound_continuous(r.report.mean).bound_nats;
  } else if (model == "nano") {
    r.report =
        epbound::ft_report(epbound::models::nano_density({d, alpha}), grid);
    r.bound = epbound::bound_continuous(r.report.mean).bound_nats;
  } else if (model == "swap") {
    const auto pmf = epbound::models::swap_pmf(a_gap);
    r.report = epbound::ft_report(pmf);
    r.bound = epbound::bound_discrete(pmf.support(), r.report.mean).bound_nats;
  } else if (model == "swap-composite") {
    const auto pmf = epbound::models::composite_swap_pmf(b_unit);
    r.report = epbound::ft_report(pmf);
    r.bound = epbound::bound_discrete(pmf.support(), r.report.mean).bound_nats;
  } else if (model == "maximal") {
    r.report = epbound::ft_report(epbound::maximal_density(lambda), grid);
    r.bound = epbound::bound_continuous(r.report.mean).bound_nats;
  } else {
    throw epbound::DomainError("unknown model " + model);
  }

  r.gap = r.bound - r.report.entropy;
  print_verify(r, as_json);
  return verify_passes(r) ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const epbound::sde::SdeRunConfig& cfg,
                 const std::string& out_path, bool as_json,
                 const std::string& command) {
  using namespace epbound::sde;
  cfg.validate();
  const SampleBatch batch = sample_entropy_production(cfg);

  std::ofstream out(out_path);
  if (!out) throw epbound::Error("cannot write " + out_path);
  write_sigma_csv(batch, out);
  out.close();
  write_manifest(out_path, command, cfg.seed);

  bool all_zero = true;
  for (double s : batch.sigma_values) {
    if (s != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    std::cout << "warning: T1 == T2, entropy production is identically zero; "
                 "statistical checks skipped\n";
    std::cout << "wrote " << batch.sigma_values.size() << " samples to "
              << out_path << '\n';
    return kOk;
  }

  const EmpiricalDftReport dft = empirical_dft_check(batch);
  const bool dft_ok = dft.max_abs_z <= 3.0;
  const GofReport gof = validate_against_eq22(batch);

  if (as_json) {
    json j;
    j["n_samples"] = batch.sigma_values.size();
    j["empirical_mean"] = gof.empirical_mean;
    j["dft_bins"] = dft.bins.size();
    j["dft_max_abs_gap"] = dft.max_abs_gap;
    j["dft_max_abs_gap_se"] = dft.max_abs_gap_se;
    j["dft_max_abs_z"] = dft.max_abs_z;
    j["dft_within_3se"] = dft_ok;
    j["fit_alpha"] = gof.alpha_fitted;
    j["fit_chi_squared"] = gof.chi_squared;
    j["fit_dof"] = gof.dof;
    j["fit_p_value"] = gof.p_value;
    j["fit_accepted"] = gof.accepted;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "samples:             " << batch.sigma_values.size() << '\n'
              << "empirical mean:      " << fmt12(gof.empirical_mean) << '\n'
              << "dft qualifying bins: " << dft.bins.size() << '\n'
              << "dft worst |gap|:     " << fmt12(dft.max_abs_gap) << " (se "
              << fmt12(dft.max_abs_gap_se) << ")\n"
              << "dft worst |z|:       " << fmt12(dft.max_abs_z)
              << (dft_ok ? "  (within 3 se)" : "  (EXCEEDS 3 se)") << '\n'
              << "fit alpha:           " << fmt12(gof.alpha_fitted) << '\n'
              << "fit chi-squared:     " << fmt12(gof.chi_squared) << " / dof "
              << gof.dof << '\n'
              << "fit p-value:         " << fmt12(gof.p_value) << '\n'
              << "fit verdict:         "
              << (gof.accepted ? "accepted" : "REJECTED") << " at 1%\n";
  }
  std::cout << "wrote " << batch.sigma_values.size() << " samples to "
            << out_path << '\n';
  return (dft_ok && gof.accepted) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-production information bound toolkit"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  // bound-curve
  std::string bc_support = "continuous";
  std::string bc_means;
  std::string bc_out;
  auto* bound_curve = app.add_subcommand(
      "bound-curve", "evaluate the entropy bound over a sweep of means");
  bound_curve->add_option("--support", bc_support,
                          "continuous | lattice:<delta> | <support file>");
  bound_curve->add_option("--means", bc_means,
                          "comma list or start:stop:step")->required();
  bound_curve->add_option("--out", bc_out, "output CSV path")->required();

  // figure
  int fig_which = 1;
  std::string fig_out;
  auto* figure = app.add_subcommand(
      "figure", "reproduce a model-vs-bound curve family as CSV");
  figure->add_option("--which", fig_which, "1 (bosonic) or 2 (continuous)")
      ->required();
  figure->add_option("--out", fig_out, "output CSV path")->required();

  // verify
  std::string v_model;
  double v_delta = 1.0;
  double v_alpha = 2.0;
  double v_mean = 1.0;
  int v_d = 1;
  double v_a = 1.0;
  double v_b = 1.0;
  double v_lambda = 2.0;
  bool v_json = false;
  auto* verify = app.add_subcommand(
      "verify", "run fluctuation-theorem checks on one model distribution");
  verify
      ->add_option("--model", v_model,
                   "bosonic | gaussian | nano | swap | swap-composite | maximal")
      ->required();
  verify->add_option("--delta", v_delta, "bosonic lattice spacing");
  verify->add_option("--alpha", v_alpha, "bosonic or nano decay exponent");
  verify->add_option("--mean", v_mean, "gaussian mean");
  verify->add_option("--d", v_d, "nano trap dimensions (1-3)");
  verify->add_option("--a", v_a, "swap half gap");
  verify->add_option("--b", v_b, "composite swap unit");
  verify->add_option("--lambda", v_lambda, "maximal-distribution multiplier");
  verify->add_flag("--json", v_json, "emit JSON instead of text");

  // simulate
  epbound::sde::SdeRunConfig sim_cfg;
  std::string sim_method = "exact";
  std::string sim_out;
  bool sim_json = false;
  long long sim_n = 100000;
  std::uint64_t sim_seed = 0;
  auto* simulate = app.add_subcommand(
      "simulate", "run the Monte Carlo oracle and validate the analytic law");
  simulate->add_option("--d", sim_cfg.d, "trap dimensions");
  simulate->add_option("--T1", sim_cfg.t1, "preparation temperature")
      ->required();
  simulate->add_option("--T2", sim_cfg.t2, "bath temperature")->required();
  simulate->add_option("--gamma-t", sim_cfg.gamma_t,
                       "dimensionless elapsed time")->required();
  simulate->add_option("--n", sim_n, "number of samples")->required();
  simulate->add_option("--seed", sim_seed, "64-bit RNG seed")->required();
  simulate->add_option("--method", sim_method, "exact | euler");
  simulate->add_option("--dt", sim_cfg.dt, "euler step size");
  simulate->add_option("--out", sim_out, "sample CSV path")->required();
  simulate->add_flag("--json", sim_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*bound_curve) {
      return run_bound_curve(bc_support, bc_means, bc_out, command);
    }
    if (*figure) {
      return run_figure(fig_which, fig_out, command);
    }
    if (*verify) {
      return run_verify(v_model, v_delta, v_alpha, v_mean, v_d, v_a, v_b,
                        v_lambda, v_json);
    }
    if (*simulate) {
      sim_cfg.n_samples = static_cast<long>(sim_n);
      sim_cfg.seed = sim_seed;
      if (sim_method == "exact") {
        sim_cfg.method = epbound::sde::SdeMethod::exact_transition;
      } else if (sim_method == "euler") {
        sim_cfg.method = epbound::sde::SdeMethod::euler_maruyama;
      } else {
        throw epbound::DomainError("--method must be exact or euler");
      }
      return run_simulate(sim_cfg, sim_out, sim_json, command);
    }
  } catch (const epbound::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::UnattainableMean& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::DegenerateMean& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::InsufficientData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::SupportAsymmetry& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::SupportMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::DivergentPartition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const epbound::Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kOk;
}
