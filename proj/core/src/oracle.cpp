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

#include "epbound/sde/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>
#include <vector>

#include "epbound/errors.hpp"

namespace epbound::sde {
namespace {

void run_chunked(long n, const std::function<void(long, long)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const long workers =
      std::min<long>(hw == 0 ? 1 : static_cast<long>(hw), std::max(1L, n / 20000));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const long chunk = (n + workers - 1) / workers;
  for (long w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void SdeRunConfig::validate() const {
  if (d < 1) throw DomainError("SdeRunConfig: d must be >= 1");
  if (!(t1 > 0.0) || !(t2 > 0.0)) {
    throw DomainError("SdeRunConfig: temperatures must be positive");
  }
  if (!(gamma_t > 0.0)) {
    throw DomainError("SdeRunConfig: gamma_t must be positive");
  }
  if (n_samples < 1) throw DomainError("SdeRunConfig: n_samples must be >= 1");
  if (method == SdeMethod::euler_maruyama) {
    if (!(dt > 0.0)) throw DomainError("SdeRunConfig: dt must be positive");
    if (dt > gamma_t) {
      throw DomainError("SdeRunConfig: dt must not exceed gamma_t");
    }
  }
}

double sample_initial_energy(int d, double t1, SampleRng& rng) {
  if (d < 1) throw DomainError("sample_initial_energy: d must be >= 1");
  if (!(t1 > 0.0)) {
    throw DomainError("sample_initial_energy: temperature must be positive");
  }
  return rng.gamma_integer_shape(d, t1);
}

double exact_transition(double e0, double gamma_t, double t2, int d,
                        SampleRng& rng) {
  if (e0 < 0.0) throw DomainError("exact_transition: e0 must be >= 0");
  if (!(t2 > 0.0)) {
    throw DomainError("exact_transition: temperature must be positive");
  }
  if (!(gamma_t >= 0.0)) {
    throw DomainError("exact_transition: gamma_t must be >= 0");
  }
  const double c = 0.5 * t2 * (-std::expm1(-gamma_t));
  if (c <= 0.0) return e0;  // gamma_t == 0
  const double decayed = e0 * std::exp(-gamma_t);
  const int dof = 2 * d;
  const double shift = std::sqrt(decayed / (dof * c));
  double sum_sq = 0.0;
  for (int k = 0; k < dof; ++k) {
    const double z = rng.normal() + shift;
    sum_sq += z * z;
  }
  return c * sum_sq;
}

double euler_maruyama_transition(double e0, double gamma_t, double t2, int d,
                                 double dt, SampleRng& rng) {
  if (e0 < 0.0) throw DomainError("euler_maruyama_transition: e0 must be >= 0");
  if (!(dt > 0.0)) throw DomainError("euler_maruyama_transition: dt <= 0");
  if (!(gamma_t >= 0.0)) {
    throw DomainError("euler_maruyama_transition: gamma_t must be >= 0");
  }
  return euler_transition_with_noise(e0, gamma_t, t2, d, dt,
                                     [&rng] { return rng.normal(); });
}

SampleBatch sample_entropy_production(const SdeRunConfig& cfg) {
  cfg.validate();
  SampleBatch batch;
  batch.config = cfg;
  batch.sigma_values.assign(static_cast<std::size_t>(cfg.n_samples), 0.0);
  const double delta_beta = 1.0 / cfg.t2 - 1.0 / cfg.t1;

  auto* out = batch.sigma_values.data();
  run_chunked(cfg.n_samples, [&cfg, delta_beta, out](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      SampleRng rng(cfg.seed, static_cast<std::uint64_t>(i));
      const double e1 = sample_initial_energy(cfg.d, cfg.t1, rng);
      const double e2 =
          cfg.method == SdeMethod::exact_transition
              ? exact_transition(e1, cfg.gamma_t, cfg.t2, cfg.d, rng)
              : euler_maruyama_transition(e1, cfg.gamma_t, cfg.t2, cfg.d,
                                          cfg.dt, rng);
      out[i] = -delta_beta * (e2 - e1);
    }
  });
  return batch;
}

void write_sigma_csv(const SampleBatch& batch, std::ostream& out) {
  out << "sigma\n";
  char buf[40];
  for (double s : batch.sigma_values) {
    std::snprintf(buf, sizeof buf, "%.12g", s);
    out << buf << '\n';
  }
}

}  // namespace epbound::sde
