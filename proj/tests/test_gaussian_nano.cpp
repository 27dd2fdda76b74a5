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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "epbound/entropy.hpp"
#include "epbound/errors.hpp"
#include "epbound/ft_checks.hpp"
#include "epbound/models/gaussian.hpp"
#include "epbound/models/nano.hpp"

using namespace epbound;
using namespace epbound::models;

TEST_CASE("gaussian density value at its mean") {
  const auto g = gaussian_density(1.0);
  CHECK(g.at(1.0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi))
            .epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_density(0.0), DomainError);
  CHECK_THROWS_AS(gaussian_density(-1.0), DomainError);
}

TEST_CASE("gaussian compliance and closed-form entropy") {
  for (double m : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto g = gaussian_density(m);
    CHECK(check_dft(g, default_dft_grid()) < 1e-12);
    CHECK(differential_entropy(g) ==
          doctest::Approx(gaussian_entropy(m)).epsilon(1e-9));
    CHECK(mean(g) == doctest::Approx(m).epsilon(1e-9));
  }
  CHECK(gaussian_entropy(2.0) ==
        doctest::Approx(0.5 * std::log(8.0 * std::numbers::pi *
                                       std::numbers::e))
            .epsilon(1e-14));
}

TEST_CASE("half-integer Bessel against the closed forms") {
  for (double x : {0.3, 1.0, 4.7, 20.0}) {
    const double k_half = std::sqrt(0.5 * std::numbers::pi / x) * std::exp(-x);
    CHECK(std::exp(log_bessel_k_half(0, x)) ==
          doctest::Approx(k_half).epsilon(1e-13));
    CHECK(std::exp(log_bessel_k_half(1, x)) ==
          doctest::Approx(k_half * (1.0 + 1.0 / x)).epsilon(1e-13));
    CHECK(std::exp(log_bessel_k_half(2, x)) ==
          doctest::Approx(k_half * (1.0 + 3.0 / x + 3.0 / (x * x)))
              .epsilon(1e-13));
    CHECK(std::exp(log_bessel_k_half(3, x)) ==
          doctest::Approx(k_half *
                          (1.0 + 6.0 / x + 15.0 / (x * x) +
                           15.0 / (x * x * x)))
              .epsilon(1e-13));
  }
  CHECK_THROWS_AS(log_bessel_k_half(4, 1.0), DomainError);
  CHECK_THROWS_AS(log_bessel_k_half(1, 0.0), DomainError);
}

TEST_CASE("d = 1 density ratio matches the explicit closed form") {
  // p(s) proportional to e^{s/2 - alpha|s|} (|s| + 1/alpha) for d = 1
  const double alpha = 1.3;
  const auto d1 = nano_density({1, alpha});
  const auto closed = [alpha](double s) {
    return 0.5 * s - alpha * std::abs(s) +
           std::log(std::abs(s) + 1.0 / alpha);
  };
  const double got = d1.log_density(2.0) - d1.log_density(1.0);
  const double want = closed(2.0) - closed(1.0);
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("nano density is finite and positive at zero") {
  for (int d : {1, 2, 3}) {
    const auto spec = nano_density({d, 1.5});
    const double at_zero = spec.at(0.0);
    CHECK(at_zero > 0.0);
    CHECK(std::isfinite(at_zero));
    // continuity across the removable point
    CHECK(spec.at(1e-9) == doctest::Approx(at_zero).epsilon(1e-6));
  }
}

TEST_CASE("nano compliance for all sizes") {
  const std::vector<double> grid{0.5, 1.0, 3.0};
  for (int d : {1, 2, 3}) {
    for (double alpha : {0.6, 1.0, 1.5, 3.0}) {
      const auto spec = nano_density({d, alpha});
      CHECK(check_dft(spec, grid) < 1e-10);
    }
  }
}

TEST_CASE("nano parameter validation") {
  CHECK_THROWS_AS(nano_density({0, 1.0}), DomainError);
  CHECK_THROWS_AS(nano_density({4, 1.0}), DomainError);
  CHECK_THROWS_AS(nano_density({1, 0.5}), DomainError);
}

TEST_CASE("nano alpha from mean round trips") {
  const double mu = nano_mean({1, 1.5});
  CHECK(nano_alpha_from_mean(1, mu) == doctest::Approx(1.5).epsilon(1e-5));
  const double mu3 = nano_mean({3, 2.0});
  CHECK(nano_alpha_from_mean(3, mu3) == doctest::Approx(2.0).epsilon(1e-5));
  // larger target mean -> smaller alpha
  CHECK(nano_alpha_from_mean(1, 4.0) < nano_alpha_from_mean(1, 1.0));
  CHECK_THROWS_AS(nano_alpha_from_mean(1, -1.0), UnattainableMean);
}
