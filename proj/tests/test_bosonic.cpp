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

#include "epbound/entropy.hpp"
#include "epbound/errors.hpp"
#include "epbound/ft_checks.hpp"
#include "epbound/maximal.hpp"
#include "epbound/models/bosonic.hpp"

using namespace epbound;
using namespace epbound::models;

TEST_CASE("bosonic partition matches the geometric-series oracle") {
  // delta = 1, alpha = 3: x = e^{-1}, y = e^{-2}
  const double x = std::exp(-1.0);
  const double y = std::exp(-2.0);
  const double oracle = 1.0 + x / (1.0 - x) + y / (1.0 - y);
  CHECK(bosonic_partition({1.0, 3.0}) ==
        doctest::Approx(oracle).epsilon(1e-14));
  CHECK(oracle == doctest::Approx(1.738494349618992).epsilon(1e-12));
}

TEST_CASE("bosonic pmf is compliant for a sweep of parameters") {
  for (double alpha : {1.1, 1.5, 2.0, 3.0, 5.0}) {
    const auto p = bosonic_pmf({1.0, alpha});
    CHECK(check_dft(p) < 1e-12);
    CHECK(check_ift(p) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(check_identity(p)) < 1e-10);
    CHECK(mean(p) > 0.0);
  }
}

TEST_CASE("closed-form moments and entropy match the truncated pmf") {
  const BosonicParams prm{1.0, 2.0};
  const auto p = bosonic_pmf(prm);
  CHECK(mean(p) == doctest::Approx(bosonic_mean(prm)).epsilon(1e-12));
  CHECK(shannon_entropy(p) ==
        doctest::Approx(bosonic_entropy(prm)).epsilon(1e-10));
}

TEST_CASE("large alpha collapses to the point mass at zero") {
  const BosonicParams prm{1.0, 60.0};
  CHECK(bosonic_entropy(prm) < 1e-10);
  CHECK(bosonic_mean(prm) < 1e-10);
  const auto p = bosonic_pmf(prm);
  double p_zero = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.value(i) == 0.0) p_zero = p.prob(i);
  }
  CHECK(p_zero == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("alpha at or below one is rejected") {
  CHECK_THROWS_AS(bosonic_pmf({1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(bosonic_pmf({1.0, 0.9}), DomainError);
  CHECK_THROWS_AS(bosonic_entropy({1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(bosonic_pmf({-1.0, 2.0}), DomainError);
}

TEST_CASE("limiting-exponent discrepancy") {
  // m = 1 at delta = 20: 10 (1 - tanh 10) < 1e-7
  CHECK(bosonic_limit_check({20.0, 1.5}) ==
        doctest::Approx(10.0 * (1.0 - std::tanh(10.0))).epsilon(1e-9));
  CHECK(bosonic_limit_check({20.0, 1.5}) < 1e-7);
  // small delta: the worst lattice point sits near the interior maximum of
  // s/2 (1 - tanh(s/2)), not at m = 1
  const double d_small = 0.05;
  const double at_first = 0.5 * d_small * (1.0 - std::tanh(0.5 * d_small));
  CHECK(bosonic_limit_check({d_small, 2.0}) >= at_first);
  // discrepancy decreases with delta
  CHECK(bosonic_limit_check({5.0, 1.5}) > bosonic_limit_check({10.0, 1.5}));
  CHECK(bosonic_limit_check({10.0, 1.5}) > bosonic_limit_check({20.0, 1.5}));
}

TEST_CASE("alpha from mean round trips") {
  const double mu = bosonic_mean({1.0, 2.0});
  CHECK(bosonic_alpha_from_mean(1.0, mu) == doctest::Approx(2.0).epsilon(1e-5));
  // monotone: larger target mean -> smaller alpha
  CHECK(bosonic_alpha_from_mean(1.0, 2.0) <
        bosonic_alpha_from_mean(1.0, 0.5));
  CHECK_THROWS_AS(bosonic_alpha_from_mean(1.0, 0.0), UnattainableMean);
}

TEST_CASE("entropy sits below the lattice bound with a small gap") {
  for (double alpha : {1.1, 1.5, 2.0, 3.0, 5.0}) {
    const BosonicParams prm{1.0, alpha};
    const double h = bosonic_entropy(prm);
    const auto b = bound_discrete(SymmetricSupport::lattice(1.0),
                                  bosonic_mean(prm), 1e-10);
    CHECK(h <= b.bound_nats + 1e-9);
    CHECK(b.bound_nats - h < 0.1);
  }
}
