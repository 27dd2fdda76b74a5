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

#include "epbound/errors.hpp"
#include "epbound/ft_checks.hpp"
#include "epbound/models/bosonic.hpp"
#include "epbound/models/gaussian.hpp"
#include "epbound/models/swap.hpp"

using namespace epbound;

TEST_CASE("conditional sign law") {
  const auto law = conditional_sign_prob(std::log(3.0));
  CHECK(law.p_plus == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(law.p_minus == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_FALSE(law.degenerate);

  const auto saturated = conditional_sign_prob(100.0);
  CHECK(saturated.p_plus == doctest::Approx(1.0).epsilon(1e-15));

  const auto zero = conditional_sign_prob(0.0);
  CHECK(zero.degenerate);
  CHECK(zero.p_plus == 1.0);
  CHECK(zero.p_minus == 0.0);

  CHECK_THROWS_AS(conditional_sign_prob(-0.1), DomainError);
}

TEST_CASE("dft check on the pinned-variance Gaussian") {
  for (double m : {0.3, 1.0, 4.0}) {
    const auto grid = default_dft_grid();
    CHECK(check_dft(models::gaussian_density(m), grid) < 1e-12);
  }
}

TEST_CASE("dft check flags the uniform three-point pmf") {
  const auto p = Pmf(SymmetricSupport::finite({-1.0, 0.0, 1.0}),
                     {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(check_dft(p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dft check passes the swap pmf") {
  for (double a : {0.1, 1.0, 3.0}) {
    CHECK(check_dft(models::swap_pmf(a)) < 1e-12);
  }
}

TEST_CASE("ift on Gaussian, point mass and bosonic lattice") {
  CHECK(check_ift(models::gaussian_density(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-8));
  // raw mode crosses the amplified tail but must agree
  CHECK(check_ift(models::gaussian_density(1.0), {}, IftMode::raw) ==
        doctest::Approx(1.0).epsilon(1e-8));

  const auto point = Pmf(SymmetricSupport::finite({0.0}), {1.0});
  CHECK(check_ift(point) == 1.0);

  CHECK(check_ift(models::bosonic_pmf({1.0, 2.0})) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("identity gap") {
  CHECK(std::abs(check_identity(models::gaussian_density(1.0))) < 1e-8);

  const auto point = Pmf(SymmetricSupport::finite({0.0}), {1.0});
  CHECK(check_identity(point) == 0.0);

  // Non-compliant two-point pmf: gap = -0.8 - tanh(1/2).
  const auto skew = Pmf(SymmetricSupport::finite({-1.0, 1.0}), {0.9, 0.1});
  CHECK(check_identity(skew) ==
        doctest::Approx(-0.8 - std::tanh(0.5)).epsilon(1e-14));
}

TEST_CASE("full report on a compliant model") {
  const auto r = ft_report(models::swap_pmf(1.0));
  CHECK(r.max_dft_violation < 1e-12);
  CHECK(r.ift_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.identity_gap) < 1e-12);
  CHECK(r.mean > 0.0);
  CHECK(r.entropy > 0.0);
}
