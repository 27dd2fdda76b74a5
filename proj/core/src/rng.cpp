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

#include "epbound/sde/rng.hpp"

#include <cmath>
#include <numbers>

#include "epbound/errors.hpp"

namespace epbound::sde {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : engine_(mix64(mix64(seed) ^ mix64(index * 0xD1342543DE82EF95ull + 1))) {}

double SampleRng::uniform() {
  // 53-bit mantissa, centered so 0 and 1 are excluded.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double SampleRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double SampleRng::exponential(double scale) {
  if (!(scale > 0.0)) {
    throw DomainError("SampleRng::exponential: scale must be positive");
  }
  return -scale * std::log(uniform());
}

double SampleRng::gamma_integer_shape(int shape, double scale) {
  if (shape < 1) {
    throw DomainError("SampleRng::gamma_integer_shape: shape must be >= 1");
  }
  double acc = 0.0;
  for (int k = 0; k < shape; ++k) {
    acc += exponential(scale);
  }
  return acc;
}

}  // namespace epbound::sde
