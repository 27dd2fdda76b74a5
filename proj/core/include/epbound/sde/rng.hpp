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

#include <cstdint>
#include <random>

namespace epbound::sde {

/// splitmix64 finalizer; decorrelates nearby keys.
std::uint64_t mix64(std::uint64_t z);

/// Deterministic random stream for one Monte Carlo sample.
///
/// The stream is a mersenne engine keyed by (seed, sample index) through
/// mix64, so sample i draws the same variates no matter how samples are
/// scheduled across threads. All distributions are generated explicitly from
/// raw engine output (never through std::*_distribution, whose algorithms
/// are implementation-defined), which makes batches bit-reproducible.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform draw in the open interval (0, 1).
  double uniform();

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();

  /// Exponential with the given scale.
  double exponential(double scale);

  /// Gamma with integer shape (sum of shape exponentials) and given scale.
  double gamma_integer_shape(int shape, double scale);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace epbound::sde
