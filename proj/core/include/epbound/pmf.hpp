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

#include <cstddef>
#include <vector>

#include "epbound/support.hpp"

namespace epbound {

/// Probability mass function on a finite SymmetricSupport.
///
/// Probabilities are nonnegative, aligned with support().values(), and sum
/// to one within 1e-12.
class Pmf {
 public:
  Pmf(SymmetricSupport support, std::vector<double> probs);

  /// Normalizes nonnegative weights into a Pmf.
  static Pmf from_weights(SymmetricSupport support,
                          std::vector<double> weights);

  const SymmetricSupport& support() const { return support_; }
  const std::vector<double>& values() const { return support_.values(); }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  double value(std::size_t i) const { return support_.values()[i]; }
  double prob(std::size_t i) const { return probs_[i]; }

 private:
  SymmetricSupport support_;
  std::vector<double> probs_;
};

}  // namespace epbound
