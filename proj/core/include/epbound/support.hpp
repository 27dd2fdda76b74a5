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

namespace epbound {

/// Set of entropy-production values closed under negation.
///
/// Either a finite sorted set {sigma_i} with sigma in the set iff -sigma is,
/// or an infinite lattice {m * spacing : m integer}. Finite supports are
/// canonicalized on construction so that values()[i] == -values()[n-1-i]
/// holds exactly, which makes sign-pairing in downstream checks exact.
class SymmetricSupport {
 public:
  enum class Kind { finite, lattice };

  /// Builds a finite support. Throws SupportAsymmetry if some value lacks its
  /// negation, DomainError on duplicates / non-finite values / empty input.
  static SymmetricSupport finite(std::vector<double> values);

  /// Builds the infinite lattice {0, ±spacing, ±2 spacing, ...}.
  static SymmetricSupport lattice(double spacing);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_lattice() const { return kind_ == Kind::lattice; }
  bool contains_zero() const { return contains_zero_; }

  /// Lattice spacing; throws DomainError for finite supports.
  double spacing() const;

  /// Sorted values of a finite support; throws DomainError for lattices.
  const std::vector<double>& values() const;

  /// Number of points of a finite support.
  std::size_t size() const;

  /// Index of the negated partner of values()[i] (finite only).
  std::size_t mirror_index(std::size_t i) const { return size() - 1 - i; }

 private:
  SymmetricSupport() = default;

  Kind kind_ = Kind::finite;
  bool contains_zero_ = false;
  double spacing_ = 0.0;
  std::vector<double> values_;
};

}  // namespace epbound
