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

#include <stdexcept>
#include <string>

namespace epbound {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter value (negative temperature, alpha out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A support point lacks its negated partner.
class SupportAsymmetry : public Error {
 public:
  using Error::Error;
};

/// Two distributions that must share a support do not.
class SupportMismatch : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration could not reach the requested tolerance.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// Partition function diverges for the requested (support, lambda) pair.
class DivergentPartition : public Error {
 public:
  using Error::Error;
};

/// Requested mean lies outside the attainable range of the support.
class UnattainableMean : public Error {
 public:
  using Error::Error;
};

/// Requested mean sits at a limit that has no proper maximizer.
class DegenerateMean : public Error {
 public:
  using Error::Error;
};

/// A statistical check was asked for more data than the batch provides.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace epbound
