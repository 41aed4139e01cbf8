// Copyright 2026 The normmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NORMMAX_ERRORS_HPP_
#define NORMMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace normmax {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scale function was asked for a non-positive scale (e.g. A_F(0)).
class DegenerateScaleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A norming pair that cannot define a normalized maximum (scale <= 0).
class InvalidPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root finder could not bracket a sign change.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iteration or quadrature failed to meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normmax

#endif  // NORMMAX_ERRORS_HPP_
