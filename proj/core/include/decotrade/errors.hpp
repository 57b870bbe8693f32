// Copyright 2026 The decotrade Authors
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

#ifndef DECOTRADE_ERRORS_HPP
#define DECOTRADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decotrade {

/// Argument outside the domain of a physical function (e.g. n_B at omega <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter object failed validation (negative width, zero duration, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of the numerical machinery, as opposed to bad input.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of subdivisions before reaching its tolerance.
class QuadratureError : public NumericalFailure {
 public:
  QuadratureError(const std::string& what, double estimate, double error_estimate)
      : NumericalFailure(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// The sampled pulse does not fit inside its time grid.
class GridSupportError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// A minimization bracket whose minimum sits on (or beyond) an endpoint.
class NoInteriorMinimum : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace decotrade

#endif  // DECOTRADE_ERRORS_HPP
