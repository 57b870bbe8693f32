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

#ifndef DECOTRADE_QUADRATURE_HPP
#define DECOTRADE_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace decotrade::quadrature {

/// Nodes and weights of a fixed rule on a finite interval.
struct FixedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `order` nodes mapped to [lower, upper].
FixedRule gauss_legendre(std::size_t order, double lower, double upper);

/// The 64-node Gauss-Legendre rule on [0, 1], built once.
const FixedRule& gauss_legendre_64_unit();

struct AdaptiveOptions {
  double relative_tolerance = 1e-7;
  double absolute_floor = 1e-16;
  std::size_t max_intervals = 4000;
};

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration.
///
/// `breakpoints` must be strictly increasing with at least two entries; each
/// initial piece is a panel of the starting partition. The panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// max(relative_tolerance * |value|, absolute_floor). Throws QuadratureError
/// when `max_intervals` is exhausted first. The integrand is never evaluated
/// at a panel endpoint.
AdaptiveResult integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                         const AdaptiveOptions& options = {});

/// Same, over a single interval.
AdaptiveResult integrate(const std::function<double(double)>& f, double lower, double upper,
                         const AdaptiveOptions& options = {});

}  // namespace decotrade::quadrature

#endif  // DECOTRADE_QUADRATURE_HPP
