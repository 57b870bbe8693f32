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

#include "decotrade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "decotrade/errors.hpp"

namespace decotrade::quadrature {

FixedRule gauss_legendre(std::size_t order, double lower, double upper) {
  if (order == 0) throw InvalidParameter("gauss_legendre: order must be positive");
  const int n = static_cast<int>(order);
  // Non-negative roots of P_n in ascending order.
  const std::vector<double> roots = boost::math::legendre_p_zeros<double>(n);

  std::vector<double> x;
  x.reserve(order);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    if (*it != 0.0) x.push_back(-*it);
  }
  for (double r : roots) x.push_back(r);

  const double half = 0.5 * (upper - lower);
  const double mid = 0.5 * (upper + lower);
  FixedRule rule;
  rule.nodes.reserve(order);
  rule.weights.reserve(order);
  for (double xi : x) {
    const double dp = boost::math::legendre_p_prime(n, xi);
    rule.nodes.push_back(mid + half * xi);
    rule.weights.push_back(half * 2.0 / ((1.0 - xi * xi) * dp * dp));
  }
  return rule;
}

const FixedRule& gauss_legendre_64_unit() {
  static const FixedRule rule = gauss_legendre(64, 0.0, 1.0);
  return rule;
}

namespace {

struct Panel {
  double lower;
  double upper;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lower, double upper) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lower, upper, 0, 0.0, &error);
  return {lower, upper, value, error};
}

constexpr std::size_t kEvaluationsPerPanel = 15;

}  // namespace

AdaptiveResult integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                         const AdaptiveOptions& options) {
  if (breakpoints.size() < 2) throw InvalidParameter("integrate: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw InvalidParameter("integrate: breakpoints must be strictly increasing");
    }
  }

  std::priority_queue<Panel> panels;
  AdaptiveResult result;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    panels.push(evaluate_panel(f, breakpoints[i - 1], breakpoints[i]));
    result.evaluations += kEvaluationsPerPanel;
  }

  // Totals are recomputed from the queue rather than updated incrementally so
  // that the result does not depend on accumulated cancellation.
  auto totals = [&panels]() {
    auto copy = panels;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = 0.0;
  double error = 0.0;
  double running_value = 0.0;
  double running_error = 0.0;
  {
    auto [v, e] = totals();
    running_value = v;
    running_error = e;
  }

  while (true) {
    const double target = std::max(options.relative_tolerance * std::abs(running_value), options.absolute_floor);
    if (running_error <= target) {
      std::tie(value, error) = totals();
      if (error <= std::max(options.relative_tolerance * std::abs(value), options.absolute_floor)) break;
      running_value = value;
      running_error = error;
      continue;
    }
    if (panels.size() >= options.max_intervals) {
      std::tie(value, error) = totals();
      std::ostringstream msg;
      msg << "adaptive quadrature did not converge: estimate " << value << ", error estimate " << error
          << " after " << panels.size() << " intervals";
      throw QuadratureError(msg.str(), value, error);
    }

    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (!(mid > worst.lower && mid < worst.upper)) {
      // Interval cannot be split further in floating point.
      std::tie(value, error) = totals();
      value += worst.value;
      error += worst.error;
      std::ostringstream msg;
      msg << "adaptive quadrature hit floating-point resolution near " << worst.lower;
      throw QuadratureError(msg.str(), value, error);
    }
    const Panel left = evaluate_panel(f, worst.lower, mid);
    const Panel right = evaluate_panel(f, mid, worst.upper);
    result.evaluations += 2 * kEvaluationsPerPanel;
    running_value += left.value + right.value - worst.value;
    running_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  result.value = value;
  result.error_estimate = error;
  result.intervals = panels.size();
  return result;
}

AdaptiveResult integrate(const std::function<double(double)>& f, double lower, double upper,
                         const AdaptiveOptions& options) {
  const double points[2] = {lower, upper};
  return integrate(f, std::span<const double>(points), options);
}

}  // namespace decotrade::quadrature
