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

#ifndef DECOTRADE_GOLDEN_SECTION_HPP
#define DECOTRADE_GOLDEN_SECTION_HPP

#include <cmath>
#include <sstream>

#include "decotrade/errors.hpp"

namespace decotrade {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal `f` on [lower, upper].
///
/// Stops once the bracket is narrower than `width`. The endpoints are
/// evaluated as well; if the refined point is not strictly below both of
/// them (or has collapsed onto an endpoint) NoInteriorMinimum is thrown.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lower, double upper, double width, int max_iterations = 200) {
  if (!(upper > lower)) throw InvalidParameter("golden_section_minimize: empty bracket");
  if (!(width > 0.0)) throw InvalidParameter("golden_section_minimize: width must be positive");

  const double f_lower = f(lower);
  const double f_upper = f(upper);

  constexpr double inv_phi = 0.6180339887498948482;
  double a = lower;
  double b = upper;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > width && iterations < max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iterations;
  }

  ScalarMinimum best = fc < fd ? ScalarMinimum{c, fc, iterations} : ScalarMinimum{d, fd, iterations};
  const bool touches_edge = (a <= lower) || (b >= upper);
  if (touches_edge || !(best.value < f_lower) || !(best.value < f_upper)) {
    std::ostringstream msg;
    msg << "no interior minimum in [" << lower << ", " << upper << "]: f(lower) = " << f_lower
        << ", f(upper) = " << f_upper << ", best = " << best.value << " at " << best.x;
    throw NoInteriorMinimum(msg.str());
  }
  return best;
}

}  // namespace decotrade

#endif  // DECOTRADE_GOLDEN_SECTION_HPP
