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

// Test-only reference computations. Nothing here calls into the library's
// numerical paths: each oracle is a brute-force or closed-form route to the
// quantity the corresponding test checks.

#ifndef DECOTRADE_TESTS_ORACLES_HPP
#define DECOTRADE_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHbarMevPs = 0.658212;
inline constexpr double kBoltzmannMevPerK = 0.0861733;

inline double bose(double omega, double temperature) {
  return 1.0 / (std::exp(kHbarMevPs * omega / (kBoltzmannMevPerK * temperature)) - 1.0);
}

/// R0 = (sigma_e - sigma_h)^2 / (16 pi^2 rho hbar c^5), all in SI, returned in ps^2.
inline double r0_si(double rho_kg_m3, double c_m_s, double contrast_ev) {
  const double joule_per_ev = 1.602176634e-19;
  const double hbar_js = kHbarMevPs * 1e-3 * joule_per_ev * 1e-12;
  const double d = contrast_ev * joule_per_ev;
  const double seconds2 = d * d / (16.0 * kPi * kPi * rho_kg_m3 * hbar_js * std::pow(c_m_s, 5));
  return seconds2 * 1e24;
}

/// Composite trapezoid over u in [0, 1] of the squared coupling contrast.
inline double cutoff_trapezoid(double omega, double c, double l_e, double l_h, double l_z, double sigma_e,
                               double sigma_h, std::size_t intervals = 1000000) {
  const double k2 = (omega / c) * (omega / c);
  auto integrand = [&](double u) {
    const double fe = std::exp(-k2 * ((1 - u * u) * l_e * l_e + u * u * l_z * l_z) / 4);
    const double fh = std::exp(-k2 * ((1 - u * u) * l_h * l_h + u * u * l_z * l_z) / 4);
    const double v = sigma_e * fe - sigma_h * fh;
    return v * v;
  };
  const double h = 1.0 / static_cast<double>(intervals);
  double sum = 0.5 * (integrand(0.0) + integrand(1.0));
  for (std::size_t i = 1; i < intervals; ++i) sum += integrand(h * static_cast<double>(i));
  return sum * h / ((sigma_e - sigma_h) * (sigma_e - sigma_h));
}

/// Ratio of the displaced-Gaussian overlap at T = 0 to its small-angle limit:
/// integral_0^inf x [e^{-(x-b)^2} + e^{-(x+b)^2}] dx = e^{-b^2} + b sqrt(pi) erf(b), b = alpha/sqrt(2 pi).
inline double displaced_overlap_ratio(double alpha) {
  const double b = alpha / std::sqrt(2.0 * kPi);
  return std::exp(-b * b) + b * std::sqrt(kPi) * std::erf(b);
}

/// Least-squares slope of y against x.
inline double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

}  // namespace oracle

#endif  // DECOTRADE_TESTS_ORACLES_HPP
