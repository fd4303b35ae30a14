/*
 * Copyright 2026 The mofsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "mofsim/analysis.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "mofsim/errors.hpp"

namespace mofsim {

SpectralPeak dominant_frequency(std::span<const double> t, std::span<const double> x) {
  const std::size_t n = t.size();
  if (n != x.size()) throw ParameterError("dominant_frequency: size mismatch");
  if (n < 4) throw ParameterError("dominant_frequency needs at least 4 samples");
  const double dt = (t[n - 1] - t[0]) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((t[i] - t[i - 1]) - dt) > 1e-9 * std::abs(dt))
      throw ParameterError("dominant_frequency needs a uniform time grid");
  }
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);

  SpectralPeak peak;
  peak.bin_width = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    std::complex<double> acc;
    const double w = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
      acc += (x[j] - mean) * std::polar(1.0, w * static_cast<double>(j));
    const double mag = std::abs(acc);
    if (mag > peak.magnitude) {
      peak.magnitude = mag;
      peak.frequency = static_cast<double>(k) * peak.bin_width;
    }
  }
  return peak;
}

double trapezoid(std::span<const double> t, std::span<const double> x) {
  if (t.size() != x.size()) throw ParameterError("trapezoid: size mismatch");
  double s = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) s += 0.5 * (t[i] - t[i - 1]) * (x[i] + x[i - 1]);
  return s;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ParameterError("max_abs_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace mofsim
