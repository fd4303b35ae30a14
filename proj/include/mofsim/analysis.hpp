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
#pragma once

#include <span>

namespace mofsim {

struct SpectralPeak {
  double frequency = 0.0;  ///< angular frequency of the strongest bin
  double bin_width = 0.0;  ///< 2 pi / (N dt)
  double magnitude = 0.0;
};

/// Strongest non-DC bin of the DFT of a uniformly sampled series, mean
/// removed. Throws ParameterError for fewer than 4 samples or a
/// non-uniform grid.
SpectralPeak dominant_frequency(std::span<const double> times, std::span<const double> values);

/// Trapezoidal integral of values over times.
double trapezoid(std::span<const double> times, std::span<const double> values);

/// max_i |a_i - b_i|.
double max_abs_difference(std::span<const double> a, std::span<const double> b);

}  // namespace mofsim
