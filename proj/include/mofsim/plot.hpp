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

#include <string>
#include <vector>

// Minimal SVG rendering. Output depends only on the input values.

namespace mofsim {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<Series> series;
};

struct Heatmap {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<double> x;  ///< column coordinates
  std::vector<double> y;  ///< row coordinates
  std::vector<double> z;  ///< z[row * x.size() + col]
};

std::string render_line_plot(const LinePlot& plot);
std::string render_heatmap(const Heatmap& map);

}  // namespace mofsim
