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
#include "mofsim/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace mofsim {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 160.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                          "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi == lo) {
      const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

std::string header(const std::string& title) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                  "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
                  num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(title) + "</text>\n";
  return s;
}

std::string axes(const Range& xr, const Range& yr, const std::string& xl, const std::string& yl) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  std::string s = "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) +
                  "\" height=\"" + num(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const double px = x0 + f * (x1 - x0);
    const double py = y0 - f * (y0 - y1);
    s += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 18) + "\" text-anchor=\"middle\">" +
         tick(xv) + "</text>\n";
    s += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" +
         tick(yv) + "</text>\n";
  }
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 16) +
       "\" text-anchor=\"middle\">" + escape(xl) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       num((y0 + y1) / 2) + ")\">" + escape(yl) + "</text>\n";
  return s;
}

}  // namespace

std::string render_line_plot(const LinePlot& plot) {
  Range xr, yr;
  for (const auto& s : plot.series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("series '" + s.name + "' x/y mismatch");
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  auto px = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto py = [&](double v) { return y0 - (v - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  std::string svg = header(plot.title) + axes(xr, yr, plot.xlabel, plot.ylabel);
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kPalette[k % kPalette.size()];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += num(px(s.x[i])) + "," + num(py(s.y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 16.0 + 18.0 * static_cast<double>(k);
    svg += "<line x1=\"" + num(x1 + 10) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(x1 + 30) +
           "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(x1 + 36) + "\" y=\"" + num(ly + 4) + "\">" + escape(s.name) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

namespace {

// Perceptually ordered ramp, linear between five anchors.
std::string ramp(double f) {
  static const std::array<std::array<double, 3>, 5> anchors{{{68, 1, 84},
                                                             {59, 82, 139},
                                                             {33, 145, 140},
                                                             {94, 201, 98},
                                                             {253, 231, 37}}};
  f = std::clamp(f, 0.0, 1.0);
  const double pos = f * 4.0;
  const int i = std::min(3, static_cast<int>(pos));
  const double t = pos - i;
  char buf[16];
  int c[3];
  for (int k = 0; k < 3; ++k)
    c[k] = static_cast<int>(std::lround(anchors[i][k] + t * (anchors[i + 1][k] - anchors[i][k])));
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

// Cell edges halfway between grid coordinates.
std::vector<double> edges(const std::vector<double>& v) {
  std::vector<double> e(v.size() + 1);
  if (v.size() == 1) {
    e[0] = v[0] - 0.5;
    e[1] = v[0] + 0.5;
    return e;
  }
  for (std::size_t i = 1; i < v.size(); ++i) e[i] = 0.5 * (v[i - 1] + v[i]);
  e[0] = v[0] - (e[1] - v[0]);
  e[v.size()] = v.back() + (v.back() - e[v.size() - 1]);
  return e;
}

}  // namespace

std::string render_heatmap(const Heatmap& map) {
  if (map.z.size() != map.x.size() * map.y.size())
    throw std::invalid_argument("heatmap z size does not match the grid");
  if (map.x.empty() || map.y.empty()) throw std::invalid_argument("heatmap grid is empty");
  const std::vector<double> ex = edges(map.x), ey = edges(map.y);
  Range xr, yr, zr;
  xr.add(ex.front());
  xr.add(ex.back());
  yr.add(ey.front());
  yr.add(ey.back());
  for (double v : map.z) zr.add(v);
  xr.finish();
  yr.finish();
  zr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  auto px = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto py = [&](double v) { return y0 - (v - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  std::string svg = header(map.title);
  for (std::size_t r = 0; r < map.y.size(); ++r) {
    for (std::size_t c = 0; c < map.x.size(); ++c) {
      const double v = map.z[r * map.x.size() + c];
      const double f = std::isfinite(v) ? (v - zr.lo) / (zr.hi - zr.lo) : 0.0;
      const double xa = px(ex[c]), xb = px(ex[c + 1]);
      const double ya = py(ey[r + 1]), yb = py(ey[r]);
      svg += "<rect x=\"" + num(xa) + "\" y=\"" + num(ya) + "\" width=\"" + num(xb - xa) +
             "\" height=\"" + num(yb - ya) + "\" fill=\"" + ramp(f) + "\"/>\n";
    }
  }
  svg += axes(xr, yr, map.xlabel, map.ylabel);
  // Colour bar.
  const double bx = x1 + 30, bw = 20;
  for (int i = 0; i < 50; ++i) {
    const double f0 = i / 50.0, f1 = (i + 1) / 50.0;
    const double ya = y0 - f1 * (y0 - y1), yb = y0 - f0 * (y0 - y1);
    svg += "<rect x=\"" + num(bx) + "\" y=\"" + num(ya) + "\" width=\"" + num(bw) + "\" height=\"" +
           num(yb - ya) + "\" fill=\"" + ramp((f0 + f1) / 2) + "\"/>\n";
  }
  svg += "<text x=\"" + num(bx + bw + 6) + "\" y=\"" + num(y1 + 4) + "\">" + tick(zr.hi) + "</text>\n";
  svg += "<text x=\"" + num(bx + bw + 6) + "\" y=\"" + num(y0 + 4) + "\">" + tick(zr.lo) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace mofsim
