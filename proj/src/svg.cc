/*
 * Copyright 2026 The remotepol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "remotepol/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace remotepol::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
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
    if (lo == hi) lo -= 0.5, hi += 0.5;
  }
};

std::string header(const std::string& title) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) +
                    "\" height=\"" + px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " +
                    px(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + px(kWidth / 2) + "\" y=\"24.00\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(title) + "</text>\n";
  return out;
}

std::string axes(const Range& xr, const Range& yr, const std::string& x_label,
                 const std::string& y_label, bool log_y) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  std::string out = "<g stroke=\"black\" fill=\"none\">\n";
  out += "<rect x=\"" + px(x0) + "\" y=\"" + px(y1) + "\" width=\"" + px(x1 - x0) +
         "\" height=\"" + px(y0 - y1) + "\"/>\n</g>\n";
  out += "<g font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = i / 5.0;
    const double xv = xr.lo + t * (xr.hi - xr.lo);
    const double xp = x0 + t * (x1 - x0);
    out += "<text x=\"" + px(xp) + "\" y=\"" + px(y0 + 16) + "\" text-anchor=\"middle\">" +
           tick_text(xv) + "</text>\n";
    double yv = yr.lo + t * (yr.hi - yr.lo);
    if (log_y) yv = std::pow(10.0, yv);
    const double yp = y0 - t * (y0 - y1);
    out += "<text x=\"" + px(x0 - 6) + "\" y=\"" + px(yp + 4) + "\" text-anchor=\"end\">" +
           tick_text(yv) + "</text>\n";
  }
  out += "</g>\n";
  out += "<text x=\"" + px((x0 + x1) / 2) + "\" y=\"" + px(kHeight - 18) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(x_label) + "</text>\n";
  out += "<text x=\"18.00\" y=\"" + px((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18.00 " +
         px((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
  return out;
}

}  // namespace

std::string palette(std::size_t i) {
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return kColors[i % (sizeof kColors / sizeof kColors[0])];
}

std::string render(const LinePlot& plot) {
  auto ty = [&](double v) { return plot.log_y ? (v > 0 ? std::log10(v) : NAN) : v; };
  Range xr, yr;
  for (const auto& s : plot.series) {
    for (double x : s.x) xr.add(x);
    for (double y : s.y) yr.add(ty(y));
  }
  xr.finish();
  yr.finish();

  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  auto map_x = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto map_y = [&](double y) { return y0 - (y - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  std::string out = header(plot.title);
  out += axes(xr, yr, plot.x_label, plot.y_label, plot.log_y);

  for (const auto& m : plot.markers) {
    if (m.x < xr.lo || m.x > xr.hi) continue;
    out += "<line x1=\"" + px(map_x(m.x)) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(map_x(m.x)) +
           "\" y2=\"" + px(y1) + "\" stroke=\"" + m.color +
           "\" stroke-dasharray=\"6 4\" stroke-width=\"1.2\"/>\n";
  }

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    std::string points;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double y = ty(s.y[i]);
      if (!std::isfinite(y)) continue;
      if (!points.empty()) points += ' ';
      points += px(map_x(s.x[i])) + "," + px(map_y(y));
    }
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
    if (s.dashed) out += " stroke-dasharray=\"4 3\"";
    out += " points=\"" + points + "\"/>\n";
    if (!s.label.empty()) {
      const double ly = y1 + 16 + 16 * double(k);
      out += "<line x1=\"" + px(x1 - 150) + "\" y1=\"" + px(ly - 4) + "\" x2=\"" + px(x1 - 128) +
             "\" y2=\"" + px(ly - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
      out += "<text x=\"" + px(x1 - 122) + "\" y=\"" + px(ly) + "\" font-size=\"11\">" +
             escape(s.label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render(const Heatmap& map) {
  Range xr, yr, vr;
  for (double x : map.x) xr.add(x);
  for (double y : map.y) yr.add(y);
  auto tv = [&](double v) { return map.log_scale ? (v > 0 ? std::log10(v) : NAN) : v; };
  for (const auto& v : map.values)
    if (v) vr.add(tv(*v));
  xr.finish();
  yr.finish();
  vr.finish();

  const double x0 = kLeft, x1 = kWidth - kRight - 70, y0 = kHeight - kBottom, y1 = kTop;
  const std::size_t nx = map.x.size(), ny = map.y.size();
  const double cw = (x1 - x0) / double(std::max<std::size_t>(nx, 1));
  const double ch = (y0 - y1) / double(std::max<std::size_t>(ny, 1));

  // Linear blue -> yellow ramp.
  auto color = [&](double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = int(std::lround(40 + t * (253 - 40)));
    const int g = int(std::lround(30 + t * (231 - 30)));
    const int b = int(std::lround(120 + t * (37 - 120)));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return std::string(buf);
  };

  std::string out = header(map.title);
  for (std::size_t i = 0; i < ny; ++i) {
    for (std::size_t j = 0; j < nx; ++j) {
      const auto& v = map.values[i * nx + j];
      const std::string fill = v && std::isfinite(tv(*v))
                                   ? color((tv(*v) - vr.lo) / (vr.hi - vr.lo))
                                   : std::string("#dddddd");
      out += "<rect x=\"" + px(x0 + double(j) * cw) + "\" y=\"" + px(y0 - double(i + 1) * ch) +
             "\" width=\"" + px(cw) + "\" height=\"" + px(ch) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += "<rect x=\"" + px(x0) + "\" y=\"" + px(y1) + "\" width=\"" + px(x1 - x0) +
         "\" height=\"" + px(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<g font-size=\"11\">\n";
  for (int k = 0; k <= 5; ++k) {
    const double t = k / 5.0;
    out += "<text x=\"" + px(x0 + t * (x1 - x0)) + "\" y=\"" + px(y0 + 16) +
           "\" text-anchor=\"middle\">" + tick_text(xr.lo + t * (xr.hi - xr.lo)) + "</text>\n";
    out += "<text x=\"" + px(x0 - 6) + "\" y=\"" + px(y0 - t * (y0 - y1) + 4) +
           "\" text-anchor=\"end\">" + tick_text(yr.lo + t * (yr.hi - yr.lo)) + "</text>\n";
  }
  out += "</g>\n";
  out += "<text x=\"" + px((x0 + x1) / 2) + "\" y=\"" + px(kHeight - 18) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(map.x_label) + "</text>\n";
  out += "<text x=\"18.00\" y=\"" + px((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18.00 " +
         px((y0 + y1) / 2) + ")\">" + escape(map.y_label) + "</text>\n";

  // Color bar.
  const double bx = x1 + 20, bw = 18;
  for (int k = 0; k < 50; ++k) {
    const double t = k / 49.0;
    out += "<rect x=\"" + px(bx) + "\" y=\"" + px(y0 - (k + 1) * (y0 - y1) / 50.0) +
           "\" width=\"" + px(bw) + "\" height=\"" + px((y0 - y1) / 50.0 + 0.5) + "\" fill=\"" +
           color(t) + "\"/>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    double v = vr.lo + t * (vr.hi - vr.lo);
    if (map.log_scale) v = std::pow(10.0, v);
    out += "<text x=\"" + px(bx + bw + 4) + "\" y=\"" + px(y0 - t * (y0 - y1) + 4) +
           "\" font-size=\"10\">" + tick_text(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace remotepol::svg
