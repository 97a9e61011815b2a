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

#ifndef REMOTEPOL_SVG_H_
#define REMOTEPOL_SVG_H_

#include <optional>
#include <string>
#include <vector>

// Minimal SVG figures: line plots with linear axes and heatmaps. Output is
// a pure function of the inputs (no timestamps); coordinates are rounded to
// 0.01 px.

namespace remotepol::svg {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  std::string label;
  bool dashed = false;
};

struct VerticalLine {
  double x;
  std::string color = "#444444";
  std::string label;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<VerticalLine> markers;  // drawn dashed
  bool log_y = false;
};

std::string render(const LinePlot& plot);

struct Heatmap {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;  // columns
  std::vector<double> y;  // rows
  std::vector<std::optional<double>> values;  // row-major [y][x]
  bool log_scale = false;
};

std::string render(const Heatmap& map);

// Fixed palette, cycled by index.
std::string palette(std::size_t i);

}  // namespace remotepol::svg

#endif  // REMOTEPOL_SVG_H_
