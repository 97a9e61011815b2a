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

#ifndef REMOTEPOL_SWEEP_H_
#define REMOTEPOL_SWEEP_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "remotepol/model.h"

namespace remotepol {

enum class SweepAxis { kGCav, kGRcCollective };
enum class SweepQuantity { kRatioOnOff, kRatioOnBare };

std::string_view axis_name(SweepAxis axis);          // "g_cav", "g_rc_collective"
std::string_view quantity_name(SweepQuantity q);     // "ratio_on_off", "ratio_on_bare"
std::optional<SweepAxis> parse_axis(std::string_view name);
std::optional<SweepQuantity> parse_quantity(std::string_view name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kGCav;
  double axis_min = 0.0;
  double axis_max = 30.0;
  std::size_t axis_points = 31;
  double fpump_min = 0.0;
  double fpump_max = 0.3;
  std::size_t fpump_points = 31;
  SweepQuantity quantity = SweepQuantity::kRatioOnOff;

  std::vector<double> axis_values() const;
  std::vector<double> fpump_values() const;
};

// Default 31 x 31 spec for an axis: g_cav in [0, 30], g_RC sqrt(N_RC) in [0, 80].
SweepSpec default_sweep_spec(SweepAxis axis, SweepQuantity quantity);

std::vector<std::string> validate(const SweepSpec& spec);

struct SweepGrid {
  SweepSpec spec;
  std::vector<double> axis_values;
  std::vector<double> fpump_values;
  // Row-major [axis][fpump]; empty optional marks a failed cell.
  std::vector<std::optional<double>> values;
  std::vector<std::optional<double>> omega_on_map;

  const std::optional<double>& value(std::size_t axis_i, std::size_t fpump_j) const {
    return values[axis_i * fpump_values.size() + fpump_j];
  }
  const std::optional<double>& omega_on(std::size_t axis_i, std::size_t fpump_j) const {
    return omega_on_map[axis_i * fpump_values.size() + fpump_j];
  }
};

// For each axis value the swept coupling overrides `d`, omega_ON is searched
// at f_pump = spec.fpump_max, and each f_pump cell evaluates the requested
// ratio at that omega_ON. Per-cell failures become empty cells. Rows are
// distributed over `threads` workers; output does not depend on the count.
SweepGrid run_sweep(const DeviceParams& d, const ReactionParams& r, const SweepSpec& spec,
                    const FrequencyGrid& grid, int threads = 1);

}  // namespace remotepol

#endif  // REMOTEPOL_SWEEP_H_
