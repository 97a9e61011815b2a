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

#include "remotepol/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "remotepol/reaction.h"

namespace remotepol {

std::string_view axis_name(SweepAxis axis) {
  return axis == SweepAxis::kGCav ? "g_cav" : "g_rc_collective";
}

std::string_view quantity_name(SweepQuantity q) {
  return q == SweepQuantity::kRatioOnOff ? "ratio_on_off" : "ratio_on_bare";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  if (name == "g_cav") return SweepAxis::kGCav;
  if (name == "g_rc_collective" || name == "g_rc") return SweepAxis::kGRcCollective;
  return std::nullopt;
}

std::optional<SweepQuantity> parse_quantity(std::string_view name) {
  if (name == "ratio_on_off") return SweepQuantity::kRatioOnOff;
  if (name == "ratio_on_bare") return SweepQuantity::kRatioOnBare;
  return std::nullopt;
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n == 1) out[i] = lo;
    else if (i + 1 == n) out[i] = hi;
    else out[i] = lo + (hi - lo) * double(i) / double(n - 1);
  }
  return out;
}

void check_range(std::vector<std::string>& errors, const char* what, double lo, double hi,
                 std::size_t n) {
  if (n == 0) {
    errors.push_back(std::string(what) + " needs at least one point");
  } else if (n == 1 && lo != hi) {
    errors.push_back(std::string(what) + ": a single point needs min == max");
  } else if (n >= 2 && !(lo < hi)) {
    errors.push_back(std::string(what) + ": min must be < max");
  }
}

}  // namespace

std::vector<double> SweepSpec::axis_values() const {
  return linspace(axis_min, axis_max, axis_points);
}

std::vector<double> SweepSpec::fpump_values() const {
  return linspace(fpump_min, fpump_max, fpump_points);
}

SweepSpec default_sweep_spec(SweepAxis axis, SweepQuantity quantity) {
  SweepSpec spec;
  spec.axis = axis;
  spec.quantity = quantity;
  spec.axis_max = axis == SweepAxis::kGCav ? 30.0 : 80.0;
  return spec;
}

std::vector<std::string> validate(const SweepSpec& spec) {
  std::vector<std::string> errors;
  if (!(spec.axis_min >= 0.0)) errors.push_back("axis_min must be >= 0");
  if (!(spec.fpump_min >= 0.0)) errors.push_back("fpump_min must be >= 0");
  if (!(spec.fpump_max <= kMaxPumpFraction)) errors.push_back("fpump_max must be < 0.5");
  check_range(errors, "coupling axis", spec.axis_min, spec.axis_max, spec.axis_points);
  check_range(errors, "f_pump axis", spec.fpump_min, spec.fpump_max, spec.fpump_points);
  return errors;
}

SweepGrid run_sweep(const DeviceParams& d, const ReactionParams& r, const SweepSpec& spec,
                    const FrequencyGrid& grid, int threads) {
  auto errors = validate(spec);
  if (!errors.empty()) throw std::invalid_argument("invalid sweep spec: " + errors.front());

  SweepGrid out;
  out.spec = spec;
  out.axis_values = spec.axis_values();
  out.fpump_values = spec.fpump_values();
  const std::size_t cols = out.fpump_values.size();
  out.values.assign(out.axis_values.size() * cols, std::nullopt);
  out.omega_on_map.assign(out.values.size(), std::nullopt);

  const double eta0 = bare_efficiency(d, r, d.omega_r);

  auto run_row = [&](std::size_t i) {
    DeviceParams cell = d;
    (spec.axis == SweepAxis::kGCav ? cell.g_cav : cell.g_rc_collective) = out.axis_values[i];

    double omega_on = 0.0;
    double eta_off = 0.0;
    try {
      omega_on = find_omega_on(cell, r, spec.fpump_max, grid);
      eta_off = efficiency_at(cell, r, 0.0, omega_on);
    } catch (const std::exception&) {
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = i * cols + j;
      out.omega_on_map[k] = omega_on;
      try {
        const double eta_on = efficiency_at(cell, r, out.fpump_values[j], omega_on);
        const double ratio = spec.quantity == SweepQuantity::kRatioOnOff ? eta_on / eta_off
                                                                          : eta_on / eta0;
        if (std::isfinite(ratio) && ratio >= 0.0) out.values[k] = ratio;
      } catch (const std::exception&) {
      }
    }
  };

  const std::size_t rows = out.axis_values.size();
  const std::size_t workers = std::clamp<std::size_t>(std::size_t(std::max(threads, 1)), 1, rows);
  if (workers == 1) {
    for (std::size_t i = 0; i < rows; ++i) run_row(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows; i = next++) run_row(i);
      });
  }
  return out;
}

}  // namespace remotepol
