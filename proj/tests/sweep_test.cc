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

#include "gtest/gtest.h"
#include "remotepol/output.h"
#include "remotepol/reaction.h"

namespace remotepol {
namespace {

SweepSpec small_spec(SweepAxis axis, double lo, double hi, std::size_t n) {
  SweepSpec s = default_sweep_spec(axis, SweepQuantity::kRatioOnOff);
  s.axis_min = lo;
  s.axis_max = hi;
  s.axis_points = n;
  s.fpump_points = 4;
  return s;
}

TEST(SweepSpecTest, DefaultsAndValues) {
  const SweepSpec g = default_sweep_spec(SweepAxis::kGCav, SweepQuantity::kRatioOnOff);
  EXPECT_EQ(g.axis_points, 31u);
  EXPECT_EQ(g.axis_values().back(), 30.0);
  EXPECT_EQ(g.fpump_values().back(), 0.3);
  EXPECT_DOUBLE_EQ(g.axis_values()[1], 1.0);
  const SweepSpec rc = default_sweep_spec(SweepAxis::kGRcCollective, SweepQuantity::kRatioOnBare);
  EXPECT_EQ(rc.axis_max, 80.0);
  EXPECT_EQ(rc.quantity, SweepQuantity::kRatioOnBare);
  EXPECT_TRUE(validate(g).empty());
}

TEST(SweepSpecTest, Validation) {
  SweepSpec s;
  s.fpump_max = 0.5;
  EXPECT_FALSE(validate(s).empty());
  s = SweepSpec{};
  s.axis_points = 0;
  EXPECT_FALSE(validate(s).empty());
  s = SweepSpec{};
  s.axis_min = -1.0;
  EXPECT_FALSE(validate(s).empty());
  s = SweepSpec{};
  s.axis_min = s.axis_max = 5.0;
  s.axis_points = 1;
  EXPECT_TRUE(validate(s).empty());
}

TEST(SweepSpecTest, NamesRoundTrip) {
  for (SweepAxis a : {SweepAxis::kGCav, SweepAxis::kGRcCollective})
    EXPECT_EQ(parse_axis(axis_name(a)), a);
  for (SweepQuantity q : {SweepQuantity::kRatioOnOff, SweepQuantity::kRatioOnBare})
    EXPECT_EQ(parse_quantity(quantity_name(q)), q);
  EXPECT_FALSE(parse_axis("kappa").has_value());
}

TEST(SweepTest, DefaultCellMatchesHeadline) {
  const DeviceParams d;
  const ReactionParams r;
  const FrequencyGrid grid;
  const EfficiencyResult head = headline_ratios(d, r, grid);
  for (SweepQuantity q : {SweepQuantity::kRatioOnOff, SweepQuantity::kRatioOnBare}) {
    SweepSpec s = default_sweep_spec(SweepAxis::kGCav, q);
    s.axis_min = s.axis_max = d.g_cav;
    s.axis_points = 1;
    const SweepGrid out = run_sweep(d, r, s, grid);
    ASSERT_TRUE(out.value(0, 30).has_value());
    EXPECT_EQ(*out.value(0, 30),
              q == SweepQuantity::kRatioOnOff ? head.ratio_on_off : head.ratio_on_bare);
    EXPECT_EQ(*out.omega_on(0, 30), head.omega_on);
    if (q == SweepQuantity::kRatioOnOff) EXPECT_EQ(*out.value(0, 0), 1.0);
  }
}

TEST(SweepTest, ParallelMatchesSerial) {
  const FrequencyGrid grid{3330.0, 3530.0, 401};
  const SweepSpec s = small_spec(SweepAxis::kGCav, 0.0, 30.0, 7);
  const SweepGrid serial = run_sweep(DeviceParams{}, ReactionParams{}, s, grid, 1);
  for (int threads : {2, 5, 16}) {
    const SweepGrid par = run_sweep(DeviceParams{}, ReactionParams{}, s, grid, threads);
    EXPECT_EQ(heatmap_csv(par), heatmap_csv(serial));
    EXPECT_EQ(heatmap_csv(par, true), heatmap_csv(serial, true));
  }
}

TEST(SweepTest, CavityCouplingTrend) {
  const SweepSpec s = small_spec(SweepAxis::kGCav, 0.0, 30.0, 4);
  const SweepGrid g = run_sweep(DeviceParams{}, ReactionParams{}, s, FrequencyGrid{});
  EXPECT_NEAR(*g.value(0, 3), 1.0, 0.05);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_GT(*g.value(i, 3), *g.value(i - 1, 3));
}

TEST(SweepTest, RcCouplingTrend) {
  const SweepSpec s = small_spec(SweepAxis::kGRcCollective, 0.0, 80.0, 9);
  const SweepGrid g = run_sweep(DeviceParams{}, ReactionParams{}, s, FrequencyGrid{});
  const double at0 = *g.value(0, 3), at30 = *g.value(3, 3), at80 = *g.value(8, 3);
  EXPECT_NEAR(at0, 1.0, 0.05);
  EXPECT_LT(at30 / at0, 2.0);
  EXPECT_GT(at80, 10.0);
}

TEST(SweepTest, FailedCellsAreEmpty) {
  // A grid that misses the search window makes every cell fail.
  const FrequencyGrid grid{3450.0, 3530.0, 81};
  const SweepSpec s = small_spec(SweepAxis::kGCav, 0.0, 30.0, 3);
  const SweepGrid g = run_sweep(DeviceParams{}, ReactionParams{}, s, grid);
  for (const auto& v : g.values) EXPECT_FALSE(v.has_value());
  const std::string csv = heatmap_csv(g);
  EXPECT_NE(csv.find(",,"), std::string::npos);
}

TEST(SweepTest, HeatmapLayout) {
  const FrequencyGrid grid{3330.0, 3530.0, 201};
  const SweepSpec s = small_spec(SweepAxis::kGCav, 0.0, 30.0, 2);
  const std::string csv = heatmap_csv(run_sweep(DeviceParams{}, ReactionParams{}, s, grid));
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header.rfind("g_cav\\f_pump,0,", 0), 0u);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 4);
  EXPECT_EQ(header.substr(header.rfind(',') + 1), format_double(0.3));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace remotepol
