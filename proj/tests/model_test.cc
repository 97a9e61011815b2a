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

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "remotepol/config.h"
#include "remotepol/model.h"

namespace remotepol {
namespace {

bool contains(const std::vector<std::string>& errors, const std::string& msg) {
  return std::find(errors.begin(), errors.end(), msg) != errors.end();
}

TEST(DefaultsTest, ReferenceValues) {
  const ParameterSet p = paper_defaults();
  const auto& d = p.device;
  const auto& r = p.reaction;
  EXPECT_EQ(d.omega_rc, 3455.0);
  EXPECT_EQ(d.omega_cav_rc, 3455.0);
  EXPECT_EQ(d.omega_r, 3402.0);
  EXPECT_EQ(d.omega_cav_r, 3402.0);
  EXPECT_EQ(d.g_rc_collective, 57.0);
  EXPECT_EQ(d.g_r_collective, 11.0);
  EXPECT_EQ(d.g_cav, 27.0);
  EXPECT_EQ(d.delta, -89.0);
  EXPECT_EQ(d.gamma_rc, 5.0);
  EXPECT_EQ(d.gamma_r, 5.0);
  EXPECT_EQ(d.kappa_rc, 9.5);
  EXPECT_EQ(d.kappa_r, 9.5);
  EXPECT_EQ(r.omega_p, 3362.0);
  EXPECT_DOUBLE_EQ(r.gamma_total_p, 8 * 1.67);
  EXPECT_EQ(r.v2_gamma_trans, 275.0);
  EXPECT_EQ(r.gamma_nonrad, 5.0);
  EXPECT_EQ(r.branch_trans, 0.10);
  EXPECT_DOUBLE_EQ(r.gamma_rad, 0.0875);
  EXPECT_EQ(d.omega_r - r.omega_p, 40.0);
}

TEST(ValidateTest, DefaultsAreValid) { EXPECT_TRUE(validate(paper_defaults()).empty()); }

TEST(ValidateTest, ReportsEachViolation) {
  ParameterSet p = paper_defaults();
  p.device.gamma_r = -1.0;
  p.device.omega_rc = 0.0;
  p.device.g_cav = -2.0;
  p.reaction.branch_trans = 0.0;
  const auto errors = validate(p);
  EXPECT_EQ(errors.size(), 4u);
  EXPECT_TRUE(contains(errors, "gamma_r must be > 0"));
  EXPECT_TRUE(contains(errors, "omega_rc must be > 0"));
  EXPECT_TRUE(contains(errors, "g_cav must be >= 0"));
  EXPECT_TRUE(contains(errors, "branch_trans must be in (0,1]"));
}

TEST(ValidateTest, NegativeAnharmonicityAllowed) {
  DeviceParams d;
  d.delta = -200.0;
  EXPECT_TRUE(validate(d).empty());
}

TEST(ValidateTest, BranchUpperBound) {
  ReactionParams r;
  r.branch_trans = 1.0;
  EXPECT_TRUE(validate(r).empty());
  r.branch_trans = 1.01;
  EXPECT_TRUE(contains(validate(r), "branch_trans must be in (0,1]"));
}

TEST(ValidateTest, Grid) {
  FrequencyGrid g;
  EXPECT_TRUE(validate(g).empty());
  EXPECT_DOUBLE_EQ(g.spacing(), 0.1);
  EXPECT_EQ(g.at(g.n_points - 1), 3530.0);
  g.omega_max = g.omega_min;
  EXPECT_FALSE(validate(g).empty());
  g.n_points = 1;
  EXPECT_TRUE(validate(g).empty());
}

TEST(PumpFractionTest, Range) {
  EXPECT_NO_THROW(check_pump_fraction(0.0));
  EXPECT_NO_THROW(check_pump_fraction(0.3));
  EXPECT_THROW(check_pump_fraction(0.5), std::out_of_range);
  EXPECT_THROW(check_pump_fraction(-0.1), std::out_of_range);
}

TEST(ConfigTest, MissingFieldsFallBackToDefaults) {
  const auto p = parse_config(nlohmann::json::parse(R"({"device": {"g_cav": 10}})"));
  ParameterSet expected = paper_defaults();
  expected.device.g_cav = 10.0;
  EXPECT_EQ(p, expected);
  EXPECT_EQ(parse_config(nlohmann::json::object()), paper_defaults());
}

TEST(ConfigTest, UnknownFieldsAreErrors) {
  try {
    parse_config(nlohmann::json::parse(R"({"device": {"g_cavity": 1}, "extra": {}})"));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.errors().size(), 2u);
    EXPECT_TRUE(contains(e.errors(), "unknown field 'device.g_cavity'"));
    EXPECT_TRUE(contains(e.errors(), "unknown section 'extra'"));
  }
}

TEST(ConfigTest, InvalidValuesAreErrors) {
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"device": {"gamma_r": -1}})")),
               ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"device": {"gamma_r": "5"}})")),
               ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"grid": {"n_points": 0}})")),
               ConfigError);
}

TEST(ConfigTest, GammaRadFollowsNonradWhenAbsent) {
  const auto p = parse_config(nlohmann::json::parse(R"({"reaction": {"gamma_nonrad": 8}})"));
  EXPECT_DOUBLE_EQ(p.reaction.gamma_rad, 0.07 * 8 / 4);
  const auto q = parse_config(
      nlohmann::json::parse(R"({"reaction": {"gamma_nonrad": 8, "gamma_rad": 0.5}})"));
  EXPECT_EQ(q.reaction.gamma_rad, 0.5);
}

// config -> params -> config is the identity on every field.
TEST(ConfigTest, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> freq(3000.0, 3600.0), coupling(0.0, 90.0),
      rate(0.1, 20.0), branch(0.01, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    ParameterSet p;
    p.device = {freq(rng), freq(rng), freq(rng), freq(rng), coupling(rng), coupling(rng),
                coupling(rng), -coupling(rng), rate(rng), rate(rng), rate(rng), rate(rng)};
    p.reaction = {freq(rng), rate(rng), branch(rng), 100.0 * rate(rng), rate(rng), rate(rng)};
    p.grid = {3300.0 + rate(rng), 3500.0 + rate(rng), std::size_t(2 + trial)};
    const nlohmann::json doc = to_json(p);
    const ParameterSet back = parse_config(nlohmann::json::parse(doc.dump()));
    EXPECT_EQ(back, p);
    EXPECT_EQ(to_json(back), doc);
  }
}

TEST(ConfigTest, Overrides) {
  ParameterSet p = paper_defaults();
  apply_override(p, "device.g_cav=30");
  EXPECT_EQ(p.device.g_cav, 30.0);
  apply_override(p, "grid.n_points=11");
  EXPECT_EQ(p.grid.n_points, 11u);
  EXPECT_THROW(apply_override(p, "device.nope=1"), ConfigError);
  EXPECT_THROW(apply_override(p, "g_cav=1"), ConfigError);
  EXPECT_THROW(apply_override(p, "device.gamma_r=-3"), ConfigError);
}

}  // namespace
}  // namespace remotepol
