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

#include "remotepol/model.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "remotepol/reaction.h"

namespace remotepol {

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> out(n_points);
  for (std::size_t i = 0; i < n_points; ++i) out[i] = at(i);
  return out;
}

ParameterSet paper_defaults() {
  ParameterSet p;
  p.reaction.gamma_rad =
      calibrate_gamma_rad(kBarePeakAbsorbance, p.reaction.gamma_nonrad);
  return p;
}

namespace {

class Checker {
 public:
  void positive(const char* name, double v) {
    if (!(std::isfinite(v) && v > 0.0)) errors_.push_back(std::string(name) + " must be > 0");
  }
  void non_negative(const char* name, double v) {
    if (!(std::isfinite(v) && v >= 0.0))
      errors_.push_back(std::string(name) + " must be >= 0");
  }
  void finite(const char* name, double v) {
    if (!std::isfinite(v)) errors_.push_back(std::string(name) + " must be finite");
  }
  void fail(std::string message) { errors_.push_back(std::move(message)); }

  std::vector<std::string> take() { return std::move(errors_); }

 private:
  std::vector<std::string> errors_;
};

}  // namespace

std::vector<std::string> validate(const DeviceParams& d) {
  Checker c;
  c.positive("omega_rc", d.omega_rc);
  c.positive("omega_cav_rc", d.omega_cav_rc);
  c.positive("omega_r", d.omega_r);
  c.positive("omega_cav_r", d.omega_cav_r);
  c.non_negative("g_rc_collective", d.g_rc_collective);
  c.non_negative("g_r_collective", d.g_r_collective);
  c.non_negative("g_cav", d.g_cav);
  c.finite("delta", d.delta);
  c.positive("gamma_rc", d.gamma_rc);
  c.positive("gamma_r", d.gamma_r);
  c.positive("kappa_rc", d.kappa_rc);
  c.positive("kappa_r", d.kappa_r);
  return c.take();
}

std::vector<std::string> validate(const ReactionParams& r) {
  Checker c;
  c.positive("omega_p", r.omega_p);
  c.positive("gamma_total_p", r.gamma_total_p);
  if (!(r.branch_trans > 0.0 && r.branch_trans <= 1.0))
    c.fail("branch_trans must be in (0,1]");
  c.positive("v2_gamma_trans", r.v2_gamma_trans);
  c.non_negative("gamma_rad", r.gamma_rad);
  c.positive("gamma_nonrad", r.gamma_nonrad);
  auto errors = c.take();
  if (errors.empty()) {
    const double v2 = r.ivr_coupling_squared();
    if (!(std::isfinite(v2) && v2 > 0.0))
      errors.push_back("derived V^2 (v2_gamma_trans / (branch_trans * gamma_total_p)) must be finite and > 0");
  }
  return errors;
}

std::vector<std::string> validate(const FrequencyGrid& g) {
  Checker c;
  c.positive("omega_min", g.omega_min);
  c.positive("omega_max", g.omega_max);
  if (g.n_points == 0) {
    c.fail("n_points must be >= 1");
  } else if (g.n_points == 1) {
    if (g.omega_min != g.omega_max)
      c.fail("a single-point grid needs omega_min == omega_max");
  } else if (!(g.omega_min < g.omega_max)) {
    c.fail("omega_min must be < omega_max");
  }
  return c.take();
}

std::vector<std::string> validate(const DeviceParams& d, const ReactionParams& r) {
  auto errors = validate(d);
  auto more = validate(r);
  errors.insert(errors.end(), more.begin(), more.end());
  return errors;
}

std::vector<std::string> validate(const ParameterSet& p) {
  auto errors = validate(p.device, p.reaction);
  auto more = validate(p.grid);
  errors.insert(errors.end(), more.begin(), more.end());
  return errors;
}

void check_pump_fraction(double f_pump) {
  if (!(f_pump >= 0.0 && f_pump <= kMaxPumpFraction)) {
    std::ostringstream msg;
    msg << "f_pump must be in [0, 0.5), got " << f_pump;
    throw std::out_of_range(msg.str());
  }
}

}  // namespace remotepol
