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

#ifndef REMOTEPOL_MODEL_H_
#define REMOTEPOL_MODEL_H_

#include <cstddef>
#include <string>
#include <vector>

// Physical parameters of the two-cavity device and of the HONO reaction.
// Energies and rates are in cm^-1 with hbar = 1 throughout; nothing in the
// library converts units.

namespace remotepol {

// Peak bare absorbance of the reactant OH stretch, used to calibrate the
// radiative coupling of the bare (no cavity) baseline.
inline constexpr double kBarePeakAbsorbance = 0.07;

// The largest pump fraction accepted anywhere; sqrt(1 - 2 f) must stay real
// and positive.
inline constexpr double kMaxPumpFraction = 0.5 - 1e-9;

struct DeviceParams {
  double omega_rc = 3455.0;      // RC OH stretch, 0 -> 1
  double omega_cav_rc = 3455.0;  // cavity hosting RC
  double omega_r = 3402.0;       // reactant OH stretch
  double omega_cav_r = 3402.0;   // cavity hosting R
  double g_rc_collective = 57.0;
  double g_r_collective = 11.0;
  double g_cav = 27.0;  // intercavity coupling
  double delta = -89.0;  // mechanical anharmonicity of RC, signed
  double gamma_rc = 5.0;
  double gamma_r = 5.0;
  double kappa_rc = 9.5;
  double kappa_r = 9.5;

  bool operator==(const DeviceParams&) const = default;
};

struct ReactionParams {
  double omega_p = 3362.0;         // |P>, the torsional overtone receiving IVR
  double gamma_total_p = 13.36;    // Gamma_cis + Gamma_trans
  double branch_trans = 0.10;      // Gamma_trans / (Gamma_cis + Gamma_trans)
  double v2_gamma_trans = 275.0;   // V^2 Gamma_trans, cm^-3
  double gamma_rad = 0.0875;       // bare radiative coupling
  double gamma_nonrad = 5.0;       // bare nonradiative linewidth

  // V^2 reconstructed from the fixed product and the branching ratio.
  double ivr_coupling_squared() const {
    return v2_gamma_trans / (branch_trans * gamma_total_p);
  }

  bool operator==(const ReactionParams&) const = default;
};

// Uniform grid omega_min .. omega_max inclusive. A single point is allowed
// only when omega_min == omega_max.
struct FrequencyGrid {
  double omega_min = 3330.0;
  double omega_max = 3530.0;
  std::size_t n_points = 2001;

  double spacing() const {
    return n_points > 1 ? (omega_max - omega_min) / double(n_points - 1) : 0.0;
  }
  double at(std::size_t i) const {
    if (n_points <= 1) return omega_min;
    if (i + 1 == n_points) return omega_max;
    return omega_min + (omega_max - omega_min) * double(i) / double(n_points - 1);
  }
  std::vector<double> points() const;

  bool operator==(const FrequencyGrid&) const = default;
};

struct ParameterSet {
  DeviceParams device;
  ReactionParams reaction;
  FrequencyGrid grid;

  bool operator==(const ParameterSet&) const = default;
};

// Reference parameter set; gamma_rad is calibrated so the bare peak
// absorbance at omega_R is kBarePeakAbsorbance.
ParameterSet paper_defaults();

// Empty result means valid. One message per violated invariant.
std::vector<std::string> validate(const DeviceParams& d);
std::vector<std::string> validate(const ReactionParams& r);
std::vector<std::string> validate(const FrequencyGrid& g);
std::vector<std::string> validate(const DeviceParams& d, const ReactionParams& r);
std::vector<std::string> validate(const ParameterSet& p);

// Throws std::out_of_range unless 0 <= f_pump <= kMaxPumpFraction.
void check_pump_fraction(double f_pump);

}  // namespace remotepol

#endif  // REMOTEPOL_MODEL_H_
