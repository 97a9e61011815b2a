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

#ifndef REMOTEPOL_REACTION_H_
#define REMOTEPOL_REACTION_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "remotepol/model.h"
#include "remotepol/response.h"

namespace remotepol {

// Pump fraction at which the "ON" efficiency is evaluated.
inline constexpr double kReferencePumpFraction = 0.3;

// Steady-state transition rate from |R> at frequency omega into the trans
// well through |P>:  V^2 Gamma_trans / ((omega - omega_P)^2 + (Gamma/2)^2).
double ivr_rate(const ReactionParams& r, double omega);

// Polaritonic quantum yield ivr_rate / gamma_R. Not clamped; exceeds 1 near
// omega_P with the default parameters.
double quantum_yield(const ReactionParams& r, const DeviceParams& d, double omega);

// Bare-molecule quantum yield ivr_rate / gamma_nonrad.
double bare_quantum_yield(const ReactionParams& r, double omega);

// Polaritonic efficiency: probe absorbance into R times quantum_yield.
double efficiency_at(const DeviceParams& d, const ReactionParams& r, double f_pump,
                     double omega);
Spectrum efficiency(const DeviceParams& d, const ReactionParams& r, double f_pump,
                    const FrequencyGrid& grid, int threads = 1);

// Largest quantum_yield on the grid; callers warn when it exceeds 1.
double max_quantum_yield(const ReactionParams& r, const DeviceParams& d,
                         const FrequencyGrid& grid);

// Lorentzian bare absorbance of R with IVR neglected.
double bare_absorbance(const DeviceParams& d, const ReactionParams& r, double omega);

// gamma_rad that makes the bare Lorentzian peak equal `peak_absorbance`.
double calibrate_gamma_rad(double peak_absorbance, double gamma_nonrad);

double bare_efficiency(const DeviceParams& d, const ReactionParams& r, double omega);

struct ValidityReport {
  bool holds = false;
  double ivr_coupling_squared = 0.0;  // V^2
  double bound = 0.0;                 // |(omega_R - omega_P)(gamma_nonrad - Gamma)|
  double margin() const { return bound - ivr_coupling_squared; }
};

// Whether IVR can be dropped from the bare absorbance lineshape.
ValidityReport validity_criterion(const DeviceParams& d, const ReactionParams& r);

struct SearchWindow {
  double lo = 0.0;
  double hi = 0.0;
};

// [omega_P - 2, omega_R - g_R sqrt(N_R) + 2], the region holding the lowest
// polariton. Throws std::domain_error when empty.
SearchWindow omega_on_window(const DeviceParams& d, const ReactionParams& r);

// Grid argmax of efficiency(f_pump_ref, .) inside the window; ties go to
// the lowest frequency. Throws std::domain_error when no grid point lies in
// the window.
double find_omega_on(const DeviceParams& d, const ReactionParams& r, double f_pump_ref,
                     const FrequencyGrid& grid);

struct EfficiencyResult {
  Spectrum eta;      // efficiency at the reference pump fraction
  Spectrum eta_off;  // efficiency without pumping
  double f_pump_on = kReferencePumpFraction;
  double omega_on = 0.0;
  double eta_on = 0.0;
  double eta_off_value = 0.0;
  double eta0 = 0.0;  // bare efficiency at omega_R
  double ratio_on_off = 0.0;
  double ratio_on_bare = 0.0;
  std::vector<std::string> warnings;
};

EfficiencyResult headline_ratios(const DeviceParams& d, const ReactionParams& r,
                                 const FrequencyGrid& grid, int threads = 1);

}  // namespace remotepol

#endif  // REMOTEPOL_REACTION_H_
