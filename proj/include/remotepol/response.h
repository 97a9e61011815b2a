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

#ifndef REMOTEPOL_RESPONSE_H_
#define REMOTEPOL_RESPONSE_H_

#include <stdexcept>
#include <string_view>
#include <vector>

#include "remotepol/linalg.h"
#include "remotepol/model.h"

namespace remotepol {

// Which cavity mirror the monochromatic input field enters through.
enum class InputPort {
  kRCavity,   // probe, through the R cavity
  kRcCavity,  // pump characterization, through the RC cavity
};

std::string_view port_name(InputPort port);

// Linear response of each polarization to unit input amplitude at the
// active port, X(omega) = S_X(omega) c_in(omega).
//
// Convention: the input enters the driven cavity equation as
// -sqrt(kappa) c_in(t) with c_in(t) = e^{-i omega t}; S_X is the co-rotating
// steady-state amplitude of X. Observables use only |S|^2.
struct ResponseAmplitudes {
  Complex rc;      // P_RC
  Complex rc3;     // P_RC,3 (third-order RC polarization)
  Complex cav_rc;  // c_RC
  Complex cav_r;   // c_R
  Complex r;       // P_R
  // Amplitudes of the 0->1 and 1->2 RC transitions in the effective
  // Hamiltonian basis; rc = sqrt(1-2f) rc01 + sqrt(2f) rc12, rc3 = sqrt(2f) rc12.
  Complex rc01;
  Complex rc12;
};

struct ResponseSet {
  std::vector<double> omega;
  std::vector<ResponseAmplitudes> amplitudes;
  double f_pump = 0.0;
  InputPort port = InputPort::kRCavity;
};

struct Spectrum {
  std::vector<double> omega;
  std::vector<double> value;

  bool operator==(const Spectrum&) const = default;
};

// Solves (omega - H_pump - L) v = b for one frequency, b = -i sqrt(kappa) at
// the driven cavity row. Throws std::out_of_range for bad f_pump.
ResponseAmplitudes solve_response_at(const DeviceParams& d, double f_pump, InputPort port,
                                     double omega);

// Whole-grid solve. Frequencies are split into contiguous shards across
// `threads` workers; results are identical to the serial solve.
ResponseSet solve_response(const DeviceParams& d, double f_pump, InputPort port,
                           const FrequencyGrid& grid, int threads = 1);

// gamma_R |S_R|^2.
Spectrum absorbance_r(const ResponseSet& resp, const DeviceParams& d);
// gamma_RC |S_RC|^2.
Spectrum absorbance_rc(const ResponseSet& resp, const DeviceParams& d);

// Where the unit input flux goes at one frequency (IVR neglected).
struct FluxBalance {
  double reflected = 0.0;    // |c_out / c_in|^2 at the driven mirror
  double transmitted = 0.0;  // leaked through the other cavity's mirror
  double rc_loss = 0.0;      // RC block dissipation, both transitions
  double r_loss = 0.0;       // gamma_R |S_R|^2
  double total() const { return reflected + transmitted + rc_loss + r_loss; }
};

// The RC block loss is the quadratic form of the anti-Hermitian part of
// build_loss over (rc01, rc12):
//   gamma_RC (|a|^2 + 3|b|^2 - 2 s Re(conj(a) b)),  s = sqrt(2f/(1-2f)).
// At f_pump = 0 this is gamma_RC |S_RC|^2. The form is positive definite for
// f_pump < 3/8, and total() == 1 up to rounding for any admissible f_pump.
FluxBalance flux_balance(const ResponseAmplitudes& s, const DeviceParams& d, double f_pump,
                         InputPort port);

class OracleNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int steps_per_period = 50;
  int window_periods = 20;
  double tolerance = 1e-8;
  long long max_steps = 20'000'000;
};

// Brute-force steady state: integrates the time-domain equations of motion
// (built directly from the P_RC, P_RC3, c_RC, c_R, P_R equations, not from
// the effective Hamiltonian) with fixed-step RK4 from rest under drive
// e^{-i omega t}, in the frame co-rotating with the drive. Converged when the
// state changes by less than `tolerance` (relative) per period for
// `window_periods` consecutive periods. Throws OracleNotConverged when the
// step budget runs out.
ResponseAmplitudes time_domain_oracle(const DeviceParams& d, double f_pump, InputPort port,
                                      double omega_drive, const OracleOptions& options = {});

}  // namespace remotepol

#endif  // REMOTEPOL_RESPONSE_H_
