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

#include "remotepol/reaction.h"

#include <cmath>
#include <sstream>

namespace remotepol {

double ivr_rate(const ReactionParams& r, double omega) {
  const double detuning = omega - r.omega_p;
  const double half_width = r.gamma_total_p / 2.0;
  return r.v2_gamma_trans / (detuning * detuning + half_width * half_width);
}

double quantum_yield(const ReactionParams& r, const DeviceParams& d, double omega) {
  return ivr_rate(r, omega) / d.gamma_r;
}

double bare_quantum_yield(const ReactionParams& r, double omega) {
  return ivr_rate(r, omega) / r.gamma_nonrad;
}

double efficiency_at(const DeviceParams& d, const ReactionParams& r, double f_pump,
                     double omega) {
  const ResponseAmplitudes s = solve_response_at(d, f_pump, InputPort::kRCavity, omega);
  return d.gamma_r * std::norm(s.r) * quantum_yield(r, d, omega);
}

Spectrum efficiency(const DeviceParams& d, const ReactionParams& r, double f_pump,
                    const FrequencyGrid& grid, int threads) {
  Spectrum s = absorbance_r(solve_response(d, f_pump, InputPort::kRCavity, grid, threads), d);
  for (std::size_t i = 0; i < s.value.size(); ++i)
    s.value[i] *= quantum_yield(r, d, s.omega[i]);
  return s;
}

double max_quantum_yield(const ReactionParams& r, const DeviceParams& d,
                         const FrequencyGrid& grid) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i)
    best = std::max(best, quantum_yield(r, d, grid.at(i)));
  // The Lorentzian peaks at omega_P, which may fall between grid points.
  if (r.omega_p >= grid.omega_min && r.omega_p <= grid.omega_max)
    best = std::max(best, quantum_yield(r, d, r.omega_p));
  return best;
}

double bare_absorbance(const DeviceParams& d, const ReactionParams& r, double omega) {
  const double detuning = omega - d.omega_r;
  const double half_width = r.gamma_nonrad / 2.0;
  return r.gamma_rad * r.gamma_nonrad / (detuning * detuning + half_width * half_width);
}

double calibrate_gamma_rad(double peak_absorbance, double gamma_nonrad) {
  return peak_absorbance * gamma_nonrad / 4.0;
}

double bare_efficiency(const DeviceParams& d, const ReactionParams& r, double omega) {
  return bare_absorbance(d, r, omega) * bare_quantum_yield(r, omega);
}

ValidityReport validity_criterion(const DeviceParams& d, const ReactionParams& r) {
  ValidityReport report;
  report.ivr_coupling_squared = r.ivr_coupling_squared();
  report.bound = std::abs((d.omega_r - r.omega_p) * (r.gamma_nonrad - r.gamma_total_p));
  report.holds = report.ivr_coupling_squared < report.bound;
  return report;
}

SearchWindow omega_on_window(const DeviceParams& d, const ReactionParams& r) {
  SearchWindow w{r.omega_p - 2.0, d.omega_r - d.g_r_collective + 2.0};
  if (w.lo > w.hi) {
    std::ostringstream msg;
    msg << "omega_ON search window is empty: [" << w.lo << ", " << w.hi << "]";
    throw std::domain_error(msg.str());
  }
  return w;
}

double find_omega_on(const DeviceParams& d, const ReactionParams& r, double f_pump_ref,
                     const FrequencyGrid& grid) {
  const SearchWindow w = omega_on_window(d, r);
  bool found = false;
  double best_omega = 0.0;
  double best_eta = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double omega = grid.at(i);
    if (omega < w.lo || omega > w.hi) continue;
    const double eta = efficiency_at(d, r, f_pump_ref, omega);
    if (!found || eta > best_eta) {
      found = true;
      best_eta = eta;
      best_omega = omega;
    }
  }
  if (!found) throw std::domain_error("no grid point inside the omega_ON search window");
  return best_omega;
}

EfficiencyResult headline_ratios(const DeviceParams& d, const ReactionParams& r,
                                 const FrequencyGrid& grid, int threads) {
  EfficiencyResult out;
  out.eta = efficiency(d, r, out.f_pump_on, grid, threads);
  out.eta_off = efficiency(d, r, 0.0, grid, threads);
  out.omega_on = find_omega_on(d, r, out.f_pump_on, grid);
  out.eta_on = efficiency_at(d, r, out.f_pump_on, out.omega_on);
  out.eta_off_value = efficiency_at(d, r, 0.0, out.omega_on);
  out.eta0 = bare_efficiency(d, r, d.omega_r);
  out.ratio_on_off = out.eta_on / out.eta_off_value;
  out.ratio_on_bare = out.eta_on / out.eta0;

  const double qy = max_quantum_yield(r, d, grid);
  if (qy > 1.0) {
    std::ostringstream msg;
    msg << "quantum yield exceeds 1 on the grid (max " << qy << ")";
    out.warnings.push_back(msg.str());
  }
  const ValidityReport validity = validity_criterion(d, r);
  if (!validity.holds) {
    std::ostringstream msg;
    msg << "IVR validity criterion fails: V^2 = " << validity.ivr_coupling_squared
        << " >= " << validity.bound;
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace remotepol
