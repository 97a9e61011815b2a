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

#include "remotepol/response.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "remotepol/hamiltonians.h"

namespace remotepol {

namespace {

constexpr Complex kI{0.0, 1.0};

// Pump-basis rows of the two cavities.
constexpr std::size_t kCavRcRow = 2;
constexpr std::size_t kCavRRow = 3;

double port_kappa(const DeviceParams& d, InputPort port) {
  return port == InputPort::kRCavity ? d.kappa_r : d.kappa_rc;
}

ResponseAmplitudes from_effective_basis(const std::vector<Complex>& v, double f_pump) {
  ResponseAmplitudes s;
  s.rc01 = v[0];
  s.rc12 = v[1];
  s.rc3 = std::sqrt(2.0 * f_pump) * v[1];
  s.rc = std::sqrt(1.0 - 2.0 * f_pump) * v[0] + s.rc3;
  s.cav_rc = v[2];
  s.cav_r = v[3];
  s.r = v[4];
  return s;
}

// omega - H_pump - L, assembled once per (d, f_pump); only the diagonal
// shift changes across frequencies.
ComplexMatrix effective_generator(const DeviceParams& d, double f_pump) {
  const HermitianMatrix h = build_pump(d, f_pump);
  const ComplexMatrix l = build_loss(d, f_pump);
  ComplexMatrix m(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = h.entries(i, j) + l(i, j);
  return m;
}

ResponseAmplitudes solve_with(const ComplexMatrix& generator, const DeviceParams& d,
                              double f_pump, InputPort port, double omega) {
  ComplexMatrix a(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) a(i, j) = -generator(i, j);
  for (std::size_t i = 0; i < 5; ++i) a(i, i) += omega;

  std::vector<Complex> b(5);
  b[port == InputPort::kRCavity ? kCavRRow : kCavRcRow] = -kI * std::sqrt(port_kappa(d, port));
  return from_effective_basis(solve_linear(std::move(a), std::move(b)), f_pump);
}

}  // namespace

std::string_view port_name(InputPort port) {
  return port == InputPort::kRCavity ? "r" : "rc";
}

ResponseAmplitudes solve_response_at(const DeviceParams& d, double f_pump, InputPort port,
                                     double omega) {
  return solve_with(effective_generator(d, f_pump), d, f_pump, port, omega);
}

ResponseSet solve_response(const DeviceParams& d, double f_pump, InputPort port,
                           const FrequencyGrid& grid, int threads) {
  const ComplexMatrix generator = effective_generator(d, f_pump);
  ResponseSet out;
  out.f_pump = f_pump;
  out.port = port;
  out.omega = grid.points();
  out.amplitudes.resize(out.omega.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out.amplitudes[i] = solve_with(generator, d, f_pump, port, out.omega[i]);
  };

  const std::size_t n = out.omega.size();
  const std::size_t workers = std::clamp<std::size_t>(std::size_t(std::max(threads, 1)), 1, n ? n : 1);
  if (workers == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk)
    pool.emplace_back(work, begin, std::min(n, begin + chunk));
  return out;
}

Spectrum absorbance_r(const ResponseSet& resp, const DeviceParams& d) {
  Spectrum s{resp.omega, std::vector<double>(resp.omega.size())};
  for (std::size_t i = 0; i < s.value.size(); ++i)
    s.value[i] = d.gamma_r * std::norm(resp.amplitudes[i].r);
  return s;
}

Spectrum absorbance_rc(const ResponseSet& resp, const DeviceParams& d) {
  Spectrum s{resp.omega, std::vector<double>(resp.omega.size())};
  for (std::size_t i = 0; i < s.value.size(); ++i)
    s.value[i] = d.gamma_rc * std::norm(resp.amplitudes[i].rc);
  return s;
}

FluxBalance flux_balance(const ResponseAmplitudes& s, const DeviceParams& d, double f_pump,
                         InputPort port) {
  FluxBalance f;
  if (port == InputPort::kRCavity) {
    f.reflected = std::norm(1.0 + std::sqrt(d.kappa_r) * s.cav_r);
    f.transmitted = d.kappa_rc * std::norm(s.cav_rc);
  } else {
    f.reflected = std::norm(1.0 + std::sqrt(d.kappa_rc) * s.cav_rc);
    f.transmitted = d.kappa_r * std::norm(s.cav_r);
  }
  const double mix = std::sqrt(2.0 * f_pump / (1.0 - 2.0 * f_pump));
  f.rc_loss = d.gamma_rc * (std::norm(s.rc01) + 3.0 * std::norm(s.rc12) -
                            2.0 * mix * std::real(std::conj(s.rc01) * s.rc12));
  f.r_loss = d.gamma_r * std::norm(s.r);
  return f;
}

namespace {

using State = std::array<Complex, 5>;

// Right-hand side matrix of i dx/dt = M x for (P_RC, P_RC3, c_RC, c_R, P_R),
// transcribed from the equations of motion.
ComplexMatrix equations_of_motion(const DeviceParams& d, double f_pump) {
  ComplexMatrix m(5);
  const double g_rc = d.g_rc_collective;
  m(0, 0) = d.omega_rc - kI * d.gamma_rc / 2.0;
  m(0, 1) = 2.0 * d.delta;
  m(0, 2) = g_rc;
  m(1, 1) = d.omega_rc + 2.0 * d.delta - kI * 3.0 * d.gamma_rc / 2.0;
  m(1, 2) = 2.0 * g_rc * f_pump;
  m(2, 2) = d.omega_cav_rc - kI * d.kappa_rc / 2.0;
  m(2, 3) = d.g_cav;
  m(2, 0) = g_rc;
  m(3, 3) = d.omega_cav_r - kI * d.kappa_r / 2.0;
  m(3, 2) = d.g_cav;
  m(3, 4) = d.g_r_collective;
  m(4, 4) = d.omega_r - kI * d.gamma_r / 2.0;
  m(4, 3) = d.g_r_collective;
  return m;
}

double state_norm(const State& s) {
  double sum = 0.0;
  for (const Complex& c : s) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace

ResponseAmplitudes time_domain_oracle(const DeviceParams& d, double f_pump, InputPort port,
                                      double omega_drive, const OracleOptions& options) {
  check_pump_fraction(f_pump);

  // Co-rotating frame y = x e^{i omega t}: dy/dt = -i (M - omega) y - sqrt(kappa) e_port.
  ComplexMatrix k = equations_of_motion(d, f_pump);
  for (std::size_t i = 0; i < 5; ++i) k(i, i) -= omega_drive;

  double rate_bound = 0.0;  // Gershgorin bound on the spectral radius of k
  for (std::size_t i = 0; i < 5; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 5; ++j) row += std::abs(k(i, j));
    rate_bound = std::max(rate_bound, row);
  }
  const double period = 2.0 * M_PI / rate_bound;
  const double h = period / options.steps_per_period;

  State drive{};
  drive[port == InputPort::kRCavity ? 3 : 2] = -std::sqrt(port_kappa(d, port));

  auto derivative = [&](const State& y) {
    State dy;
    for (std::size_t i = 0; i < 5; ++i) {
      Complex acc{};
      for (std::size_t j = 0; j < 5; ++j) acc += k(i, j) * y[j];
      dy[i] = -kI * acc + drive[i];
    }
    return dy;
  };
  auto axpy = [](const State& y, double a, const State& x) {
    State out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = y[i] + a * x[i];
    return out;
  };

  State y{};
  State last_period = y;
  int quiet_periods = 0;
  for (long long step = 1; step <= options.max_steps; ++step) {
    const State k1 = derivative(y);
    const State k2 = derivative(axpy(y, h / 2.0, k1));
    const State k3 = derivative(axpy(y, h / 2.0, k2));
    const State k4 = derivative(axpy(y, h, k3));
    for (std::size_t i = 0; i < 5; ++i)
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    if (step % options.steps_per_period != 0) continue;
    State diff;
    for (std::size_t i = 0; i < 5; ++i) diff[i] = y[i] - last_period[i];
    const double scale = state_norm(y);
    if (scale > 0.0 && state_norm(diff) < options.tolerance * scale) {
      if (++quiet_periods >= options.window_periods) {
        ResponseAmplitudes s;
        s.rc = y[0];
        s.rc3 = y[1];
        s.cav_rc = y[2];
        s.cav_r = y[3];
        s.r = y[4];
        s.rc12 = f_pump > 0.0 ? y[1] / std::sqrt(2.0 * f_pump) : Complex{};
        s.rc01 = (y[0] - y[1]) / std::sqrt(1.0 - 2.0 * f_pump);
        return s;
      }
    } else {
      quiet_periods = 0;
    }
    last_period = y;
  }
  throw OracleNotConverged("time_domain_oracle: no steady state within the step budget");
}

}  // namespace remotepol
