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

#include "remotepol/hamiltonians.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace remotepol {

std::string_view label_name(BasisLabel label) {
  switch (label) {
    case BasisLabel::kRc01: return "RC01";
    case BasisLabel::kRc12: return "RC12";
    case BasisLabel::kCavRc: return "cavRC";
    case BasisLabel::kCavR: return "cavR";
    case BasisLabel::kR: return "R";
  }
  return "?";
}

int HermitianMatrix::index_of(BasisLabel label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return int(i);
  return -1;
}

namespace {

void set_symmetric(RealMatrix& m, std::size_t i, std::size_t j, double v) {
  m(i, j) = v;
  m(j, i) = v;
}

}  // namespace

HermitianMatrix build_no_pump(const DeviceParams& d) {
  HermitianMatrix h;
  h.labels = {BasisLabel::kRc01, BasisLabel::kCavRc, BasisLabel::kCavR, BasisLabel::kR};
  h.entries = RealMatrix(4);
  auto& m = h.entries;
  m(0, 0) = d.omega_rc;
  m(1, 1) = d.omega_cav_rc;
  m(2, 2) = d.omega_cav_r;
  m(3, 3) = d.omega_r;
  set_symmetric(m, 0, 1, d.g_rc_collective);
  set_symmetric(m, 1, 2, d.g_cav);
  set_symmetric(m, 2, 3, d.g_r_collective);
  return h;
}

HermitianMatrix build_pump(const DeviceParams& d, double f_pump) {
  check_pump_fraction(f_pump);
  HermitianMatrix h;
  h.labels = {BasisLabel::kRc01, BasisLabel::kRc12, BasisLabel::kCavRc,
              BasisLabel::kCavR, BasisLabel::kR};
  h.entries = RealMatrix(5);
  auto& m = h.entries;
  m(0, 0) = d.omega_rc;
  m(1, 1) = d.omega_rc + 2.0 * d.delta;
  m(2, 2) = d.omega_cav_rc;
  m(3, 3) = d.omega_cav_r;
  m(4, 4) = d.omega_r;
  set_symmetric(m, 0, 2, d.g_rc_collective * std::sqrt(1.0 - 2.0 * f_pump));
  set_symmetric(m, 1, 2, d.g_rc_collective * std::sqrt(2.0 * f_pump));
  set_symmetric(m, 2, 3, d.g_cav);
  set_symmetric(m, 3, 4, d.g_r_collective);
  return h;
}

ComplexMatrix build_loss(const DeviceParams& d, double f_pump) {
  check_pump_fraction(f_pump);
  constexpr Complex kI{0.0, 1.0};
  ComplexMatrix l(5);
  l(0, 0) = -kI * d.gamma_rc / 2.0;
  l(1, 1) = -kI * 3.0 * d.gamma_rc / 2.0;
  l(2, 2) = -kI * d.kappa_rc / 2.0;
  l(3, 3) = -kI * d.kappa_r / 2.0;
  l(4, 4) = -kI * d.gamma_r / 2.0;
  l(0, 1) = kI * d.gamma_rc * std::sqrt(2.0 * f_pump / (1.0 - 2.0 * f_pump));
  return l;
}

double EigenSystem::fraction(std::size_t state, BasisLabel label) const {
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == label) return mixing_fractions[state][j];
  return 0.0;
}

EigenSystem diagonalize(const HermitianMatrix& h) {
  const std::size_t n = h.size();
  const SymmetricEigen raw = jacobi_eigen(h.entries);

  std::vector<std::vector<double>> fractions(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      fractions[k][j] = raw.vectors(j, k) * raw.vectors(j, k);

  const int rc01 = h.index_of(BasisLabel::kRc01);
  const double tie = 1e-12 * std::max(1.0, frobenius_norm(h.entries));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(raw.values[a] - raw.values[b]) > tie) return raw.values[a] < raw.values[b];
    if (rc01 >= 0 && fractions[a][rc01] != fractions[b][rc01])
      return fractions[a][rc01] > fractions[b][rc01];
    return fractions[a] > fractions[b];
  });

  EigenSystem e;
  e.labels = h.labels;
  e.eigenvalues.resize(n);
  e.eigenvectors = RealMatrix(n);
  e.mixing_fractions.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    e.eigenvalues[k] = raw.values[src];
    e.mixing_fractions[k] = fractions[src];

    std::size_t dominant = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(raw.vectors(j, src)) > std::abs(raw.vectors(dominant, src))) dominant = j;
    const double sign = raw.vectors(dominant, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) e.eigenvectors(j, k) = sign * raw.vectors(j, src);
  }
  return e;
}

int round_half_down(double x) { return int(std::ceil(x - 0.5)); }

std::vector<int> gradient_positions(const std::vector<double>& f) {
  if (f.size() != 4) throw std::invalid_argument("gradient_positions: need 4 species fractions");
  std::vector<int> g(4);
  for (std::size_t i = 0; i < 3; ++i) g[i] = round_half_down(100.0 * (f[i] + f[i + 1]) / 2.0);
  g[3] = round_half_down(100.0 * (f[3] + 1.0) / 2.0);
  return g;
}

std::vector<StateMarkers> gradient_markers(const EigenSystem& e) {
  static constexpr BasisLabel kSpecies[4] = {BasisLabel::kCavRc, BasisLabel::kRc01,
                                             BasisLabel::kR, BasisLabel::kCavR};
  std::vector<StateMarkers> out;
  const std::size_t n = e.eigenvalues.size();
  for (std::size_t k = n; k-- > 0;) {
    std::vector<double> species(4);
    for (std::size_t i = 0; i < 4; ++i) species[i] = e.fraction(k, kSpecies[i]);
    species[1] += e.fraction(k, BasisLabel::kRc12);

    StateMarkers sm{k, e.eigenvalues[k], {}};
    const auto positions = gradient_positions(species);
    for (std::size_t i = 0; i < 4; ++i)
      if (positions[i] != 0) sm.markers.push_back({kSpecies[i], positions[i]});
    out.push_back(std::move(sm));
  }
  return out;
}

}  // namespace remotepol
