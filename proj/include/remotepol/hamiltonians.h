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

#ifndef REMOTEPOL_HAMILTONIANS_H_
#define REMOTEPOL_HAMILTONIANS_H_

#include <string_view>
#include <vector>

#include "remotepol/linalg.h"
#include "remotepol/model.h"

namespace remotepol {

// Single-excitation basis states of the device.
enum class BasisLabel {
  kRc01,   // RC OH stretch 0 -> 1 (collective bright state)
  kRc12,   // RC OH stretch 1 -> 2, present only when pumped
  kCavRc,  // cavity hosting RC
  kCavR,   // cavity hosting R
  kR,      // reactant OH stretch (collective bright state)
};

std::string_view label_name(BasisLabel label);

// Real symmetric Hamiltonian in a labelled basis. Orders are fixed:
//   no pump: RC01, cavRC, cavR, R
//   pump:    RC01, RC12, cavRC, cavR, R
struct HermitianMatrix {
  RealMatrix entries;
  std::vector<BasisLabel> labels;

  std::size_t size() const { return labels.size(); }
  // Index of `label`, or -1 when absent.
  int index_of(BasisLabel label) const;
};

HermitianMatrix build_no_pump(const DeviceParams& d);

// Pump-dressed Hamiltonian: the RC-cavity coupling is split into
// sqrt(1 - 2f) on the 0->1 transition and sqrt(2f) on the 1->2 transition.
// Throws std::out_of_range for f_pump outside [0, 0.5).
HermitianMatrix build_pump(const DeviceParams& d, double f_pump);

// Non-Hermitian loss part in the pump basis order. The only off-diagonal
// entry is (RC01, RC12) = i gamma_RC sqrt(2f / (1 - 2f)).
ComplexMatrix build_loss(const DeviceParams& d, double f_pump);

struct EigenSystem {
  std::vector<BasisLabel> labels;
  std::vector<double> eigenvalues;  // ascending
  RealMatrix eigenvectors;          // column k belongs to eigenvalues[k]
  // mixing_fractions[k][j]: weight of labels[j] in eigenstate k.
  std::vector<std::vector<double>> mixing_fractions;

  double fraction(std::size_t state, BasisLabel label) const;
};

// Jacobi diagonalization. Eigenvalues ascending; ties broken by descending
// RC01 fraction and then by the fraction vectors in basis order. Each
// eigenvector is signed so its largest-magnitude component is positive.
EigenSystem diagonalize(const HermitianMatrix& h);

struct GradientMarker {
  BasisLabel species;
  int position;  // 1..100
};

struct StateMarkers {
  std::size_t state;  // index into EigenSystem::eigenvalues
  double energy;
  std::vector<GradientMarker> markers;
};

// Color-gradient markers for level diagrams. Species run in the order
// cavRC, RC, R, cavR; an RC12 fraction is folded into RC. States are listed
// from highest to lowest energy. Zero-position markers are dropped.
std::vector<StateMarkers> gradient_markers(const EigenSystem& e);

// Marker positions for one state's fractions in species order
// (cavRC, RC, R, cavR), zero positions included.
std::vector<int> gradient_positions(const std::vector<double>& species_fractions);

// Nearest integer with halves rounded down: ceil(x - 0.5).
int round_half_down(double x);

}  // namespace remotepol

#endif  // REMOTEPOL_HAMILTONIANS_H_
