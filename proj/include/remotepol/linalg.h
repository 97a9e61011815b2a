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

#ifndef REMOTEPOL_LINALG_H_
#define REMOTEPOL_LINALG_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace remotepol {

using Complex = std::complex<double>;

// Small dense square matrix, row-major. Sizes here never exceed 5x5.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T{}) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const {
    return data_[row * n_ + col];
  }

  std::span<const T> data() const { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<Complex>;

// Frobenius norm.
double frobenius_norm(const RealMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

// Solves a x = b by Gaussian elimination with partial pivoting. The system
// must be nonsingular; a zero pivot throws std::domain_error.
std::vector<Complex> solve_linear(ComplexMatrix a, std::vector<Complex> b);

struct SymmetricEigen {
  std::vector<double> values;  // unsorted, matching columns of `vectors`
  RealMatrix vectors;          // eigenvectors stored as columns
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a real symmetric matrix. Stops once the
// off-diagonal Frobenius norm falls below tolerance * ||m||_F.
SymmetricEigen jacobi_eigen(const RealMatrix& m, double tolerance = 1e-12,
                            int max_sweeps = 100);

}  // namespace remotepol

#endif  // REMOTEPOL_LINALG_H_
