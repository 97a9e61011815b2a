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

#include "remotepol/linalg.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace remotepol {

double frobenius_norm(const RealMatrix& m) {
  double sum = 0.0;
  for (double v : m.data()) sum += v * v;
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& v : m.data()) sum += std::norm(v);
  return std::sqrt(sum);
}

std::vector<Complex> solve_linear(ComplexMatrix a, std::vector<Complex> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const double mag = std::abs(a(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (best == 0.0) throw std::domain_error("solve_linear: singular matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(col, k), a(pivot, k));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      const Complex factor = a(row, col) / a(col, col);
      if (factor == Complex{}) continue;
      a(row, col) = Complex{};
      for (std::size_t k = col + 1; k < n; ++k) a(row, k) -= factor * a(col, k);
      b[row] -= factor * b[col];
    }
  }

  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a(i, k) * x[k];
    x[i] = acc / a(i, i);
  }
  return x;
}

namespace {

double off_diagonal_norm(const RealMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) sum += m(i, j) * m(i, j);
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(const RealMatrix& m, double tolerance, int max_sweeps) {
  const std::size_t n = m.size();
  RealMatrix a = m;
  RealMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double scale = frobenius_norm(m);
  const double threshold = tolerance * (scale > 0.0 ? scale : 1.0);

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep == max_sweeps)
      throw std::runtime_error("jacobi_eigen: no convergence");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that zeroes a(p, q) (Numerical Recipes form).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SymmetricEigen out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(v);
  out.sweeps = sweep;
  return out;
}

}  // namespace remotepol
