// Copyright 2026 The chanforms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "chanforms/complex_matrix.hpp"
#include "chanforms/eigen.hpp"

namespace chanforms {

/// sigma_0 = I, sigma_1..3 = Pauli X, Y, Z.
inline ComplexMatrix pauli(int k) {
  using namespace std::complex_literals;
  switch (k) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -1.0i}, {1.0i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw Error(ErrorKind::InvalidArgument, "Pauli index must be 0..3");
  }
}

struct BlochVector {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double norm() const { return std::sqrt(p1 * p1 + p2 * p2 + p3 * p3); }
  std::array<double, 3> as_array() const { return {p1, p2, p3}; }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// Hermitian, unit-trace, positive semidefinite n x n matrix.
class DensityMatrix {
 public:
  /// Validates all three state properties at `tol`; throws InvalidState.
  explicit DensityMatrix(ComplexMatrix m, double tol = kDefaultTol) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() < 1) {
      throw Error(ErrorKind::InvalidState, "density matrix must be square, got " +
                                               m_.shape_string());
    }
    const double herm = m_.hermiticity_residual();
    if (herm > tol) {
      throw Error(ErrorKind::InvalidState,
                  "not Hermitian (residual " + std::to_string(herm) + ")");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - 1.0) > tol) {
      throw Error(ErrorKind::InvalidState,
                  "trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    const double min_eig = hermitian_eigenvalues(m_, tol).back();
    if (min_eig < -tol) {
      throw Error(ErrorKind::InvalidState,
                  "negative eigenvalue " + std::to_string(min_eig));
    }
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// rho = (I + p . sigma) / 2.
inline DensityMatrix bloch_to_density(const BlochVector& p, double tol = kDefaultTol) {
  if (p.norm() > 1.0 + tol) {
    throw Error(ErrorKind::OutsideBall,
                "|p| = " + std::to_string(p.norm()) + " exceeds 1");
  }
  const ComplexMatrix m{{0.5 * (1.0 + p.p3), Complex(0.5 * p.p1, -0.5 * p.p2)},
                        {Complex(0.5 * p.p1, 0.5 * p.p2), 0.5 * (1.0 - p.p3)}};
  // States a rounding hair outside the ball are admitted at tol.
  return DensityMatrix(m, std::max(tol, kDefaultTol));
}

inline BlochVector density_to_bloch(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw Error(ErrorKind::WrongDimension,
                "Bloch vector needs a 2x2 matrix, got " + rho.shape_string());
  }
  return {rho(0, 1).real() + rho(1, 0).real(), rho(1, 0).imag() - rho(0, 1).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

inline BlochVector density_to_bloch(const DensityMatrix& rho) {
  return density_to_bloch(rho.matrix());
}

/// Index r*n + s holds rho_{rs}.
inline std::vector<Complex> row_vectorize(const ComplexMatrix& m) {
  return {m.data().begin(), m.data().end()};
}

inline std::vector<Complex> row_vectorize(const DensityMatrix& rho) {
  return row_vectorize(rho.matrix());
}

inline ComplexMatrix row_unvectorize(std::span<const Complex> v) {
  const std::size_t n = exact_sqrt(v.size());
  if (n == 0) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector length " + std::to_string(v.size()) + " is not a square");
  }
  return ComplexMatrix(n, n, std::vector<Complex>(v.begin(), v.end()));
}

}  // namespace chanforms
