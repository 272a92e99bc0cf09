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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "chanforms/complex_matrix.hpp"

namespace chanforms {

/// Spectral decomposition of a Hermitian matrix M.
///
/// `unitary` is the matrix U with U M U^dagger = diag(eigenvalues). Its row k
/// is therefore the conjugate of the k-th eigenvector; `eigenvector(k)`
/// returns the eigenvector itself, satisfying M v = eigenvalues[k] v.
/// Eigenvalues are sorted descending.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix unitary;

  std::vector<Complex> eigenvector(std::size_t k) const {
    std::vector<Complex> v(unitary.cols());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::conj(unitary(k, j));
    return v;
  }

  /// U^dagger diag(lambda) U.
  ComplexMatrix reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        const Complex left = std::conj(unitary(k, i)) * eigenvalues[k];
        for (std::size_t j = 0; j < n; ++j) out(i, j) += left * unitary(k, j);
      }
    return out;
  }
};

struct JacobiOptions {
  // Convergence when the off-diagonal Frobenius norm drops below
  // relative_threshold * ||M||_F.
  double relative_threshold = 1e-12;
  int max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of a_pq with a diagonal unitary and
/// then applies a real Jacobi rotation, so the accumulated transform stays
/// exactly unitary up to rounding. Entries far below the convergence target
/// are zeroed instead of rotated; this keeps exactly degenerate clusters of
/// already-diagonal input from being mixed by rounding noise.
inline EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& m,
                                                   double tol = kDefaultTol,
                                                   JacobiOptions options = {}) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch,
                "eigendecomposition needs a square matrix, got " + m.shape_string());
  }
  const double asym = m.hermiticity_residual();
  if (asym > tol) {
    throw Error(ErrorKind::NotHermitian,
                "max |M - M^dagger| = " + std::to_string(asym) + " exceeds tol");
  }

  const std::size_t n = m.rows();
  // Work on the exact Hermitian part.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);  // columns are eigenvectors

  const double norm = a.frobenius_norm();
  const double target = options.relative_threshold * norm;
  const double negligible = 1e-3 * target;

  int sweep = 0;
  while (norm > 0.0 && detail::off_diagonal_norm(a) >= target) {
    if (sweep++ >= options.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi iteration did not converge in " +
                      std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        if (mag < negligible) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex pc = std::conj(phase);

        // A <- A G with G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * pc * akq;
          a(k, q) = s * akp + c * pc * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * pc * vkq;
          v(k, q) = s * vkp + c * pc * vkq;
        }
        // A <- G^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.unitary = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();
    for (std::size_t j = 0; j < n; ++j) out.unitary(k, j) = std::conj(v(j, src));
  }
  return out;
}

/// Eigenvalues only, descending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                                 double tol = kDefaultTol) {
  return hermitian_eigendecompose(m, tol).eigenvalues;
}

}  // namespace chanforms
