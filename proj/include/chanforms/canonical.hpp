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
#include <string>
#include <vector>

#include "chanforms/basis.hpp"
#include "chanforms/complex_matrix.hpp"
#include "chanforms/density.hpp"
#include "chanforms/eigen.hpp"
#include "chanforms/forms.hpp"

namespace chanforms {

/// A = sum_a lambda_a (C_a (x) C_a^*), with trace-orthonormal C_a.
struct CanonicalDecomposition {
  std::size_t dim = 0;
  std::vector<double> eigenvalues;  // descending
  std::vector<ComplexMatrix> canonical_ops;
  OperatorBasis basis;

  std::size_t rank(double tol = kDefaultTol) const {
    return static_cast<std::size_t>(std::count_if(
        eigenvalues.begin(), eigenvalues.end(), [tol](double l) { return std::abs(l) > tol; }));
  }

  /// sum_a lambda_a C_a (x) C_a^*.
  ComplexMatrix reconstruct_a() const {
    const std::size_t n2 = dim * dim;
    ComplexMatrix out(n2, n2);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
      if (eigenvalues[k] == 0.0) continue;
      out += eigenvalues[k] * kron(canonical_ops[k], canonical_ops[k].conjugate());
    }
    return out;
  }

  /// sum_a lambda_a C_a^dagger C_a; the identity for trace-preserving maps.
  ComplexMatrix trace_condition() const {
    ComplexMatrix out(dim, dim);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
      out += eigenvalues[k] * (canonical_ops[k].adjoint() * canonical_ops[k]);
    return out;
  }
};

/// Kraus operators E_a; completeness sum E^dagger E = I is checked by
/// consumers, not on construction, so raw user input can be represented.
struct KrausSet {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> operators;

  ComplexMatrix completeness() const {
    ComplexMatrix out(dim, dim);
    for (const auto& e : operators) out += e.adjoint() * e;
    return out;
  }

  double completeness_residual() const {
    return max_abs_diff(completeness(), ComplexMatrix::identity(dim));
  }
};

enum class CpClass { CompletelyPositive, NotCompletelyPositive };

inline constexpr std::string_view to_string(CpClass c) {
  return c == CpClass::CompletelyPositive ? "CP" : "NCP";
}

struct CpVerdict {
  CpClass classification = CpClass::CompletelyPositive;
  std::vector<double> eigenvalues;
  double min_eigenvalue = 0.0;
  double tol = kDefaultTol;

  bool completely_positive() const { return classification == CpClass::CompletelyPositive; }
};

namespace detail {

// Multiply by the phase that makes the largest-magnitude entry real and
// positive. Ties (within rounding) go to the first entry in row-major order.
inline Complex canonical_phase(const ComplexMatrix& c) {
  const double largest = c.max_abs();
  if (largest == 0.0) return 1.0;
  for (const auto& z : c.data()) {
    if (std::abs(z) >= largest * (1.0 - 1e-9)) return std::conj(z) / std::abs(z);
  }
  return 1.0;
}

}  // namespace detail

/// Diagonalizes the coefficient matrix and forms C_a = sum_mu u*_{a mu} T_mu.
inline CanonicalDecomposition canonical_decompose(const CoefficientMatrix& coef,
                                                  double tol = kDefaultTol) {
  const std::size_t n2 = coef.dim * coef.dim;
  const EigenDecomposition eig = hermitian_eigendecompose(coef.matrix, tol);
  CanonicalDecomposition out{coef.dim, eig.eigenvalues, {}, coef.basis};
  out.canonical_ops.reserve(n2);
  for (std::size_t alpha = 0; alpha < n2; ++alpha) {
    ComplexMatrix c(coef.dim, coef.dim);
    for (std::size_t mu = 0; mu < n2; ++mu) {
      const Complex u = std::conj(eig.unitary(alpha, mu));
      if (u == Complex{0.0, 0.0}) continue;
      c += u * coef.basis[mu];
    }
    c *= detail::canonical_phase(c);
    out.canonical_ops.push_back(std::move(c));
  }
  return out;
}

inline CanonicalDecomposition canonical_decompose(const AForm& a, const OperatorBasis& basis,
                                                  double tol = kDefaultTol) {
  return canonical_decompose(coefficient_matrix(a, basis, tol), tol);
}

inline CpVerdict verdict_from_eigenvalues(std::vector<double> eigenvalues, double tol) {
  const double min_eig =
      eigenvalues.empty() ? 0.0 : *std::min_element(eigenvalues.begin(), eigenvalues.end());
  const CpClass c =
      min_eig >= -tol ? CpClass::CompletelyPositive : CpClass::NotCompletelyPositive;
  return CpVerdict{c, std::move(eigenvalues), min_eig, tol};
}

/// CP iff the smallest eigenvalue of the coefficient matrix is >= -tol.
inline CpVerdict cp_verdict(const AForm& a, const OperatorBasis& basis,
                            double tol = kDefaultTol) {
  return verdict_from_eigenvalues(canonical_decompose(a, basis, tol).eigenvalues, tol);
}

/// E_a = sqrt(lambda_a) C_a for every lambda_a > tol.
inline KrausSet extract_kraus(const CanonicalDecomposition& c, double tol = kDefaultTol) {
  const double min_eig = c.eigenvalues.empty() ? 0.0 : c.eigenvalues.back();
  if (min_eig < -tol) {
    throw Error(ErrorKind::NotCompletelyPositive,
                "eigenvalue " + std::to_string(min_eig) +
                    " is negative; no Kraus representation exists");
  }
  KrausSet out{c.dim, {}};
  for (std::size_t k = 0; k < c.eigenvalues.size(); ++k) {
    if (c.eigenvalues[k] <= tol) continue;
    out.operators.push_back(std::sqrt(c.eigenvalues[k]) * c.canonical_ops[k]);
  }
  return out;
}

/// sum_a lambda_a C_a rho C_a^dagger.
inline ComplexMatrix apply_canonical_matrix(const CanonicalDecomposition& c,
                                            const ComplexMatrix& rho) {
  require_state_dim(c.dim, rho.rows());
  ComplexMatrix out(c.dim, c.dim);
  for (std::size_t k = 0; k < c.eigenvalues.size(); ++k) {
    if (c.eigenvalues[k] == 0.0) continue;
    out += c.eigenvalues[k] * (c.canonical_ops[k] * rho * c.canonical_ops[k].adjoint());
  }
  return out;
}

inline AppliedState apply_canonical(const CanonicalDecomposition& c, const DensityMatrix& rho,
                                    double tol = kDefaultTol) {
  return make_applied_state(apply_canonical_matrix(c, rho.matrix()), tol);
}

/// sum_a E_a rho E_a^dagger.
inline ComplexMatrix apply_kraus_matrix(const KrausSet& k, const ComplexMatrix& rho) {
  require_state_dim(k.dim, rho.rows());
  ComplexMatrix out(k.dim, k.dim);
  for (const auto& e : k.operators) out += e * rho * e.adjoint();
  return out;
}

inline AppliedState apply_kraus(const KrausSet& k, const DensityMatrix& rho,
                                double tol = kDefaultTol) {
  return make_applied_state(apply_kraus_matrix(k, rho.matrix()), tol);
}

/// A = sum_a E_a (x) E_a^*.
inline AForm kraus_to_a(const KrausSet& k, double tol = kDefaultTol) {
  if (k.operators.empty()) {
    throw Error(ErrorKind::IncompleteKraus, "empty Kraus set");
  }
  for (const auto& e : k.operators) {
    if (e.rows() != k.dim || e.cols() != k.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Kraus operator " + e.shape_string() + " in a set of dimension " +
                      std::to_string(k.dim));
    }
  }
  const double residual = k.completeness_residual();
  if (residual > tol) {
    throw Error(ErrorKind::IncompleteKraus,
                "sum E^dagger E deviates from I by " + std::to_string(residual));
  }
  const std::size_t n2 = k.dim * k.dim;
  AForm a{k.dim, ComplexMatrix(n2, n2)};
  for (const auto& e : k.operators) a.matrix += kron(e, e.conjugate());
  return a;
}

}  // namespace chanforms
