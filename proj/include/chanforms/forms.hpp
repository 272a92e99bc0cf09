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

namespace chanforms {

/// Linear map on row-vectorized n x n matrices: (rho_f)_{r's'} =
/// sum_{rs} A_{r's';rs} (rho_i)_{rs}. Row index r'*n + s', column r*n + s.
struct AForm {
  std::size_t dim = 0;
  ComplexMatrix matrix;

  static AForm from_matrix(ComplexMatrix m) {
    const std::size_t n = m.is_square() ? exact_sqrt(m.rows()) : 0;
    if (n < 1) {
      throw Error(ErrorKind::BadMatrixShape,
                  "A-form must be n^2 x n^2, got " + m.shape_string());
    }
    return AForm{n, std::move(m)};
  }

  const Complex& at(std::size_t rp, std::size_t sp, std::size_t r, std::size_t s) const {
    return matrix(rp * dim + sp, r * dim + s);
  }
};

/// Realigned dynamical matrix, B_{r'r;s's} = A_{r's';rs}.
struct BForm {
  std::size_t dim = 0;
  ComplexMatrix matrix;

  static BForm from_matrix(ComplexMatrix m) {
    const std::size_t n = m.is_square() ? exact_sqrt(m.rows()) : 0;
    if (n < 1) {
      throw Error(ErrorKind::BadMatrixShape,
                  "B-form must be n^2 x n^2, got " + m.shape_string());
    }
    return BForm{n, std::move(m)};
  }

  double hermiticity_residual() const { return matrix.hermiticity_residual(); }
  Complex trace() const { return matrix.trace(); }
};

/// Residuals of the two A-form constraints: hermiticity preservation
/// A*_{r's';rs} = A_{s'r';sr} and trace preservation
/// sum_{r'} A_{r'r';rs} = delta_{rs}.
struct AFormCheck {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double tol = kDefaultTol;

  bool hermiticity_preserving() const { return hermiticity_residual <= tol; }
  bool trace_preserving() const { return trace_residual <= tol; }
  bool valid() const { return hermiticity_preserving() && trace_preserving(); }
};

inline constexpr const char* kHermiticityConstraint = "A*_{r's';rs} = A_{s'r';sr}";
inline constexpr const char* kTraceConstraint = "sum_{r'} A_{r'r';rs} = delta_{rs}";

inline AFormCheck check_a_form(const AForm& a, double tol = kDefaultTol) {
  const std::size_t n = a.dim;
  AFormCheck check{0.0, 0.0, tol};
  for (std::size_t rp = 0; rp < n; ++rp)
    for (std::size_t sp = 0; sp < n; ++sp)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          check.hermiticity_residual =
              std::max(check.hermiticity_residual,
                       std::abs(std::conj(a.at(rp, sp, r, s)) - a.at(sp, rp, s, r)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      Complex sum{0.0, 0.0};
      for (std::size_t rp = 0; rp < n; ++rp) sum += a.at(rp, rp, r, s);
      check.trace_residual =
          std::max(check.trace_residual, std::abs(sum - (r == s ? 1.0 : 0.0)));
    }
  return check;
}

inline void require_hermiticity_preserving(const AForm& a, double tol) {
  const AFormCheck check = check_a_form(a, tol);
  if (!check.hermiticity_preserving()) {
    throw Error(ErrorKind::NotHermiticityPreserving,
                std::string("violates ") + kHermiticityConstraint + " (residual " +
                    std::to_string(check.hermiticity_residual) + ")");
  }
}

/// Throws NotHermiticityPreserving or NotTracePreserving, naming the
/// violated constraint.
inline void require_valid(const AForm& a, double tol) {
  const AFormCheck check = check_a_form(a, tol);
  if (!check.hermiticity_preserving()) {
    throw Error(ErrorKind::NotHermiticityPreserving,
                std::string("violates ") + kHermiticityConstraint + " (residual " +
                    std::to_string(check.hermiticity_residual) + ")");
  }
  if (!check.trace_preserving()) {
    throw Error(ErrorKind::NotTracePreserving,
                std::string("violates ") + kTraceConstraint + " (residual " +
                    std::to_string(check.trace_residual) + ")");
  }
}

inline BForm realign_a_to_b(const AForm& a) {
  const std::size_t n = a.dim;
  BForm b{n, ComplexMatrix(n * n, n * n)};
  for (std::size_t rp = 0; rp < n; ++rp)
    for (std::size_t sp = 0; sp < n; ++sp)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          b.matrix(rp * n + r, sp * n + s) = a.matrix(rp * n + sp, r * n + s);
  return b;
}

inline AForm realign_b_to_a(const BForm& b) {
  const std::size_t n = b.dim;
  AForm a{n, ComplexMatrix(n * n, n * n)};
  for (std::size_t rp = 0; rp < n; ++rp)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t sp = 0; sp < n; ++sp)
        for (std::size_t s = 0; s < n; ++s)
          a.matrix(rp * n + sp, r * n + s) = b.matrix(rp * n + r, sp * n + s);
  return a;
}

/// Expansion coefficients a_{mu nu} of A in the basis T_mu (x) T_nu^*.
struct CoefficientMatrix {
  std::size_t dim = 0;
  OperatorBasis basis;
  ComplexMatrix matrix;
};

inline void require_matching_basis(std::size_t dim, const OperatorBasis& basis) {
  if (basis.dim != dim || basis.size() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "basis of dimension " + std::to_string(basis.dim) +
                    " used with a map on dimension " + std::to_string(dim));
  }
}

/// a_{mu nu} = Tr[A (T_mu^dagger (x) T_nu^T)].
///
/// Written out, a_{mu nu} = sum A_{r's';rs} conj(T_mu)_{r'r} (T_nu)_{s's};
/// the sum over (s', s) is done first so the cost is O(n^6).
inline CoefficientMatrix coefficient_matrix(const AForm& a, const OperatorBasis& basis,
                                            double tol = kDefaultTol) {
  require_matching_basis(a.dim, basis);
  require_hermiticity_preserving(a, tol);
  const std::size_t n = a.dim;
  const std::size_t n2 = n * n;

  // partial(nu)(r', r) = sum_{s', s} A_{r's';rs} (T_nu)_{s's}
  std::vector<ComplexMatrix> partial(n2, ComplexMatrix(n, n));
  for (std::size_t nu = 0; nu < n2; ++nu) {
    const ComplexMatrix& t = basis[nu];
    for (std::size_t rp = 0; rp < n; ++rp)
      for (std::size_t r = 0; r < n; ++r) {
        Complex sum{0.0, 0.0};
        for (std::size_t sp = 0; sp < n; ++sp)
          for (std::size_t s = 0; s < n; ++s) sum += a.at(rp, sp, r, s) * t(sp, s);
        partial[nu](rp, r) = sum;
      }
  }

  CoefficientMatrix out{n, basis, ComplexMatrix(n2, n2)};
  for (std::size_t mu = 0; mu < n2; ++mu)
    for (std::size_t nu = 0; nu < n2; ++nu)
      out.matrix(mu, nu) = hs_inner(basis[mu], partial[nu]);
  return out;
}

/// sum_{mu nu} a_{mu nu} T_mu (x) T_nu^*; inverse of coefficient_matrix.
inline ComplexMatrix expand_coefficients(const CoefficientMatrix& c) {
  const std::size_t n2 = c.dim * c.dim;
  ComplexMatrix out(n2, n2);
  for (std::size_t mu = 0; mu < n2; ++mu)
    for (std::size_t nu = 0; nu < n2; ++nu) {
      const Complex coef = c.matrix(mu, nu);
      if (coef == Complex{0.0, 0.0}) continue;
      out += coef * kron(c.basis[mu], c.basis[nu].conjugate());
    }
  return out;
}

/// Output of a map applied to a state. Maps that are not completely positive
/// can produce non-positive output; that is reported, not rejected.
struct AppliedState {
  ComplexMatrix matrix;
  double min_eigenvalue = 0.0;
  bool positive = true;
};

inline AppliedState make_applied_state(ComplexMatrix out, double tol) {
  ComplexMatrix herm = out + out.adjoint();
  herm *= 0.5;
  const double min_eig = hermitian_eigenvalues(herm, tol).back();
  return AppliedState{std::move(out), min_eig, min_eig >= -tol};
}

inline void require_state_dim(std::size_t map_dim, std::size_t state_dim) {
  if (map_dim != state_dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "map acts on dimension " + std::to_string(map_dim) +
                    ", state has dimension " + std::to_string(state_dim));
  }
}

/// rho_f = unvec(A vec(rho_i)) on a raw matrix, no state checks.
inline ComplexMatrix apply_a_matrix(const AForm& a, const ComplexMatrix& rho) {
  require_state_dim(a.dim, rho.rows());
  const std::size_t n2 = a.dim * a.dim;
  const auto in = row_vectorize(rho);
  std::vector<Complex> out(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < n2; ++j) sum += a.matrix(i, j) * in[j];
    out[i] = sum;
  }
  return row_unvectorize(out);
}

inline AppliedState apply_a(const AForm& a, const DensityMatrix& rho,
                            double tol = kDefaultTol) {
  return make_applied_state(apply_a_matrix(a, rho.matrix()), tol);
}

}  // namespace chanforms
