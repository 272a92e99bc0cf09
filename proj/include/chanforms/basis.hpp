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

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "chanforms/complex_matrix.hpp"
#include "chanforms/density.hpp"

namespace chanforms {

enum class BasisLabel { PauliOverSqrt2, MatrixUnits };

inline constexpr std::string_view to_string(BasisLabel label) {
  return label == BasisLabel::PauliOverSqrt2 ? "pauli" : "units";
}

/// Trace-orthonormal operator basis {T_mu}, Tr[T_mu^dagger T_nu] = delta.
struct OperatorBasis {
  std::size_t dim = 0;
  BasisLabel label = BasisLabel::MatrixUnits;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const noexcept { return elements.size(); }
  const ComplexMatrix& operator[](std::size_t mu) const { return elements[mu]; }

  /// max |Tr[T_mu^dagger T_nu] - delta_{mu nu}|.
  double orthonormality_residual() const {
    double r = 0.0;
    for (std::size_t mu = 0; mu < elements.size(); ++mu)
      for (std::size_t nu = 0; nu < elements.size(); ++nu) {
        const Complex g = hs_inner(elements[mu], elements[nu]);
        r = std::max(r, std::abs(g - (mu == nu ? 1.0 : 0.0)));
      }
    return r;
  }
};

/// Pauli/sqrt(2) for n = 2, or matrix units E_jk ordered with index j*n + k.
inline OperatorBasis standard_basis(std::size_t n, BasisLabel label) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "basis dimension must be at least 2");
  }
  OperatorBasis basis{n, label, {}};
  basis.elements.reserve(n * n);
  if (label == BasisLabel::PauliOverSqrt2) {
    if (n != 2) {
      throw Error(ErrorKind::UnsupportedCombination,
                  "Pauli basis exists only for n = 2, requested n = " + std::to_string(n));
    }
    for (int k = 0; k < 4; ++k) basis.elements.push_back(pauli(k) * (1.0 / std::numbers::sqrt2));
    return basis;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      ComplexMatrix e(n, n);
      e(j, k) = 1.0;
      basis.elements.push_back(std::move(e));
    }
  return basis;
}

/// Pauli for n = 2, matrix units otherwise.
inline BasisLabel default_basis_label(std::size_t n) {
  return n == 2 ? BasisLabel::PauliOverSqrt2 : BasisLabel::MatrixUnits;
}

}  // namespace chanforms
