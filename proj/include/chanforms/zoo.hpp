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
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chanforms/canonical.hpp"
#include "chanforms/complex_matrix.hpp"
#include "chanforms/density.hpp"
#include "chanforms/forms.hpp"
#include "chanforms/random.hpp"

namespace chanforms {

namespace channel {

/// rho -> U rho U^dagger with U = exp(i (sigma . axis) angle / 2).
struct Unitary {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
};

/// Every input goes to the fixed state with Bloch vector p0.
struct Pin {
  BlochVector p0;
};

struct Transpose {};

/// (p1, p2, p3) -> (p1, p2, 0).
struct EquatorialProjection {};

/// Keeps the state with probability p, applies sigma_1 otherwise.
struct BitFlip {
  double p = 1.0;
};

/// Keeps the state with probability p, applies sigma_3 otherwise.
struct PhaseFlip {
  double p = 1.0;
};

struct RawA {
  ComplexMatrix matrix;
};

struct RawKraus {
  std::vector<ComplexMatrix> operators;
};

}  // namespace channel

using ChannelKind =
    std::variant<channel::Unitary, channel::Pin, channel::Transpose,
                 channel::EquatorialProjection, channel::BitFlip, channel::PhaseFlip,
                 channel::RawA, channel::RawKraus>;

struct ChannelSpec {
  ChannelKind kind;

  /// Hilbert-space dimension n; 0 if a raw payload has an impossible shape.
  std::size_t dim() const {
    if (const auto* raw = std::get_if<channel::RawA>(&kind)) {
      return raw->matrix.is_square() ? exact_sqrt(raw->matrix.rows()) : 0;
    }
    if (const auto* raw = std::get_if<channel::RawKraus>(&kind)) {
      return raw->operators.empty() ? 0 : raw->operators.front().rows();
    }
    return 2;
  }

  std::string_view name() const {
    return std::visit(
        [](const auto& k) -> std::string_view {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, channel::Unitary>) return "unitary";
          else if constexpr (std::is_same_v<K, channel::Pin>) return "pin";
          else if constexpr (std::is_same_v<K, channel::Transpose>) return "transpose";
          else if constexpr (std::is_same_v<K, channel::EquatorialProjection>)
            return "equatorial_projection";
          else if constexpr (std::is_same_v<K, channel::BitFlip>) return "bit_flip";
          else if constexpr (std::is_same_v<K, channel::PhaseFlip>) return "phase_flip";
          else if constexpr (std::is_same_v<K, channel::RawA>) return "raw_a";
          else return "raw_kraus";
        },
        kind);
  }
};

inline ComplexMatrix rotation_unitary(const std::array<double, 3>& axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex n_minus(axis[0], -axis[1]);
  const Complex n_plus(axis[0], axis[1]);
  const Complex i(0.0, 1.0);
  return {{Complex(c, axis[2] * s), i * n_minus * s},
          {i * n_plus * s, Complex(c, -axis[2] * s)}};
}

/// A_U = U (x) U^*.
inline AForm build_unitary_a(const std::array<double, 3>& axis, double angle,
                             double tol = kDefaultTol) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(norm - 1.0) > tol) {
    throw Error(ErrorKind::NotUnitAxis, "|axis| = " + std::to_string(norm));
  }
  const ComplexMatrix u = rotation_unitary(axis, angle);
  return AForm{2, kron(u, u.conjugate())};
}

inline AForm build_pin_a(const BlochVector& p0, double tol = kDefaultTol) {
  if (p0.norm() > 1.0 + tol) {
    throw Error(ErrorKind::OutsideBall, "|p0| = " + std::to_string(p0.norm()));
  }
  const Complex top = 0.5 * (1.0 + p0.p3);
  const Complex minus(0.5 * p0.p1, -0.5 * p0.p2);
  const Complex plus(0.5 * p0.p1, 0.5 * p0.p2);
  const Complex bottom = 0.5 * (1.0 - p0.p3);
  return AForm{2, ComplexMatrix{{top, 0.0, 0.0, top},
                                {minus, 0.0, 0.0, minus},
                                {plus, 0.0, 0.0, plus},
                                {bottom, 0.0, 0.0, bottom}}};
}

inline AForm build_transpose_a() {
  return AForm{2, ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                                {0.0, 0.0, 1.0, 0.0},
                                {0.0, 1.0, 0.0, 0.0},
                                {0.0, 0.0, 0.0, 1.0}}};
}

inline AForm build_equatorial_projection_a() {
  return AForm{2, ComplexMatrix{{0.5, 0.0, 0.0, 0.5},
                                {0.0, 1.0, 0.0, 0.0},
                                {0.0, 0.0, 1.0, 0.0},
                                {0.5, 0.0, 0.0, 0.5}}};
}

inline void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::ProbabilityRange,
                "probability must lie in [0, 1], got " + std::to_string(p));
  }
}

inline AForm build_bit_flip_a(double p) {
  require_probability(p);
  const double q = 1.0 - p;
  return AForm{2, ComplexMatrix{{p, 0.0, 0.0, q},
                                {0.0, p, q, 0.0},
                                {0.0, q, p, 0.0},
                                {q, 0.0, 0.0, p}}};
}

/// diag(1, 2p - 1, 2p - 1, 1), the form that follows from the Kraus pair
/// {sqrt(p) I, sqrt(1 - p) sigma_3}.
inline AForm build_phase_flip_a(double p) {
  require_probability(p);
  const double d = 2.0 * p - 1.0;
  return AForm{2, ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                                {0.0, d, 0.0, 0.0},
                                {0.0, 0.0, d, 0.0},
                                {0.0, 0.0, 0.0, 1.0}}};
}

/// {sqrt(p) I, sqrt(1 - p) sigma_1}.
inline KrausSet bit_flip_kraus(double p) {
  require_probability(p);
  return KrausSet{2, {std::sqrt(p) * pauli(0), std::sqrt(1.0 - p) * pauli(1)}};
}

/// {sqrt(p) I, sqrt(1 - p) sigma_3}.
inline KrausSet phase_flip_kraus(double p) {
  require_probability(p);
  return KrausSet{2, {std::sqrt(p) * pauli(0), std::sqrt(1.0 - p) * pauli(3)}};
}

/// Random trace-preserving CP map with `rank` Kraus operators: a
/// (rank*n) x n complex Gaussian matrix has its columns orthonormalized and
/// is cut into rank blocks of n x n. The stacked blocks form an isometry, so
/// sum E^dagger E = I holds by construction.
inline KrausSet random_cp_channel(std::size_t n, std::size_t rank, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (rank < 1 || rank > n * n) {
    throw Error(ErrorKind::RankRange, "rank must lie in [1, " + std::to_string(n * n) +
                                          "], got " + std::to_string(rank));
  }
  SplitMix64 rng(seed);
  ComplexMatrix g = random_gaussian_matrix(rank * n, n, rng);
  const std::size_t m = g.rows();

  // Modified Gram-Schmidt, two passes for orthogonality at rounding level.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (std::size_t i = 0; i < m; ++i) g(i, j) -= proj * g(i, k);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += std::norm(g(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) g(i, j) *= inv;
  }

  KrausSet out{n, {}};
  out.operators.reserve(rank);
  for (std::size_t b = 0; b < rank; ++b) {
    ComplexMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = g(b * n + i, j);
    out.operators.push_back(std::move(e));
  }
  return out;
}

/// A-form for any channel spec. Raw A payloads are taken as given (shape
/// checked only); validity is the caller's concern.
inline AForm build_a(const ChannelSpec& spec, double tol = kDefaultTol) {
  return std::visit(
      [tol](const auto& k) -> AForm {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, channel::Unitary>) {
          return build_unitary_a(k.axis, k.angle, tol);
        } else if constexpr (std::is_same_v<K, channel::Pin>) {
          return build_pin_a(k.p0, tol);
        } else if constexpr (std::is_same_v<K, channel::Transpose>) {
          return build_transpose_a();
        } else if constexpr (std::is_same_v<K, channel::EquatorialProjection>) {
          return build_equatorial_projection_a();
        } else if constexpr (std::is_same_v<K, channel::BitFlip>) {
          return build_bit_flip_a(k.p);
        } else if constexpr (std::is_same_v<K, channel::PhaseFlip>) {
          return build_phase_flip_a(k.p);
        } else if constexpr (std::is_same_v<K, channel::RawA>) {
          return AForm::from_matrix(k.matrix);
        } else {
          if (k.operators.empty()) throw Error(ErrorKind::IncompleteKraus, "empty Kraus set");
          const std::size_t n = k.operators.front().rows();
          return kraus_to_a(KrausSet{n, k.operators}, tol);
        }
      },
      spec.kind);
}

struct ZooEntry {
  std::string_view kind;
  std::string_view parameters;
  std::string_view description;
  std::string_view coefficient_spectrum;
};

/// The named qubit channels and their coefficient-matrix spectra.
inline constexpr std::array<ZooEntry, 6> kZoo{{
    {"unitary", "axis: unit 3-vector, angle: radians",
     "rho -> U rho U^dagger, U = exp(i (sigma . axis) angle/2); A = U (x) U^*",
     "{2, 0, 0, 0} (rank 1)"},
    {"pin", "p0: Bloch vector, |p0| <= 1",
     "every input -> rho0 = (I + sigma . p0)/2; B = rho0 (x) I",
     "{(1+|p0|)/2 x2, (1-|p0|)/2 x2}"},
    {"transpose", "-", "rho -> rho^T; B = A (positive but not CP)", "{1, 1, 1, -1}"},
    {"equatorial_projection", "-",
     "(p1, p2, p3) -> (p1, p2, 0); not CP", "{1.5, 0.5, 0.5, -0.5}"},
    {"bit_flip", "p in [0, 1]", "Kraus {sqrt(p) I, sqrt(1-p) sigma_1}",
     "{2p, 2(1-p), 0, 0}"},
    {"phase_flip", "p in [0, 1]",
     "Kraus {sqrt(p) I, sqrt(1-p) sigma_3}; A = diag(1, 2p-1, 2p-1, 1)",
     "{2p, 2(1-p), 0, 0}"},
}};

}  // namespace chanforms
