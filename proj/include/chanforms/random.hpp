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
#include <limits>
#include <numbers>
#include <vector>

#include "chanforms/complex_matrix.hpp"

namespace chanforms {

/// SplitMix64. Satisfies UniformRandomBitGenerator; `split()` derives an
/// independent stream so sub-tasks can draw without sharing state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64((*this)() ^ 0x6A09E667F3BCC909ULL); }

  /// Uniform in (0, 1); never returns 0.
  double uniform() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Written out instead of using
  /// std::normal_distribution so sequences match across standard libraries.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols,
                                            SplitMix64& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.data()) z = rng.complex_normal();
  return g;
}

/// Haar-random unit vector (normalized complex Gaussian).
inline std::vector<Complex> random_pure_state(std::size_t n, SplitMix64& rng) {
  std::vector<Complex> psi(n);
  double norm2 = 0.0;
  for (auto& z : psi) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : psi) z *= inv;
  return psi;
}

inline ComplexMatrix outer(std::span<const Complex> psi) {
  ComplexMatrix m(psi.size(), psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return m;
}

/// Full-rank mixed state G G^dagger / Tr(G G^dagger).
inline ComplexMatrix random_density_matrix(std::size_t n, SplitMix64& rng) {
  const ComplexMatrix g = random_gaussian_matrix(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  for (std::size_t i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

inline std::array<double, 3> random_unit_axis(SplitMix64& rng) {
  for (;;) {
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1e-8) return {x / r, y / r, z / r};
  }
}

}  // namespace chanforms
