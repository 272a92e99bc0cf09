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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "chanforms/chanforms.hpp"
#include "test_support.hpp"

using namespace chanforms;
using namespace std::complex_literals;

namespace {

const OperatorBasis& pauli_basis() {
  static const OperatorBasis b = standard_basis(2, BasisLabel::PauliOverSqrt2);
  return b;
}

const OperatorBasis& unit_basis(std::size_t n) {
  static const OperatorBasis b2 = standard_basis(2, BasisLabel::MatrixUnits);
  static const OperatorBasis b3 = standard_basis(3, BasisLabel::MatrixUnits);
  return n == 2 ? b2 : b3;
}

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(d); }

// Oracle: the A matrix assembled column by column from the map's action on
// the matrix units, using only an operator-sum evaluation.
ComplexMatrix a_from_action(const KrausSet& k) {
  const std::size_t n = k.dim;
  ComplexMatrix a(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      ComplexMatrix unit(n, n);
      unit(r, s) = 1.0;
      ComplexMatrix out(n, n);
      for (const auto& e : k.operators) out += e * unit * e.adjoint();
      for (std::size_t i = 0; i < n * n; ++i) a(i, r * n + s) = out.data()[i];
    }
  return a;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(StandardBasis, PauliOverSqrt2) {
  const auto& b = pauli_basis();
  ASSERT_EQ(b.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_LE(max_abs_diff(b[k], pauli(k) * (1.0 / std::sqrt(2.0))), 1e-16);
  EXPECT_LE(b.orthonormality_residual(), 1e-15);
}

TEST(StandardBasis, MatrixUnits) {
  const auto b = standard_basis(2, BasisLabel::MatrixUnits);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t c = 0; c < 2; ++c)
          EXPECT_EQ(b[j * 2 + k](a, c), (j == a && k == c) ? 1.0 : 0.0);
  const auto b3 = standard_basis(3, BasisLabel::MatrixUnits);
  EXPECT_EQ(b3.size(), 9u);
  EXPECT_EQ(b3.orthonormality_residual(), 0.0);
}

TEST(StandardBasis, PauliNeedsQubit) {
  EXPECT_EQ(kind_of([] { standard_basis(3, BasisLabel::PauliOverSqrt2); }),
            ErrorKind::UnsupportedCombination);
}

TEST(CoefficientMatrix, TransposeMap) {
  // The sigma_2 slot carries the -1: rho^T = (rho + s1 rho s1 - s2 rho s2 + s3 rho s3)/2.
  const auto c = coefficient_matrix(build_transpose_a(), pauli_basis());
  EXPECT_LE(max_abs_diff(c.matrix, diag({1, 1, -1, 1})), 1e-12);
  EXPECT_LE(oracle::max_abs_diff(hermitian_eigenvalues(c.matrix), {1, 1, 1, -1}), 1e-12);
}

TEST(CoefficientMatrix, IdentityChannel) {
  const AForm id{2, ComplexMatrix::identity(4)};
  EXPECT_LE(max_abs_diff(coefficient_matrix(id, pauli_basis()).matrix, diag({2, 0, 0, 0})), 1e-12);
}

TEST(CoefficientMatrix, EquatorialProjection) {
  const auto c = coefficient_matrix(build_equatorial_projection_a(), pauli_basis());
  EXPECT_LE(max_abs_diff(c.matrix, diag({1.5, 0.5, 0.5, -0.5})), 1e-12);
}

TEST(CoefficientMatrix, PinMapEntries) {
  const BlochVector p{0.3, -0.2, 0.5};
  const auto c = coefficient_matrix(build_pin_a(p), pauli_basis());
  const ComplexMatrix expected = 0.5 * ComplexMatrix{{1.0, p.p1, p.p2, p.p3},
                                                     {p.p1, 1.0, -1.0i * p.p3, 1.0i * p.p2},
                                                     {p.p2, 1.0i * p.p3, 1.0, -1.0i * p.p1},
                                                     {p.p3, -1.0i * p.p2, 1.0i * p.p1, 1.0}};
  EXPECT_LE(max_abs_diff(c.matrix, expected), 1e-12);
}

TEST(CoefficientMatrix, ExpansionReproducesA) {
  for (std::size_t i = 0; i < 40; ++i) {
    const std::size_t n = i % 2 ? 3 : 2;
    const AForm a = oracle::mixed_population_a(i, n);
    for (const auto* basis : {&unit_basis(n), n == 2 ? &pauli_basis() : &unit_basis(n)}) {
      const auto c = coefficient_matrix(a, *basis);
      EXPECT_LE(c.matrix.hermiticity_residual(), 1e-12);
      EXPECT_LE(max_abs_diff(expand_coefficients(c), a.matrix), 1e-12);
    }
  }
}

TEST(CoefficientMatrix, Errors) {
  EXPECT_EQ(kind_of([] { coefficient_matrix(build_transpose_a(), unit_basis(3)); }),
            ErrorKind::DimensionMismatch);
  AForm bad = build_bit_flip_a(0.5);
  bad.matrix(0, 1) = 0.3i;  // breaks A*_{r's';rs} = A_{s'r';sr}
  EXPECT_EQ(kind_of([&] { coefficient_matrix(bad, pauli_basis()); }),
            ErrorKind::NotHermiticityPreserving);
}

TEST(Realign, TransposeIsSelfRealigned) {
  EXPECT_EQ(realign_a_to_b(build_transpose_a()).matrix, build_transpose_a().matrix);
  EXPECT_EQ(realign_b_to_a(BForm{2, build_transpose_a().matrix}).matrix, build_transpose_a().matrix);
}

TEST(Realign, PinIsRhoTensorIdentity) {
  const BlochVector p{0.6, 0.0, 0.0};
  const ComplexMatrix expected = kron(bloch_to_density(p).matrix(), ComplexMatrix::identity(2));
  EXPECT_EQ(realign_a_to_b(build_pin_a(p)).matrix, expected);
  const BlochVector up{0, 0, 1};
  EXPECT_EQ(realign_b_to_a(BForm{2, kron(bloch_to_density(up).matrix(), ComplexMatrix::identity(2))})
                .matrix,
            build_pin_a(up).matrix);
}

TEST(Realign, EquatorialProjection) {
  const ComplexMatrix expected = 0.5 * ComplexMatrix{{1.0, 0.0, 0.0, 2.0},
                                                     {0.0, 1.0, 0.0, 0.0},
                                                     {0.0, 0.0, 1.0, 0.0},
                                                     {2.0, 0.0, 0.0, 1.0}};
  EXPECT_EQ(realign_a_to_b(build_equatorial_projection_a()).matrix, expected);
}

TEST(Realign, InvolutionIsExact) {
  SplitMix64 rng(31);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + k % 3;
    const AForm a{n, random_gaussian_matrix(n * n, n * n, rng)};
    EXPECT_EQ(realign_b_to_a(realign_a_to_b(a)).matrix, a.matrix);
    const BForm b{n, random_gaussian_matrix(n * n, n * n, rng)};
    EXPECT_EQ(realign_a_to_b(realign_b_to_a(b)).matrix, b.matrix);
  }
}

TEST(Realign, ValidAFormGivesHermitianTraceNB) {
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 2;
    const BForm b = realign_a_to_b(oracle::mixed_population_a(i, n));
    EXPECT_LE(b.hermiticity_residual(), 1e-12);
    EXPECT_NEAR(b.trace().real(), static_cast<double>(n), 1e-12);
  }
}

TEST(CanonicalDecompose, UnitaryIsRankOneWithCProportionalToU) {
  const std::array<double, 3> axis{0.48, -0.6, 0.64};
  const double angle = 1.1;
  const auto c = canonical_decompose(build_unitary_a(axis, angle), pauli_basis());
  EXPECT_NEAR(c.eigenvalues[0], 2.0, 1e-12);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(c.eigenvalues[k], 0.0, 1e-12);
  const ComplexMatrix u = rotation_unitary(axis, angle);
  EXPECT_LE(oracle::distance_up_to_phase(c.canonical_ops[0], u * (1.0 / std::sqrt(2.0))), 1e-12);
}

TEST(CanonicalDecompose, TransposeSpectrumAndOperators) {
  const auto c = canonical_decompose(build_transpose_a(), pauli_basis());
  EXPECT_LE(oracle::max_abs_diff(c.eigenvalues, {1, 1, 1, -1}), 1e-12);
  // The -1 operator is sigma_2 / sqrt(2) up to phase.
  EXPECT_LE(oracle::distance_up_to_phase(c.canonical_ops[3], pauli(2) * (1.0 / std::sqrt(2.0))), 1e-12);
  EXPECT_LE(max_abs_diff(c.reconstruct_a(), build_transpose_a().matrix), 1e-12);
}

TEST(CanonicalDecompose, InvariantsOnRandomMaps) {
  for (std::size_t i = 0; i < 60; ++i) {
    const std::size_t n = i % 3 == 2 ? 3 : 2;
    const AForm a = oracle::mixed_population_a(i, n);
    const auto& basis = (n == 2 && i % 2 == 0) ? pauli_basis() : unit_basis(n);
    const auto c = canonical_decompose(a, basis);
    // Direct summation of lambda C (x) C^*.
    ComplexMatrix direct(n * n, n * n);
    for (std::size_t k = 0; k < c.eigenvalues.size(); ++k)
      direct += c.eigenvalues[k] * kron(c.canonical_ops[k], c.canonical_ops[k].conjugate());
    EXPECT_LT(max_abs_diff(direct, a.matrix), 1e-9);
    EXPECT_LT(max_abs_diff(c.trace_condition(), ComplexMatrix::identity(n)), 1e-9);
    for (std::size_t x = 0; x < n * n; ++x)
      for (std::size_t y = 0; y < n * n; ++y)
        EXPECT_NEAR(std::abs(hs_inner(c.canonical_ops[x], c.canonical_ops[y]) - (x == y ? 1.0 : 0.0)),
                    0.0, 1e-12);
    EXPECT_LE(oracle::max_abs_diff(c.eigenvalues,
                                   hermitian_eigenvalues(coefficient_matrix(a, basis).matrix)),
              1e-12);
  }
}

TEST(CanonicalDecompose, PhaseConventionLargestEntryRealPositive) {
  const auto c = canonical_decompose(kraus_to_a(random_cp_channel(2, 4, 5)), pauli_basis());
  for (const auto& op : c.canonical_ops) {
    const double largest = op.max_abs();
    for (const auto& z : op.data()) {
      if (std::abs(z) >= largest * (1.0 - 1e-9)) {
        EXPECT_NEAR(z.imag(), 0.0, 1e-15);
        EXPECT_GT(z.real(), 0.0);
        break;
      }
    }
  }
}

TEST(ExtractKraus, BitFlipPaperOperators) {
  const auto k = extract_kraus(canonical_decompose(build_bit_flip_a(0.75), pauli_basis()));
  ASSERT_EQ(k.operators.size(), 2u);
  EXPECT_LE(oracle::distance_up_to_phase(k.operators[0], std::sqrt(0.75) * pauli(0)), 1e-12);
  EXPECT_LE(oracle::distance_up_to_phase(k.operators[1], std::sqrt(0.25) * pauli(1)), 1e-12);
  EXPECT_LE(k.completeness_residual(), 1e-12);
}

TEST(ExtractKraus, TransposeIsNotCompletelyPositive) {
  const auto c = canonical_decompose(build_transpose_a(), pauli_basis());
  EXPECT_EQ(kind_of([&] { extract_kraus(c); }), ErrorKind::NotCompletelyPositive);
}

TEST(ExtractKraus, IdentityChannel) {
  const auto k = extract_kraus(canonical_decompose(AForm{2, ComplexMatrix::identity(4)}, pauli_basis()));
  ASSERT_EQ(k.operators.size(), 1u);
  EXPECT_LE(max_abs_diff(k.operators[0], ComplexMatrix::identity(2)), 1e-12);
}

TEST(ExtractKraus, DropsEigenvaluesAtOrBelowTol) {
  const auto c = canonical_decompose(kraus_to_a(random_cp_channel(2, 2, 19)), pauli_basis());
  EXPECT_EQ(extract_kraus(c).operators.size(), 2u);
}

TEST(ApplyA, PinSendsEverythingToRho0) {
  const BlochVector p0{0.1, -0.4, 0.7};
  const AForm a = build_pin_a(p0);
  SplitMix64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto out = apply_a(a, DensityMatrix(random_density_matrix(2, rng)));
    EXPECT_LE(max_abs_diff(out.matrix, bloch_to_density(p0).matrix()), 1e-12);
    EXPECT_TRUE(out.positive);
  }
}

TEST(ApplyA, TransposeNegatesSigma2Component) {
  const auto out = apply_a(build_transpose_a(), bloch_to_density({0, 1, 0}));
  EXPECT_EQ(density_to_bloch(out.matrix), (BlochVector{0, -1, 0}));
}

TEST(ApplyA, ProjectionZeroesP3) {
  const auto out = apply_a(build_equatorial_projection_a(), bloch_to_density({0.2, -0.3, 0.9}));
  const BlochVector q = density_to_bloch(out.matrix);
  EXPECT_NEAR(q.p1, 0.2, 1e-15);
  EXPECT_NEAR(q.p2, -0.3, 1e-15);
  EXPECT_NEAR(q.p3, 0.0, 1e-15);
}

TEST(ApplyA, NonPositiveOutputIsFlaggedNotRejected) {
  // Partial transpose of a maximally entangled state: transpose (x) id.
  const AForm t = build_transpose_a();
  const AForm extended{4, [&] {
                         ComplexMatrix m(16, 16);
                         // (T (x) id) acting on 4x4 matrices with composite index (x, y).
                         for (std::size_t xp = 0; xp < 2; ++xp)
                           for (std::size_t yp = 0; yp < 2; ++yp)
                             for (std::size_t zp = 0; zp < 2; ++zp)
                               for (std::size_t wp = 0; wp < 2; ++wp)
                                 for (std::size_t x = 0; x < 2; ++x)
                                   for (std::size_t z = 0; z < 2; ++z)
                                     m((xp * 2 + yp) * 4 + (zp * 2 + wp), (x * 2 + yp) * 4 + (z * 2 + wp)) =
                                         t.at(xp, zp, x, z);
                         return m;
                       }()};
  ComplexMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const auto out = apply_a(extended, DensityMatrix(bell));
  EXPECT_FALSE(out.positive);
  EXPECT_NEAR(out.min_eigenvalue, -0.5, 1e-12);
}

TEST(ApplyA, DimensionMismatch) {
  EXPECT_EQ(kind_of([] {
              apply_a(build_transpose_a(), DensityMatrix(ComplexMatrix::identity(3) * (1.0 / 3.0)));
            }),
            ErrorKind::DimensionMismatch);
}

TEST(ApplyCanonical, IdentityChannel) {
  const auto c = canonical_decompose(AForm{2, ComplexMatrix::identity(4)}, pauli_basis());
  SplitMix64 rng(6);
  const DensityMatrix rho(random_density_matrix(2, rng));
  EXPECT_LE(max_abs_diff(apply_canonical(c, rho).matrix, rho.matrix()), 1e-12);
}

TEST(ApplyCanonical, PhaseFlipHandOracle) {
  // p rho + (1 - p) s3 rho s3 maps (1, 0, 0) to (2p - 1, 0, 0).
  const auto c = canonical_decompose(build_phase_flip_a(0.3), pauli_basis());
  const BlochVector q = density_to_bloch(apply_canonical(c, bloch_to_density({1, 0, 0})).matrix);
  EXPECT_NEAR(q.p1, -0.4, 1e-12);
  EXPECT_NEAR(q.p2, 0.0, 1e-12);
  EXPECT_NEAR(q.p3, 0.0, 1e-12);
}

TEST(ApplyCanonical, BitFlipHandOracle) {
  // (rho + s1 rho s1)/2 sends |0><0| to I/2.
  const auto c = canonical_decompose(build_bit_flip_a(0.5), pauli_basis());
  const BlochVector q = density_to_bloch(apply_canonical(c, bloch_to_density({0, 0, 1})).matrix);
  EXPECT_NEAR(q.norm(), 0.0, 1e-12);
}

TEST(ApplyCanonical, AgreesWithApplyA) {
  SplitMix64 rng(100);
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = i % 5 == 4 ? 3 : 2;
    const AForm a = oracle::mixed_population_a(i, n);
    const auto c = canonical_decompose(a, n == 2 ? pauli_basis() : unit_basis(3));
    const DensityMatrix rho(random_density_matrix(n, rng));
    EXPECT_LT(max_abs_diff(apply_a(a, rho).matrix, apply_canonical(c, rho).matrix), 1e-9);
  }
}

TEST(KrausToA, BitFlipMatchesExplicitMatrix) {
  const double p = 0.75;
  const AForm a = kraus_to_a(KrausSet{2, {std::sqrt(p) * pauli(0), std::sqrt(1 - p) * pauli(1)}});
  const ComplexMatrix expected{{p, 0.0, 0.0, 1 - p},
                               {0.0, p, 1 - p, 0.0},
                               {0.0, 1 - p, p, 0.0},
                               {1 - p, 0.0, 0.0, p}};
  EXPECT_LE(max_abs_diff(a.matrix, expected), 1e-15);
}

TEST(KrausToA, IdentityOperator) {
  EXPECT_EQ(kraus_to_a(KrausSet{2, {ComplexMatrix::identity(2)}}).matrix, ComplexMatrix::identity(4));
}

TEST(KrausToA, PhaseFlipPairHandExpansion) {
  // p I(x)I + (1 - p) s3(x)s3 = diag(1, 2p - 1, 2p - 1, 1).
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const AForm a = kraus_to_a(phase_flip_kraus(p));
    EXPECT_LE(max_abs_diff(a.matrix, diag({1, 2 * p - 1, 2 * p - 1, 1})), 1e-15);
  }
}

TEST(KrausToA, RejectsIncompleteSets) {
  EXPECT_EQ(kind_of([] { kraus_to_a(KrausSet{2, {0.5 * pauli(0)}}); }), ErrorKind::IncompleteKraus);
  EXPECT_EQ(kind_of([] { kraus_to_a(KrausSet{2, {}}); }), ErrorKind::IncompleteKraus);
}

TEST(KrausToA, OutputAlwaysValidAndMatchesActionOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const KrausSet k = random_cp_channel(n, 1 + seed % (n * n), seed);
    const AForm a = kraus_to_a(k);
    const AFormCheck check = check_a_form(a, 1e-10);
    EXPECT_LE(check.hermiticity_residual, 1e-10);
    EXPECT_LE(check.trace_residual, 1e-10);
    EXPECT_LE(max_abs_diff(a.matrix, a_from_action(k)), 1e-14);
  }
}

TEST(KrausToA, LinearityOracleOnNamedChannels) {
  // Matrix-unit columns reproduce A exactly for the closed-form channels.
  EXPECT_LE(max_abs_diff(a_from_action(bit_flip_kraus(0.5)), build_bit_flip_a(0.5).matrix), 1e-15);
  EXPECT_LE(max_abs_diff(a_from_action(phase_flip_kraus(0.3)), build_phase_flip_a(0.3).matrix), 1e-15);
  EXPECT_EQ(a_from_action(KrausSet{2, {ComplexMatrix::identity(2)}}), ComplexMatrix::identity(4));
}

TEST(CpVerdict, Examples) {
  const auto t = cp_verdict(build_transpose_a(), pauli_basis());
  EXPECT_EQ(t.classification, CpClass::NotCompletelyPositive);
  EXPECT_NEAR(t.min_eigenvalue, -1.0, 1e-12);
  const auto p = cp_verdict(build_equatorial_projection_a(), pauli_basis());
  EXPECT_EQ(p.classification, CpClass::NotCompletelyPositive);
  EXPECT_NEAR(p.min_eigenvalue, -0.5, 1e-12);
  SplitMix64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const auto axis = random_unit_axis(rng);
    const double r = k == 0 ? 1.0 : rng.uniform();
    const auto v = cp_verdict(build_pin_a({r * axis[0], r * axis[1], r * axis[2]}), pauli_basis());
    EXPECT_EQ(v.classification, CpClass::CompletelyPositive);
    EXPECT_LE(oracle::max_abs_diff(v.eigenvalues, {(1 + r) / 2, (1 + r) / 2, (1 - r) / 2, (1 - r) / 2}),
              1e-12);
  }
}

TEST(CpVerdict, MatchesCanonicalEigenvalues) {
  for (std::size_t i = 0; i < 20; ++i) {
    const AForm a = oracle::mixed_population_a(i);
    EXPECT_EQ(cp_verdict(a, pauli_basis()).eigenvalues, canonical_decompose(a, pauli_basis()).eigenvalues);
    EXPECT_EQ(cp_verdict(a, pauli_basis()).completely_positive(), i % 4 != 3);
  }
}

TEST(ChannelForms, SpectralIdentityBothBases) {
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = i % 4 == 1 ? 3 : 2;
    const AForm a = oracle::mixed_population_a(i, n);
    const auto b_spec = hermitian_eigenvalues(realign_a_to_b(a).matrix);
    const auto units = hermitian_eigenvalues(coefficient_matrix(a, unit_basis(n)).matrix);
    EXPECT_LE(oracle::max_abs_diff(units, b_spec), 1e-9);
    double tr = 0.0;
    for (double l : units) tr += l;
    EXPECT_NEAR(tr, static_cast<double>(n), 1e-9);
    if (n == 2) {
      const auto paulis = hermitian_eigenvalues(coefficient_matrix(a, pauli_basis()).matrix);
      EXPECT_LE(oracle::max_abs_diff(paulis, b_spec), 1e-9);
      EXPECT_LE(oracle::max_abs_diff(paulis, units), 1e-9);
    }
  }
}

TEST(ChannelForms, KrausRoundTripIsIdentityOnCpMaps) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const AForm a = kraus_to_a(random_cp_channel(n, 1 + seed % (n * n), 300 + seed));
    const auto& basis = n == 2 ? pauli_basis() : unit_basis(3);
    const AForm back = kraus_to_a(extract_kraus(canonical_decompose(a, basis)));
    EXPECT_LT(max_abs_diff(back.matrix, a.matrix), 1e-8);
  }
}
