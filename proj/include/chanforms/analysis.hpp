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
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "chanforms/basis.hpp"
#include "chanforms/canonical.hpp"
#include "chanforms/forms.hpp"
#include "chanforms/random.hpp"
#include "chanforms/zoo.hpp"

namespace chanforms {

struct BFormSummary {
  double hermiticity_residual = 0.0;
  double trace = 0.0;
};

struct ProbeResult {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double worst_min_eigenvalue = 0.0;
};

struct AnalysisReport {
  ChannelSpec channel;
  std::size_t dim = 0;
  BasisLabel basis = BasisLabel::PauliOverSqrt2;
  double tol = kDefaultTol;
  AFormCheck a_form;
  BFormSummary b_form;
  std::vector<double> coefficient_spectrum;
  std::vector<double> b_spectrum;
  double spectral_match = 0.0;
  CpVerdict verdict;
  CanonicalDecomposition canonical;
  std::optional<KrausSet> kraus;
  std::string kraus_absent_reason;
  double choi_deviation = 0.0;
  ProbeResult probe;
};

struct AnalyzeOptions {
  std::optional<BasisLabel> basis;  // default_basis_label(n) when unset
  double tol = kDefaultTol;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

/// max |x_k - y_k| after sorting both descending; infinity on length mismatch.
inline double spectral_distance(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

/// Applies A (x) id_n to the maximally entangled state |Omega><Omega|,
/// Omega = sum_k |kk> / sqrt(n), acting on the first factor only.
inline ComplexMatrix choi_state(const AForm& a) {
  const std::size_t n = a.dim;
  const std::size_t n2 = n * n;
  ComplexMatrix omega(n2, n2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) omega(k * n + k, l * n + l) = 1.0 / static_cast<double>(n);

  // Composite index (system x, ancilla y) -> x*n + y.
  ComplexMatrix out(n2, n2);
  for (std::size_t xp = 0; xp < n; ++xp)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t zp = 0; zp < n; ++zp)
        for (std::size_t w = 0; w < n; ++w) {
          Complex sum{0.0, 0.0};
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t z = 0; z < n; ++z)
              sum += a.at(xp, zp, x, z) * omega(x * n + y, z * n + w);
          out(xp * n + y, zp * n + w) = sum;
        }
  return out;
}

/// max |(A (x) id)(|Omega><Omega|) - B/n|.
inline double choi_consistency(const AForm& a) {
  if (a.matrix.rows() != a.dim * a.dim || a.matrix.cols() != a.dim * a.dim) {
    throw Error(ErrorKind::DimensionMismatch, "A-form matrix does not match its dimension");
  }
  ComplexMatrix b_over_n = realign_a_to_b(a).matrix;
  b_over_n *= 1.0 / static_cast<double>(a.dim);
  return max_abs_diff(choi_state(a), b_over_n);
}

/// Most negative output eigenvalue over `samples` Haar-random pure inputs.
/// Only a necessary test: a positive but not CP map passes it.
inline double positivity_probe(const AForm& a, std::size_t samples, std::uint64_t seed,
                               double tol = kDefaultTol) {
  SplitMix64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const auto psi = random_pure_state(a.dim, rng);
    const ComplexMatrix out = apply_a_matrix(a, outer(psi));
    worst = std::min(worst, make_applied_state(out, tol).min_eigenvalue);
  }
  return worst;
}

inline AnalysisReport analyze(const ChannelSpec& spec, const AnalyzeOptions& options) {
  const double tol = options.tol;
  AForm a = build_a(spec, tol);
  AnalysisReport report;
  report.channel = spec;
  report.dim = a.dim;
  report.basis = options.basis.value_or(default_basis_label(a.dim));
  report.tol = tol;
  report.a_form = check_a_form(a, tol);
  require_valid(a, tol);

  const OperatorBasis basis = standard_basis(a.dim, report.basis);
  const BForm b = realign_a_to_b(a);
  report.b_form = {b.hermiticity_residual(), b.trace().real()};
  report.b_spectrum = hermitian_eigenvalues(b.matrix, tol);

  report.canonical = canonical_decompose(coefficient_matrix(a, basis, tol), tol);
  report.coefficient_spectrum = report.canonical.eigenvalues;
  report.spectral_match = spectral_distance(report.coefficient_spectrum, report.b_spectrum);
  report.verdict = verdict_from_eigenvalues(report.coefficient_spectrum, tol);

  if (report.verdict.completely_positive()) {
    report.kraus = extract_kraus(report.canonical, tol);
  } else {
    report.kraus_absent_reason = "NotCompletelyPositive: minimum eigenvalue " +
                                 std::to_string(report.verdict.min_eigenvalue) +
                                 " < -tol";
  }

  report.choi_deviation = choi_consistency(a);
  report.probe = {options.samples, options.seed,
                  positivity_probe(a, options.samples, options.seed, tol)};
  return report;
}

inline AnalysisReport analyze(const ChannelSpec& spec, const OperatorBasis& basis,
                              double tol = kDefaultTol) {
  AnalyzeOptions options;
  options.basis = basis.label;
  options.tol = tol;
  return analyze(spec, options);
}

}  // namespace chanforms
