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

// Canonical form of a bit-flip channel and the transpose map, side by side.

#include <cstdio>

#include "chanforms/chanforms.hpp"

namespace cf = chanforms;

static void show(const char* name, const cf::AForm& a) {
  const auto basis = cf::standard_basis(2, cf::BasisLabel::PauliOverSqrt2);
  const auto canonical = cf::canonical_decompose(a, basis);
  const auto verdict = cf::verdict_from_eigenvalues(canonical.eigenvalues, cf::kDefaultTol);
  std::printf("%s: eigenvalues", name);
  for (double l : canonical.eigenvalues) std::printf(" %+.4f", l);
  std::printf("  -> %s\n", verdict.completely_positive() ? "CP" : "not CP");
  if (verdict.completely_positive()) {
    const auto kraus = cf::extract_kraus(canonical);
    std::printf("  %zu Kraus operators, completeness residual %.2e\n", kraus.operators.size(),
                kraus.completeness_residual());
  }
}

int main() {
  show("bit flip p=0.75", cf::build_bit_flip_a(0.75));
  show("transpose", cf::build_transpose_a());
  show("random rank-3 qubit channel", cf::kraus_to_a(cf::random_cp_channel(2, 3, 42)));
  return 0;
}
