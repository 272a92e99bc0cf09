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
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chanforms/analysis.hpp"
#include "chanforms/canonical.hpp"
#include "chanforms/io.hpp"
#include "chanforms/zoo.hpp"

namespace chanforms::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidMap = 1,
  kExitUsage = 2,
  kExitNotCompletelyPositive = 3,
};

enum class OutputMode { Human, Machine };

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Command-line overrides; unset fields fall back to the document, then to
/// CHANFORMS_TOL (tolerance only), then to built-in defaults.
struct Settings {
  std::optional<BasisLabel> basis;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  OutputMode output = OutputMode::Human;
  // Value of CHANFORMS_TOL, if set. Kept here so tests need not touch the
  // process environment.
  std::optional<std::string> env_tol;
};

inline std::optional<std::string> env_tolerance() {
  if (const char* v = std::getenv("CHANFORMS_TOL")) return std::string(v);
  return std::nullopt;
}

inline double parse_tolerance(const std::string& text, const std::string& source) {
  char* end = nullptr;
  const double tol = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(tol) || tol <= 0.0) {
    throw Error(ErrorKind::InvalidArgument,
                source + ": tolerance must be a positive number, got \"" + text + "\"");
  }
  return tol;
}

inline AnalyzeOptions resolve_options(const ChannelDocument& doc, const Settings& s) {
  AnalyzeOptions o;
  if (s.env_tol) o.tol = parse_tolerance(*s.env_tol, "CHANFORMS_TOL");
  if (doc.options.tol) o.tol = *doc.options.tol;
  if (s.tol) o.tol = *s.tol;
  o.basis = s.basis ? s.basis : doc.options.basis;
  o.seed = s.seed.value_or(doc.options.seed.value_or(0));
  o.samples = s.samples.value_or(doc.options.samples.value_or(100));
  return o;
}

// ---------------------------------------------------------------------------
// Human-readable rendering: 6 significant digits, |x| < tol printed as 0.
// ---------------------------------------------------------------------------

inline std::string format_real(double x, double tol) {
  if (std::abs(x) < tol) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string format_complex(Complex z, double tol) {
  const bool re_zero = std::abs(z.real()) < tol;
  const bool im_zero = std::abs(z.imag()) < tol;
  if (im_zero) return format_real(z.real(), tol);
  std::string im = format_real(std::abs(z.imag()), tol) + "i";
  if (re_zero) return (z.imag() < 0 ? "-" : "") + im;
  return format_real(z.real(), tol) + (z.imag() < 0 ? "-" : "+") + im;
}

inline std::string format_reals(const std::vector<double>& v, double tol) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_real(v[k], tol);
  }
  return out + ")";
}

inline std::string render_matrix(const ComplexMatrix& m, double tol, std::string_view indent) {
  std::vector<std::string> cells(m.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < m.size(); ++k) {
    cells[k] = format_complex(m.data()[k], tol);
    width = std::max(width, cells[k].size());
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent;
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out += std::string(width - c.size() + (j ? 2 : 1), ' ') + c;
    }
    out += " ]\n";
  }
  return out;
}

inline std::string render_report(const AnalysisReport& r, const AForm& a,
                                 const CoefficientMatrix& coef) {
  const double tol = r.tol;
  std::ostringstream os;
  os << "channel: " << r.channel.name() << " (n = " << r.dim << ", basis "
     << to_string(r.basis) << ", tol " << format_real(tol, 0.0) << ")\n\n";
  os << "A-form:\n" << render_matrix(a.matrix, tol, "  ");
  os << "  hermiticity preservation " << kHermiticityConstraint << ": residual "
     << format_real(r.a_form.hermiticity_residual, tol)
     << (r.a_form.hermiticity_preserving() ? " ok" : " VIOLATED") << "\n";
  os << "  trace preservation " << kTraceConstraint << ": residual "
     << format_real(r.a_form.trace_residual, tol)
     << (r.a_form.trace_preserving() ? " ok" : " VIOLATED") << "\n\n";
  os << "B-form (realigned):\n" << render_matrix(realign_a_to_b(a).matrix, tol, "  ");
  os << "  hermiticity residual " << format_real(r.b_form.hermiticity_residual, tol) << ", trace "
     << format_real(r.b_form.trace, tol) << "\n\n";
  os << "coefficient matrix:\n" << render_matrix(coef.matrix, tol, "  ") << "\n";
  os << "coefficient spectrum: " << format_reals(r.coefficient_spectrum, tol) << "\n";
  os << "B spectrum:           " << format_reals(r.b_spectrum, tol) << "\n";
  os << "spectral match:       " << format_real(r.spectral_match, tol) << "\n\n";
  os << "verdict: "
     << (r.verdict.completely_positive() ? "completely positive" : "NOT completely positive")
     << " (min eigenvalue " << format_real(r.verdict.min_eigenvalue, tol) << ")\n\n";
  os << "canonical form (rank " << r.canonical.rank(tol) << "):\n";
  for (std::size_t k = 0; k < r.canonical.eigenvalues.size(); ++k) {
    if (std::abs(r.canonical.eigenvalues[k]) <= tol) continue;
    os << "  lambda = " << format_real(r.canonical.eigenvalues[k], tol) << ", C =\n"
       << render_matrix(r.canonical.canonical_ops[k], tol, "    ");
  }
  os << "\n";
  if (r.kraus) {
    os << "Kraus operators (" << r.kraus->operators.size() << "):\n";
    for (std::size_t k = 0; k < r.kraus->operators.size(); ++k)
      os << "  E" << k << " =\n" << render_matrix(r.kraus->operators[k], tol, "    ");
  } else {
    os << "Kraus operators: none (" << r.kraus_absent_reason << ")\n";
  }
  os << "\nChoi consistency deviation: " << format_real(r.choi_deviation, tol) << "\n";
  os << "positivity probe: " << r.probe.samples << " pure states, seed " << r.probe.seed
     << ", worst output eigenvalue "
     << (std::isfinite(r.probe.worst_min_eigenvalue)
             ? format_real(r.probe.worst_min_eigenvalue, tol)
             : std::string("n/a"))
     << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

namespace detail {

inline int exit_code_for(const Error& e) {
  return is_invalid_map(e.kind()) ? kExitInvalidMap : kExitUsage;
}

inline CommandResult failure(const Error& e) {
  return CommandResult{exit_code_for(e), "", std::string("error: ") + e.what() + "\n"};
}

// Runs `body`, turning every exception into an exit status.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failure(e);
  } catch (const std::exception& e) {
    return CommandResult{kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace detail

inline CommandResult run_analyze(const ChannelDocument& doc, const Settings& s) {
  return detail::guarded([&] {
    const AnalyzeOptions o = resolve_options(doc, s);
    const AnalysisReport report = analyze(doc.channel, o);
    CommandResult result;
    result.exit_code =
        report.verdict.completely_positive() ? kExitOk : kExitNotCompletelyPositive;
    if (s.output == OutputMode::Machine) {
      result.out = report_to_json(report).dump(2) + "\n";
    } else {
      const AForm a = build_a(doc.channel, o.tol);
      result.out = render_report(report, a,
                                 coefficient_matrix(a, standard_basis(a.dim, report.basis), o.tol));
    }
    return result;
  });
}

inline CommandResult run_analyze(std::string_view text, const Settings& s) {
  return detail::guarded([&] { return run_analyze(parse_channel_document(text), s); });
}

inline CommandResult run_apply(const ChannelDocument& doc, std::string_view state_text,
                               const Settings& s) {
  return detail::guarded([&] {
    const AnalyzeOptions o = resolve_options(doc, s);
    const AForm a = build_a(doc.channel, o.tol);
    require_valid(a, o.tol);
    const DensityMatrix rho(parse_state(state_text, o.tol), o.tol);
    if (rho.dim() != a.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "map acts on dimension " + std::to_string(a.dim) + ", state has dimension " +
                      std::to_string(rho.dim()));
    }
    const AppliedState out = apply_a(a, rho, o.tol);

    CommandResult result;
    if (s.output == OutputMode::Machine) {
      Json j;
      j["format_version"] = std::string(kFormatVersion);
      j["output"] = matrix_to_json(out.matrix);
      if (a.dim == 2) {
        const BlochVector p = density_to_bloch(out.matrix);
        j["bloch"] = Json::array({p.p1, p.p2, p.p3});
      }
      j["positive"] = out.positive;
      j["min_eigenvalue"] = out.min_eigenvalue;
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "output state:\n" << render_matrix(out.matrix, o.tol, "  ");
      if (a.dim == 2) {
        const BlochVector p = density_to_bloch(out.matrix);
        os << "Bloch vector: " << format_reals({p.p1, p.p2, p.p3}, o.tol) << "\n";
      }
      os << "min eigenvalue: " << format_real(out.min_eigenvalue, o.tol)
         << (out.positive ? "" : "  WARNING: output is not positive semidefinite") << "\n";
      result.out = os.str();
    }
    if (!out.positive) {
      result.err = "warning: the map produced a non-positive output\n";
    }
    return result;
  });
}

inline CommandResult run_apply(std::string_view doc_text, std::string_view state_text,
                               const Settings& s) {
  return detail::guarded(
      [&] { return run_apply(parse_channel_document(doc_text), state_text, s); });
}

inline CommandResult run_convert(const ChannelDocument& doc, Representation target,
                                 const Settings& s) {
  return detail::guarded([&] {
    const AnalyzeOptions o = resolve_options(doc, s);
    const AForm a = build_a(doc.channel, o.tol);
    require_valid(a, o.tol);
    const BasisLabel label = o.basis.value_or(default_basis_label(a.dim));

    Json out;
    switch (target) {
      case Representation::AForm:
        out = document_to_json(ChannelDocument{std::string(kFormatVersion),
                                               ChannelSpec{channel::RawA{a.matrix}}, {}});
        break;
      case Representation::BForm:
        out = representation_to_json({target, a.dim, std::nullopt, realign_a_to_b(a).matrix, {}, {}});
        break;
      case Representation::Coefficient: {
        const CoefficientMatrix c = coefficient_matrix(a, standard_basis(a.dim, label), o.tol);
        out = representation_to_json({target, a.dim, label, c.matrix, {}, {}});
        break;
      }
      case Representation::Canonical: {
        const CanonicalDecomposition c = canonical_decompose(a, standard_basis(a.dim, label), o.tol);
        out = representation_to_json({target, a.dim, label, std::nullopt, c.eigenvalues, c.canonical_ops});
        break;
      }
      case Representation::Kraus: {
        const CanonicalDecomposition c = canonical_decompose(a, standard_basis(a.dim, label), o.tol);
        try {
          const KrausSet k = extract_kraus(c, o.tol);
          out = document_to_json(ChannelDocument{std::string(kFormatVersion),
                                                 ChannelSpec{channel::RawKraus{k.operators}}, {}});
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotCompletelyPositive) throw;
          return CommandResult{kExitNotCompletelyPositive, "",
                               std::string("error: ") + e.what() + "\n"};
        }
        break;
      }
    }
    return CommandResult{kExitOk, out.dump(2) + "\n", ""};
  });
}

inline CommandResult run_convert(std::string_view text, Representation target, const Settings& s) {
  return detail::guarded([&] { return run_convert(parse_channel_document(text), target, s); });
}

inline CommandResult run_zoo(OutputMode mode) {
  CommandResult result;
  if (mode == OutputMode::Machine) {
    Json list = Json::array();
    for (const auto& e : kZoo) {
      list.push_back({{"kind", std::string(e.kind)},
                      {"parameters", std::string(e.parameters)},
                      {"description", std::string(e.description)},
                      {"coefficient_spectrum", std::string(e.coefficient_spectrum)}});
    }
    result.out = list.dump(2) + "\n";
    return result;
  }
  std::ostringstream os;
  for (const auto& e : kZoo) {
    os << e.kind << "\n"
       << "  parameters: " << e.parameters << "\n"
       << "  map:        " << e.description << "\n"
       << "  spectrum:   " << e.coefficient_spectrum << "\n";
  }
  result.out = os.str();
  return result;
}

}  // namespace chanforms::cli
