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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chanforms/analysis.hpp"
#include "chanforms/basis.hpp"
#include "chanforms/canonical.hpp"
#include "chanforms/complex_matrix.hpp"
#include "chanforms/density.hpp"
#include "chanforms/zoo.hpp"

namespace chanforms {

// Output uses ordered_json so the field layout is stable byte for byte.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

/// Parse failure with the offending field path (e.g. "channel.p") and, for
/// syntax errors, the 1-based line and column.
class DocumentError : public Error {
 public:
  DocumentError(ErrorKind kind, std::string field, const std::string& message,
                std::size_t line = 0, std::size_t column = 0)
      : Error(kind, context(field, line, column) + message),
        field_(std::move(field)),
        line_(line),
        column_(column) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string context(const std::string& field, std::size_t line, std::size_t column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out;
  }

  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

// ---------------------------------------------------------------------------
// Wire format: complex -> [re, im], matrix -> row-major nested arrays.
// ---------------------------------------------------------------------------

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json reals_to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

inline Json matrices_to_json(const std::vector<ComplexMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

namespace detail {

inline double number_from_json(const Json& j, const std::string& field) {
  if (!j.is_number()) {
    throw DocumentError(ErrorKind::SyntaxError, field, "expected a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw DocumentError(ErrorKind::NonFiniteEntry, field, "non-finite value");
  return x;
}

inline void require_object(const Json& j, const std::string& field) {
  if (!j.is_object()) throw DocumentError(ErrorKind::SyntaxError, field, "expected an object");
}

inline std::string join_field(const std::string& parent, std::string_view key) {
  return parent.empty() ? std::string(key) : parent + "." + std::string(key);
}

inline void reject_unknown(const Json& obj, const std::string& field,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || item.key() == a;
    if (!known) {
      throw DocumentError(ErrorKind::UnknownField, join_field(field, item.key()),
                          "unknown field");
    }
  }
}

inline const Json& require_field(const Json& obj, const std::string& field,
                                 std::string_view key) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    throw DocumentError(ErrorKind::MissingField, join_field(field, key), "missing field");
  }
  return *it;
}

inline std::array<double, 3> vec3_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) {
    throw DocumentError(ErrorKind::SyntaxError, field, "expected an array of 3 numbers");
  }
  return {number_from_json(j[0], field + "[0]"), number_from_json(j[1], field + "[1]"),
          number_from_json(j[2], field + "[2]")};
}

inline std::string string_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw DocumentError(ErrorKind::SyntaxError, field, "expected a string");
  return j.get<std::string>();
}

inline std::uint64_t u64_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) {
    throw DocumentError(ErrorKind::SyntaxError, field, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace detail

inline Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DocumentError(ErrorKind::BadMatrixShape, field,
                        "complex entries must be [re, im] number pairs");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DocumentError(ErrorKind::NonFiniteEntry, field, "non-finite matrix entry");
  }
  return {re, im};
}

inline ComplexMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw DocumentError(ErrorKind::BadMatrixShape, field, "matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> data;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) {
      throw DocumentError(ErrorKind::BadMatrixShape, row_field, "row must be a non-empty array");
    }
    if (i == 0) cols = row.size();
    if (row.size() != cols) {
      throw DocumentError(ErrorKind::BadMatrixShape, row_field,
                          "ragged matrix: row has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k)
      data.push_back(complex_from_json(row[k], row_field + "[" + std::to_string(k) + "]"));
  }
  return ComplexMatrix(rows, cols, std::move(data));
}

inline BasisLabel basis_from_string(std::string_view s, const std::string& field) {
  if (s == "pauli") return BasisLabel::PauliOverSqrt2;
  if (s == "units") return BasisLabel::MatrixUnits;
  throw DocumentError(ErrorKind::SyntaxError, field,
                      "basis must be \"pauli\" or \"units\", got \"" + std::string(s) + "\"");
}

// ---------------------------------------------------------------------------
// Channel specs and documents.
// ---------------------------------------------------------------------------

inline Json channel_to_json(const ChannelSpec& spec) {
  Json out;
  out["kind"] = std::string(spec.name());
  std::visit(
      [&out](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, channel::Unitary>) {
          out["axis"] = Json::array({k.axis[0], k.axis[1], k.axis[2]});
          out["angle"] = k.angle;
        } else if constexpr (std::is_same_v<K, channel::Pin>) {
          out["p0"] = Json::array({k.p0.p1, k.p0.p2, k.p0.p3});
        } else if constexpr (std::is_same_v<K, channel::BitFlip> ||
                             std::is_same_v<K, channel::PhaseFlip>) {
          out["p"] = k.p;
        } else if constexpr (std::is_same_v<K, channel::RawA>) {
          out["matrix"] = matrix_to_json(k.matrix);
        } else if constexpr (std::is_same_v<K, channel::RawKraus>) {
          out["operators"] = matrices_to_json(k.operators);
        }
      },
      spec.kind);
  return out;
}

inline ChannelSpec channel_from_json(const Json& j, const std::string& field = "channel") {
  using detail::reject_unknown;
  using detail::require_field;
  detail::require_object(j, field);
  const std::string kind =
      detail::string_from_json(require_field(j, field, "kind"), field + ".kind");

  if (kind == "unitary") {
    reject_unknown(j, field, {"kind", "axis", "angle"});
    return {channel::Unitary{detail::vec3_from_json(require_field(j, field, "axis"), field + ".axis"),
                             detail::number_from_json(require_field(j, field, "angle"),
                                                      field + ".angle")}};
  }
  if (kind == "pin") {
    reject_unknown(j, field, {"kind", "p0"});
    const auto p = detail::vec3_from_json(require_field(j, field, "p0"), field + ".p0");
    return {channel::Pin{BlochVector{p[0], p[1], p[2]}}};
  }
  if (kind == "transpose") {
    reject_unknown(j, field, {"kind"});
    return {channel::Transpose{}};
  }
  if (kind == "equatorial_projection") {
    reject_unknown(j, field, {"kind"});
    return {channel::EquatorialProjection{}};
  }
  if (kind == "bit_flip" || kind == "phase_flip") {
    reject_unknown(j, field, {"kind", "p"});
    const double p = detail::number_from_json(require_field(j, field, "p"), field + ".p");
    if (kind == "bit_flip") return {channel::BitFlip{p}};
    return {channel::PhaseFlip{p}};
  }
  if (kind == "raw_a") {
    reject_unknown(j, field, {"kind", "matrix"});
    ComplexMatrix m = matrix_from_json(require_field(j, field, "matrix"), field + ".matrix");
    const std::size_t n = m.is_square() ? exact_sqrt(m.rows()) : 0;
    if (n < 2) {
      throw DocumentError(ErrorKind::BadMatrixShape, field + ".matrix",
                          "A-form must be n^2 x n^2 with n >= 2, got " + m.shape_string());
    }
    return {channel::RawA{std::move(m)}};
  }
  if (kind == "raw_kraus") {
    reject_unknown(j, field, {"kind", "operators"});
    const Json& ops = require_field(j, field, "operators");
    if (!ops.is_array() || ops.empty()) {
      throw DocumentError(ErrorKind::BadMatrixShape, field + ".operators",
                          "expected a non-empty array of matrices");
    }
    channel::RawKraus raw;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const std::string op_field = field + ".operators[" + std::to_string(k) + "]";
      ComplexMatrix e = matrix_from_json(ops[k], op_field);
      if (!e.is_square() || e.rows() < 2 ||
          (!raw.operators.empty() && e.rows() != raw.operators.front().rows())) {
        throw DocumentError(ErrorKind::BadMatrixShape, op_field,
                            "Kraus operators must share one square shape n x n, n >= 2; got " +
                                e.shape_string());
      }
      raw.operators.push_back(std::move(e));
    }
    return {std::move(raw)};
  }
  throw DocumentError(ErrorKind::SyntaxError, field + ".kind", "unknown channel kind \"" + kind + "\"");
}

struct DocumentOptions {
  std::optional<BasisLabel> basis;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
};

struct ChannelDocument {
  std::string format_version{kFormatVersion};
  ChannelSpec channel;
  DocumentOptions options;
};

inline Json document_to_json(const ChannelDocument& doc) {
  Json out;
  out["format_version"] = doc.format_version;
  out["channel"] = channel_to_json(doc.channel);
  Json options = Json::object();
  if (doc.options.basis) options["basis"] = std::string(to_string(*doc.options.basis));
  if (doc.options.tol) options["tol"] = *doc.options.tol;
  if (doc.options.seed) options["seed"] = *doc.options.seed;
  if (doc.options.samples) options["samples"] = *doc.options.samples;
  if (!options.empty()) out["options"] = std::move(options);
  return out;
}

namespace detail {

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based; count lines up to it.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("; ");
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw DocumentError(ErrorKind::SyntaxError, "", what, line, column);
  } catch (const nlohmann::json::out_of_range& e) {
    // Number literals too large for a double.
    std::string what = e.what();
    const auto pos = what.find("] ");
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw DocumentError(ErrorKind::NonFiniteEntry, "", what);
  }
}

inline void require_version(const Json& root) {
  const std::string version =
      string_from_json(require_field(root, "", "format_version"), "format_version");
  if (version != kFormatVersion) {
    throw DocumentError(ErrorKind::SyntaxError, "format_version",
                        "unsupported format_version \"" + version + "\"");
  }
}

}  // namespace detail

inline ChannelDocument parse_channel_document(std::string_view text) {
  const Json root = detail::parse_json_text(text);
  detail::require_object(root, "");
  detail::reject_unknown(root, "", {"format_version", "channel", "options"});
  detail::require_version(root);

  ChannelDocument doc;
  doc.channel = channel_from_json(detail::require_field(root, "", "channel"), "channel");
  if (const auto it = root.find("options"); it != root.end()) {
    const Json& o = *it;
    detail::require_object(o, "options");
    detail::reject_unknown(o, "options", {"basis", "tol", "seed", "samples"});
    if (o.contains("basis")) {
      doc.options.basis =
          basis_from_string(detail::string_from_json(o["basis"], "options.basis"), "options.basis");
    }
    if (o.contains("tol")) {
      const double tol = detail::number_from_json(o["tol"], "options.tol");
      if (!(tol > 0.0)) {
        throw DocumentError(ErrorKind::SyntaxError, "options.tol", "tolerance must be positive");
      }
      doc.options.tol = tol;
    }
    if (o.contains("seed")) doc.options.seed = detail::u64_from_json(o["seed"], "options.seed");
    if (o.contains("samples")) {
      doc.options.samples =
          static_cast<std::size_t>(detail::u64_from_json(o["samples"], "options.samples"));
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// States for `apply`: {"bloch": [p1, p2, p3]} or {"density": matrix}.
// ---------------------------------------------------------------------------

inline ComplexMatrix parse_state(std::string_view text, double tol = kDefaultTol) {
  const Json root = detail::parse_json_text(text);
  detail::require_object(root, "");
  detail::reject_unknown(root, "", {"bloch", "density"});
  if (root.contains("bloch") == root.contains("density")) {
    throw DocumentError(ErrorKind::MissingField, "",
                        "state needs exactly one of \"bloch\" or \"density\"");
  }
  try {
    if (root.contains("bloch")) {
      const auto p = detail::vec3_from_json(root["bloch"], "bloch");
      return bloch_to_density(BlochVector{p[0], p[1], p[2]}, tol).matrix();
    }
    return DensityMatrix(matrix_from_json(root["density"], "density"), tol).matrix();
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidState, e.what());
  }
}

// ---------------------------------------------------------------------------
// Converted representations.
// ---------------------------------------------------------------------------

enum class Representation { AForm, BForm, Coefficient, Kraus, Canonical };

inline constexpr std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::AForm: return "a_form";
    case Representation::BForm: return "b_form";
    case Representation::Coefficient: return "coefficient";
    case Representation::Kraus: return "kraus";
    case Representation::Canonical: return "canonical";
  }
  return "";
}

inline std::optional<Representation> representation_from_string(std::string_view s) {
  for (auto r : {Representation::AForm, Representation::BForm, Representation::Coefficient,
                 Representation::Kraus, Representation::Canonical}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

/// Serialized matrix-valued representation (b_form, coefficient, canonical).
/// a_form and kraus are emitted as channel documents instead, so they feed
/// straight back into the CLI.
struct RepresentationDocument {
  Representation kind = Representation::BForm;
  std::size_t dim = 0;
  std::optional<BasisLabel> basis;
  std::optional<ComplexMatrix> matrix;
  std::vector<double> eigenvalues;
  std::vector<ComplexMatrix> operators;
};

inline Json representation_to_json(const RepresentationDocument& r) {
  Json out;
  out["format_version"] = std::string(kFormatVersion);
  out["representation"] = std::string(to_string(r.kind));
  out["dim"] = r.dim;
  if (r.basis) out["basis"] = std::string(to_string(*r.basis));
  if (r.matrix) out["matrix"] = matrix_to_json(*r.matrix);
  if (r.kind == Representation::Canonical) {
    out["eigenvalues"] = reals_to_json(r.eigenvalues);
    out["operators"] = matrices_to_json(r.operators);
  }
  return out;
}

inline RepresentationDocument parse_representation(std::string_view text) {
  const Json root = detail::parse_json_text(text);
  detail::require_object(root, "");
  detail::require_version(root);
  const std::string kind_name =
      detail::string_from_json(detail::require_field(root, "", "representation"), "representation");
  const auto kind = representation_from_string(kind_name);
  if (!kind || *kind == Representation::AForm || *kind == Representation::Kraus) {
    throw DocumentError(ErrorKind::SyntaxError, "representation",
                        "expected b_form, coefficient or canonical, got \"" + kind_name + "\"");
  }
  RepresentationDocument r;
  r.kind = *kind;
  r.dim = static_cast<std::size_t>(detail::u64_from_json(detail::require_field(root, "", "dim"), "dim"));
  const std::size_t n2 = r.dim * r.dim;
  if (*kind == Representation::BForm) {
    detail::reject_unknown(root, "", {"format_version", "representation", "dim", "matrix"});
  } else if (*kind == Representation::Coefficient) {
    detail::reject_unknown(root, "", {"format_version", "representation", "dim", "basis", "matrix"});
  } else {
    detail::reject_unknown(root, "",
                           {"format_version", "representation", "dim", "basis", "eigenvalues", "operators"});
  }
  if (*kind != Representation::BForm) {
    r.basis = basis_from_string(
        detail::string_from_json(detail::require_field(root, "", "basis"), "basis"), "basis");
  }
  if (*kind == Representation::Canonical) {
    const Json& ev = detail::require_field(root, "", "eigenvalues");
    const Json& ops = detail::require_field(root, "", "operators");
    if (!ev.is_array() || !ops.is_array() || ev.size() != n2 || ops.size() != n2) {
      throw DocumentError(ErrorKind::BadMatrixShape, "operators",
                          "canonical form needs n^2 eigenvalues and n^2 operators");
    }
    for (std::size_t k = 0; k < n2; ++k) {
      r.eigenvalues.push_back(
          detail::number_from_json(ev[k], "eigenvalues[" + std::to_string(k) + "]"));
      const std::string f = "operators[" + std::to_string(k) + "]";
      ComplexMatrix c = matrix_from_json(ops[k], f);
      if (c.rows() != r.dim || c.cols() != r.dim) {
        throw DocumentError(ErrorKind::BadMatrixShape, f, "expected " + std::to_string(r.dim) +
                                                              "x" + std::to_string(r.dim));
      }
      r.operators.push_back(std::move(c));
    }
  } else {
    ComplexMatrix m = matrix_from_json(detail::require_field(root, "", "matrix"), "matrix");
    if (m.rows() != n2 || m.cols() != n2) {
      throw DocumentError(ErrorKind::BadMatrixShape, "matrix",
                          "expected " + std::to_string(n2) + "x" + std::to_string(n2));
    }
    r.matrix = std::move(m);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Analysis reports.
// ---------------------------------------------------------------------------

inline Json report_to_json(const AnalysisReport& r) {
  Json out;
  out["format_version"] = std::string(kFormatVersion);
  out["report"] = "analysis";
  out["channel"] = channel_to_json(r.channel);
  out["dim"] = r.dim;
  out["basis"] = std::string(to_string(r.basis));
  out["tol"] = r.tol;
  out["a_form"] = {{"hermiticity_residual", r.a_form.hermiticity_residual},
                   {"trace_residual", r.a_form.trace_residual},
                   {"hermiticity_preserving", r.a_form.hermiticity_preserving()},
                   {"trace_preserving", r.a_form.trace_preserving()}};
  out["b_form"] = {{"hermiticity_residual", r.b_form.hermiticity_residual},
                   {"trace", r.b_form.trace}};
  out["coefficient_spectrum"] = reals_to_json(r.coefficient_spectrum);
  out["b_spectrum"] = reals_to_json(r.b_spectrum);
  out["spectral_match"] = r.spectral_match;
  out["verdict"] = {{"classification", std::string(to_string(r.verdict.classification))},
                    {"eigenvalues", reals_to_json(r.verdict.eigenvalues)},
                    {"min_eigenvalue", r.verdict.min_eigenvalue},
                    {"tol", r.verdict.tol}};
  out["canonical"] = {{"rank", r.canonical.rank(r.tol)},
                      {"eigenvalues", reals_to_json(r.canonical.eigenvalues)},
                      {"operators", matrices_to_json(r.canonical.canonical_ops)}};
  if (r.kraus) {
    out["kraus"] = {{"present", true}, {"operators", matrices_to_json(r.kraus->operators)}};
  } else {
    out["kraus"] = {{"present", false}, {"reason", r.kraus_absent_reason}};
  }
  out["choi_deviation"] = r.choi_deviation;
  Json probe;
  probe["samples"] = r.probe.samples;
  probe["seed"] = r.probe.seed;
  if (std::isfinite(r.probe.worst_min_eigenvalue)) {
    probe["worst_min_eigenvalue"] = r.probe.worst_min_eigenvalue;
  } else {
    probe["worst_min_eigenvalue"] = nullptr;
  }
  out["positivity_probe"] = std::move(probe);
  return out;
}

inline AnalysisReport report_from_json(std::string_view text) {
  using detail::number_from_json;
  using detail::require_field;
  const Json root = detail::parse_json_text(text);
  detail::require_object(root, "");
  detail::require_version(root);
  detail::reject_unknown(root, "",
                         {"format_version", "report", "channel", "dim", "basis", "tol", "a_form",
                          "b_form", "coefficient_spectrum", "b_spectrum", "spectral_match",
                          "verdict", "canonical", "kraus", "choi_deviation", "positivity_probe"});

  const auto reals = [](const Json& j, const std::string& field) {
    if (!j.is_array()) throw DocumentError(ErrorKind::SyntaxError, field, "expected an array");
    std::vector<double> v;
    for (std::size_t k = 0; k < j.size(); ++k)
      v.push_back(number_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return v;
  };
  const auto matrices = [](const Json& j, const std::string& field) {
    if (!j.is_array()) throw DocumentError(ErrorKind::SyntaxError, field, "expected an array");
    std::vector<ComplexMatrix> v;
    for (std::size_t k = 0; k < j.size(); ++k)
      v.push_back(matrix_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return v;
  };

  AnalysisReport r;
  r.channel = channel_from_json(require_field(root, "", "channel"), "channel");
  r.dim = static_cast<std::size_t>(detail::u64_from_json(require_field(root, "", "dim"), "dim"));
  r.basis = basis_from_string(detail::string_from_json(require_field(root, "", "basis"), "basis"),
                              "basis");
  r.tol = number_from_json(require_field(root, "", "tol"), "tol");

  const Json& af = require_field(root, "", "a_form");
  r.a_form = {number_from_json(require_field(af, "a_form", "hermiticity_residual"),
                               "a_form.hermiticity_residual"),
              number_from_json(require_field(af, "a_form", "trace_residual"),
                               "a_form.trace_residual"),
              r.tol};
  const Json& bf = require_field(root, "", "b_form");
  r.b_form = {number_from_json(require_field(bf, "b_form", "hermiticity_residual"),
                               "b_form.hermiticity_residual"),
              number_from_json(require_field(bf, "b_form", "trace"), "b_form.trace")};
  r.coefficient_spectrum =
      reals(require_field(root, "", "coefficient_spectrum"), "coefficient_spectrum");
  r.b_spectrum = reals(require_field(root, "", "b_spectrum"), "b_spectrum");
  r.spectral_match = number_from_json(require_field(root, "", "spectral_match"), "spectral_match");

  const Json& v = require_field(root, "", "verdict");
  r.verdict = verdict_from_eigenvalues(reals(require_field(v, "verdict", "eigenvalues"),
                                             "verdict.eigenvalues"),
                                       number_from_json(require_field(v, "verdict", "tol"),
                                                        "verdict.tol"));

  const Json& c = require_field(root, "", "canonical");
  r.canonical.dim = r.dim;
  r.canonical.eigenvalues = reals(require_field(c, "canonical", "eigenvalues"), "canonical.eigenvalues");
  r.canonical.canonical_ops =
      matrices(require_field(c, "canonical", "operators"), "canonical.operators");
  r.canonical.basis = standard_basis(r.dim, r.basis);

  const Json& k = require_field(root, "", "kraus");
  const Json& present = require_field(k, "kraus", "present");
  if (!present.is_boolean()) {
    throw DocumentError(ErrorKind::SyntaxError, "kraus.present", "expected true or false");
  }
  if (present.get<bool>()) {
    r.kraus = KrausSet{r.dim, matrices(require_field(k, "kraus", "operators"), "kraus.operators")};
  } else {
    r.kraus_absent_reason = detail::string_from_json(require_field(k, "kraus", "reason"), "kraus.reason");
  }
  r.choi_deviation = number_from_json(require_field(root, "", "choi_deviation"), "choi_deviation");

  const Json& p = require_field(root, "", "positivity_probe");
  r.probe.samples = static_cast<std::size_t>(
      detail::u64_from_json(require_field(p, "positivity_probe", "samples"), "positivity_probe.samples"));
  r.probe.seed = detail::u64_from_json(require_field(p, "positivity_probe", "seed"),
                                       "positivity_probe.seed");
  const Json& worst = require_field(p, "positivity_probe", "worst_min_eigenvalue");
  r.probe.worst_min_eigenvalue = worst.is_null()
                                     ? std::numeric_limits<double>::infinity()
                                     : number_from_json(worst, "positivity_probe.worst_min_eigenvalue");
  return r;
}

}  // namespace chanforms
