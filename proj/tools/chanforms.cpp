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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "chanforms/cli.hpp"

namespace {

using chanforms::cli::CommandResult;
using chanforms::cli::kExitUsage;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int emit(const CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze finite-dimensional quantum maps in A-form, B-form and canonical form"};
  app.require_subcommand(1);

  std::string basis;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string output = "human";
  std::string input = "-";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "channel document (JSON); '-' reads stdin")
        ->capture_default_str();
    sub->add_option("--basis", basis, "operator basis: pauli (n = 2) or units")
        ->check(CLI::IsMember({"pauli", "units"}));
    sub->add_option("--tol", tol, "validity tolerance (default 1e-9, or CHANFORMS_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "seed for the positivity probe");
    sub->add_option("--samples", samples, "number of positivity probe states");
    sub->add_option("--output", output, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "full validity, spectral and CP report");
  add_common(analyze);

  auto* apply = app.add_subcommand("apply", "apply the map to a state");
  add_common(apply);
  std::string bloch;
  std::string state;
  auto* bloch_opt = apply->add_option("--bloch", bloch, "input Bloch vector p1,p2,p3");
  auto* state_opt = apply->add_option("--state", state, "input state JSON file");
  bloch_opt->excludes(state_opt);

  auto* convert = app.add_subcommand("convert", "emit another representation of the map");
  add_common(convert);
  std::string target;
  convert->add_option("--to", target, "a_form, b_form, coefficient, kraus or canonical")
      ->required()
      ->check(CLI::IsMember({"a_form", "b_form", "coefficient", "kraus", "canonical"}));

  auto* zoo = app.add_subcommand("zoo", "list the named qubit channels");
  zoo->add_option("--output", output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  chanforms::cli::Settings settings;
  settings.env_tol = chanforms::cli::env_tolerance();
  settings.output = output == "machine" ? chanforms::cli::OutputMode::Machine
                                        : chanforms::cli::OutputMode::Human;
  for (auto* sub : {analyze, apply, convert}) {
    if (!sub->parsed()) continue;
    if (sub->count("--basis")) {
      settings.basis = basis == "pauli" ? chanforms::BasisLabel::PauliOverSqrt2
                                        : chanforms::BasisLabel::MatrixUnits;
    }
    if (sub->count("--tol")) settings.tol = tol;
    if (sub->count("--seed")) settings.seed = seed;
    if (sub->count("--samples")) settings.samples = samples;
  }

  if (zoo->parsed()) return emit(chanforms::cli::run_zoo(settings.output));

  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (analyze->parsed()) return emit(chanforms::cli::run_analyze(text, settings));

  if (convert->parsed()) {
    return emit(chanforms::cli::run_convert(
        text, *chanforms::representation_from_string(target), settings));
  }

  // apply
  std::string state_text;
  if (!bloch.empty()) {
    state_text = "{\"bloch\": [" + bloch + "]}";
  } else if (!state.empty()) {
    try {
      state_text = read_input(state);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "error: apply needs --bloch or --state\n";
    return kExitUsage;
  }
  return emit(chanforms::cli::run_apply(text, state_text, settings));
}
