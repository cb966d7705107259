// Copyright 2026 The noisectl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment configuration: one JSON document per run. The schema is in
// docs/config.md. Validation reports every problem at once, each anchored to
// the line of the offending key in the source text.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "noisectl/control_system.hpp"
#include "noisectl/optim.hpp"
#include "noisectl/qops.hpp"

namespace noisectl::cli {

enum class Mode { simulate, optimize, hlp, protocol, controllability, majorize };

const char* to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct Diagnostic {
  // JSON pointer of the offending value, e.g. "/system/gamma_star".
  std::string path;
  // 1-based line in the source, 0 when unknown.
  int line = 0;
  std::string message;

  std::string str(const std::string& source_name) const;
};

struct ExperimentConfig {
  nlohmann::json doc;
  // JSON pointer -> line of its key (or of the array element).
  std::map<std::string, int> lines;
  std::string source_name = "<config>";

  int line_of(const std::string& pointer) const;
};

// Parses JSON text. Syntax errors throw ConfigurationError naming the line.
ExperimentConfig parse_config(const std::string& text, const std::string& source_name = "<config>");
ExperimentConfig load_config(const std::string& path);

// Line of every object key and array element, keyed by JSON pointer.
std::map<std::string, int> locate_lines(const std::string& text);

// All violations for the given mode; empty when the config can run.
std::vector<Diagnostic> validate(const ExperimentConfig& config, Mode mode);
// Mode taken from the document's "mode" field.
std::vector<Diagnostic> validate(const ExperimentConfig& config);

// Builders for validated documents.
ControlSystem build_system(const nlohmann::json& system);
DensityOperator build_state(const nlohmann::json& state, int qubits);
ControlSequence build_sequence(const nlohmann::json& sequence, const TransferProblem& problem,
                               std::uint64_t seed);
OptimizeOptions build_optimize_options(const nlohmann::json& optimizer);
InitSpec build_init_spec(const nlohmann::json& optimizer);

}  // namespace noisectl::cli
