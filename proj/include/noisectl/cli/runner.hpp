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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "noisectl/cli/config.hpp"

namespace noisectl::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitReachability = 4,
};

struct Artifacts {
  nlohmann::json result;
  // Empty when the mode produces no such file.
  std::string trajectory_csv;
  std::string sequence_csv;
};

// Runs a validated config. Library exceptions propagate.
Artifacts execute(const ExperimentConfig& config, Mode mode, std::uint64_t seed);

// Writes result.json, trajectory.csv and sequence.csv (when non-empty).
void write_artifacts(const Artifacts& artifacts, const std::string& dir);

struct RunOverrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
};

// Validate, execute and write. Diagnostics and failures go to `err`, a short
// summary to `out`. Returns an ExitCode.
int run(const ExperimentConfig& config, Mode mode, const RunOverrides& overrides,
        std::ostream& out, std::ostream& err);

}  // namespace noisectl::cli
