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

// Artifact formats: CSV with a header row, comma separators and 17
// significant digits; JSON for results and HLP plans.

#include <string>
#include <vector>

#include <json.hpp>

#include "noisectl/control_system.hpp"
#include "noisectl/hlp.hpp"
#include "noisectl/optim.hpp"
#include "noisectl/schedule.hpp"

namespace noisectl::cli {

// %.17g in the C locale.
std::string format_number(double x);

// time, lambda_1..lambda_N (descending), delta_F to target.
std::string trajectory_csv(const std::vector<double>& times, const std::vector<Matrix>& states,
                           const Matrix& target);
std::string trajectory_csv(const Trajectory& tr, const Matrix& target);

// slice, t_start, u_<label>..., gamma_<label>...
std::string sequence_csv(const ControlSequence& seq, const ControlSystem& system);

// One row per schedule entry: index, kind, label, t_start, duration, then the
// amplitudes of evolution entries (empty for unitaries).
std::string schedule_csv(const Schedule& schedule, const ControlSystem& system);

nlohmann::json plan_to_json(const HlpPlan& plan);
// Inverse of plan_to_json. Throws ConfigurationError on malformed input.
HlpPlan plan_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace noisectl::cli
