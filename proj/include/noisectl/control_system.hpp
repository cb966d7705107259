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

#include <string>
#include <vector>

#include "noisectl/qops.hpp"

namespace noisectl {

struct NamedControl {
  std::string label;
  HermitianOperator op;
};

// A noise channel whose amplitude gamma(t) is a control in [0, gamma_max].
// Non-switchable entries are pinned at gamma_max.
struct ControlledNoise {
  LindbladOperator op;
  double gamma_max = 0.0;
  bool switchable = true;
};

// Always-on noise at a fixed rate.
struct BackgroundNoise {
  LindbladOperator op;
  double rate = 0.0;
};

// Bilinear control system: drift H0, coherent controls H_j with unbounded
// real amplitudes, controlled noises V_l with amplitudes in [0, gamma_max],
// plus fixed background noise.
class ControlSystem {
 public:
  ControlSystem(int qubits, HermitianOperator drift, std::vector<NamedControl> controls,
                std::vector<ControlledNoise> noises, std::vector<BackgroundNoise> background = {});

  int qubits() const { return qubits_; }
  Index dim() const { return drift_.dim(); }
  const HermitianOperator& drift() const { return drift_; }
  const std::vector<NamedControl>& controls() const { return controls_; }
  const std::vector<ControlledNoise>& noises() const { return noises_; }
  const std::vector<BackgroundNoise>& background() const { return background_; }

  Index control_count() const { return static_cast<Index>(controls_.size()); }
  Index noise_count() const { return static_cast<Index>(noises_.size()); }

  // Lower/upper amplitude bounds of each controlled noise.
  RealVector noise_lower_bounds() const;
  RealVector noise_upper_bounds() const;

 private:
  int qubits_;
  HermitianOperator drift_;
  std::vector<NamedControl> controls_;
  std::vector<ControlledNoise> noises_;
  std::vector<BackgroundNoise> background_;
};

}  // namespace noisectl
