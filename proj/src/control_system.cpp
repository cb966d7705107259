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

#include "noisectl/control_system.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "noisectl/errors.hpp"

namespace noisectl {

ControlSystem::ControlSystem(int qubits, HermitianOperator drift,
                             std::vector<NamedControl> controls,
                             std::vector<ControlledNoise> noises,
                             std::vector<BackgroundNoise> background)
    : qubits_(qubits),
      drift_(std::move(drift)),
      controls_(std::move(controls)),
      noises_(std::move(noises)),
      background_(std::move(background)) {
  if (qubits_ < 1) {
    throw ArgumentError("ControlSystem: at least one qubit required");
  }
  const Index dim = Index{1} << qubits_;
  auto check_dim = [dim](Index rows, Index cols, const std::string& what) {
    if (rows != dim || cols != dim) {
      std::ostringstream os;
      os << "ControlSystem: " << what << " has shape " << rows << "x" << cols << ", expected "
         << dim << "x" << dim;
      throw ArgumentError(os.str());
    }
  };
  check_dim(drift_.dim(), drift_.dim(), "drift");
  for (const auto& c : controls_) {
    check_dim(c.op.dim(), c.op.dim(), "control '" + c.label + "'");
  }
  for (const auto& v : noises_) {
    check_dim(v.op.matrix.rows(), v.op.matrix.cols(), "noise '" + v.op.label + "'");
    if (!(v.gamma_max > 0.0) || !std::isfinite(v.gamma_max)) {
      throw ArgumentError("ControlSystem: noise '" + v.op.label + "' needs gamma_max > 0");
    }
  }
  for (const auto& b : background_) {
    check_dim(b.op.matrix.rows(), b.op.matrix.cols(), "background noise '" + b.op.label + "'");
    if (!(b.rate >= 0.0) || !std::isfinite(b.rate)) {
      throw ArgumentError("ControlSystem: background noise '" + b.op.label +
                          "' needs a finite rate >= 0");
    }
  }
}

RealVector ControlSystem::noise_lower_bounds() const {
  RealVector lo(noise_count());
  for (Index l = 0; l < noise_count(); ++l) {
    const auto& v = noises_[static_cast<std::size_t>(l)];
    lo(l) = v.switchable ? 0.0 : v.gamma_max;
  }
  return lo;
}

RealVector ControlSystem::noise_upper_bounds() const {
  RealVector hi(noise_count());
  for (Index l = 0; l < noise_count(); ++l) {
    hi(l) = noises_[static_cast<std::size_t>(l)].gamma_max;
  }
  return hi;
}

}  // namespace noisectl
