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

// Mixed control schedules: instantaneous ideal unitaries (permutations,
// protection unitaries, pi pulses) interleaved with timed segments of
// piecewise-constant coherent and noise amplitudes. Analytic protocols and
// the HLP executor emit these; uniform optimizer sequences convert to them.

#include <string>
#include <variant>
#include <vector>

#include "noisectl/control_system.hpp"
#include "noisectl/qops.hpp"

namespace noisectl {

// rho -> U rho U^dagger in zero time. `charged_duration` only enters duration
// accounting (e.g. 1/J per i-swap); nothing evolves during it.
struct UnitaryEvent {
  Matrix unitary;
  std::string label;
  double charged_duration = 0.0;
};

struct EvolutionSegment {
  double duration = 0.0;
  RealVector u;
  RealVector gamma;
};

using ScheduleEntry = std::variant<UnitaryEvent, EvolutionSegment>;

class Schedule {
 public:
  void add_unitary(Matrix unitary, std::string label, double charged_duration = 0.0);
  void add_evolution(double duration, RealVector u, RealVector gamma);

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Sum of evolution segment durations.
  double evolution_time() const;
  // Sum of charged unitary durations.
  double charged_time() const;
  double total_duration() const { return evolution_time() + charged_time(); }
  // Time during which noise `l` has a non-zero amplitude.
  double noise_on_time(Index l) const;
  std::size_t unitary_count() const;

 private:
  std::vector<ScheduleEntry> entries_;
};

struct ScheduleRun {
  Matrix final_state;
  // Filled when recording: the initial state, then the state after every
  // entry, with the elapsed time (evolution plus charged time).
  std::vector<double> times;
  std::vector<Matrix> states;
};

// Propagates rho0 through the schedule. Identical evolution segments share
// one propagator. Throws NumericalError when the final state is not a
// density operator within 1e-6.
ScheduleRun propagate_schedule(const ControlSystem& system, const DensityOperator& rho0,
                               const Schedule& schedule, bool record = false);

// Permutation unitary with (P rho P^dagger)_{ii} = rho_{perm[i], perm[i]}.
Matrix permutation_unitary(const std::vector<Index>& perm);

}  // namespace noisectl
