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

#include "noisectl/schedule.hpp"

#include <utility>

#include "noisectl/errors.hpp"
#include "noisectl/lindblad.hpp"

namespace noisectl {

void Schedule::add_unitary(Matrix unitary, std::string label, double charged_duration) {
  if (unitary.rows() != unitary.cols()) {
    throw ArgumentError("Schedule: unitary must be square");
  }
  if (!(charged_duration >= 0.0)) {
    throw ArgumentError("Schedule: charged duration must be non-negative");
  }
  entries_.emplace_back(UnitaryEvent{std::move(unitary), std::move(label), charged_duration});
}

void Schedule::add_evolution(double duration, RealVector u, RealVector gamma) {
  if (!(duration >= 0.0)) {
    throw ArgumentError("Schedule: evolution duration must be non-negative");
  }
  entries_.emplace_back(EvolutionSegment{duration, std::move(u), std::move(gamma)});
}

double Schedule::evolution_time() const {
  double t = 0.0;
  for (const auto& e : entries_) {
    if (const auto* seg = std::get_if<EvolutionSegment>(&e)) {
      t += seg->duration;
    }
  }
  return t;
}

double Schedule::charged_time() const {
  double t = 0.0;
  for (const auto& e : entries_) {
    if (const auto* ev = std::get_if<UnitaryEvent>(&e)) {
      t += ev->charged_duration;
    }
  }
  return t;
}

double Schedule::noise_on_time(Index l) const {
  double t = 0.0;
  for (const auto& e : entries_) {
    if (const auto* seg = std::get_if<EvolutionSegment>(&e)) {
      if (l < seg->gamma.size() && seg->gamma(l) > 0.0) {
        t += seg->duration;
      }
    }
  }
  return t;
}

std::size_t Schedule::unitary_count() const {
  std::size_t count = 0;
  for (const auto& e : entries_) {
    count += std::holds_alternative<UnitaryEvent>(e) ? 1 : 0;
  }
  return count;
}

namespace {
struct CachedPropagator {
  const EvolutionSegment* key;
  Superoperator x;
};

bool same_segment(const EvolutionSegment& a, const EvolutionSegment& b) {
  return a.duration == b.duration && a.u == b.u && a.gamma == b.gamma;
}
}  // namespace

ScheduleRun propagate_schedule(const ControlSystem& system, const DensityOperator& rho0,
                               const Schedule& schedule, bool record) {
  if (rho0.dim() != system.dim()) {
    throw ArgumentError("propagate_schedule: state dimension does not match the system");
  }
  const LiouvillianTerms terms(system);
  std::vector<CachedPropagator> cache;
  ScheduleRun run;
  Matrix rho = rho0.matrix();
  double elapsed = 0.0;
  if (record) {
    run.times.push_back(elapsed);
    run.states.push_back(rho);
  }
  for (const auto& entry : schedule.entries()) {
    if (const auto* ev = std::get_if<UnitaryEvent>(&entry)) {
      if (ev->unitary.rows() != rho.rows()) {
        throw ArgumentError("propagate_schedule: unitary '" + ev->label + "' has wrong dimension");
      }
      rho = ev->unitary * rho * ev->unitary.adjoint();
      elapsed += ev->charged_duration;
    } else {
      const auto& seg = std::get<EvolutionSegment>(entry);
      const Superoperator* x = nullptr;
      for (const auto& c : cache) {
        if (same_segment(*c.key, seg)) {
          x = &c.x;
          break;
        }
      }
      if (x == nullptr) {
        cache.push_back({&seg, propagator(terms.assemble(seg.u, seg.gamma), seg.duration)});
        x = &cache.back().x;
      }
      rho = unvec(VectorizedState{*x * vec(rho).data});
      elapsed += seg.duration;
    }
    if (record) {
      run.times.push_back(elapsed);
      run.states.push_back(rho);
    }
  }
  if (auto bad = density_violation(rho, 1e-6)) {
    throw NumericalError("propagate_schedule: final state invalid: " + *bad);
  }
  run.final_state = rho;
  return run;
}

Matrix permutation_unitary(const std::vector<Index>& perm) {
  const auto n = static_cast<Index>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  Matrix p = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Index src = perm[static_cast<std::size_t>(i)];
    if (src < 0 || src >= n || seen[static_cast<std::size_t>(src)]) {
      throw ArgumentError("permutation_unitary: not a permutation");
    }
    seen[static_cast<std::size_t>(src)] = true;
    p(i, src) = 1.0;
  }
  return p;
}

}  // namespace noisectl
