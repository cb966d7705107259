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

// Extended GRAPE over piecewise-constant coherent and noise amplitudes:
// propagation, the Frobenius error functional, finite-difference gradients
// chained through cached forward states and backward costates, and a
// box-constrained limited-memory quasi-Newton optimizer.

#include <cstdint>
#include <optional>
#include <vector>

#include "noisectl/control_system.hpp"
#include "noisectl/qops.hpp"
#include "noisectl/schedule.hpp"

namespace noisectl {

struct ControlSequence {
  double dt = 0.0;
  // M x m coherent amplitudes and M x l noise amplitudes.
  RealMatrix u;
  RealMatrix gamma;

  Index slices() const { return u.rows(); }
  double duration() const { return dt * static_cast<double>(slices()); }
};

// Checks shapes against the system, dt > 0, M >= 1, finiteness and the noise
// bounds. Throws ArgumentError.
void validate_sequence(const ControlSystem& system, const ControlSequence& seq);

// Same sequence as a Schedule of timed segments.
Schedule to_schedule(const ControlSequence& seq);

struct TransferProblem {
  ControlSystem system;
  DensityOperator rho0;
  DensityOperator target;
  double total_time = 0.0;
  Index slices = 1;

  TransferProblem(ControlSystem system, DensityOperator rho0, DensityOperator target,
                  double total_time, Index slices);
  double dt() const { return total_time / static_cast<double>(slices); }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VectorizedState> states;
  // (M + 1) x N, descending per row.
  RealMatrix sorted_eigenvalues;
};

// X_k = exp(-dt L_k) applied in order. Throws NumericalError when a state
// leaves the density operators by more than 1e-6.
Trajectory propagate(const TransferProblem& problem, const ControlSequence& seq);

// delta_F between the final state and the target.
double error(const TransferProblem& problem, const ControlSequence& seq);

enum class DifferenceMode {
  // exp(-dt(L + s G)) - exp(-dt L) by subtraction.
  direct,
  // The same difference read off the upper-right block of the exponential
  // of [[-dt(L + s G), -dt s G], [0, -dt L]]; free of cancellation, so s can
  // be taken far below sqrt(eps).
  augmented,
};

struct GradientOptions {
  // FD step; <= 0 selects c (1 + |amplitude|) with c = sqrt(eps) for direct
  // differences and 1e-12 for augmented ones.
  double step = 0.0;
  DifferenceMode mode = DifferenceMode::direct;
};

struct GradientResult {
  // delta_F^2 at the evaluation point.
  double error_squared = 0.0;
  // M x (m + l): d delta_F^2 / d u_j(t_k) in the first m columns, then the
  // noise amplitudes.
  RealMatrix grad;
};

GradientResult gradient(const TransferProblem& problem, const ControlSequence& seq,
                        const GradientOptions& options = {});

// Gradient only, direct differences with the given step.
RealMatrix gradient(const TransferProblem& problem, const ControlSequence& seq, double step);

struct OptimizeOptions {
  int max_iters = 500;
  // Stop once delta_F <= tol.
  double tol = 1e-8;
  // Stop when the projected gradient's max-abs entry drops below this.
  double gradient_tol = 1e-14;
  // FD step, as GradientOptions::step.
  double step = 0.0;
  int memory = 10;
  std::uint64_t seed = 0;
  // Cap on error + gradient evaluations; 0 means unlimited.
  int max_evaluations = 0;
};

enum class StopReason { tolerance, max_iters, stalled, max_evaluations, stationary };

struct OptimizeResult {
  ControlSequence sequence;
  double error = 0.0;
  // delta_F after every accepted step, starting with the initial value.
  std::vector<double> error_history;
  int iterations = 0;
  int evaluations = 0;
  StopReason reason = StopReason::max_iters;
};

const char* to_string(StopReason reason);

// Projected L-BFGS with Armijo backtracking along the projected path.
// gamma is boxed to [lower, upper] of each noise, u is free. Throws
// NumericalError when the error becomes non-finite.
OptimizeResult optimize(const TransferProblem& problem, const ControlSequence& init,
                        const OptimizeOptions& options = {});

enum class InitStyle { uniform_random, noise_blocks };

struct InitSpec {
  InitStyle style = InitStyle::uniform_random;
  // Number of noise-on blocks for InitStyle::noise_blocks.
  int blocks = 3;
  // u is drawn from [-u_scale, u_scale].
  double u_scale = 3.141592653589793;
};

// Deterministic in `seed`. uniform_random draws gamma in its box; noise_blocks
// cuts the M slices into 2 * blocks near-equal parts and switches each
// switchable noise to gamma_max in parts 0, 2, 4, ... and off elsewhere.
ControlSequence random_sequence(const TransferProblem& problem, std::uint64_t seed,
                                const InitSpec& init = {});

struct RestartResult {
  OptimizeResult best;
  std::vector<double> final_errors;
  std::vector<std::uint64_t> seeds;
};

// Best of `restarts` runs from random_sequence(problem, seed + r, init).
RestartResult optimize_restarts(const TransferProblem& problem, int restarts, std::uint64_t seed,
                                const InitSpec& init = {}, const OptimizeOptions& options = {});

}  // namespace noisectl
