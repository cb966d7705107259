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

// Hardy-Littlewood-Polya transfer between spectra under switchable bit-flip
// noise on qubit n. A plan is a chain of at most N-1 T-transforms; each is
// realized by moving the pair onto the noisy qubit's two branches, protecting
// every other pair with U_12, and averaging under Trotter-decoupled noise.

#include <vector>

#include "noisectl/control_system.hpp"
#include "noisectl/qops.hpp"
#include "noisectl/schedule.hpp"

namespace noisectl {

struct HlpStep {
  // 0-based, j < k.
  Index j = 0;
  Index k = 0;
  double lambda = 1.0;
  // Noise-on time actually scheduled (truncated when exact_tau is infinite
  // or above the plan's cap).
  double tau = 0.0;
  // -(2/gamma) ln|1 - 2 lambda|; +inf at lambda = 1/2.
  double exact_tau = 0.0;
  // For lambda < 1/2 the pair is exchanged after averaging with 1 - lambda.
  bool swapped = false;
  // new[i] = old[pre_permutation[i]]; puts j at index 0 and k at index 1.
  std::vector<Index> pre_permutation;
};

struct HlpPlan {
  RealVector initial_spectrum;
  RealVector target_spectrum;
  double gamma_star = 0.0;
  std::vector<HlpStep> steps;
  // rho0 = U_y diag(y) U_y^dagger, target = U_x diag(x) U_x^dagger.
  Matrix u_y;
  Matrix u_x;
  double tau_cap = 0.0;
  double total_dissipative_time = 0.0;
  // Diagonal reached with the scheduled (finite) taus.
  RealVector predicted_spectrum;
  // ||predicted_spectrum - target_spectrum||_2
  double predicted_residual = 0.0;
  // Exact intermediate spectra y = s_0, s_1, ..., s_m = x.
  std::vector<RealVector> exact_spectra;
};

// Plans y -> x for descending probability vectors. Throws ReachabilityError
// unless x < y, ArgumentError for unsorted input or residual_target <= 0.
// Infinite (lambda = 1/2) and long steps share one time cap, the smallest
// for which the truncated plan lands within residual_target of x.
HlpPlan hlp_plan(const RealVector& y, const RealVector& x, double gamma_star,
                 double residual_target);

// Same on density operators; diagonalizers come from their eigenbases.
HlpPlan hlp_plan(const DensityOperator& rho0, const DensityOperator& target, double gamma_star,
                 double residual_target);

// Diagonal obtained by applying each step with duration tau (no truncation
// search).
RealVector hlp_apply(const RealVector& y, const std::vector<HlpStep>& steps, double gamma_star);

struct HlpExecuteOptions {
  // Trotter cycles per noise-on interval.
  int trotter_steps = 64;
  // Duration charged for every permutation event. Zero keeps them ideal.
  double permutation_duration = 0.0;
  // Symmetric pulse placement (half slices at both ends of an interval);
  // false gives the plain alternating product.
  bool symmetric = true;
};

// Schedule realizing the plan on `system`, which needs bit-flip noise
// sigma_x/2 on qubit n and a diagonal drift. Throws ConfigurationError
// otherwise.
Schedule hlp_execute(const HlpPlan& plan, const ControlSystem& system,
                     const HlpExecuteOptions& options = {});

// 1_2 (+) H (+) ... (+) H with H = [[1, -1], [1, 1]] / sqrt(2): every pair
// (2m, 2m+1), m >= 1, becomes invariant under bit flips on qubit n.
Matrix protection_unitary(Index dim);

}  // namespace noisectl
