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

// Analytic n-step protocols on an Ising chain with one switchable noise on
// qubit n. Between rounds, qubits are cycled through the noisy site by
// nearest-neighbour swaps (C(n,2) in total), each charged 1/J unless swaps
// are declared ideal.

#include "noisectl/control_system.hpp"
#include "noisectl/qops.hpp"
#include "noisectl/schedule.hpp"

namespace noisectl {

enum class ProtocolFormula {
  // thermal -> |0...0> under amplitude damping, equal noise times
  init_error,
  // first-order duration bound of the same protocol
  init_time_bound,
  // |0...0> -> thermal under bit flip, equal noise times
  bitflip_erasure_error,
  // |0...0> -> thermal with pi pulses and amplitude damping, exact
  amp_erasure,
};

const char* to_string(ProtocolFormula f);

struct ProtocolReport {
  ControlSystem system;
  DensityOperator initial;
  DensityOperator target;
  Schedule schedule;
  double predicted_error = 0.0;
  double predicted_duration = 0.0;
  double swap_time = 0.0;
  double noise_time = 0.0;
  ProtocolFormula formula = ProtocolFormula::init_error;
};

// Ideal exchange of qubits a and a + 1 (1-based) as a basis permutation.
Matrix neighbour_swap(int a, int n);

// delta_F of thermal -> |0...0> for per-qubit damping factor eps:
// sqrt(1 - 2 (1 - eps/2)^n + (1 - eps + eps^2/2)^n).
double init_error_formula(int n, double eps);
// Same with eps = exp(-gamma_star total_noise_time / n).
double init_error(int n, double gamma_star, double total_noise_time);
// C(n,2)/J + (n/gamma_star) ln(sqrt(n(n+1)) / (2 delta)), delta in (0, 1).
double init_time_bound(int n, double gamma_star, double coupling, double delta);

ProtocolReport init_protocol(int n, double gamma_star, double coupling, double total_noise_time,
                             bool ideal_swaps = false);

// Exact erasure: each round flips qubit n and damps for ln2 / gamma_star.
// Duration C(n,2)/J + (n / gamma_star) ln 2.
ProtocolReport erase_protocol_amp(int n, double gamma_star, double coupling,
                                  bool ideal_swaps = false);

// delta_F of |0...0> -> thermal for eps_tilde: sqrt(2^-n ((1 + eps^2)^n - 1)).
double erase_error_bitflip_formula(int n, double eps_tilde);
// Same with eps_tilde = exp(-gamma_star total_noise_time / (2n)).
double erase_error_bitflip(int n, double gamma_star, double total_noise_time);
// C(n,2)/J - (n/gamma_star) ln((2^n delta^2 + 1)^(1/n) - 1). Throws
// ArgumentError unless delta in (0, sqrt(1 - 2^-n)].
double erase_time_bitflip(int n, double gamma_star, double coupling, double delta);
// Inverse of erase_time_bitflip: the protocol's error when its total
// duration is T (noise time T - C(n,2)/J, clamped at zero).
double erase_bound_at_time(int n, double gamma_star, double coupling, double total_time);

ProtocolReport erase_protocol_bitflip(int n, double gamma_star, double coupling,
                                      double total_noise_time, bool ideal_swaps = false);

// Propagates the schedule and returns delta_F to the target.
double simulate_protocol(const ProtocolReport& report);

}  // namespace noisectl
