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

// Control systems used throughout the examples: Ising-ZZ chains with local
// x/y controls and one switchable noise, and a four-ion trap with collective
// controls. Amplitudes are in units of the coupling J (chain) or of the
// interaction strength a (trap).

#include <optional>

#include "noisectl/control_system.hpp"

namespace noisectl {

enum class NoiseKind { amplitude_damping, bit_flip, theta };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::amplitude_damping;
  // Used only by NoiseKind::theta.
  double theta = 0.0;
};

// Single-qubit jump operator: |0><1|, sigma_x/2 or V_theta.
Eigen::Matrix2cd noise_jump(const NoiseSpec& spec);

// pi J sum_k (1/2) sigma_z^(k) sigma_z^(k+1), nearest neighbours only.
Matrix ising_drift(int n, double coupling);

// Chain of n qubits with controls sigma_x^(q)/2, sigma_y^(q)/2 (labels
// "x<q>", "y<q>"), one switchable noise on `noisy_site` (1-based, 0 means
// qubit n) with amplitude in [0, gamma_star], and optional always-on
// sigma_z/2 dephasing on every qubit.
ControlSystem ising_chain(int n, double coupling, const NoiseSpec& noise, int noisy_site,
                          double gamma_star, std::optional<double> dephasing = std::nullopt);

// Four ions: local z controls sigma_z^(j)/2, collective F_x, F_y with
// F = (1/2) sum_j sigma_j, and the squares F_x^2, F_y^2. No drift (the
// trap's free Hamiltonian is not modelled). Switchable amplitude damping on
// qubit 4.
ControlSystem ion_trap_model(double gamma_star);

// Collective (1/2) sum_j sigma_nu^(j) on n qubits.
Matrix collective_spin(const Eigen::Matrix2cd& pauli_op, int n);

// (|0...0> + |1...1>)/sqrt(2), n >= 2.
DensityOperator ghz_state(int n);

}  // namespace noisectl
