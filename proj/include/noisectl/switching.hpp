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

// Pairwise switching for diagonal states under a single noisy qubit, and the
// fixed point / temperature of the V_theta channel.
//
// In a pair (rho_ii, rho_jj), rho_ii sits on the |0> branch of the noisy qubit
// (the entry relaxation feeds) and rho_jj on the |1> branch.

#include "noisectl/qops.hpp"

namespace noisectl {

// Switch time after which permuting the pair and relaxing for the remaining
// tau - tau_ij returns the pair swapped, for amplitude damping:
// (1/gamma) ln((rho_ii e^{gamma tau} + rho_jj) / (rho_ii + rho_jj)).
double switch_time_amp(double rho_ii, double rho_jj, double gamma_star, double tau);

// Same for V_theta, theta in [0, 1/2). Returns NaN when the logarithm's
// argument is not positive. Throws ArgumentError at theta = 1/2.
double switch_time_theta(double rho_ii, double rho_jj, double theta, double gamma_star,
                         double tau);

// theta^2 / theta_bar^2 <= rho_ii / rho_jj <= theta_bar^2 / theta^2.
bool theta_pair_admissible(double rho_ii, double rho_jj, double theta);

// c_theta diag(theta_bar^2, theta^2). Unique fixed point only for theta != 1/2.
DensityOperator fixed_point_theta(double theta);
bool fixed_point_unique(double theta);

// (2 / delta_energy) artanh((theta_bar^2 - theta^2) / (theta_bar^2 + theta^2)).
// +infinity at theta = 0, 0 at theta = 1/2, -infinity at theta = 1.
double beta_of_theta(double theta, double delta_energy);

}  // namespace noisectl
