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

// Liouville-space generators. Sign convention, fixed everywhere:
//
//   d/dt vec(rho) = -L vec(rho),   L = i H^ + sum_l gamma_l G^_l,
//
// with H^ the commutator superoperator and G^_V = -(dissipator of V), so a
// propagator over dt is X = exp(-dt L). Vectorization is column stacking,
// vec(A rho B) = (B^T (x) A) vec(rho).

#include <vector>

#include "noisectl/control_system.hpp"
#include "noisectl/qops.hpp"

namespace noisectl {

// N^2 x N^2 matrix acting on column-stacked vectors.
using Superoperator = Matrix;

// H^ with H^ vec(rho) = vec(H rho - rho H), i.e. 1 (x) H - H^T (x) 1.
Superoperator commutator_superop(const Matrix& h);
Superoperator commutator_superop(const HermitianOperator& h);

// G^_V with G^_V vec(rho) = -vec(V rho V^+ - (V^+V rho + rho V^+V)/2).
Superoperator dissipator_superop(const Matrix& v);
Superoperator dissipator_superop(const LindbladOperator& v);

// Generator parts of a control system, assembled once and reused.
class LiouvillianTerms {
 public:
  explicit LiouvillianTerms(const ControlSystem& system);

  // i H0^ + background dissipators.
  const Superoperator& fixed() const { return fixed_; }
  // i H_j^
  const Superoperator& control(Index j) const { return controls_[static_cast<std::size_t>(j)]; }
  // G^_{V_l}
  const Superoperator& noise(Index l) const { return noises_[static_cast<std::size_t>(l)]; }

  Index control_count() const { return static_cast<Index>(controls_.size()); }
  Index noise_count() const { return static_cast<Index>(noises_.size()); }

  // L(u, gamma). Checks amplitude counts and gamma_l in [0, gamma_max_l].
  Superoperator assemble(const RealVector& u, const RealVector& gamma) const;

 private:
  Superoperator fixed_;
  std::vector<Superoperator> controls_;
  std::vector<Superoperator> noises_;
  RealVector gamma_max_;
};

Superoperator assemble_liouvillian(const ControlSystem& system, const RealVector& u,
                                   const RealVector& gamma);

// exp(-dt L). Throws ArgumentError for dt < 0, NumericalError on non-finite L.
Superoperator propagator(const Superoperator& l, double dt);

// --- Single-qubit theta channel -------------------------------------------

// Parameters of V_theta = [[0, 1-theta], [theta, 0]] switched on at rate
// gamma_star for time t.
struct ThetaChannelParams {
  double theta = 0.0;
  double gamma_star = 1.0;
  double t = 0.0;

  double theta_bar() const { return 1.0 - theta; }
  // c = 1 / (theta_bar^2 + theta^2)
  double c() const;
  // exp(-gamma_star t / c)
  double eps() const;
  // exp(gamma_star t (theta_bar theta - 1/2))
  double eps_prime() const;
  void validate() const;
};

Eigen::Matrix2cd v_theta(double theta);

// Closed form of G^_{V_theta} (4x4, column stacking).
Superoperator theta_generator_closed_form(double theta);

// Closed form of exp(-gamma_star t G^_{V_theta}).
Superoperator theta_propagator_closed_form(const ThetaChannelParams& p);

// Action of the theta channel on the 2^n diagonal of a state whose noisy
// qubit is qubit n: 1^{(x)(n-1)} (x) c [[tb^2 + t^2 e, tb^2 (1-e)],
// [t^2 (1-e), t^2 + tb^2 e]]. Column stochastic; doubly stochastic at
// theta = 1/2. Entry (i, j) maps population j to population i.
RealMatrix diag_channel_theta(const ThetaChannelParams& p, int n);

// The 2x2 block of diag_channel_theta.
Eigen::Matrix2d theta_channel_block(const ThetaChannelParams& p);

// --- Heat baths --------------------------------------------------------------

enum class BathStatistics { bosonic, fermionic };

// hbar = 1, so beta * omega0 is dimensionless.
struct BathParams {
  BathStatistics statistics = BathStatistics::bosonic;
  double beta = 0.0;
  double omega0 = 1.0;
  double gamma = 1.0;
};

// Planck or Fermi occupation n(omega0). Throws ArgumentError for a bosonic
// bath with beta * omega0 <= 0.
double bath_occupation(const BathParams& p);

// gamma (1 +- n) G^_{sigma-} + gamma n G^_{sigma+}, sigma- = |0><1|; the upper
// sign is bosonic. Dissipative part only.
Superoperator heat_bath_generator(const BathParams& p);

// --- Drift decoupling --------------------------------------------------------

// A diagonal drift on n qubits written as H01 (x) 1 + H02 (x) sigma_z with the
// noisy qubit n last. Both parts act on the first n-1 qubits.
struct DriftSplit {
  Matrix h01;
  Matrix h02;
};
DriftSplit split_drift(const Matrix& h0);

// [exp(-t/(2k) (G^ + i H'^)) exp(-t/(2k) (G^ - i H'^))]^k where
// G^ = gamma G^_{1 (x) sigma_x/2} and H' = H02 (x) sigma_z on n qubits,
// n - 1 being the qubit count of h02.
Superoperator trotter_decoupled_propagator(const Matrix& h02, double gamma, double t, int k);

}  // namespace noisectl
