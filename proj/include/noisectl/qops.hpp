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

// Operator algebra shared by every module: dense complex matrices, tensor
// embeddings on an n-qubit register, column-stacking vectorization and
// spectra.
//
// Tensor ordering: qubit 1 is the leftmost Kronecker factor and qubit n the
// rightmost, so qubit n is the least significant bit of a basis index.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace noisectl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kOperatorTolerance = 1e-12;
inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
Eigen::Matrix2cd identity();
Eigen::Matrix2cd x();
Eigen::Matrix2cd y();
Eigen::Matrix2cd z();
// |0><1|, the amplitude-damping jump on a single qubit.
Eigen::Matrix2cd lowering();
// |1><0|
Eigen::Matrix2cd raising();
}  // namespace pauli

// Returns a diagnostic when `m` is not Hermitian within `tol` (max-abs entry
// of the anti-Hermitian part), std::nullopt otherwise.
std::optional<std::string> hermiticity_violation(const Matrix& m, double tol);

// Returns a diagnostic when `m` is not a density operator within `tol`:
// square, Hermitian, trace one, no eigenvalue below -tol.
std::optional<std::string> density_violation(const Matrix& m, double tol);

class HermitianOperator {
 public:
  // Symmetrizes (A + A^dagger)/2 after checking the anti-Hermitian part is
  // below `tol`. Throws ArgumentError otherwise.
  explicit HermitianOperator(const Matrix& m, double tol = kOperatorTolerance);

  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

class DensityOperator {
 public:
  // Symmetrizes, then validates Hermiticity, unit trace and positivity
  // against `tol`. Throws ArgumentError on violation.
  explicit DensityOperator(const Matrix& m, double tol = kOperatorTolerance);

  // diag(p) for a probability vector p.
  static DensityOperator diagonal(const RealVector& p, double tol = kOperatorTolerance);

  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  double purity() const;

 private:
  Matrix m_;
};

// Jump operator V of a dissipator; need not be Hermitian.
struct LindbladOperator {
  Matrix matrix;
  std::string label;
};

// Column-stacked vec(rho): entry (i, j) lives at index j * N + i.
struct VectorizedState {
  Vector data;

  Index state_dim() const;
};

Matrix kron(const Matrix& a, const Matrix& b);

// 1 x ... x op x ... x 1 with `op` at `site` (1-based, site n rightmost).
Matrix embed_local(const Eigen::Matrix2cd& op, int site, int n);

// op_a at site_a and op_b at site_b (distinct sites).
Matrix embed_pair(const Eigen::Matrix2cd& op_a, int site_a, const Eigen::Matrix2cd& op_b,
                  int site_b, int n);

VectorizedState vec(const Matrix& m);
VectorizedState vec(const DensityOperator& rho);
Matrix unvec(const VectorizedState& v);

// ||a - b||_2, equal to the Frobenius distance of the unvectorized matrices.
double frobenius_error(const VectorizedState& a, const VectorizedState& b);
double frobenius_error(const DensityOperator& a, const DensityOperator& b);

// Real eigenvalues in descending order.
RealVector sorted_spectrum(const DensityOperator& rho);
// Same for any Hermitian matrix; throws ArgumentError when not Hermitian
// within `tol`.
RealVector sorted_spectrum(const Matrix& hermitian, double tol = 1e-10);

// Unitary V with rho = V diag(sorted_spectrum(rho)) V^dagger.
Matrix descending_eigenbasis(const Matrix& hermitian);

// Ginibre ensemble: G G^dagger / tr(G G^dagger) with i.i.d. standard complex
// normal entries drawn from a seeded mt19937_64.
DensityOperator random_density(int n, std::uint64_t seed);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(Index dim, std::uint64_t seed);

// Maximally mixed state 1/2^n.
DensityOperator thermal_state(int n);
// |0...0><0...0|
DensityOperator zero_state(int n);

int qubit_count(Index dim);

}  // namespace noisectl
