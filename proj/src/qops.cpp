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

#include "noisectl/qops.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "noisectl/errors.hpp"

namespace noisectl {

namespace pauli {
Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd lowering() {
  Eigen::Matrix2cd m;
  m << 0, 1, 0, 0;
  return m;
}

Eigen::Matrix2cd raising() {
  Eigen::Matrix2cd m;
  m << 0, 0, 1, 0;
  return m;
}
}  // namespace pauli

std::optional<std::string> hermiticity_violation(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return "matrix is not square";
  }
  if (!m.allFinite()) {
    return "matrix has non-finite entries";
  }
  const double skew = m.rows() == 0 ? 0.0 : (0.5 * (m - m.adjoint())).cwiseAbs().maxCoeff();
  if (skew > tol) {
    std::ostringstream os;
    os << "anti-Hermitian part " << skew << " exceeds tolerance " << tol;
    return os.str();
  }
  return std::nullopt;
}

std::optional<std::string> density_violation(const Matrix& m, double tol) {
  if (auto bad = hermiticity_violation(m, tol)) {
    return bad;
  }
  if (m.rows() == 0) {
    return "empty matrix";
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    std::ostringstream os;
    os << "trace " << trace << " differs from 1 by more than " << tol;
    return os.str();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const double lowest = es.eigenvalues().minCoeff();
  if (lowest < -tol) {
    std::ostringstream os;
    os << "eigenvalue " << lowest << " below -" << tol;
    return os.str();
  }
  return std::nullopt;
}

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
  if (auto bad = hermiticity_violation(m, tol)) {
    throw ArgumentError("HermitianOperator: " + *bad);
  }
  m_ = 0.5 * (m + m.adjoint());
}

DensityOperator::DensityOperator(const Matrix& m, double tol) {
  if (auto bad = density_violation(m, tol)) {
    throw ArgumentError("DensityOperator: " + *bad);
  }
  m_ = 0.5 * (m + m.adjoint());
}

DensityOperator DensityOperator::diagonal(const RealVector& p, double tol) {
  return DensityOperator(p.cast<Complex>().asDiagonal().toDenseMatrix(), tol);
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

Index VectorizedState::state_dim() const {
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(data.size()))));
  if (n * n != data.size()) {
    throw ArgumentError("vectorized state length is not a perfect square");
  }
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed_local(const Eigen::Matrix2cd& op, int site, int n) {
  if (n < 1 || site < 1 || site > n) {
    std::ostringstream os;
    os << "embed_local: site " << site << " outside [1, " << n << "]";
    throw ArgumentError(os.str());
  }
  const Index left = Index{1} << (site - 1);
  const Index right = Index{1} << (n - site);
  return kron(kron(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

Matrix embed_pair(const Eigen::Matrix2cd& op_a, int site_a, const Eigen::Matrix2cd& op_b,
                  int site_b, int n) {
  if (site_a == site_b) {
    throw ArgumentError("embed_pair: sites must differ");
  }
  return embed_local(op_a, site_a, n) * embed_local(op_b, site_b, n);
}

VectorizedState vec(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("vec: matrix is not square");
  }
  // Eigen storage is column-major, so the raw buffer is already column-stacked.
  return VectorizedState{Eigen::Map<const Vector>(m.data(), m.size())};
}

VectorizedState vec(const DensityOperator& rho) { return vec(rho.matrix()); }

Matrix unvec(const VectorizedState& v) {
  const Index n = v.state_dim();
  return Eigen::Map<const Matrix>(v.data.data(), n, n);
}

double frobenius_error(const VectorizedState& a, const VectorizedState& b) {
  if (a.data.size() != b.data.size()) {
    throw ArgumentError("frobenius_error: dimension mismatch");
  }
  return (a.data - b.data).norm();
}

double frobenius_error(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("frobenius_error: dimension mismatch");
  }
  return (a.matrix() - b.matrix()).norm();
}

RealVector sorted_spectrum(const Matrix& hermitian, double tol) {
  if (auto bad = hermiticity_violation(hermitian, tol)) {
    throw ArgumentError("sorted_spectrum: " + *bad);
  }
  const Matrix h = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

RealVector sorted_spectrum(const DensityOperator& rho) {
  return sorted_spectrum(rho.matrix());
}

Matrix descending_eigenbasis(const Matrix& hermitian) {
  const Matrix h = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return es.eigenvectors().rowwise().reverse();
}

namespace {
Matrix ginibre(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}
}  // namespace

DensityOperator random_density(int n, std::uint64_t seed) {
  if (n < 1) {
    throw ArgumentError("random_density: n must be at least 1");
  }
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(Index{1} << n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(rho);
}

Matrix random_unitary(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) {
      q.col(j) *= d / mag;
    }
  }
  return q;
}

DensityOperator thermal_state(int n) {
  const Index dim = Index{1} << n;
  return DensityOperator(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator zero_state(int n) {
  const Index dim = Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  m(0, 0) = 1.0;
  return DensityOperator(m);
}

int qubit_count(Index dim) {
  int n = 0;
  while ((Index{1} << n) < dim) {
    ++n;
  }
  if ((Index{1} << n) != dim || dim < 2) {
    throw ArgumentError("dimension is not a power of two");
  }
  return n;
}

}  // namespace noisectl
