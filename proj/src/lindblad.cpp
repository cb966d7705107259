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

#include "noisectl/lindblad.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "noisectl/errors.hpp"
#include "noisectl/expm.hpp"

namespace noisectl {

Superoperator commutator_superop(const Matrix& h) {
  const Index n = h.rows();
  const Matrix ident = Matrix::Identity(n, n);
  return kron(ident, h) - kron(h.transpose(), ident);
}

Superoperator commutator_superop(const HermitianOperator& h) {
  return commutator_superop(h.matrix());
}

Superoperator dissipator_superop(const Matrix& v) {
  if (v.rows() != v.cols()) {
    throw ArgumentError("dissipator_superop: jump operator is not square");
  }
  const Index n = v.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix vdv = v.adjoint() * v;
  return -(kron(v.conjugate(), v) - 0.5 * kron(ident, vdv) - 0.5 * kron(vdv.transpose(), ident));
}

Superoperator dissipator_superop(const LindbladOperator& v) { return dissipator_superop(v.matrix); }

LiouvillianTerms::LiouvillianTerms(const ControlSystem& system)
    : gamma_max_(system.noise_upper_bounds()) {
  fixed_ = kI * commutator_superop(system.drift());
  for (const auto& b : system.background()) {
    fixed_ += b.rate * dissipator_superop(b.op);
  }
  controls_.reserve(system.controls().size());
  for (const auto& c : system.controls()) {
    controls_.push_back(kI * commutator_superop(c.op));
  }
  noises_.reserve(system.noises().size());
  for (const auto& v : system.noises()) {
    noises_.push_back(dissipator_superop(v.op));
  }
}

Superoperator LiouvillianTerms::assemble(const RealVector& u, const RealVector& gamma) const {
  if (u.size() != control_count() || gamma.size() != noise_count()) {
    std::ostringstream os;
    os << "assemble_liouvillian: got " << u.size() << " control and " << gamma.size()
       << " noise amplitudes, system has " << control_count() << " and " << noise_count();
    throw ArgumentError(os.str());
  }
  Superoperator l = fixed_;
  for (Index j = 0; j < control_count(); ++j) {
    if (!std::isfinite(u(j))) {
      throw ArgumentError("assemble_liouvillian: non-finite control amplitude");
    }
    if (u(j) != 0.0) {
      l += u(j) * controls_[static_cast<std::size_t>(j)];
    }
  }
  constexpr double slack = 1e-12;
  for (Index k = 0; k < noise_count(); ++k) {
    if (!(gamma(k) >= -slack && gamma(k) <= gamma_max_(k) * (1.0 + slack))) {
      std::ostringstream os;
      os << "assemble_liouvillian: noise amplitude " << gamma(k) << " of noise " << k
         << " outside [0, " << gamma_max_(k) << "]";
      throw ArgumentError(os.str());
    }
    if (gamma(k) != 0.0) {
      l += gamma(k) * noises_[static_cast<std::size_t>(k)];
    }
  }
  return l;
}

Superoperator assemble_liouvillian(const ControlSystem& system, const RealVector& u,
                                   const RealVector& gamma) {
  return LiouvillianTerms(system).assemble(u, gamma);
}

Superoperator propagator(const Superoperator& l, double dt) {
  if (!(dt >= 0.0)) {
    throw ArgumentError("propagator: dt must be non-negative");
  }
  if (!l.allFinite()) {
    throw NumericalError("propagator: generator has non-finite entries");
  }
  if (dt == 0.0) {
    return Superoperator::Identity(l.rows(), l.cols());
  }
  return expm(-dt * l);
}

// --- theta channel -----------------------------------------------------------

double ThetaChannelParams::c() const {
  const double tb = theta_bar();
  return 1.0 / (tb * tb + theta * theta);
}

double ThetaChannelParams::eps() const { return std::exp(-gamma_star * t / c()); }

double ThetaChannelParams::eps_prime() const {
  return std::exp(gamma_star * t * (theta_bar() * theta - 0.5));
}

void ThetaChannelParams::validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ArgumentError("theta must lie in [0, 1]");
  }
  if (!(gamma_star > 0.0) || !std::isfinite(gamma_star)) {
    throw ArgumentError("gamma_star must be positive");
  }
  if (!(t >= 0.0)) {
    throw ArgumentError("channel time must be non-negative");
  }
}

Eigen::Matrix2cd v_theta(double theta) {
  Eigen::Matrix2cd v;
  v << 0.0, 1.0 - theta, theta, 0.0;
  return v;
}

Superoperator theta_generator_closed_form(double theta) {
  const double tb = 1.0 - theta;
  const double tt = tb * theta;
  Superoperator g = Superoperator::Zero(4, 4);
  g(0, 0) = -theta * theta;
  g(0, 3) = tb * tb;
  g(1, 1) = tt - 0.5;
  g(1, 2) = tt;
  g(2, 1) = tt;
  g(2, 2) = tt - 0.5;
  g(3, 0) = theta * theta;
  g(3, 3) = -tb * tb;
  return -g;
}

Superoperator theta_propagator_closed_form(const ThetaChannelParams& p) {
  p.validate();
  const double th = p.theta;
  const double tb = p.theta_bar();
  const double c = p.c();
  const double e = p.eps();
  const double ep = p.eps_prime();
  const double arg = p.gamma_star * p.t * tb * th;
  Superoperator x = Superoperator::Zero(4, 4);
  x(0, 0) = c * (tb * tb + th * th * e);
  x(0, 3) = c * tb * tb * (1.0 - e);
  x(1, 1) = ep * std::cosh(arg);
  x(1, 2) = ep * std::sinh(arg);
  x(2, 1) = ep * std::sinh(arg);
  x(2, 2) = ep * std::cosh(arg);
  x(3, 0) = c * th * th * (1.0 - e);
  x(3, 3) = c * (th * th + tb * tb * e);
  return x;
}

Eigen::Matrix2d theta_channel_block(const ThetaChannelParams& p) {
  p.validate();
  const double th2 = p.theta * p.theta;
  const double tb2 = p.theta_bar() * p.theta_bar();
  const double c = p.c();
  const double e = p.eps();
  Eigen::Matrix2d b;
  b << c * (tb2 + th2 * e), c * tb2 * (1.0 - e), c * th2 * (1.0 - e), c * (th2 + tb2 * e);
  return b;
}

RealMatrix diag_channel_theta(const ThetaChannelParams& p, int n) {
  if (n < 1) {
    throw ArgumentError("diag_channel_theta: n must be at least 1");
  }
  const Eigen::Matrix2d block = theta_channel_block(p);
  const Index pairs = Index{1} << (n - 1);
  RealMatrix r = RealMatrix::Zero(2 * pairs, 2 * pairs);
  for (Index m = 0; m < pairs; ++m) {
    r.block<2, 2>(2 * m, 2 * m) = block;
  }
  return r;
}

// --- heat baths --------------------------------------------------------------

double bath_occupation(const BathParams& p) {
  if (!(p.beta >= 0.0) || !(p.omega0 > 0.0) || !(p.gamma >= 0.0)) {
    throw ArgumentError("heat bath: need beta >= 0, omega0 > 0, gamma >= 0");
  }
  const double x = p.beta * p.omega0;
  if (std::isinf(x)) {
    return 0.0;
  }
  if (p.statistics == BathStatistics::bosonic) {
    if (!(x > 0.0)) {
      throw ArgumentError("heat bath: bosonic occupation diverges at beta = 0");
    }
    return 1.0 / std::expm1(x);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

Superoperator heat_bath_generator(const BathParams& p) {
  const double occ = bath_occupation(p);
  const double sign = p.statistics == BathStatistics::bosonic ? 1.0 : -1.0;
  const Matrix minus = pauli::lowering();
  const Matrix plus = pauli::raising();
  return p.gamma * (1.0 + sign * occ) * dissipator_superop(minus) +
         p.gamma * occ * dissipator_superop(plus);
}

// --- drift decoupling --------------------------------------------------------

DriftSplit split_drift(const Matrix& h0) {
  const int n = qubit_count(h0.rows());
  const Index half = h0.rows() / 2;
  DriftSplit s{Matrix::Zero(half, half), Matrix::Zero(half, half)};
  for (Index a = 0; a < half; ++a) {
    for (Index b = 0; b < half; ++b) {
      const Complex up = h0(2 * a, 2 * b);
      const Complex down = h0(2 * a + 1, 2 * b + 1);
      s.h01(a, b) = 0.5 * (up + down);
      s.h02(a, b) = 0.5 * (up - down);
    }
  }
  const Matrix ident2 = Matrix::Identity(2, 2);
  const Matrix rebuilt = kron(s.h01, ident2) + kron(s.h02, Matrix(pauli::z()));
  if ((rebuilt - h0).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h0.cwiseAbs().maxCoeff())) {
    std::ostringstream os;
    os << "split_drift: drift on " << n << " qubits is not of the form H01 x 1 + H02 x sigma_z";
    throw ArgumentError(os.str());
  }
  return s;
}

Superoperator trotter_decoupled_propagator(const Matrix& h02, double gamma, double t, int k) {
  if (k < 1) {
    throw ArgumentError("trotter_decoupled_propagator: k must be at least 1");
  }
  if (h02.rows() != h02.cols() || h02.rows() < 1) {
    throw ArgumentError("trotter_decoupled_propagator: h02 must be square");
  }
  const Index rest = h02.rows();
  const Matrix flip = kron(Matrix::Identity(rest, rest), Matrix(0.5 * pauli::x()));
  const Superoperator g = gamma * dissipator_superop(flip);
  const Superoperator h = commutator_superop(kron(h02, Matrix(pauli::z())));
  const double dt = t / (2.0 * k);
  const Superoperator plus = propagator(g + kI * h, dt);
  const Superoperator minus = propagator(g - kI * h, dt);
  const Superoperator step = plus * minus;
  Superoperator out = Superoperator::Identity(step.rows(), step.cols());
  for (int i = 0; i < k; ++i) {
    out = step * out;
  }
  return out;
}

}  // namespace noisectl
