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

#include "noisectl/models.hpp"

#include <numbers>
#include <string>

#include "noisectl/errors.hpp"
#include "noisectl/lindblad.hpp"

namespace noisectl {

Eigen::Matrix2cd noise_jump(const NoiseSpec& spec) {
  switch (spec.kind) {
    case NoiseKind::amplitude_damping:
      return pauli::lowering();
    case NoiseKind::bit_flip:
      return 0.5 * pauli::x();
    case NoiseKind::theta:
      if (!(spec.theta >= 0.0 && spec.theta <= 1.0)) {
        throw ArgumentError("noise_jump: theta must lie in [0, 1]");
      }
      return v_theta(spec.theta);
  }
  throw ArgumentError("noise_jump: unknown noise kind");
}

namespace {
std::string noise_label(const NoiseSpec& spec, int site) {
  switch (spec.kind) {
    case NoiseKind::amplitude_damping:
      return "amp" + std::to_string(site);
    case NoiseKind::bit_flip:
      return "bitflip" + std::to_string(site);
    case NoiseKind::theta:
      return "theta" + std::to_string(site);
  }
  return "noise" + std::to_string(site);
}
}  // namespace

Matrix ising_drift(int n, double coupling) {
  const Index dim = Index{1} << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int k = 1; k < n; ++k) {
    h += std::numbers::pi * coupling * 0.5 * embed_pair(pauli::z(), k, pauli::z(), k + 1, n);
  }
  return h;
}

ControlSystem ising_chain(int n, double coupling, const NoiseSpec& noise, int noisy_site,
                          double gamma_star, std::optional<double> dephasing) {
  if (n < 1) {
    throw ArgumentError("ising_chain: n must be at least 1");
  }
  const int site = noisy_site == 0 ? n : noisy_site;
  if (site < 1 || site > n) {
    throw ArgumentError("ising_chain: noisy site " + std::to_string(noisy_site) +
                        " outside [1, " + std::to_string(n) + "]");
  }
  std::vector<NamedControl> controls;
  for (int q = 1; q <= n; ++q) {
    controls.push_back({"x" + std::to_string(q), HermitianOperator(embed_local(0.5 * pauli::x(), q, n))});
    controls.push_back({"y" + std::to_string(q), HermitianOperator(embed_local(0.5 * pauli::y(), q, n))});
  }
  std::vector<ControlledNoise> noises;
  noises.push_back(
      {LindbladOperator{embed_local(noise_jump(noise), site, n), noise_label(noise, site)},
       gamma_star, true});
  std::vector<BackgroundNoise> background;
  if (dephasing) {
    for (int q = 1; q <= n; ++q) {
      background.push_back(
          {LindbladOperator{embed_local(0.5 * pauli::z(), q, n), "dephasing" + std::to_string(q)},
           *dephasing});
    }
  }
  return ControlSystem(n, HermitianOperator(ising_drift(n, coupling)), std::move(controls),
                       std::move(noises), std::move(background));
}

Matrix collective_spin(const Eigen::Matrix2cd& pauli_op, int n) {
  const Index dim = Index{1} << n;
  Matrix f = Matrix::Zero(dim, dim);
  for (int q = 1; q <= n; ++q) {
    f += embed_local(0.5 * pauli_op, q, n);
  }
  return f;
}

ControlSystem ion_trap_model(double gamma_star) {
  constexpr int n = 4;
  std::vector<NamedControl> controls;
  for (int q = 1; q <= n; ++q) {
    controls.push_back({"z" + std::to_string(q), HermitianOperator(embed_local(0.5 * pauli::z(), q, n))});
  }
  const Matrix fx = collective_spin(pauli::x(), n);
  const Matrix fy = collective_spin(pauli::y(), n);
  controls.push_back({"Fx", HermitianOperator(fx)});
  controls.push_back({"Fy", HermitianOperator(fy)});
  controls.push_back({"Fx2", HermitianOperator(fx * fx)});
  controls.push_back({"Fy2", HermitianOperator(fy * fy)});
  std::vector<ControlledNoise> noises;
  noises.push_back({LindbladOperator{embed_local(pauli::lowering(), n, n), "amp4"}, gamma_star, true});
  const Index dim = Index{1} << n;
  return ControlSystem(n, HermitianOperator(Matrix::Zero(dim, dim)), std::move(controls),
                       std::move(noises));
}

DensityOperator ghz_state(int n) {
  if (n < 2) {
    throw ArgumentError("ghz_state: n must be at least 2");
  }
  const Index dim = Index{1} << n;
  Vector psi = Vector::Zero(dim);
  psi(0) = 1.0 / std::numbers::sqrt2;
  psi(dim - 1) = 1.0 / std::numbers::sqrt2;
  return DensityOperator(psi * psi.adjoint());
}

}  // namespace noisectl
