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

#include "noisectl/hlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "noisectl/errors.hpp"
#include "noisectl/majorization.hpp"

namespace noisectl {

namespace {

constexpr double kIndexTol = 1e-13;

void require_descending(const RealVector& v, const char* what) {
  for (Index i = 1; i < v.size(); ++i) {
    if (v(i) > v(i - 1) + 1e-12) {
      throw ArgumentError(std::string("hlp_plan: ") + what + " must be sorted descending");
    }
  }
}

double exact_tau(double lambda, double gamma_star) {
  const double e = std::abs(1.0 - 2.0 * lambda);
  if (e <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return -(2.0 / gamma_star) * std::log(e);
}

std::vector<Index> front_permutation(Index n, Index j, Index k) {
  std::vector<Index> perm{j, k};
  for (Index i = 0; i < n; ++i) {
    if (i != j && i != k) {
      perm.push_back(i);
    }
  }
  return perm;
}

double residual_with_cap(const RealVector& y, const RealVector& x, std::vector<HlpStep> steps,
                         double cap, double gamma_star) {
  for (auto& s : steps) {
    s.tau = std::min(s.exact_tau, cap);
  }
  return (hlp_apply(y, steps, gamma_star) - x).norm();
}

}  // namespace

RealVector hlp_apply(const RealVector& y, const std::vector<HlpStep>& steps, double gamma_star) {
  RealVector s = y;
  for (const auto& step : steps) {
    const double e = std::exp(-gamma_star * step.tau / 2.0);
    const double lam = 0.5 * (1.0 + e);
    s = t_transform(s, step.j, step.k, step.swapped ? 1.0 - lam : lam);
  }
  return s;
}

HlpPlan hlp_plan(const RealVector& y, const RealVector& x, double gamma_star,
                 double residual_target) {
  if (y.size() != x.size() || y.size() == 0) {
    throw ArgumentError("hlp_plan: spectra must be non-empty and of equal length");
  }
  if (!(gamma_star > 0.0) || !std::isfinite(gamma_star)) {
    throw ArgumentError("hlp_plan: gamma_star must be positive");
  }
  if (!(residual_target > 0.0)) {
    throw ArgumentError("hlp_plan: residual_target must be positive");
  }
  require_descending(y, "initial spectrum");
  require_descending(x, "target spectrum");
  if (!is_majorised_by(x, y)) {
    throw ReachabilityError("hlp_plan: target spectrum is not majorised by the initial spectrum");
  }

  const Index n = y.size();
  HlpPlan plan;
  plan.initial_spectrum = y;
  plan.target_spectrum = x;
  plan.gamma_star = gamma_star;
  plan.u_y = Matrix::Identity(n, n);
  plan.u_x = Matrix::Identity(n, n);

  RealVector s = y;
  plan.exact_spectra.push_back(s);
  for (Index iter = 0; iter < n; ++iter) {
    Index j = -1;
    for (Index i = n - 1; i >= 0; --i) {
      if (x(i) < s(i) - kIndexTol) {
        j = i;
        break;
      }
    }
    if (j < 0) {
      break;
    }
    Index k = -1;
    for (Index i = j + 1; i < n; ++i) {
      if (x(i) > s(i) + kIndexTol) {
        k = i;
        break;
      }
    }
    if (k < 0) {
      break;
    }
    const double dj = s(j) - x(j);
    const double dk = x(k) - s(k);
    const double delta = std::min(dj, dk);
    const double lambda = 1.0 - delta / (s(j) - s(k));
    s = t_transform(s, j, k, lambda);
    if (dj <= dk) {
      s(j) = x(j);
    } else {
      s(k) = x(k);
    }
    plan.exact_spectra.push_back(s);

    HlpStep step;
    step.j = j;
    step.k = k;
    step.lambda = lambda;
    step.swapped = lambda < 0.5;
    step.exact_tau = exact_tau(lambda, gamma_star);
    step.tau = step.exact_tau;
    step.pre_permutation = front_permutation(n, j, k);
    plan.steps.push_back(std::move(step));
  }

  bool all_finite = true;
  double longest = 0.0;
  for (const auto& st : plan.steps) {
    if (std::isfinite(st.exact_tau)) {
      longest = std::max(longest, st.exact_tau);
    } else {
      all_finite = false;
    }
  }
  double cap = longest;
  if (!all_finite || residual_with_cap(y, x, plan.steps, cap, gamma_star) > residual_target) {
    double lo = 0.0;
    double hi = std::max(longest, 1.0 / gamma_star);
    int doublings = 0;
    while (residual_with_cap(y, x, plan.steps, hi, gamma_star) > residual_target) {
      lo = hi;
      hi *= 2.0;
      if (++doublings > 60) {
        throw NumericalError("hlp_plan: residual target unreachable with finite noise times");
      }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (residual_with_cap(y, x, plan.steps, mid, gamma_star) <= residual_target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    cap = hi;
  }
  plan.tau_cap = cap;
  plan.total_dissipative_time = 0.0;
  for (auto& st : plan.steps) {
    st.tau = std::min(st.exact_tau, cap);
    plan.total_dissipative_time += st.tau;
  }
  plan.predicted_spectrum = hlp_apply(y, plan.steps, gamma_star);
  plan.predicted_residual = (plan.predicted_spectrum - x).norm();
  return plan;
}

HlpPlan hlp_plan(const DensityOperator& rho0, const DensityOperator& target, double gamma_star,
                 double residual_target) {
  if (rho0.dim() != target.dim()) {
    throw ArgumentError("hlp_plan: initial and target dimensions differ");
  }
  HlpPlan plan = hlp_plan(sorted_spectrum(rho0), sorted_spectrum(target), gamma_star,
                          residual_target);
  plan.u_y = descending_eigenbasis(rho0.matrix());
  plan.u_x = descending_eigenbasis(target.matrix());
  return plan;
}

Matrix protection_unitary(Index dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw ArgumentError("protection_unitary: dimension must be even");
  }
  const double r = 1.0 / std::sqrt(2.0);
  Matrix u = Matrix::Zero(dim, dim);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  for (Index m = 2; m < dim; m += 2) {
    u(m, m) = r;
    u(m, m + 1) = -r;
    u(m + 1, m) = r;
    u(m + 1, m + 1) = r;
  }
  return u;
}

Schedule hlp_execute(const HlpPlan& plan, const ControlSystem& system,
                     const HlpExecuteOptions& options) {
  const Index dim = system.dim();
  const int n = system.qubits();
  if (plan.initial_spectrum.size() != dim) {
    throw ArgumentError("hlp_execute: plan dimension does not match the system");
  }
  if (options.trotter_steps < 1) {
    throw ArgumentError("hlp_execute: trotter_steps must be at least 1");
  }
  if (!(options.permutation_duration >= 0.0)) {
    throw ArgumentError("hlp_execute: permutation_duration must be non-negative");
  }
  if (n < 1) {
    throw ConfigurationError("hlp_execute: system has no qubits");
  }

  const Matrix bitflip = embed_local(pauli::x() / 2.0, n, n);
  Index noise = -1;
  for (Index l = 0; l < system.noise_count(); ++l) {
    const Matrix& v = system.noises()[static_cast<std::size_t>(l)].op.matrix;
    if ((v - bitflip).cwiseAbs().maxCoeff() <= 1e-12) {
      noise = l;
      break;
    }
  }
  if (noise < 0) {
    throw ConfigurationError("hlp_execute: system lacks bit-flip noise sigma_x/2 on qubit " +
                             std::to_string(n));
  }
  if (plan.gamma_star >
      system.noises()[static_cast<std::size_t>(noise)].gamma_max * (1.0 + 1e-12)) {
    throw ConfigurationError("hlp_execute: plan rate exceeds the noise bound");
  }
  Matrix off = system.drift().matrix();
  off.diagonal().setZero();
  if (off.size() > 0 && off.cwiseAbs().maxCoeff() > 1e-12) {
    throw ConfigurationError("hlp_execute: drift must be diagonal");
  }

  const RealVector u = RealVector::Zero(system.control_count());
  RealVector gamma = system.noise_lower_bounds();
  gamma(noise) = plan.gamma_star;
  const Matrix pi_pulse = embed_local(-kI * pauli::x(), n, n);
  const Matrix protect = protection_unitary(dim);

  Schedule schedule;
  schedule.add_unitary(plan.u_y.adjoint(), "diagonalize");
  for (const auto& step : plan.steps) {
    std::vector<Index> back(step.pre_permutation.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      back[static_cast<std::size_t>(step.pre_permutation[i])] = static_cast<Index>(i);
    }
    if (step.swapped) {
      std::swap(back[static_cast<std::size_t>(step.j)], back[static_cast<std::size_t>(step.k)]);
    }
    schedule.add_unitary(permutation_unitary(step.pre_permutation), "permute",
                         options.permutation_duration);
    if (step.tau > 0.0) {
      schedule.add_unitary(protect, "protect");
      const double slice = step.tau / (2.0 * options.trotter_steps);
      if (options.symmetric) {
        // Half slices at both ends: s/2, X, s, X, s, ..., X, s/2.
        schedule.add_evolution(0.5 * slice, u, gamma);
        for (int c = 0; c < 2 * options.trotter_steps - 1; ++c) {
          schedule.add_unitary(pi_pulse, "pi");
          schedule.add_evolution(slice, u, gamma);
        }
        schedule.add_unitary(pi_pulse, "pi");
        schedule.add_evolution(0.5 * slice, u, gamma);
      } else {
        for (int c = 0; c < options.trotter_steps; ++c) {
          schedule.add_evolution(slice, u, gamma);
          schedule.add_unitary(pi_pulse, "pi");
          schedule.add_evolution(slice, u, gamma);
          schedule.add_unitary(pi_pulse, "pi");
        }
      }
      schedule.add_unitary(protect.adjoint(), "unprotect");
    }
    schedule.add_unitary(permutation_unitary(back), "permute-back", options.permutation_duration);
  }
  schedule.add_unitary(plan.u_x, "undiagonalize");
  return schedule;
}

}  // namespace noisectl
