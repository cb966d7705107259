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

#include "noisectl/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "noisectl/errors.hpp"
#include "noisectl/models.hpp"

namespace noisectl {

namespace {

void check_common(int n, double gamma_star, double coupling) {
  if (n < 1) {
    throw ArgumentError("protocol: n must be at least 1");
  }
  if (!(gamma_star > 0.0) || !std::isfinite(gamma_star)) {
    throw ArgumentError("protocol: gamma_star must be positive");
  }
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw ArgumentError("protocol: coupling J must be positive");
  }
}

double pairs(int n) { return 0.5 * n * (n - 1); }

// Rounds 1..n: before round q, swaps (n-q+1, n-q+2), ..., (n-1, n) bring an
// untouched qubit onto site n; then `round` adds that round's events.
template <typename Round>
double cycle_rounds(Schedule& s, int n, double swap_cost, Round round) {
  double swap_time = 0.0;
  for (int q = 1; q <= n; ++q) {
    for (int a = n - q + 1; a <= n - 1; ++a) {
      s.add_unitary(neighbour_swap(a, n), "swap" + std::to_string(a), swap_cost);
      swap_time += swap_cost;
    }
    round(s);
  }
  return swap_time;
}

}  // namespace

const char* to_string(ProtocolFormula f) {
  switch (f) {
    case ProtocolFormula::init_error:
      return "init_error";
    case ProtocolFormula::init_time_bound:
      return "init_time_bound";
    case ProtocolFormula::bitflip_erasure_error:
      return "bitflip_erasure_error";
    case ProtocolFormula::amp_erasure:
      return "amp_erasure";
  }
  return "unknown";
}

Matrix neighbour_swap(int a, int n) {
  if (n < 2 || a < 1 || a >= n) {
    throw ArgumentError("neighbour_swap: qubits " + std::to_string(a) + "," +
                        std::to_string(a + 1) + " not in a chain of " + std::to_string(n));
  }
  const Index dim = Index{1} << n;
  const int bit_a = n - a;
  const int bit_b = n - a - 1;
  std::vector<Index> perm(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) {
    const Index va = (i >> bit_a) & 1;
    const Index vb = (i >> bit_b) & 1;
    Index j = i & ~((Index{1} << bit_a) | (Index{1} << bit_b));
    j |= (va << bit_b) | (vb << bit_a);
    perm[static_cast<std::size_t>(i)] = j;
  }
  return permutation_unitary(perm);
}

double init_error_formula(int n, double eps) {
  if (n < 1 || !(eps >= 0.0 && eps <= 1.0)) {
    throw ArgumentError("init_error_formula: need n >= 1 and eps in [0, 1]");
  }
  // 1 - 2 p^n + q^n with p = 1 - eps/2, q = p^2 + eps^2/4, regrouped as
  // (1 - p^n)^2 + (q - p^2) sum_i q^i p^(2(n-1-i)) so small eps keeps its
  // digits.
  const double p = 1.0 - 0.5 * eps;
  const double q = p * p + 0.25 * eps * eps;
  const double one_minus_pn = -std::expm1(n * std::log1p(-0.5 * eps));
  double tail = 0.0;
  for (int i = 0; i < n; ++i) {
    tail += std::pow(q, i) * std::pow(p, 2 * (n - 1 - i));
  }
  return std::sqrt(one_minus_pn * one_minus_pn + 0.25 * eps * eps * tail);
}

double init_error(int n, double gamma_star, double total_noise_time) {
  if (!(total_noise_time >= 0.0)) {
    throw ArgumentError("init_error: noise time must be non-negative");
  }
  return init_error_formula(n, std::exp(-gamma_star * total_noise_time / n));
}

double init_time_bound(int n, double gamma_star, double coupling, double delta) {
  check_common(n, gamma_star, coupling);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ArgumentError("init_time_bound: delta must lie in (0, 1)");
  }
  return pairs(n) / coupling +
         (n / gamma_star) * std::log(std::sqrt(static_cast<double>(n) * (n + 1)) / (2.0 * delta));
}

ProtocolReport init_protocol(int n, double gamma_star, double coupling, double total_noise_time,
                             bool ideal_swaps) {
  check_common(n, gamma_star, coupling);
  if (!(total_noise_time >= 0.0) || !std::isfinite(total_noise_time)) {
    throw ArgumentError("init_protocol: noise time must be finite and non-negative");
  }
  ProtocolReport r{ising_chain(n, coupling, {NoiseKind::amplitude_damping, 0.0}, n, gamma_star),
                   thermal_state(n), zero_state(n), Schedule{}};
  const RealVector u = RealVector::Zero(r.system.control_count());
  const RealVector on = RealVector::Constant(1, gamma_star);
  const double tau = total_noise_time / n;
  r.swap_time = cycle_rounds(r.schedule, n, ideal_swaps ? 0.0 : 1.0 / coupling,
                             [&](Schedule& s) { s.add_evolution(tau, u, on); });
  r.noise_time = total_noise_time;
  r.predicted_error = init_error(n, gamma_star, total_noise_time);
  r.predicted_duration = r.swap_time + r.noise_time;
  r.formula = ProtocolFormula::init_error;
  return r;
}

ProtocolReport erase_protocol_amp(int n, double gamma_star, double coupling, bool ideal_swaps) {
  check_common(n, gamma_star, coupling);
  ProtocolReport r{ising_chain(n, coupling, {NoiseKind::amplitude_damping, 0.0}, n, gamma_star),
                   zero_state(n), thermal_state(n), Schedule{}};
  const RealVector u = RealVector::Zero(r.system.control_count());
  const RealVector on = RealVector::Constant(1, gamma_star);
  const double tau = std::log(2.0) / gamma_star;
  const Matrix flip = embed_local(-kI * pauli::x(), n, n);
  r.swap_time = cycle_rounds(r.schedule, n, ideal_swaps ? 0.0 : 1.0 / coupling,
                             [&](Schedule& s) {
                               s.add_unitary(flip, "pi");
                               s.add_evolution(tau, u, on);
                             });
  r.noise_time = n * tau;
  r.predicted_error = 0.0;
  r.predicted_duration = r.swap_time + r.noise_time;
  r.formula = ProtocolFormula::amp_erasure;
  return r;
}

double erase_error_bitflip_formula(int n, double eps_tilde) {
  if (n < 1 || !(eps_tilde >= 0.0 && eps_tilde <= 1.0)) {
    throw ArgumentError("erase_error_bitflip_formula: need n >= 1 and eps in [0, 1]");
  }
  return std::sqrt(std::ldexp(std::expm1(n * std::log1p(eps_tilde * eps_tilde)), -n));
}

double erase_error_bitflip(int n, double gamma_star, double total_noise_time) {
  if (!(total_noise_time >= 0.0)) {
    throw ArgumentError("erase_error_bitflip: noise time must be non-negative");
  }
  return erase_error_bitflip_formula(n, std::exp(-gamma_star * total_noise_time / (2.0 * n)));
}

double erase_time_bitflip(int n, double gamma_star, double coupling, double delta) {
  check_common(n, gamma_star, coupling);
  const double dmax = std::sqrt(1.0 - std::pow(2.0, -n));
  if (!(delta > 0.0 && delta <= dmax * (1.0 + 1e-15))) {
    throw ArgumentError("erase_time_bitflip: delta must lie in (0, sqrt(1 - 2^-n)]");
  }
  const double inner = std::pow(std::pow(2.0, n) * delta * delta + 1.0, 1.0 / n) - 1.0;
  return pairs(n) / coupling - (n / gamma_star) * std::log(std::min(inner, 1.0));
}

double erase_bound_at_time(int n, double gamma_star, double coupling, double total_time) {
  check_common(n, gamma_star, coupling);
  const double noise = std::max(0.0, total_time - pairs(n) / coupling);
  return erase_error_bitflip(n, gamma_star, noise);
}

ProtocolReport erase_protocol_bitflip(int n, double gamma_star, double coupling,
                                      double total_noise_time, bool ideal_swaps) {
  check_common(n, gamma_star, coupling);
  if (!(total_noise_time >= 0.0) || !std::isfinite(total_noise_time)) {
    throw ArgumentError("erase_protocol_bitflip: noise time must be finite and non-negative");
  }
  ProtocolReport r{ising_chain(n, coupling, {NoiseKind::bit_flip, 0.0}, n, gamma_star),
                   zero_state(n), thermal_state(n), Schedule{}};
  const RealVector u = RealVector::Zero(r.system.control_count());
  const RealVector on = RealVector::Constant(1, gamma_star);
  const double tau = total_noise_time / n;
  r.swap_time = cycle_rounds(r.schedule, n, ideal_swaps ? 0.0 : 1.0 / coupling,
                             [&](Schedule& s) { s.add_evolution(tau, u, on); });
  r.noise_time = total_noise_time;
  r.predicted_error = erase_error_bitflip(n, gamma_star, total_noise_time);
  r.predicted_duration = r.swap_time + r.noise_time;
  r.formula = ProtocolFormula::bitflip_erasure_error;
  return r;
}

double simulate_protocol(const ProtocolReport& report) {
  const ScheduleRun run = propagate_schedule(report.system, report.initial, report.schedule);
  return (run.final_state - report.target.matrix()).norm();
}

}  // namespace noisectl
