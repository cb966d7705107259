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

#include "noisectl/switching.hpp"

#include <cmath>
#include <limits>

#include "noisectl/errors.hpp"

namespace noisectl {
namespace {
void check_pair(double rho_ii, double rho_jj) {
  if (!(rho_ii >= 0.0 && rho_jj >= 0.0) || rho_ii + rho_jj <= 0.0) {
    throw ArgumentError("switch time: populations must be non-negative and not both zero");
  }
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ArgumentError("theta must lie in [0, 1]");
  }
}
}  // namespace

double switch_time_amp(double rho_ii, double rho_jj, double gamma_star, double tau) {
  check_pair(rho_ii, rho_jj);
  if (!(gamma_star > 0.0) || !(tau >= 0.0)) {
    throw ArgumentError("switch_time_amp: need gamma_star > 0 and tau >= 0");
  }
  return std::log((rho_ii * std::exp(gamma_star * tau) + rho_jj) / (rho_ii + rho_jj)) /
         gamma_star;
}

double switch_time_theta(double rho_ii, double rho_jj, double theta, double gamma_star,
                         double tau) {
  check_pair(rho_ii, rho_jj);
  if (!(theta >= 0.0 && theta < 0.5)) {
    throw ArgumentError("switch_time_theta: theta must lie in [0, 1/2)");
  }
  if (!(gamma_star > 0.0) || !(tau >= 0.0)) {
    throw ArgumentError("switch_time_theta: need gamma_star > 0 and tau >= 0");
  }
  const double t2 = theta * theta;
  const double tb2 = (1.0 - theta) * (1.0 - theta);
  const double c = 1.0 / (tb2 + t2);
  const double grow = std::exp(gamma_star * tau / c);
  const double num = grow * (tb2 * rho_ii - t2 * rho_jj) + (tb2 * rho_jj - t2 * rho_ii);
  const double den = (tb2 - t2) * (rho_ii + rho_jj);
  if (!(num / den > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return c / gamma_star * std::log(num / den);
}

bool theta_pair_admissible(double rho_ii, double rho_jj, double theta) {
  check_pair(rho_ii, rho_jj);
  check_theta(theta);
  const double t2 = theta * theta;
  const double tb2 = (1.0 - theta) * (1.0 - theta);
  // Cross-multiplied so zero populations and theta = 0 need no division; the
  // relative slack keeps exact boundary ratios admissible after rounding.
  constexpr double slack = 1.0 + 1e-12;
  return t2 * rho_jj <= tb2 * rho_ii * slack && t2 * rho_ii <= tb2 * rho_jj * slack;
}

DensityOperator fixed_point_theta(double theta) {
  check_theta(theta);
  const double t2 = theta * theta;
  const double tb2 = (1.0 - theta) * (1.0 - theta);
  const double c = 1.0 / (tb2 + t2);
  RealVector p(2);
  p << c * tb2, c * t2;
  return DensityOperator::diagonal(p);
}

bool fixed_point_unique(double theta) { return theta != 0.5; }

double beta_of_theta(double theta, double delta_energy) {
  check_theta(theta);
  if (!(delta_energy > 0.0)) {
    throw ArgumentError("beta_of_theta: level splitting must be positive");
  }
  const double t2 = theta * theta;
  const double tb2 = (1.0 - theta) * (1.0 - theta);
  const double bias = (tb2 - t2) / (tb2 + t2);
  if (bias >= 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  if (bias <= -1.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return 2.0 / delta_energy * std::atanh(bias);
}

}  // namespace noisectl
