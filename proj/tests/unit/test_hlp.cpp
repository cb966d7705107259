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

#include <cmath>
#include <limits>

#include <doctest.h>

#include "noisectl/errors.hpp"
#include "noisectl/hlp.hpp"
#include "noisectl/lindblad.hpp"
#include "noisectl/majorization.hpp"
#include "noisectl/models.hpp"

using namespace noisectl;

namespace {

RealVector vec_of(std::initializer_list<double> v) {
  RealVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (const double x : v) {
    out(i++) = x;
  }
  return out;
}

RealVector ramp8() { return RealVector::LinSpaced(8, 8.0, 1.0) / 36.0; }

// Final state of an executed plan minus the state the plan predicts.
double execution_gap(const HlpPlan& plan, const ControlSystem& sys, const DensityOperator& rho0,
                     const HlpExecuteOptions& opt) {
  const Schedule s = hlp_execute(plan, sys, opt);
  const Matrix out = propagate_schedule(sys, rho0, s).final_state;
  const Matrix want =
      plan.u_x * plan.predicted_spectrum.cast<Complex>().asDiagonal() * plan.u_x.adjoint();
  return (out - want).norm();
}

}  // namespace

TEST_SUITE("hlp") {
  TEST_CASE("full averaging of a pure qubit") {
    const HlpPlan plan = hlp_plan(vec_of({1.0, 0.0}), vec_of({0.5, 0.5}), 5.0, 1e-6);
    REQUIRE(plan.steps.size() == 1);
    CHECK(plan.steps[0].j == 0);
    CHECK(plan.steps[0].k == 1);
    CHECK(plan.steps[0].lambda == 0.5);
    CHECK(std::isinf(plan.steps[0].exact_tau));
    CHECK(std::isfinite(plan.steps[0].tau));
    CHECK(plan.predicted_residual <= 1e-6);
    // sqrt(2) e^{-gamma tau / 2} / 2 = residual at the cap.
    CHECK(plan.predicted_residual == doctest::Approx(1e-6).epsilon(1e-6));
  }

  TEST_CASE("partial averaging with a finite exact time") {
    const double gamma = 5.0;
    const HlpPlan plan = hlp_plan(vec_of({0.7, 0.3}), vec_of({0.6, 0.4}), gamma, 1e-9);
    REQUIRE(plan.steps.size() == 1);
    CHECK(plan.steps[0].lambda == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(plan.steps[0].tau == doctest::Approx(2.0 / gamma * std::log(2.0)).epsilon(1e-13));
    CHECK(plan.steps[0].tau == plan.steps[0].exact_tau);
    CHECK(!plan.steps[0].swapped);
    CHECK(plan.predicted_residual < 1e-14);
  }

  TEST_CASE("ramp spectrum relaxes to the maximally mixed state in about 12/J") {
    const HlpPlan plan = hlp_plan(ramp8(), RealVector::Constant(8, 0.125), 5.0, 1e-4);
    CHECK(plan.steps.size() == 4);
    CHECK(plan.steps.size() <= 7);
    CHECK(plan.total_dissipative_time == doctest::Approx(12.0).epsilon(0.05));
    CHECK(plan.predicted_residual <= 1.5e-4);
    for (const auto& s : plan.steps) {
      CHECK(s.lambda == doctest::Approx(0.5).epsilon(1e-12));
    }
  }

  TEST_CASE("identical spectra give an empty plan") {
    const RealVector y = vec_of({0.5, 0.3, 0.2, 0.0});
    const HlpPlan plan = hlp_plan(y, y, 1.0, 1e-8);
    CHECK(plan.steps.empty());
    CHECK(plan.total_dissipative_time == 0.0);
    CHECK(plan.predicted_residual == 0.0);
  }

  TEST_CASE("unreachable and malformed targets") {
    CHECK_THROWS_AS(hlp_plan(vec_of({0.5, 0.5}), vec_of({1.0, 0.0}), 1.0, 1e-6),
                    ReachabilityError);
    CHECK_THROWS_AS(hlp_plan(vec_of({0.3, 0.7}), vec_of({0.5, 0.5}), 1.0, 1e-6), ArgumentError);
    CHECK_THROWS_AS(hlp_plan(vec_of({0.7, 0.3}), vec_of({0.5, 0.5}), 0.0, 1e-6), ArgumentError);
    CHECK_THROWS_AS(hlp_plan(vec_of({0.7, 0.3}), vec_of({0.5, 0.5}), 1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(hlp_plan(vec_of({0.7, 0.3}), vec_of({1.0}), 1.0, 1e-6), ArgumentError);
  }

  TEST_CASE("plans on random pairs keep the intermediate spectra between x and y") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const RealVector y = sorted_spectrum(random_density(3, s));
      // Mix towards uniform and add a random doubly stochastic blur so x < y.
      RealVector x = sorted_descending(t_transform(t_transform(y, 0, 7, 0.7), 2, 5, 0.4));
      x = sorted_descending(0.8 * x + 0.2 * RealVector::Constant(8, 0.125));
      REQUIRE(is_majorised_by(x, y));
      const HlpPlan plan = hlp_plan(y, x, 3.0, 1e-6);
      CHECK(plan.steps.size() <= 7);
      CHECK((plan.exact_spectra.back() - x).norm() < 1e-12);
      for (const auto& mid : plan.exact_spectra) {
        CHECK(is_majorised_by(x, mid, 1e-10));
        CHECK(is_majorised_by(mid, y, 1e-10));
      }
      CHECK(plan.predicted_residual <= 1e-6);
      for (const auto& st : plan.steps) {
        CHECK(st.j < st.k);
        CHECK(st.tau >= 0.0);
        CHECK(st.tau <= st.exact_tau);
        // Descending targets never need the swapped branch.
        CHECK(st.lambda >= 0.5);
        CHECK(!st.swapped);
        if (std::isfinite(st.exact_tau)) {
          CHECK(st.exact_tau ==
                doctest::Approx(-(2.0 / 3.0) * std::log(std::abs(1.0 - 2.0 * st.lambda))));
        }
      }
    }
  }

  TEST_CASE("bit-flip channel over the exact time realizes the T-transform") {
    const double gamma = 2.5;
    for (const double lambda : {0.55, 0.75, 0.9, 0.99}) {
      const double tau = -(2.0 / gamma) * std::log(std::abs(1.0 - 2.0 * lambda));
      const Eigen::Matrix2d block = theta_channel_block({0.5, gamma, tau});
      const Eigen::Vector2d p(0.62, 0.21);
      const Eigen::Vector2d want(lambda * p(0) + (1 - lambda) * p(1),
                                 lambda * p(1) + (1 - lambda) * p(0));
      CHECK((block * p - want).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  TEST_CASE("hlp_apply with exact times reproduces the target") {
    const RealVector y = vec_of({0.5, 0.3, 0.15, 0.05});
    const RealVector x = vec_of({0.4, 0.3, 0.2, 0.1});
    HlpPlan plan = hlp_plan(y, x, 1.0, 1e-12);
    bool finite = true;
    for (const auto& s : plan.steps) {
      finite = finite && std::isfinite(s.exact_tau);
    }
    if (finite) {
      CHECK((hlp_apply(y, plan.steps, 1.0) - x).norm() < 1e-12);
    }
    CHECK(plan.predicted_residual <= 1e-12);
  }

  TEST_CASE("protection unitary makes every other pair bit-flip invariant") {
    const Matrix u = protection_unitary(8);
    CHECK((u.adjoint() * u - Matrix::Identity(8, 8)).norm() < 1e-15);
    const Superoperator g = dissipator_superop(embed_local(pauli::x() / 2.0, 3, 3));
    // Any diagonal state whose first pair is already equal is protected.
    RealVector p = vec_of({0.2, 0.2, 0.25, 0.05, 0.1, 0.1, 0.06, 0.04});
    const Matrix rho = u * p.cast<Complex>().asDiagonal() * u.adjoint();
    CHECK((g * vec(rho).data).norm() < 1e-15);
    CHECK_THROWS_AS(protection_unitary(3), ArgumentError);
  }

  TEST_CASE("empty plan executes as two basis changes") {
    const ControlSystem sys = ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 5.0);
    const RealVector y = vec_of({0.4, 0.3, 0.2, 0.1});
    const Schedule s = hlp_execute(hlp_plan(y, y, 5.0, 1e-6), sys);
    CHECK(s.entries().size() == 2);
    CHECK(s.unitary_count() == 2);
    CHECK(s.evolution_time() == 0.0);
  }

  TEST_CASE("two-qubit execution matches the plan") {
    const ControlSystem sys = ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 5.0);
    const RealVector y = vec_of({0.4, 0.3, 0.2, 0.1});
    const HlpPlan plan = hlp_plan(y, RealVector::Constant(4, 0.25), 5.0, 1e-4);
    const double gap = execution_gap(plan, sys, DensityOperator::diagonal(y), {});
    CHECK(gap <= 1e-6);
    const Schedule s = hlp_execute(plan, sys);
    CHECK(s.noise_on_time(0) == doctest::Approx(plan.total_dissipative_time).epsilon(1e-12));
  }

  TEST_CASE("three-qubit execution from a rotated ramp" * doctest::timeout(120)) {
    const ControlSystem sys = ising_chain(3, 1.0, {NoiseKind::bit_flip}, 0, 5.0);
    const Matrix v = random_unitary(8, 21);
    const DensityOperator rho0(v * DensityOperator::diagonal(ramp8()).matrix() * v.adjoint());
    const HlpPlan plan = hlp_plan(rho0, thermal_state(3), 5.0, 1e-4);
    HlpExecuteOptions opt;
    opt.trotter_steps = 128;
    const Schedule s = hlp_execute(plan, sys, opt);
    const Matrix out = propagate_schedule(sys, rho0, s).final_state;
    CHECK((out - thermal_state(3).matrix()).norm() <= 1.5e-4);
  }

  TEST_CASE("charged permutations count towards the duration only") {
    const ControlSystem sys = ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 5.0);
    const RealVector y = vec_of({0.4, 0.3, 0.2, 0.1});
    const HlpPlan plan = hlp_plan(y, RealVector::Constant(4, 0.25), 5.0, 1e-4);
    HlpExecuteOptions opt;
    opt.permutation_duration = 1.0;
    const Schedule s = hlp_execute(plan, sys, opt);
    CHECK(s.charged_time() == doctest::Approx(2.0 * static_cast<double>(plan.steps.size())));
    CHECK(execution_gap(plan, sys, DensityOperator::diagonal(y), opt) <= 1e-6);
  }

  TEST_CASE("execution needs bit-flip noise on the last qubit") {
    const RealVector y = vec_of({0.4, 0.3, 0.2, 0.1});
    const HlpPlan plan = hlp_plan(y, RealVector::Constant(4, 0.25), 5.0, 1e-4);
    CHECK_THROWS_AS(hlp_execute(plan, ising_chain(2, 1.0, {NoiseKind::amplitude_damping}, 0, 5.0)),
                    ConfigurationError);
    CHECK_THROWS_AS(hlp_execute(plan, ising_chain(2, 1.0, {NoiseKind::bit_flip}, 1, 5.0)),
                    ConfigurationError);
    CHECK_THROWS_AS(hlp_execute(plan, ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 2.0)),
                    ConfigurationError);
    CHECK_THROWS_AS(hlp_execute(plan, ising_chain(3, 1.0, {NoiseKind::bit_flip}, 0, 5.0)),
                    ArgumentError);
    HlpExecuteOptions bad;
    bad.trotter_steps = 0;
    CHECK_THROWS_AS(hlp_execute(plan, ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 5.0), bad),
                    ArgumentError);
  }
}
