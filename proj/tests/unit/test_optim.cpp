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

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "fd_oracle.hpp"
#include "noisectl/errors.hpp"
#include "noisectl/majorization.hpp"
#include "noisectl/models.hpp"
#include "noisectl/optim.hpp"

using namespace noisectl;

namespace {

TransferProblem random_instance(std::uint64_t seed, NoiseKind kind, Index slices) {
  return TransferProblem(ising_chain(2, 1.0, {kind}, 0, 2.0), random_density(2, seed),
                         random_density(2, seed + 1000), 1.2, slices);
}

ControlSequence constant_sequence(const TransferProblem& p, double gamma) {
  ControlSequence s;
  s.dt = p.dt();
  s.u = RealMatrix::Zero(p.slices, p.system.control_count());
  s.gamma = RealMatrix::Constant(p.slices, p.system.noise_count(), gamma);
  return s;
}

double max_rel_error(const RealMatrix& got, const RealMatrix& want, double floor) {
  double worst = 0.0;
  for (Index i = 0; i < want.rows(); ++i) {
    for (Index j = 0; j < want.cols(); ++j) {
      if (std::abs(want(i, j)) > floor) {
        worst = std::max(worst, std::abs(got(i, j) - want(i, j)) / std::abs(want(i, j)));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_SUITE("optim") {
  TEST_CASE("commuting dynamics leave a diagonal state alone") {
    const TransferProblem p(ising_chain(2, 1.0, {NoiseKind::amplitude_damping}, 0, 1.0),
                            DensityOperator::diagonal(RealVector::LinSpaced(4, 0.4, 0.1)),
                            thermal_state(2), 2.0, 5);
    const Trajectory tr = propagate(p, constant_sequence(p, 0.0));
    REQUIRE(tr.states.size() == 6);
    CHECK(tr.times.back() == doctest::Approx(2.0));
    for (const auto& s : tr.states) {
      CHECK((s.data - tr.states.front().data).norm() < 1e-13);
    }
  }

  TEST_CASE("single qubit bit flip eigenvalues") {
    const double gamma = 3.0;
    const TransferProblem p(ising_chain(1, 1.0, {NoiseKind::bit_flip}, 0, gamma), zero_state(1),
                            thermal_state(1), 1.0, 4);
    const Trajectory tr = propagate(p, constant_sequence(p, gamma));
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      const double e = std::exp(-gamma * tr.times[k] / 2.0);
      CHECK(tr.sorted_eigenvalues(static_cast<Index>(k), 0) == doctest::Approx(0.5 * (1 + e)).epsilon(1e-13));
      CHECK(tr.sorted_eigenvalues(static_cast<Index>(k), 1) == doctest::Approx(0.5 * (1 - e)).epsilon(1e-13));
    }
  }

  TEST_CASE("uncontrolled bit flip on one qubit cannot erase three qubits") {
    const TransferProblem p(ising_chain(3, 1.0, {NoiseKind::bit_flip}, 0, 5.0), zero_state(3),
                            thermal_state(3), 6.0, 60);
    const Trajectory tr = propagate(p, constant_sequence(p, 5.0));
    double best = 1.0;
    for (const auto& s : tr.states) {
      best = std::min(best, frobenius_error(s, vec(thermal_state(3))));
    }
    CHECK(best == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-3 / 0.6124));
    CHECK(std::abs(best - 0.6124) <= 1e-3);
  }

  TEST_CASE("error examples") {
    const TransferProblem same(ising_chain(1, 1.0, {NoiseKind::bit_flip}, 0, 1.0), zero_state(1),
                               zero_state(1), 1.0, 2);
    CHECK(error(same, constant_sequence(same, 0.0)) < 1e-15);
    const TransferProblem far(ising_chain(3, 1.0, {NoiseKind::bit_flip}, 0, 1.0), zero_state(3),
                              thermal_state(3), 1e-9, 1);
    CHECK(error(far, constant_sequence(far, 0.0)) ==
          doctest::Approx(std::sqrt(7.0 / 8.0)).epsilon(1e-8));
  }

  TEST_CASE("problem and sequence validation") {
    const ControlSystem sys = ising_chain(2, 1.0, {NoiseKind::bit_flip}, 0, 1.0);
    CHECK_THROWS_AS(TransferProblem(sys, zero_state(1), zero_state(2), 1.0, 2), ArgumentError);
    CHECK_THROWS_AS(TransferProblem(sys, zero_state(2), zero_state(2), 0.0, 2), ArgumentError);
    CHECK_THROWS_AS(TransferProblem(sys, zero_state(2), zero_state(2), 1.0, 0), ArgumentError);
    const TransferProblem p(sys, zero_state(2), thermal_state(2), 1.0, 3);
    ControlSequence s = constant_sequence(p, 0.5);
    CHECK_NOTHROW(validate_sequence(sys, s));
    s.gamma(1, 0) = 1.5;
    CHECK_THROWS_AS(validate_sequence(sys, s), ArgumentError);
    CHECK_THROWS_AS(error(p, s), ArgumentError);
    s = constant_sequence(p, 0.5);
    s.u.resize(3, 3);
    CHECK_THROWS_AS(validate_sequence(sys, s), ArgumentError);
    s = constant_sequence(p, 0.5);
    s.dt = 0.0;
    CHECK_THROWS_AS(validate_sequence(sys, s), ArgumentError);
    s = constant_sequence(p, 0.5);
    s.u(0, 0) = std::nan("");
    CHECK_THROWS_AS(validate_sequence(sys, s), ArgumentError);
  }

  TEST_CASE("to_schedule reproduces propagate") {
    const TransferProblem p = random_instance(3, NoiseKind::amplitude_damping, 4);
    const ControlSequence s = random_sequence(p, 9);
    const Schedule sched = to_schedule(s);
    CHECK(sched.evolution_time() == doctest::Approx(p.total_time));
    const Matrix a = propagate_schedule(p.system, p.rho0, sched).final_state;
    const Matrix b = unvec(propagate(p, s).states.back());
    CHECK((a - b).norm() < 1e-12);
  }

  TEST_CASE("zero generator gives a zero gradient") {
    const TransferProblem p(ising_chain(1, 1.0, {NoiseKind::amplitude_damping}, 0, 1.0),
                            zero_state(1), zero_state(1), 1.0, 3);
    const GradientResult g = gradient(p, constant_sequence(p, 0.0));
    CHECK(g.error_squared < 1e-30);
    CHECK(g.grad.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(gradient(p, constant_sequence(p, 0.0), 1e-3).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("finite differences agree with a central-difference oracle") {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const TransferProblem p = random_instance(10 + s, s % 2 ? NoiseKind::bit_flip
                                                              : NoiseKind::amplitude_damping,
                                                3);
      const ControlSequence seq = random_sequence(p, 50 + s);
      const RealMatrix oracle = testing::central_difference_oracle(p, seq, 1e-9);
      const GradientResult direct = gradient(p, seq);
      GradientOptions aug;
      aug.mode = DifferenceMode::augmented;
      const GradientResult augmented = gradient(p, seq, aug);
      CHECK(max_rel_error(direct.grad, oracle, 1e-8) <= 1e-5);
      CHECK(max_rel_error(augmented.grad, oracle, 1e-8) <= 1e-8);
      CHECK(direct.error_squared == doctest::Approx(std::pow(error(p, seq), 2)).epsilon(1e-12));
    }
  }

  TEST_CASE("noise gradient vanishes at an amplitude-damping fixed point") {
    const TransferProblem p(ising_chain(2, 1.0, {NoiseKind::amplitude_damping}, 0, 2.0),
                            zero_state(2), thermal_state(2), 1.0, 4);
    const RealMatrix g = gradient(p, constant_sequence(p, 1.0)).grad;
    CHECK(g.col(4).cwiseAbs().maxCoeff() <= 1e-8);
  }

  TEST_CASE("single qubit averaging converges") {
    const TransferProblem p(ising_chain(1, 1.0, {NoiseKind::bit_flip}, 0, 5.0), zero_state(1),
                            thermal_state(1), 8.0, 4);
    OptimizeOptions opt;
    opt.tol = 1e-7;
    const OptimizeResult r = optimize(p, random_sequence(p, 1), opt);
    CHECK(r.error <= 1e-6);
    CHECK(r.reason == StopReason::tolerance);
    for (std::size_t i = 1; i < r.error_history.size(); ++i) {
      CHECK(r.error_history[i] <= r.error_history[i - 1]);
    }
    CHECK(r.error == doctest::Approx(error(p, r.sequence)).epsilon(1e-10));
  }

  TEST_CASE("optimizer history is monotone and the result respects the box") {
    const TransferProblem p = random_instance(77, NoiseKind::amplitude_damping, 6);
    OptimizeOptions opt;
    opt.max_iters = 40;
    const OptimizeResult r = optimize(p, random_sequence(p, 4), opt);
    REQUIRE(!r.error_history.empty());
    CHECK(r.error_history.front() == doctest::Approx(error(p, random_sequence(p, 4))));
    for (std::size_t i = 1; i < r.error_history.size(); ++i) {
      CHECK(r.error_history[i] <= r.error_history[i - 1]);
    }
    CHECK(r.sequence.gamma.minCoeff() >= 0.0);
    CHECK(r.sequence.gamma.maxCoeff() <= 2.0);
    CHECK_NOTHROW(validate_sequence(p.system, r.sequence));
  }

  TEST_CASE("gradient is small at a converged optimum") {
    const TransferProblem p(ising_chain(1, 1.0, {NoiseKind::bit_flip}, 0, 5.0), zero_state(1),
                            thermal_state(1), 8.0, 4);
    OptimizeOptions opt;
    opt.tol = 1e-7;
    const OptimizeResult r = optimize(p, random_sequence(p, 1), opt);
    REQUIRE(r.error <= opt.tol);
    GradientOptions aug;
    aug.mode = DifferenceMode::augmented;
    const RealMatrix g = gradient(p, r.sequence, aug).grad;
    CHECK(g.norm() <= 10.0 * opt.tol);
  }

  TEST_CASE("random sequences") {
    const TransferProblem p(ising_chain(3, 1.0, {NoiseKind::bit_flip}, 0, 5.0), zero_state(3),
                            thermal_state(3), 3.0, 12);
    const ControlSequence a = random_sequence(p, 8);
    const ControlSequence b = random_sequence(p, 8);
    CHECK((a.u - b.u).norm() == 0.0);
    CHECK((a.gamma - b.gamma).norm() == 0.0);
    CHECK((random_sequence(p, 9).u - a.u).norm() > 0.0);
    CHECK(a.gamma.minCoeff() >= 0.0);
    CHECK(a.gamma.maxCoeff() <= 5.0);
    CHECK(a.u.cwiseAbs().maxCoeff() <= M_PI);
    CHECK(a.dt == doctest::Approx(0.25));

    InitSpec blocks;
    blocks.style = InitStyle::noise_blocks;
    const ControlSequence c = random_sequence(p, 8, blocks);
    for (Index k = 0; k < 12; ++k) {
      const bool on = (k / 2) % 2 == 0;
      CHECK(c.gamma(k, 0) == (on ? 5.0 : 0.0));
    }
    blocks.blocks = 0;
    CHECK_THROWS_AS(random_sequence(p, 8, blocks), ArgumentError);
  }

  TEST_CASE("restarts are reproducible and keep the best run") {
    const TransferProblem p = random_instance(5, NoiseKind::amplitude_damping, 3);
    OptimizeOptions opt;
    opt.max_iters = 15;
    const RestartResult a = optimize_restarts(p, 3, 40, {}, opt);
    const RestartResult b = optimize_restarts(p, 3, 40, {}, opt);
    REQUIRE(a.final_errors.size() == 3);
    CHECK(a.seeds[2] == 42);
    CHECK(a.best.error == *std::min_element(a.final_errors.begin(), a.final_errors.end()));
    CHECK(a.final_errors == b.final_errors);
    CHECK((a.best.sequence.u - b.best.sequence.u).norm() == 0.0);
    CHECK_THROWS_AS(optimize_restarts(p, 0, 1), ArgumentError);
  }

  TEST_CASE("bit-flip trajectories are majorised by the initial spectrum") {
    for (std::uint64_t s = 0; s < 6; ++s) {
      const int n = s % 2 == 0 ? 2 : 3;
      const TransferProblem p(ising_chain(n, 1.0, {NoiseKind::bit_flip}, 0, 5.0),
                              random_density(n, s), thermal_state(n), 1.5, 6);
      const Trajectory tr = propagate(p, random_sequence(p, 200 + s));
      const RealVector y = tr.sorted_eigenvalues.row(0).transpose();
      double purity = 1.0 + 1e-9;
      for (Index k = 0; k < tr.sorted_eigenvalues.rows(); ++k) {
        const RealVector x = tr.sorted_eigenvalues.row(k).transpose();
        CHECK(is_majorised_by(x, y, 1e-9));
        const double pk = x.squaredNorm();
        CHECK(pk <= purity + 1e-9);
        purity = pk;
      }
    }
  }

  TEST_CASE("splitting slices in half leaves the error unchanged") {
    const TransferProblem p = random_instance(8, NoiseKind::amplitude_damping, 4);
    const ControlSequence s = random_sequence(p, 3);
    const TransferProblem fine(p.system, p.rho0, p.target, p.total_time, 8);
    ControlSequence split;
    split.dt = fine.dt();
    split.u.resize(8, s.u.cols());
    split.gamma.resize(8, s.gamma.cols());
    for (Index k = 0; k < 8; ++k) {
      split.u.row(k) = s.u.row(k / 2);
      split.gamma.row(k) = s.gamma.row(k / 2);
    }
    CHECK(std::abs(error(p, s) - error(fine, split)) <= 1e-10);
  }
}
