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

#include "noisectl/optim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "noisectl/errors.hpp"
#include "noisectl/expm.hpp"
#include "noisectl/lindblad.hpp"

namespace noisectl {

void validate_sequence(const ControlSystem& system, const ControlSequence& seq) {
  if (seq.slices() < 1) {
    throw ArgumentError("control sequence: needs at least one slice");
  }
  if (!(seq.dt > 0.0) || !std::isfinite(seq.dt)) {
    throw ArgumentError("control sequence: dt must be positive");
  }
  if (seq.u.cols() != system.control_count() || seq.gamma.cols() != system.noise_count() ||
      seq.gamma.rows() != seq.u.rows()) {
    std::ostringstream os;
    os << "control sequence: shape " << seq.u.rows() << "x" << seq.u.cols() << " / "
       << seq.gamma.rows() << "x" << seq.gamma.cols() << " does not match " << system.control_count()
       << " controls and " << system.noise_count() << " noises";
    throw ArgumentError(os.str());
  }
  if (!seq.u.allFinite() || !seq.gamma.allFinite()) {
    throw ArgumentError("control sequence: non-finite amplitude");
  }
  const RealVector lo = system.noise_lower_bounds();
  const RealVector hi = system.noise_upper_bounds();
  constexpr double slack = 1e-12;
  for (Index k = 0; k < seq.slices(); ++k) {
    for (Index l = 0; l < system.noise_count(); ++l) {
      const double g = seq.gamma(k, l);
      if (g < lo(l) - slack * (1.0 + hi(l)) || g > hi(l) * (1.0 + slack)) {
        std::ostringstream os;
        os << "control sequence: gamma(" << k << ", " << l << ") = " << g << " outside ["
           << lo(l) << ", " << hi(l) << "]";
        throw ArgumentError(os.str());
      }
    }
  }
}

Schedule to_schedule(const ControlSequence& seq) {
  Schedule s;
  for (Index k = 0; k < seq.slices(); ++k) {
    s.add_evolution(seq.dt, seq.u.row(k).transpose(), seq.gamma.row(k).transpose());
  }
  return s;
}

TransferProblem::TransferProblem(ControlSystem system_in, DensityOperator rho0_in,
                                 DensityOperator target_in, double total_time_in,
                                 Index slices_in)
    : system(std::move(system_in)),
      rho0(std::move(rho0_in)),
      target(std::move(target_in)),
      total_time(total_time_in),
      slices(slices_in) {
  if (rho0.dim() != system.dim() || target.dim() != system.dim()) {
    throw ArgumentError("transfer problem: state and system dimensions differ");
  }
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw ArgumentError("transfer problem: total time must be positive");
  }
  if (slices < 1) {
    throw ArgumentError("transfer problem: needs at least one slice");
  }
}

namespace {

void check_state(const Vector& v, Index k) {
  const Matrix rho = unvec(VectorizedState{v});
  if (auto bad = density_violation(rho, 1e-6)) {
    std::ostringstream os;
    os << "propagation left the density operators after slice " << k << ": " << *bad;
    throw NumericalError(os.str());
  }
}

void check_slice_time(const TransferProblem& problem, const ControlSequence& seq) {
  validate_sequence(problem.system, seq);
  if (seq.slices() != problem.slices ||
      std::abs(seq.duration() - problem.total_time) > 1e-9 * problem.total_time) {
    throw ArgumentError("control sequence does not match the problem's slicing");
  }
}

RealVector spectrum_of(const Vector& v) {
  Matrix rho = unvec(VectorizedState{v});
  rho = 0.5 * (rho + rho.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

// Forward pass shared by error and gradient.
struct Forward {
  std::vector<Superoperator> generators;
  std::vector<Superoperator> propagators;
  std::vector<Vector> states;
};

Forward forward_pass(const LiouvillianTerms& terms, const TransferProblem& problem,
                     const ControlSequence& seq, bool keep) {
  Forward fw;
  Vector f = vec(problem.rho0).data;
  if (keep) {
    fw.states.push_back(f);
  }
  for (Index k = 0; k < seq.slices(); ++k) {
    Superoperator l = terms.assemble(seq.u.row(k).transpose(), seq.gamma.row(k).transpose());
    Superoperator x = propagator(l, seq.dt);
    f = x * f;
    if (keep) {
      fw.generators.push_back(std::move(l));
      fw.propagators.push_back(std::move(x));
      fw.states.push_back(f);
    }
  }
  if (!keep) {
    fw.states.push_back(std::move(f));
  }
  return fw;
}

}  // namespace

Trajectory propagate(const TransferProblem& problem, const ControlSequence& seq) {
  check_slice_time(problem, seq);
  const LiouvillianTerms terms(problem.system);
  const Index n = problem.system.dim();
  Trajectory tr;
  tr.sorted_eigenvalues.resize(seq.slices() + 1, n);
  Vector f = vec(problem.rho0).data;
  tr.times.push_back(0.0);
  tr.states.push_back(VectorizedState{f});
  tr.sorted_eigenvalues.row(0) = spectrum_of(f).transpose();
  for (Index k = 0; k < seq.slices(); ++k) {
    const Superoperator l =
        terms.assemble(seq.u.row(k).transpose(), seq.gamma.row(k).transpose());
    f = propagator(l, seq.dt) * f;
    check_state(f, k + 1);
    tr.times.push_back(seq.dt * static_cast<double>(k + 1));
    tr.states.push_back(VectorizedState{f});
    tr.sorted_eigenvalues.row(k + 1) = spectrum_of(f).transpose();
  }
  return tr;
}

double error(const TransferProblem& problem, const ControlSequence& seq) {
  check_slice_time(problem, seq);
  const LiouvillianTerms terms(problem.system);
  const Forward fw = forward_pass(terms, problem, seq, false);
  check_state(fw.states.back(), seq.slices());
  const double d = (fw.states.back() - vec(problem.target).data).norm();
  if (!std::isfinite(d)) {
    throw NumericalError("error: non-finite distance");
  }
  return d;
}

GradientResult gradient(const TransferProblem& problem, const ControlSequence& seq,
                        const GradientOptions& options) {
  check_slice_time(problem, seq);
  const LiouvillianTerms terms(problem.system);
  const Forward fw = forward_pass(terms, problem, seq, true);
  const Index m_slices = seq.slices();
  const Index mc = terms.control_count();
  const Index ml = terms.noise_count();
  const Index n2 = fw.states.front().size();

  const Vector residual = fw.states.back() - vec(problem.target).data;
  GradientResult out;
  out.error_squared = residual.squaredNorm();
  if (!std::isfinite(out.error_squared)) {
    throw NumericalError("gradient: non-finite error");
  }
  out.grad = RealMatrix::Zero(m_slices, mc + ml);

  // Costates: b_k = X_M^dagger ... X_{k+1}^dagger (f_M - target).
  std::vector<Vector> costate(static_cast<std::size_t>(m_slices) + 1);
  costate.back() = residual;
  for (Index k = m_slices; k >= 1; --k) {
    costate[static_cast<std::size_t>(k - 1)] =
        fw.propagators[static_cast<std::size_t>(k - 1)].adjoint() *
        costate[static_cast<std::size_t>(k)];
  }

  const double root_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  for (Index k = 0; k < m_slices; ++k) {
    const Superoperator& l = fw.generators[static_cast<std::size_t>(k)];
    const Superoperator& x = fw.propagators[static_cast<std::size_t>(k)];
    const Vector& before = fw.states[static_cast<std::size_t>(k)];
    const Vector& after_costate = costate[static_cast<std::size_t>(k) + 1];
    for (Index p = 0; p < mc + ml; ++p) {
      const bool is_control = p < mc;
      const double amp = is_control ? seq.u(k, p) : seq.gamma(k, p - mc);
      const Superoperator& g = is_control ? terms.control(p) : terms.noise(p - mc);
      const double base = options.mode == DifferenceMode::direct ? root_eps : 1e-12;
      const double s = options.step > 0.0 ? options.step : base * (1.0 + std::abs(amp));
      Superoperator diff;
      if (options.mode == DifferenceMode::direct) {
        diff = expm(-seq.dt * (l + s * g)) - x;
      } else {
        Matrix block = Matrix::Zero(2 * n2, 2 * n2);
        block.topLeftCorner(n2, n2) = -seq.dt * (l + s * g);
        block.topRightCorner(n2, n2) = -seq.dt * s * g;
        block.bottomRightCorner(n2, n2) = -seq.dt * l;
        diff = expm(block).topRightCorner(n2, n2);
      }
      const Complex inner = after_costate.dot(diff * before);
      out.grad(k, p) = 2.0 * inner.real() / s;
    }
  }
  return out;
}

RealMatrix gradient(const TransferProblem& problem, const ControlSequence& seq, double step) {
  GradientOptions options;
  options.step = step;
  return gradient(problem, seq, options).grad;
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::tolerance:
      return "tolerance";
    case StopReason::max_iters:
      return "max_iters";
    case StopReason::stalled:
      return "stalled";
    case StopReason::max_evaluations:
      return "max_evaluations";
    case StopReason::stationary:
      return "stationary";
  }
  return "unknown";
}

namespace {

// Flat layout: slice-major, u columns then gamma columns, as GradientResult.
class Packing {
 public:
  Packing(Index slices, Index mc, Index ml) : slices_(slices), mc_(mc), ml_(ml) {}

  RealVector pack(const ControlSequence& seq) const {
    RealVector z(slices_ * (mc_ + ml_));
    for (Index k = 0; k < slices_; ++k) {
      for (Index j = 0; j < mc_; ++j) {
        z(k * (mc_ + ml_) + j) = seq.u(k, j);
      }
      for (Index l = 0; l < ml_; ++l) {
        z(k * (mc_ + ml_) + mc_ + l) = seq.gamma(k, l);
      }
    }
    return z;
  }

  void unpack(const RealVector& z, ControlSequence& seq) const {
    for (Index k = 0; k < slices_; ++k) {
      for (Index j = 0; j < mc_; ++j) {
        seq.u(k, j) = z(k * (mc_ + ml_) + j);
      }
      for (Index l = 0; l < ml_; ++l) {
        seq.gamma(k, l) = z(k * (mc_ + ml_) + mc_ + l);
      }
    }
  }

  RealVector flatten(const RealMatrix& g) const {
    RealVector z(slices_ * (mc_ + ml_));
    for (Index k = 0; k < slices_; ++k) {
      for (Index p = 0; p < mc_ + ml_; ++p) {
        z(k * (mc_ + ml_) + p) = g(k, p);
      }
    }
    return z;
  }

 private:
  Index slices_;
  Index mc_;
  Index ml_;
};

}  // namespace

OptimizeResult optimize(const TransferProblem& problem, const ControlSequence& init,
                        const OptimizeOptions& options) {
  check_slice_time(problem, init);
  if (options.max_iters < 0 || options.memory < 1) {
    throw ArgumentError("optimize: max_iters must be >= 0 and memory >= 1");
  }
  const Index mc = problem.system.control_count();
  const Index ml = problem.system.noise_count();
  const Packing packing(init.slices(), mc, ml);
  const Index nvar = init.slices() * (mc + ml);

  RealVector lb(nvar);
  RealVector ub(nvar);
  const RealVector glo = problem.system.noise_lower_bounds();
  const RealVector ghi = problem.system.noise_upper_bounds();
  for (Index k = 0; k < init.slices(); ++k) {
    for (Index j = 0; j < mc; ++j) {
      lb(k * (mc + ml) + j) = -std::numeric_limits<double>::infinity();
      ub(k * (mc + ml) + j) = std::numeric_limits<double>::infinity();
    }
    for (Index l = 0; l < ml; ++l) {
      lb(k * (mc + ml) + mc + l) = glo(l);
      ub(k * (mc + ml) + mc + l) = ghi(l);
    }
  }
  auto project = [&](const RealVector& z) { return z.cwiseMax(lb).cwiseMin(ub).eval(); };

  OptimizeResult res;
  res.sequence = init;
  RealVector z = project(packing.pack(init));
  packing.unpack(z, res.sequence);

  GradientOptions gopt;
  gopt.step = options.step;
  auto evaluate = [&](const RealVector& at, bool with_gradient, RealVector* grad) {
    ControlSequence trial = res.sequence;
    packing.unpack(at, trial);
    ++res.evaluations;
    if (with_gradient) {
      GradientResult g = gradient(problem, trial, gopt);
      *grad = packing.flatten(g.grad);
      return g.error_squared;
    }
    const double d = error(problem, trial);
    return d * d;
  };
  auto check_finite = [](double f) {
    if (!std::isfinite(f)) {
      throw NumericalError("optimize: error became non-finite");
    }
  };

  RealVector g;
  double f = evaluate(z, true, &g);
  check_finite(f);
  res.error_history.push_back(std::sqrt(f));

  std::deque<std::pair<RealVector, RealVector>> memory;
  const double tiny = 1e-14;
  res.reason = StopReason::max_iters;
  for (int it = 0;; ++it) {
    if (std::sqrt(f) <= options.tol) {
      res.reason = StopReason::tolerance;
      break;
    }
    if (it >= options.max_iters) {
      res.reason = StopReason::max_iters;
      break;
    }
    if (options.max_evaluations > 0 && res.evaluations >= options.max_evaluations) {
      res.reason = StopReason::max_evaluations;
      break;
    }
    // Variables pinned at a bound with the gradient pushing outwards.
    std::vector<bool> active(static_cast<std::size_t>(nvar), false);
    RealVector pg = g;
    for (Index i = 0; i < nvar; ++i) {
      const bool at_lo = z(i) <= lb(i) + tiny * (1.0 + std::abs(lb(i))) && g(i) > 0.0;
      const bool at_hi = z(i) >= ub(i) - tiny * (1.0 + std::abs(ub(i))) && g(i) < 0.0;
      if (at_lo || at_hi || lb(i) == ub(i)) {
        active[static_cast<std::size_t>(i)] = true;
        pg(i) = 0.0;
      }
    }
    if (pg.cwiseAbs().maxCoeff() < options.gradient_tol) {
      res.reason = StopReason::stationary;
      break;
    }

    // Two-loop recursion on the free subspace.
    RealVector q = pg;
    std::vector<double> alpha(memory.size());
    for (std::size_t i = memory.size(); i-- > 0;) {
      const auto& [s, y] = memory[i];
      alpha[i] = s.dot(q) / y.dot(s);
      q -= alpha[i] * y;
    }
    if (!memory.empty()) {
      const auto& [s, y] = memory.back();
      q *= s.dot(y) / y.dot(y);
    }
    for (std::size_t i = 0; i < memory.size(); ++i) {
      const auto& [s, y] = memory[i];
      const double beta = y.dot(q) / y.dot(s);
      q += (alpha[i] - beta) * s;
    }
    RealVector d = -q;
    for (Index i = 0; i < nvar; ++i) {
      if (active[static_cast<std::size_t>(i)]) {
        d(i) = 0.0;
      }
    }
    double step = 1.0;
    if (memory.empty() || d.dot(pg) >= 0.0) {
      memory.clear();
      d = -pg;
      step = std::min(1.0, 1.0 / pg.cwiseAbs().maxCoeff());
    }

    bool accepted = false;
    RealVector z_new;
    double f_new = f;
    for (int ls = 0; ls < 40; ++ls) {
      z_new = project(z + step * d);
      const double decrease = g.dot(z_new - z);
      if ((z_new - z).cwiseAbs().maxCoeff() == 0.0) {
        break;
      }
      f_new = evaluate(z_new, false, nullptr);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * decrease && f_new < f) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!memory.empty()) {
        // Retry once from steepest descent before giving up.
        memory.clear();
        continue;
      }
      res.reason = StopReason::stalled;
      break;
    }

    RealVector g_new;
    f_new = evaluate(z_new, true, &g_new);
    check_finite(f_new);
    RealVector s = z_new - z;
    RealVector y = g_new - g;
    if (s.dot(y) > 1e-12 * s.norm() * y.norm()) {
      memory.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(memory.size()) > options.memory) {
        memory.pop_front();
      }
    }
    z = std::move(z_new);
    g = std::move(g_new);
    f = f_new;
    res.iterations = it + 1;
    res.error_history.push_back(std::sqrt(f));
  }
  packing.unpack(z, res.sequence);
  res.error = std::sqrt(f);
  return res;
}

ControlSequence random_sequence(const TransferProblem& problem, std::uint64_t seed,
                                const InitSpec& init) {
  if (init.style == InitStyle::noise_blocks && init.blocks < 1) {
    throw ArgumentError("random_sequence: noise_blocks needs at least one block");
  }
  const Index m_slices = problem.slices;
  const Index mc = problem.system.control_count();
  const Index ml = problem.system.noise_count();
  ControlSequence seq;
  seq.dt = problem.dt();
  seq.u.resize(m_slices, mc);
  seq.gamma.resize(m_slices, ml);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Index k = 0; k < m_slices; ++k) {
    for (Index j = 0; j < mc; ++j) {
      seq.u(k, j) = init.u_scale * (2.0 * unit(rng) - 1.0);
    }
  }
  const auto& noises = problem.system.noises();
  const Index parts = 2 * static_cast<Index>(init.blocks);
  for (Index k = 0; k < m_slices; ++k) {
    for (Index l = 0; l < ml; ++l) {
      const auto& nz = noises[static_cast<std::size_t>(l)];
      double g = nz.gamma_max;
      if (nz.switchable) {
        if (init.style == InitStyle::uniform_random) {
          g = nz.gamma_max * unit(rng);
        } else {
          const Index part = (k * parts) / m_slices;
          g = part % 2 == 0 ? nz.gamma_max : 0.0;
        }
      }
      seq.gamma(k, l) = g;
    }
  }
  return seq;
}

RestartResult optimize_restarts(const TransferProblem& problem, int restarts, std::uint64_t seed,
                                const InitSpec& init, const OptimizeOptions& options) {
  if (restarts < 1) {
    throw ArgumentError("optimize_restarts: restarts must be at least 1");
  }
  RestartResult out;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(r);
    OptimizeOptions opt = options;
    opt.seed = s;
    OptimizeResult run = optimize(problem, random_sequence(problem, s, init), opt);
    out.final_errors.push_back(run.error);
    out.seeds.push_back(s);
    if (!have || run.error < out.best.error) {
      out.best = std::move(run);
      have = true;
    }
  }
  return out;
}

}  // namespace noisectl
