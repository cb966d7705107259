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

#include "noisectl/cli/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "noisectl/cli/output.hpp"
#include "noisectl/errors.hpp"
#include "noisectl/hlp.hpp"
#include "noisectl/lie_closure.hpp"
#include "noisectl/majorization.hpp"
#include "noisectl/protocols.hpp"

namespace noisectl::cli {

using nlohmann::json;

namespace {

json labels(const ControlSystem& system) {
  json c = json::array();
  json n = json::array();
  for (const auto& x : system.controls()) {
    c.push_back(x.label);
  }
  for (const auto& x : system.noises()) {
    n.push_back(x.op.label);
  }
  return json{{"controls", c}, {"noises", n}};
}

json vector_json(const RealVector& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

TransferProblem make_problem(const json& doc) {
  ControlSystem system = build_system(doc.at("system"));
  const int q = system.qubits();
  DensityOperator rho0 = build_state(doc.at("initial"), q);
  DensityOperator target = build_state(doc.at("target"), q);
  return TransferProblem(std::move(system), std::move(rho0), std::move(target),
                         doc.at("T").get<double>(), doc.at("M").get<Index>());
}

Artifacts run_simulate(const json& doc, std::uint64_t seed) {
  const TransferProblem problem = make_problem(doc);
  const ControlSequence seq =
      build_sequence(doc.value("sequence", json::object()), problem, seed);
  const Trajectory tr = propagate(problem, seq);
  Artifacts a;
  const double d = (unvec(tr.states.back()) - problem.target.matrix()).norm();
  a.result = json{{"mode", "simulate"},
                  {"seed", seed},
                  {"final_delta_F", d},
                  {"T", problem.total_time},
                  {"M", problem.slices},
                  {"dt", problem.dt()},
                  {"labels", labels(problem.system)}};
  a.trajectory_csv = trajectory_csv(tr, problem.target.matrix());
  a.sequence_csv = sequence_csv(seq, problem.system);
  return a;
}

Artifacts run_optimize(const json& doc, std::uint64_t seed) {
  const TransferProblem problem = make_problem(doc);
  const json opt = doc.value("optimizer", json::object());
  const OptimizeOptions options = build_optimize_options(opt);
  OptimizeResult best;
  json restarts = json::array();
  if (doc.contains("sequence")) {
    best = optimize(problem, build_sequence(doc.at("sequence"), problem, seed), options);
    restarts.push_back(json{{"seed", seed}, {"final_delta_F", best.error}});
  } else {
    RestartResult rr = optimize_restarts(problem, opt.value("restarts", 9), seed,
                                         build_init_spec(opt), options);
    for (std::size_t i = 0; i < rr.final_errors.size(); ++i) {
      restarts.push_back(json{{"seed", rr.seeds[i]}, {"final_delta_F", rr.final_errors[i]}});
    }
    best = std::move(rr.best);
  }
  const Trajectory tr = propagate(problem, best.sequence);
  Artifacts a;
  a.result = json{{"mode", "optimize"},
                  {"seed", seed},
                  {"final_delta_F", best.error},
                  {"T", problem.total_time},
                  {"M", problem.slices},
                  {"dt", problem.dt()},
                  {"iterations", best.iterations},
                  {"evaluations", best.evaluations},
                  {"stop_reason", to_string(best.reason)},
                  {"error_history", best.error_history},
                  {"restarts", restarts},
                  {"labels", labels(problem.system)}};
  a.trajectory_csv = trajectory_csv(tr, problem.target.matrix());
  a.sequence_csv = sequence_csv(best.sequence, problem.system);
  return a;
}

Artifacts run_hlp(const json& doc, std::uint64_t seed) {
  const ControlSystem system = build_system(doc.at("system"));
  const int q = system.qubits();
  const DensityOperator rho0 = build_state(doc.at("initial"), q);
  const DensityOperator target = build_state(doc.at("target"), q);
  const json h = doc.value("hlp", json::object());
  const double gamma = system.noises().front().gamma_max;
  const HlpPlan plan = hlp_plan(rho0, target, gamma, h.value("residual_target", 1e-4));
  Artifacts a;
  a.result = json{{"mode", "hlp"},
                  {"seed", seed},
                  {"total_dissipative_time", plan.total_dissipative_time},
                  {"predicted_residual", plan.predicted_residual},
                  {"step_count", plan.steps.size()},
                  {"plan", plan_to_json(plan)}};
  if (h.value("execute", true)) {
    HlpExecuteOptions eo;
    eo.trotter_steps = h.value("trotter_steps", 64);
    eo.permutation_duration = h.value("permutation_duration", 0.0);
    eo.symmetric = h.value("symmetric", true);
    const Schedule schedule = hlp_execute(plan, system, eo);
    const ScheduleRun run = propagate_schedule(system, rho0, schedule, true);
    a.result["executed_delta_F"] = (run.final_state - target.matrix()).norm();
    a.result["duration"] = json{{"total", schedule.total_duration()},
                                {"evolution", schedule.evolution_time()},
                                {"charged", schedule.charged_time()}};
    a.result["trotter_steps"] = eo.trotter_steps;
    a.trajectory_csv = trajectory_csv(run.times, run.states, target.matrix());
    a.sequence_csv = schedule_csv(schedule, system);
  }
  return a;
}

Artifacts run_protocol(const json& doc, std::uint64_t seed) {
  const json& p = doc.at("protocol");
  const std::string name = p.at("name").get<std::string>();
  const int n = p.at("n").get<int>();
  const double gamma = p.at("gamma_star").get<double>();
  const double coupling = p.value("J", 1.0);
  const bool ideal = p.value("ideal_swaps", false);
  const auto report =
      name == "init"
          ? init_protocol(n, gamma, coupling, p.at("noise_time").get<double>(), ideal)
          : name == "erase_amp"
                ? erase_protocol_amp(n, gamma, coupling, ideal)
                : erase_protocol_bitflip(n, gamma, coupling, p.at("noise_time").get<double>(),
                                         ideal);
  const ScheduleRun run =
      propagate_schedule(report.system, report.initial, report.schedule, true);
  Artifacts a;
  a.result = json{{"mode", "protocol"},
                  {"seed", seed},
                  {"name", name},
                  {"formula", to_string(report.formula)},
                  {"predicted_error", report.predicted_error},
                  {"simulated_delta_F", (run.final_state - report.target.matrix()).norm()},
                  {"duration", report.predicted_duration},
                  {"swap_time", report.swap_time},
                  {"noise_time", report.noise_time}};
  if (name == "init") {
    // Error-target view of the same run.
    a.result["first_order_time_bound"] =
        report.predicted_error > 0.0 && report.predicted_error < 1.0
            ? json(init_time_bound(n, gamma, coupling, report.predicted_error))
            : json(nullptr);
  }
  a.trajectory_csv = trajectory_csv(run.times, run.states, report.target.matrix());
  a.sequence_csv = schedule_csv(report.schedule, report.system);
  return a;
}

Artifacts run_controllability(const json& doc, std::uint64_t seed) {
  const ControlSystem system = build_system(doc.at("system"));
  std::vector<HermitianOperator> gens{system.drift()};
  for (const auto& c : system.controls()) {
    gens.push_back(c.op);
  }
  const int dim = lie_closure_dimension(gens);
  const Index n = system.dim();
  Artifacts a;
  a.result = json{{"mode", "controllability"},
                  {"seed", seed},
                  {"lie_dimension", dim},
                  {"full_dimension", n * n - 1},
                  {"fully_controllable", dim == n * n - 1}};
  return a;
}

Artifacts run_majorize(const json& doc, std::uint64_t seed) {
  const json& m = doc.at("majorize");
  const auto xs = m.at("x").get<std::vector<double>>();
  const auto ys = m.at("y").get<std::vector<double>>();
  const RealVector x = Eigen::Map<const RealVector>(xs.data(), static_cast<Index>(xs.size()));
  const RealVector y = Eigen::Map<const RealVector>(ys.data(), static_cast<Index>(ys.size()));
  const double tol = m.value("tol", 1e-10);
  RealVector px = sorted_descending(x);
  RealVector py = sorted_descending(y);
  for (Index i = 1; i < px.size(); ++i) {
    px(i) += px(i - 1);
    py(i) += py(i - 1);
  }
  Artifacts a;
  a.result = json{{"mode", "majorize"},
                  {"seed", seed},
                  {"x_majorised_by_y", is_majorised_by(x, y, tol)},
                  {"y_majorised_by_x", is_majorised_by(y, x, tol)},
                  {"partial_sums_x", vector_json(px)},
                  {"partial_sums_y", vector_json(py)}};
  return a;
}

}  // namespace

Artifacts execute(const ExperimentConfig& config, Mode mode, std::uint64_t seed) {
  const json& doc = config.doc;
  switch (mode) {
    case Mode::simulate:
      return run_simulate(doc, seed);
    case Mode::optimize:
      return run_optimize(doc, seed);
    case Mode::hlp:
      return run_hlp(doc, seed);
    case Mode::protocol:
      return run_protocol(doc, seed);
    case Mode::controllability:
      return run_controllability(doc, seed);
    case Mode::majorize:
      return run_majorize(doc, seed);
  }
  throw ConfigurationError("unknown mode");
}

void write_artifacts(const Artifacts& artifacts, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) {
      throw ConfigurationError("cannot write " + path.string());
    }
  };
  write("result.json", artifacts.result.dump(2) + "\n");
  if (!artifacts.trajectory_csv.empty()) {
    write("trajectory.csv", artifacts.trajectory_csv);
  }
  if (!artifacts.sequence_csv.empty()) {
    write("sequence.csv", artifacts.sequence_csv);
  }
}

int run(const ExperimentConfig& config, Mode mode, const RunOverrides& overrides,
        std::ostream& out, std::ostream& err) {
  const auto diags = validate(config, mode);
  if (!diags.empty()) {
    for (const auto& d : diags) {
      err << d.str(config.source_name) << '\n';
    }
    return kExitConfig;
  }
  const std::uint64_t seed =
      overrides.seed.value_or(config.doc.value("seed", std::uint64_t{0}));
  const std::string dir =
      overrides.out_dir.value_or(config.doc.value("output_dir", std::string("out")));
  try {
    const Artifacts artifacts = execute(config, mode, seed);
    write_artifacts(artifacts, dir);
    out << to_string(mode) << ": wrote " << dir << "/result.json\n";
    return kExitOk;
  } catch (const ReachabilityError& e) {
    err << "reachability error: " << e.what() << '\n';
    return kExitReachability;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ArgumentError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

}  // namespace noisectl::cli
