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

#include "noisectl/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "noisectl/errors.hpp"

namespace noisectl::cli {

using nlohmann::json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

RealVector descending_eigenvalues(const Matrix& rho) {
  const Matrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

void trajectory_header(std::ostringstream& os, Index n) {
  os << "time";
  for (Index i = 1; i <= n; ++i) {
    os << ",lambda_" << i;
  }
  os << ",delta_F\n";
}

void trajectory_row(std::ostringstream& os, double t, const Matrix& rho, const Matrix& target) {
  os << format_number(t);
  const RealVector ev = descending_eigenvalues(rho);
  for (Index i = 0; i < ev.size(); ++i) {
    os << ',' << format_number(ev(i));
  }
  os << ',' << format_number((rho - target).norm()) << '\n';
}

}  // namespace

std::string trajectory_csv(const std::vector<double>& times, const std::vector<Matrix>& states,
                           const Matrix& target) {
  std::ostringstream os;
  trajectory_header(os, target.rows());
  for (std::size_t i = 0; i < states.size(); ++i) {
    trajectory_row(os, times[i], states[i], target);
  }
  return os.str();
}

std::string trajectory_csv(const Trajectory& tr, const Matrix& target) {
  std::ostringstream os;
  trajectory_header(os, target.rows());
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    trajectory_row(os, tr.times[i], unvec(tr.states[i]), target);
  }
  return os.str();
}

namespace {

void amplitude_header(std::ostringstream& os, const ControlSystem& system) {
  for (const auto& c : system.controls()) {
    os << ",u_" << c.label;
  }
  for (const auto& v : system.noises()) {
    os << ",gamma_" << v.op.label;
  }
}

}  // namespace

std::string sequence_csv(const ControlSequence& seq, const ControlSystem& system) {
  std::ostringstream os;
  os << "slice,t_start";
  amplitude_header(os, system);
  os << '\n';
  for (Index k = 0; k < seq.slices(); ++k) {
    os << k << ',' << format_number(seq.dt * static_cast<double>(k));
    for (Index j = 0; j < seq.u.cols(); ++j) {
      os << ',' << format_number(seq.u(k, j));
    }
    for (Index l = 0; l < seq.gamma.cols(); ++l) {
      os << ',' << format_number(seq.gamma(k, l));
    }
    os << '\n';
  }
  return os.str();
}

std::string schedule_csv(const Schedule& schedule, const ControlSystem& system) {
  std::ostringstream os;
  os << "index,kind,label,t_start,duration";
  amplitude_header(os, system);
  os << '\n';
  const std::size_t width = static_cast<std::size_t>(system.control_count() + system.noise_count());
  double t = 0.0;
  std::size_t index = 0;
  for (const auto& entry : schedule.entries()) {
    if (const auto* ev = std::get_if<UnitaryEvent>(&entry)) {
      os << index << ",unitary," << ev->label << ',' << format_number(t) << ','
         << format_number(ev->charged_duration) << std::string(width, ',') << '\n';
      t += ev->charged_duration;
    } else {
      const auto& seg = std::get<EvolutionSegment>(entry);
      os << index << ",evolve,," << format_number(t) << ',' << format_number(seg.duration);
      for (Index j = 0; j < seg.u.size(); ++j) {
        os << ',' << format_number(seg.u(j));
      }
      for (Index l = 0; l < seg.gamma.size(); ++l) {
        os << ',' << format_number(seg.gamma(l));
      }
      os << '\n';
      t += seg.duration;
    }
    ++index;
  }
  return os.str();
}

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"re", re}, {"im", im}};
}

Matrix matrix_from_json(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto rows = static_cast<Index>(re.size());
  const auto cols = rows == 0 ? Index{0} : static_cast<Index>(re.at(0).size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uk = static_cast<std::size_t>(k);
      m(i, k) = Complex(re.at(ui).at(uk).get<double>(), im.at(ui).at(uk).get<double>());
    }
  }
  return m;
}

namespace {

json vector_json(const RealVector& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

RealVector vector_from(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size()));
}

// JSON has no infinity; infinite exact taus are written as null.
json maybe_infinite(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_maybe_infinite(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

json plan_to_json(const HlpPlan& plan) {
  json pairs = json::array();
  json lambdas = json::array();
  json taus = json::array();
  json exact = json::array();
  json swapped = json::array();
  json perms = json::array();
  for (const auto& s : plan.steps) {
    pairs.push_back({s.j, s.k});
    lambdas.push_back(s.lambda);
    taus.push_back(s.tau);
    exact.push_back(maybe_infinite(s.exact_tau));
    swapped.push_back(s.swapped);
    perms.push_back(s.pre_permutation);
  }
  json spectra = json::array();
  for (const auto& s : plan.exact_spectra) {
    spectra.push_back(vector_json(s));
  }
  return json{{"gamma_star", plan.gamma_star},
              {"initial_spectrum", vector_json(plan.initial_spectrum)},
              {"target_spectrum", vector_json(plan.target_spectrum)},
              {"pairs", pairs},
              {"lambdas", lambdas},
              {"taus", taus},
              {"exact_taus", exact},
              {"swapped", swapped},
              {"permutations", perms},
              {"tau_cap", plan.tau_cap},
              {"total_dissipative_time", plan.total_dissipative_time},
              {"predicted_spectrum", vector_json(plan.predicted_spectrum)},
              {"predicted_residual", plan.predicted_residual},
              {"exact_spectra", spectra},
              {"u_y", matrix_to_json(plan.u_y)},
              {"u_x", matrix_to_json(plan.u_x)}};
}

HlpPlan plan_from_json(const json& j) {
  try {
    HlpPlan plan;
    plan.gamma_star = j.at("gamma_star").get<double>();
    plan.initial_spectrum = vector_from(j.at("initial_spectrum"));
    plan.target_spectrum = vector_from(j.at("target_spectrum"));
    const auto& pairs = j.at("pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      HlpStep s;
      s.j = pairs.at(i).at(0).get<Index>();
      s.k = pairs.at(i).at(1).get<Index>();
      s.lambda = j.at("lambdas").at(i).get<double>();
      s.tau = j.at("taus").at(i).get<double>();
      s.exact_tau = read_maybe_infinite(j.at("exact_taus").at(i));
      s.swapped = j.at("swapped").at(i).get<bool>();
      s.pre_permutation = j.at("permutations").at(i).get<std::vector<Index>>();
      plan.steps.push_back(std::move(s));
    }
    plan.tau_cap = j.at("tau_cap").get<double>();
    plan.total_dissipative_time = j.at("total_dissipative_time").get<double>();
    plan.predicted_spectrum = vector_from(j.at("predicted_spectrum"));
    plan.predicted_residual = j.at("predicted_residual").get<double>();
    for (const auto& s : j.at("exact_spectra")) {
      plan.exact_spectra.push_back(vector_from(s));
    }
    plan.u_y = matrix_from_json(j.at("u_y"));
    plan.u_x = matrix_from_json(j.at("u_x"));
    return plan;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed HLP plan: ") + e.what());
  }
}

}  // namespace noisectl::cli
