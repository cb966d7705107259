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

#include "noisectl/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>

#include "noisectl/errors.hpp"
#include "noisectl/models.hpp"

namespace noisectl::cli {

using nlohmann::json;

const char* to_string(Mode m) {
  switch (m) {
    case Mode::simulate:
      return "simulate";
    case Mode::optimize:
      return "optimize";
    case Mode::hlp:
      return "hlp";
    case Mode::protocol:
      return "protocol";
    case Mode::controllability:
      return "controllability";
    case Mode::majorize:
      return "majorize";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& s) {
  for (Mode m : {Mode::simulate, Mode::optimize, Mode::hlp, Mode::protocol, Mode::controllability,
                 Mode::majorize}) {
    if (s == to_string(m)) {
      return m;
    }
  }
  return std::nullopt;
}

std::string Diagnostic::str(const std::string& source_name) const {
  std::ostringstream os;
  os << source_name << ":" << line << ": " << (path.empty() ? "/" : path) << ": " << message;
  return os.str();
}

int ExperimentConfig::line_of(const std::string& pointer) const {
  std::string p = pointer;
  while (true) {
    auto it = lines.find(p);
    if (it != lines.end()) {
      return it->second;
    }
    const auto cut = p.rfind('/');
    if (cut == std::string::npos) {
      return 0;
    }
    p = p.substr(0, cut);
  }
}

namespace {

std::string escape_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::map<std::string, int> locate_lines(const std::string& text) {
  struct Frame {
    bool object;
    std::string ptr;
    std::string key;
    long index = 0;
    bool expect_key = true;
  };
  std::map<std::string, int> lines;
  std::vector<Frame> stack;
  int line = 1;
  auto value_start = [&]() {
    std::string ptr;
    if (!stack.empty()) {
      const Frame& top = stack.back();
      ptr = top.ptr + "/" + (top.object ? escape_token(top.key) : std::to_string(top.index));
    }
    lines.emplace(ptr, line);
    return ptr;
  };
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
    } else if (c == '"') {
      std::string s;
      for (++i; i < n && text[i] != '"'; ++i) {
        if (text[i] == '\\' && i + 1 < n) {
          s += text[++i];
        } else {
          s += text[i];
        }
      }
      if (!stack.empty() && stack.back().object && stack.back().expect_key) {
        stack.back().key = s;
        stack.back().expect_key = false;
        lines.emplace(stack.back().ptr + "/" + escape_token(s), line);
      } else {
        value_start();
      }
    } else if (c == '{' || c == '[') {
      const std::string ptr = value_start();
      stack.push_back(Frame{c == '{', ptr, {}, 0, true});
    } else if (c == '}' || c == ']') {
      if (!stack.empty()) {
        stack.pop_back();
      }
    } else if (c == ',') {
      if (!stack.empty()) {
        if (stack.back().object) {
          stack.back().expect_key = true;
        } else {
          ++stack.back().index;
        }
      }
    } else if (c != ':' && c != ' ' && c != '\t' && c != '\r') {
      value_start();
      while (i + 1 < n && std::string_view("{}[],:\" \t\r\n").find(text[i + 1]) ==
                              std::string_view::npos) {
        ++i;
      }
    }
  }
  return lines;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source_name) {
  ExperimentConfig cfg;
  cfg.source_name = source_name;
  try {
    cfg.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      line += text[i] == '\n' ? 1 : 0;
    }
    throw ConfigurationError(source_name + ":" + std::to_string(line) + ": invalid JSON: " +
                             e.what());
  }
  if (!cfg.doc.is_object()) {
    throw ConfigurationError(source_name + ":1: configuration must be a JSON object");
  }
  cfg.lines = locate_lines(text);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigurationError("cannot read config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

namespace {

class Checker {
 public:
  explicit Checker(const ExperimentConfig& cfg) : cfg_(cfg) {}

  void fail(const std::string& path, const std::string& message) {
    diags_.push_back(Diagnostic{path, cfg_.line_of(path), message});
  }

  // Object member `key` of `obj` at `path`; records a diagnostic when a
  // required member is missing.
  const json* member(const json& obj, const std::string& path, const std::string& key,
                     bool required) {
    if (obj.is_object() && obj.contains(key)) {
      return &obj.at(key);
    }
    if (required) {
      fail(path, "missing required field '" + key + "'");
    }
    return nullptr;
  }

  std::optional<double> number(const json& obj, const std::string& path, const std::string& key,
                               bool required, double lo, double hi, bool lo_open = false) {
    const json* v = member(obj, path, key, required);
    if (v == nullptr) {
      return std::nullopt;
    }
    const std::string p = path + "/" + key;
    if (!v->is_number()) {
      fail(p, "'" + key + "' must be a number");
      return std::nullopt;
    }
    const double x = v->get<double>();
    if (!std::isfinite(x) || x < lo || x > hi || (lo_open && x == lo)) {
      std::ostringstream os;
      os << "'" << key << "' = " << x << " outside " << (lo_open ? "(" : "[") << lo << ", " << hi
         << "]";
      fail(p, os.str());
      return std::nullopt;
    }
    return x;
  }

  std::optional<long> integer(const json& obj, const std::string& path, const std::string& key,
                              bool required, long lo, long hi) {
    const json* v = member(obj, path, key, required);
    if (v == nullptr) {
      return std::nullopt;
    }
    const std::string p = path + "/" + key;
    if (!v->is_number_integer()) {
      fail(p, "'" + key + "' must be an integer");
      return std::nullopt;
    }
    const long x = v->get<long>();
    if (x < lo || x > hi) {
      fail(p, "'" + key + "' = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
      return std::nullopt;
    }
    return x;
  }

  std::optional<std::string> choice(const json& obj, const std::string& path,
                                    const std::string& key, bool required,
                                    const std::vector<std::string>& allowed) {
    const json* v = member(obj, path, key, required);
    if (v == nullptr) {
      return std::nullopt;
    }
    const std::string p = path + "/" + key;
    if (!v->is_string()) {
      fail(p, "'" + key + "' must be a string");
      return std::nullopt;
    }
    const auto s = v->get<std::string>();
    for (const auto& a : allowed) {
      if (s == a) {
        return s;
      }
    }
    std::string list;
    for (const auto& a : allowed) {
      list += (list.empty() ? "" : ", ") + a;
    }
    fail(p, "unknown " + key + " '" + s + "' (expected one of: " + list + ")");
    return std::nullopt;
  }

  std::optional<bool> boolean(const json& obj, const std::string& path, const std::string& key) {
    const json* v = member(obj, path, key, false);
    if (v == nullptr) {
      return std::nullopt;
    }
    if (!v->is_boolean()) {
      fail(path + "/" + key, "'" + key + "' must be true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  const json* object(const json& obj, const std::string& path, const std::string& key,
                     bool required) {
    const json* v = member(obj, path, key, required);
    if (v != nullptr && !v->is_object()) {
      fail(path + "/" + key, "'" + key + "' must be an object");
      return nullptr;
    }
    return v;
  }

  // Real vector; nullopt (with a diagnostic) unless all entries are finite.
  std::optional<RealVector> vector(const json& v, const std::string& path) {
    if (!v.is_array()) {
      fail(path, "expected an array of numbers");
      return std::nullopt;
    }
    RealVector out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number() || !std::isfinite(v[i].get<double>())) {
        fail(path + "/" + std::to_string(i), "expected a finite number");
        return std::nullopt;
      }
      out(static_cast<Index>(i)) = v[i].get<double>();
    }
    return out;
  }

  std::vector<Diagnostic> take() { return std::move(diags_); }

 private:
  const ExperimentConfig& cfg_;
  std::vector<Diagnostic> diags_;
};

// Qubit count and noise bounds of a validated system, used for cross checks.
struct SystemShape {
  int qubits = 0;
  Index controls = 0;
  std::vector<double> gamma_max;
  bool bitflip_on_last = false;
};

std::optional<SystemShape> check_system(Checker& ck, const json& root) {
  const json* sys = ck.object(root, "", "system", true);
  if (sys == nullptr) {
    return std::nullopt;
  }
  const std::string p = "/system";
  const auto model = ck.choice(*sys, p, "model", true, {"ising_chain", "ion_trap"});
  if (!model) {
    return std::nullopt;
  }
  SystemShape shape;
  const auto gamma = ck.number(*sys, p, "gamma_star", true, 0.0, 1e6, true);
  if (*model == "ion_trap") {
    shape.qubits = 4;
    shape.controls = 8;
    shape.gamma_max = {gamma.value_or(1.0)};
    return gamma ? std::optional(shape) : std::nullopt;
  }
  const auto n = ck.integer(*sys, p, "n", true, 1, 6);
  ck.number(*sys, p, "J", false, 0.0, 1e6, true);
  const auto noise = ck.choice(*sys, p, "noise", true, {"amp", "bitflip", "theta"});
  if (noise && *noise == "theta") {
    ck.number(*sys, p, "theta", true, 0.0, 1.0);
  }
  std::optional<long> site;
  if (n) {
    site = ck.integer(*sys, p, "noisy_site", false, 0, *n);
  }
  ck.number(*sys, p, "dephasing", false, 0.0, 1e6);
  if (!n || !gamma || !noise) {
    return std::nullopt;
  }
  shape.qubits = static_cast<int>(*n);
  shape.controls = 2 * shape.qubits;
  shape.gamma_max = {*gamma};
  const long s = site.value_or(0);
  shape.bitflip_on_last = *noise == "bitflip" && (s == 0 || s == *n);
  return shape;
}

void check_state(Checker& ck, const json& root, const std::string& key, int qubits,
                 bool required) {
  const json* st = ck.member(root, "", key, required);
  if (st == nullptr) {
    return;
  }
  const std::string p = "/" + key;
  if (st->is_string()) {
    const auto s = st->get<std::string>();
    if (s != "thermal" && s != "zero" && s != "ghz") {
      ck.fail(p, "unknown state '" + s + "' (expected thermal, zero, ghz or an object)");
    } else if (s == "ghz" && qubits < 2) {
      ck.fail(p, "ghz needs at least 2 qubits");
    }
    return;
  }
  if (!st->is_object()) {
    ck.fail(p, "state must be a name or an object");
    return;
  }
  const auto kind = ck.choice(*st, p, "kind", true, {"thermal", "zero", "ghz", "random", "spectrum"});
  if (!kind) {
    return;
  }
  if (*kind == "ghz" && qubits > 0 && qubits < 2) {
    ck.fail(p + "/kind", "ghz needs at least 2 qubits");
  }
  if (*kind == "random") {
    ck.integer(*st, p, "seed", true, 0, std::numeric_limits<long>::max());
  }
  if (*kind == "spectrum") {
    const json* sp = ck.member(*st, p, "spectrum", true);
    if (sp == nullptr) {
      return;
    }
    const auto v = ck.vector(*sp, p + "/spectrum");
    if (!v) {
      return;
    }
    if (qubits > 0 && v->size() != (Index{1} << qubits)) {
      ck.fail(p + "/spectrum", "dimension mismatch: spectrum has " + std::to_string(v->size()) +
                                   " entries, system dimension is " +
                                   std::to_string(Index{1} << qubits));
    }
    if (v->size() > 0 && (v->minCoeff() < 0.0 || std::abs(v->sum() - 1.0) > 1e-10)) {
      ck.fail(p + "/spectrum", "spectrum must be non-negative and sum to 1");
    }
  }
}

void check_amplitudes(Checker& ck, const json& seq, const std::string& p, const std::string& key,
                      Index width, long slices, const std::vector<double>* gamma_max,
                      bool constant) {
  const json* v = ck.member(seq, p, key, false);
  if (v == nullptr) {
    return;
  }
  const std::string q = p + "/" + key;
  auto check_row = [&](const json& row, const std::string& rp) {
    const auto r = ck.vector(row, rp);
    if (!r) {
      return;
    }
    if (r->size() != width) {
      ck.fail(rp, "dimension mismatch: " + std::to_string(r->size()) + " amplitudes, system has " +
                      std::to_string(width));
      return;
    }
    if (gamma_max != nullptr) {
      for (Index l = 0; l < width; ++l) {
        const double g = (*r)(l);
        const double hi = (*gamma_max)[static_cast<std::size_t>(l)];
        if (g < 0.0 || g > hi) {
          std::ostringstream os;
          os << "noise amplitude " << g << " outside bound [0, " << hi << "]";
          ck.fail(rp + "/" + std::to_string(l), os.str());
        }
      }
    }
  };
  if (constant) {
    check_row(*v, q);
    return;
  }
  if (!v->is_array() || static_cast<long>(v->size()) != slices) {
    ck.fail(q, "'" + key + "' must be an array of M = " + std::to_string(slices) + " rows");
    return;
  }
  for (std::size_t k = 0; k < v->size(); ++k) {
    check_row((*v)[k], q + "/" + std::to_string(k));
  }
}

void check_sequence(Checker& ck, const json& root, const SystemShape* shape, long slices) {
  const json* seq = ck.object(root, "", "sequence", false);
  if (seq == nullptr) {
    return;
  }
  const std::string p = "/sequence";
  const auto init = ck.choice(*seq, p, "init", false,
                              {"constant", "explicit", "uniform_random", "noise_blocks"});
  ck.integer(*seq, p, "blocks", false, 1, 1000);
  ck.number(*seq, p, "u_scale", false, 0.0, 1e6);
  ck.integer(*seq, p, "seed", false, 0, std::numeric_limits<long>::max());
  if (shape == nullptr) {
    return;
  }
  const bool constant = init.value_or("constant") == "constant";
  const bool explicit_rows = init.value_or("constant") == "explicit";
  if (constant || explicit_rows) {
    check_amplitudes(ck, *seq, p, "u", shape->controls, slices, nullptr, constant);
    check_amplitudes(ck, *seq, p, "gamma", static_cast<Index>(shape->gamma_max.size()), slices,
                     &shape->gamma_max, constant);
    if (explicit_rows && (!seq->contains("u") || !seq->contains("gamma"))) {
      ck.fail(p, "explicit sequences need both 'u' and 'gamma'");
    }
  }
}

void check_optimizer(Checker& ck, const json& root) {
  const json* opt = ck.object(root, "", "optimizer", false);
  if (opt == nullptr) {
    return;
  }
  const std::string p = "/optimizer";
  ck.integer(*opt, p, "restarts", false, 1, 1000);
  ck.integer(*opt, p, "max_iters", false, 0, 1000000);
  ck.number(*opt, p, "tol", false, 0.0, 10.0);
  ck.number(*opt, p, "step", false, 0.0, 1.0);
  ck.integer(*opt, p, "memory", false, 1, 100);
  ck.integer(*opt, p, "max_evaluations", false, 0, 100000000);
  ck.choice(*opt, p, "init", false, {"uniform_random", "noise_blocks"});
  ck.integer(*opt, p, "blocks", false, 1, 1000);
  ck.number(*opt, p, "u_scale", false, 0.0, 1e6);
}

}  // namespace

std::vector<Diagnostic> validate(const ExperimentConfig& config, Mode mode) {
  Checker ck(config);
  const json& root = config.doc;
  if (root.contains("mode")) {
    const auto m = ck.choice(root, "", "mode", false,
                             {"simulate", "optimize", "hlp", "protocol", "controllability",
                              "majorize"});
    if (m && parse_mode(*m) != mode) {
      ck.fail("/mode", "config mode '" + *m + "' does not match requested mode '" +
                           to_string(mode) + "'");
    }
  }
  ck.integer(root, "", "seed", false, 0, std::numeric_limits<long>::max());
  if (root.contains("output_dir") && !root.at("output_dir").is_string()) {
    ck.fail("/output_dir", "'output_dir' must be a string");
  }

  switch (mode) {
    case Mode::simulate:
    case Mode::optimize: {
      const auto shape = check_system(ck, root);
      const int q = shape ? shape->qubits : 0;
      check_state(ck, root, "initial", q, true);
      check_state(ck, root, "target", q, true);
      ck.number(root, "", "T", true, 0.0, 1e6, true);
      const auto m = ck.integer(root, "", "M", true, 1, 100000);
      check_sequence(ck, root, shape ? &*shape : nullptr, m.value_or(0));
      if (mode == Mode::optimize) {
        check_optimizer(ck, root);
      }
      break;
    }
    case Mode::hlp: {
      const auto shape = check_system(ck, root);
      const int q = shape ? shape->qubits : 0;
      check_state(ck, root, "initial", q, true);
      check_state(ck, root, "target", q, true);
      if (const json* h = ck.object(root, "", "hlp", false)) {
        ck.number(*h, "/hlp", "residual_target", false, 0.0, 1.0, true);
        ck.integer(*h, "/hlp", "trotter_steps", false, 1, 100000);
        ck.number(*h, "/hlp", "permutation_duration", false, 0.0, 1e6);
        const auto exec = ck.boolean(*h, "/hlp", "execute");
        ck.boolean(*h, "/hlp", "symmetric");
        if (shape && exec.value_or(true) && !shape->bitflip_on_last) {
          ck.fail("/system/noise",
                  "hlp execution needs bit-flip noise on the last qubit (or set hlp.execute "
                  "to false)");
        }
      }
      else if (shape && !shape->bitflip_on_last) {
        ck.fail("/system/noise", "hlp execution needs bit-flip noise on the last qubit");
      }
      break;
    }
    case Mode::protocol: {
      const json* pr = ck.object(root, "", "protocol", true);
      if (pr != nullptr) {
        const auto name =
            ck.choice(*pr, "/protocol", "name", true, {"init", "erase_amp", "erase_bitflip"});
        ck.integer(*pr, "/protocol", "n", true, 1, 6);
        ck.number(*pr, "/protocol", "gamma_star", true, 0.0, 1e6, true);
        ck.number(*pr, "/protocol", "J", false, 0.0, 1e6, true);
        ck.boolean(*pr, "/protocol", "ideal_swaps");
        if (name && *name != "erase_amp") {
          ck.number(*pr, "/protocol", "noise_time", true, 0.0, 1e6);
        }
      }
      break;
    }
    case Mode::controllability:
      check_system(ck, root);
      break;
    case Mode::majorize: {
      const json* mj = ck.object(root, "", "majorize", true);
      if (mj != nullptr) {
        std::optional<RealVector> x;
        std::optional<RealVector> y;
        if (const json* v = ck.member(*mj, "/majorize", "x", true)) {
          x = ck.vector(*v, "/majorize/x");
        }
        if (const json* v = ck.member(*mj, "/majorize", "y", true)) {
          y = ck.vector(*v, "/majorize/y");
        }
        if (x && y && x->size() != y->size()) {
          ck.fail("/majorize", "dimension mismatch: x has " + std::to_string(x->size()) +
                                   " entries, y has " + std::to_string(y->size()));
        }
      }
      break;
    }
  }
  return ck.take();
}

std::vector<Diagnostic> validate(const ExperimentConfig& config) {
  const auto& doc = config.doc;
  if (!doc.contains("mode") || !doc.at("mode").is_string() ||
      !parse_mode(doc.at("mode").get<std::string>())) {
    return {Diagnostic{"/mode", config.line_of("/mode"),
                       "missing or unknown 'mode' (simulate, optimize, hlp, protocol, "
                       "controllability, majorize)"}};
  }
  return validate(config, *parse_mode(doc.at("mode").get<std::string>()));
}

ControlSystem build_system(const json& system) {
  const double gamma = system.at("gamma_star").get<double>();
  if (system.at("model").get<std::string>() == "ion_trap") {
    return ion_trap_model(gamma);
  }
  const int n = system.at("n").get<int>();
  const std::string noise = system.at("noise").get<std::string>();
  NoiseSpec spec;
  if (noise == "amp") {
    spec.kind = NoiseKind::amplitude_damping;
  } else if (noise == "bitflip") {
    spec.kind = NoiseKind::bit_flip;
  } else {
    spec.kind = NoiseKind::theta;
    spec.theta = system.at("theta").get<double>();
  }
  std::optional<double> dephasing;
  if (system.contains("dephasing")) {
    dephasing = system.at("dephasing").get<double>();
  }
  return ising_chain(n, system.value("J", 1.0), spec, system.value("noisy_site", 0), gamma,
                     dephasing);
}

DensityOperator build_state(const json& state, int qubits) {
  const std::string kind =
      state.is_string() ? state.get<std::string>() : state.at("kind").get<std::string>();
  if (kind == "thermal") {
    return thermal_state(qubits);
  }
  if (kind == "zero") {
    return zero_state(qubits);
  }
  if (kind == "ghz") {
    return ghz_state(qubits);
  }
  if (kind == "random") {
    return random_density(qubits, state.at("seed").get<std::uint64_t>());
  }
  const auto v = state.at("spectrum").get<std::vector<double>>();
  return DensityOperator::diagonal(
      Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size())), 1e-10);
}

ControlSequence build_sequence(const json& sequence, const TransferProblem& problem,
                               std::uint64_t seed) {
  const std::string init = sequence.value("init", std::string("constant"));
  if (init == "uniform_random" || init == "noise_blocks") {
    InitSpec spec;
    spec.style = init == "noise_blocks" ? InitStyle::noise_blocks : InitStyle::uniform_random;
    spec.blocks = sequence.value("blocks", 3);
    spec.u_scale = sequence.value("u_scale", std::numbers::pi);
    return random_sequence(problem, sequence.value("seed", seed), spec);
  }
  const Index m = problem.slices;
  const Index mc = problem.system.control_count();
  const Index ml = problem.system.noise_count();
  ControlSequence seq;
  seq.dt = problem.dt();
  seq.u = RealMatrix::Zero(m, mc);
  seq.gamma = RealMatrix::Zero(m, ml);
  const RealVector lower = problem.system.noise_lower_bounds();
  for (Index k = 0; k < m; ++k) {
    seq.gamma.row(k) = lower.transpose();
  }
  auto fill = [&](const char* key, RealMatrix& target) {
    if (!sequence.contains(key)) {
      return;
    }
    const json& v = sequence.at(key);
    for (Index k = 0; k < m; ++k) {
      const json& row = init == "explicit" ? v.at(static_cast<std::size_t>(k)) : v;
      for (Index j = 0; j < target.cols(); ++j) {
        target(k, j) = row.at(static_cast<std::size_t>(j)).get<double>();
      }
    }
  };
  fill("u", seq.u);
  fill("gamma", seq.gamma);
  return seq;
}

OptimizeOptions build_optimize_options(const json& optimizer) {
  OptimizeOptions o;
  o.max_iters = optimizer.value("max_iters", 300);
  o.tol = optimizer.value("tol", 1e-8);
  o.step = optimizer.value("step", 0.0);
  o.memory = optimizer.value("memory", 10);
  o.max_evaluations = optimizer.value("max_evaluations", 0);
  return o;
}

InitSpec build_init_spec(const json& optimizer) {
  InitSpec spec;
  spec.style = optimizer.value("init", std::string("uniform_random")) == "noise_blocks"
                   ? InitStyle::noise_blocks
                   : InitStyle::uniform_random;
  spec.blocks = optimizer.value("blocks", 3);
  spec.u_scale = optimizer.value("u_scale", std::numbers::pi);
  return spec;
}

}  // namespace noisectl::cli
