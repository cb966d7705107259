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

// noisectl: config-driven runner for open-system control experiments.
//
//   noisectl <mode> --config run.json [--out DIR] [--seed N]
//   noisectl validate --config run.json

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "noisectl/cli/config.hpp"
#include "noisectl/cli/runner.hpp"
#include "noisectl/errors.hpp"

namespace cli = noisectl::cli;

int main(int argc, char** argv) {
  CLI::App app{"Optimal control of open qubit systems with switchable noise"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON experiment config")->required();
  auto* out_opt = app.add_option("--out", out_dir, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Seed override");

  const char* modes[] = {"simulate", "optimize", "hlp", "protocol", "controllability",
                         "majorize"};
  for (const char* m : modes) {
    app.add_subcommand(m, std::string("Run in ") + m + " mode");
  }
  app.add_subcommand("validate", "Check a config without running it");
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfig;
  }

  cli::ExperimentConfig config;
  try {
    config = cli::load_config(config_path);
  } catch (const noisectl::ConfigurationError& e) {
    std::cerr << e.what() << '\n';
    return cli::kExitConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "validate") {
    const auto diags = cli::validate(config);
    for (const auto& d : diags) {
      std::cerr << d.str(config.source_name) << '\n';
    }
    if (diags.empty()) {
      std::cout << "ok\n";
    }
    return diags.empty() ? cli::kExitOk : cli::kExitConfig;
  }

  cli::RunOverrides overrides;
  if (*out_opt) {
    overrides.out_dir = out_dir;
  }
  if (*seed_opt) {
    overrides.seed = seed;
  }
  return cli::run(config, *cli::parse_mode(name), overrides, std::cout, std::cerr);
}
