// Copyright 2026 The floq authors
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

// CLI entry point: run / validate / pq subcommands over scenario configs.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "floq/errors.hpp"
#include "floq/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Floquet-Markov master equations with a thermodynamic ledger"};
  app.require_subcommand(1);

  std::string config_path, out_dir, mode;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "execute a scenario");
  run->add_option("config", config_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory override");
  run->add_option("--mode", mode, "mode override: evolve|steady|sweep")
      ->check(CLI::IsMember({"evolve", "steady", "sweep"}));
  run->add_flag("--quiet", quiet, "suppress non-error output");

  CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("config", config_path, "scenario JSON file")
      ->required();

  CLI::App* pq_cmd =
      app.add_subcommand("pq", "print the P(q) table of a qubit scenario");
  pq_cmd->add_option("config", config_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      floq::ScenarioConfig cfg = floq::parse_config(config_path);
      std::cout << "OK: " << config_path << " (" << cfg.system_type
                << " system, " << cfg.baths.size() << " bath"
                << (cfg.baths.size() == 1 ? "" : "s") << ", mode "
                << cfg.run.mode << ")\n";
      return 0;
    }
    if (pq_cmd->parsed()) {
      floq::ScenarioConfig cfg = floq::parse_config(config_path);
      std::cout << floq::pq_table_csv(cfg);
      return 0;
    }
    floq::ScenarioConfig cfg = floq::parse_config(config_path);
    floq::RunOutcome outcome = floq::run_scenario(cfg, out_dir, mode);
    if (!quiet)
      for (const auto& f : outcome.written_files)
        std::cout << "wrote " << f << "\n";
    for (const auto& m : outcome.messages) std::cerr << "law check: " << m
                                                     << "\n";
    return outcome.exit_code;
  } catch (const floq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const floq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
