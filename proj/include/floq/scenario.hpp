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

// Scenario execution: build the system from a config, solve, and emit
// machine-readable artifacts.  Identical configs produce byte-identical
// outputs (fixed channel ordering, fixed summation order, %.17g floats).

#ifndef FLOQ_SCENARIO_HPP
#define FLOQ_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "floq/config.hpp"
#include "floq/dynamics.hpp"
#include "floq/generator.hpp"
#include "floq/qubit.hpp"
#include "floq/thermo.hpp"

namespace floq {

struct AssembledSystem {
  GeneratorBundle bundle;
  std::optional<Propagator> propagator;
  std::optional<QubitModel> qubit;
};

// Build baths, system, and generator bundle from a validated config.
AssembledSystem assemble_system(const ScenarioConfig& cfg);

DensityMatrix initial_state(const ScenarioConfig& cfg,
                            const AssembledSystem& sys);

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 law-check violation
  std::vector<std::string> messages;
  std::vector<std::string> written_files;
};

// Executes the scenario and writes artifacts into the output directory.
// `out_dir` and `mode` override the config when non-empty.
RunOutcome run_scenario(ScenarioConfig cfg, const std::string& out_dir = "",
                        const std::string& mode = "");

// P(q) table of a qubit config as CSV ("q,P" header, captured-mass footer
// comment).  Generic configs are rejected.
std::string pq_table_csv(const ScenarioConfig& cfg);

}  // namespace floq

#endif  // FLOQ_SCENARIO_HPP
