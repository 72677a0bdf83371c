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

// Scenario configuration: a single JSON format (docs/scenario.schema.json
// documents it).  Parsing fills every default and rejects unknown keys with
// path-qualified messages; serialize(parse(x)) is a fixpoint.

#ifndef FLOQ_CONFIG_HPP
#define FLOQ_CONFIG_HPP

#include <string>
#include <utility>
#include <vector>

#include "floq/linalg.hpp"

namespace floq {

struct ModulationConfig {
  std::string shape = "constant";  // constant|sinusoidal|pulse_train|tabulated
  double omega0 = 1.0;
  double period = 6.283185307179586;
  double amplitude = 0.0;  // sinusoidal
  double phase = 0.0;      // sinusoidal
  std::string samples_file;  // tabulated: two-column CSV (t, omega)
};

struct HamiltonianConfig {
  // constant | piecewise | diagonal_sinusoidal
  std::string kind = "constant";
  double period = 6.283185307179586;
  Matrix matrix;  // constant
  std::vector<std::pair<double, Matrix>> segments;  // piecewise
  // diagonal_sinusoidal: H_jj(t) = base_j + amplitude_j sin(Omega t + phase_j)
  std::vector<double> base, amplitudes, phases;
};

struct CouplingConfig {
  std::string bath;
  Matrix matrix;
};

struct BathConfig {
  std::string label;
  std::string model = "flat";  // flat|ohmic|tabulated
  double temperature = 1.0;
  double gamma0 = 1.0;
  double cutoff = 10.0;                             // ohmic
  std::vector<std::pair<double, double>> grid;      // tabulated (omega, G)
};

struct FloquetConfig {
  int q_truncation = -1;  // -1: shape default (31 pulse trains, 8 otherwise)
  int steps_per_period = 1024;
  int grid_n = 512;
};

struct SweepConfig {
  std::string axis;  // Omega|period|amplitude|T:<label>|gamma0:<label>
  std::vector<double> values;
};

struct RunConfig {
  std::string mode = "steady";  // steady|evolve|sweep
  std::string initial_state = "excited";
  // excited|ground|maximally_mixed|gibbs|matrix
  Matrix initial_matrix;
  double t_end = 10.0;
  double dt = 0.05;
  SweepConfig sweep;
};

struct OutputConfig {
  std::string directory = "out";
  std::vector<std::string> formats = {"json", "csv"};
  std::string energy_unit;  // label only, carried into output headers
};

struct ScenarioConfig {
  std::string system_type = "qubit";  // qubit|generic
  ModulationConfig modulation;        // qubit systems
  int dim = 2;                        // generic systems
  HamiltonianConfig hamiltonian;      // generic systems
  std::vector<CouplingConfig> couplings;
  std::vector<BathConfig> baths;
  FloquetConfig floquet;
  RunConfig run;
  OutputConfig output;
};

// Parse and validate; throws ConfigError with a path-qualified message.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

// Canonical serialization with all defaults materialized.
std::string serialize_config(const ScenarioConfig& cfg);

// Two-column CSV (t, omega); an optional non-numeric header line is skipped.
std::pair<std::vector<double>, std::vector<double>> read_modulation_csv(
    const std::string& path);

}  // namespace floq

#endif  // FLOQ_CONFIG_HPP
