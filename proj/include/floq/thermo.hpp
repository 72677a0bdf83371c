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

// Thermodynamic ledger.  Sign convention, fixed across the artifact:
// J^j > 0 means energy flows from bath j INTO the system.  The averaged
// power is P = -sum_j J^j; P > 0 means the drive performs net work that
// leaves through the baths, P < 0 means the system operates as an engine.
// Second law: sum_j J^j / T_j <= 0 (steady), sigma(t) = dS/dt - sum J/T >= 0
// (transient, via Spohn's inequality).  All ledger quantities are evaluated
// in the interaction picture where they are time-independent at steady
// state; the transient ledger applies the same formulas to rho_I(t), which
// equals the frame-rotated Schroedinger expressions.

#ifndef FLOQ_THERMO_HPP
#define FLOQ_THERMO_HPP

#include <map>
#include <string>
#include <vector>

#include "floq/dynamics.hpp"
#include "floq/generator.hpp"

namespace floq {

struct ChannelCurrent {
  std::string bath;
  int q = 0;
  double omega = 0.0;
  double nu = 0.0;      // omega + q Omega
  double current = 0.0;  // (nu/omega) Tr[(L_ch rho) Hbar]
};

struct ThermoReport {
  std::vector<ChannelCurrent> per_channel;   // ledger order: bath, q, omega
  std::map<std::string, double> per_bath;    // J^j
  double total_heat = 0.0;                   // sum_j J^j
  double power = 0.0;                        // -total_heat
  double entropy = 0.0;                      // S = -Tr rho ln rho
  double entropy_rate = 0.0;                 // dS/dt = -Tr[(L rho) ln rho]
  double entropy_production = 0.0;           // sigma = dS/dt - sum J/T
  double second_law_margin = 0.0;            // sum_j J^j / T_j  (<= 0 ok)
  double first_law_residual = 0.0;           // |sum_ch Tr[(L_ch rho) Hbar]|
  bool second_law_ok = false;
  bool first_law_ok = false;
  bool regularized = false;  // epsilon-mixing was applied before ln rho
};

// Local heat current of one channel, (nu/omega) Tr[(L_ch rho) Hbar].
// Channels with omega = 0 carry no heat and are rejected here.
double local_current(const ChannelGenerator& ch, const DensityMatrix& rho,
                     const HermitianOperator& hbar);

// Equivalent form -T_j Tr[(L_ch rho) ln rho_ch] through the channel's own
// Gibbs-like state; agrees with local_current up to trace-annihilation
// roundoff.
double local_current_dual(const ChannelGenerator& ch, const DensityMatrix& rho);

// J^j = sum of the local currents of bath j's channels (omega = 0 dephasing
// channels excluded: they exchange no energy).
std::map<std::string, double> bath_currents(const GeneratorBundle& bundle,
                                            const DensityMatrix& rho);

// Spohn entropy production sigma = dS/dt - sum_j J^j/T_j >= 0 evaluated at
// rho.  Rank-deficient states are regularized by epsilon-mixing with the
// maximally mixed state (epsilon = 1e-12); `regularized`, when non-null,
// reports whether that happened.
double entropy_production(const GeneratorBundle& bundle,
                          const DensityMatrix& rho,
                          bool* regularized = nullptr);

// Full ledger at a state (steady or transient, interaction picture).
ThermoReport make_report(const GeneratorBundle& bundle,
                         const DensityMatrix& rho);

// Ledger at the steady state: verifies stationarity first, flags the laws.
ThermoReport steady_report(const GeneratorBundle& bundle,
                           const DensityMatrix& rho_ss);

// Serialization used by the CLI (deterministic field order and float
// formatting).
std::string report_to_json(const ThermoReport& report);
std::string report_to_csv(const ThermoReport& report);

}  // namespace floq

#endif  // FLOQ_THERMO_HPP
