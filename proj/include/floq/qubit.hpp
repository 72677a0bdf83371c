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

// Analytic workbench for the diagonally modulated qubit
// H(t) = omega(t) sigma_z / 2 coupled through sigma_x: harmonic weights
// P(q) = |xi(q)|^2, effective temperatures, averaged rates, T_eff, and the
// channel bundle built in closed form.  Serves both as a user-facing model
// and as the oracle for the generic Floquet path.
//
// Harmonic bookkeeping: the workbench indexes channels so that channel q
// exchanges quanta nu_q = omega0 - q Omega with weight P(q); this is the
// microscopically consistent pairing for xi(q) as defined below (the
// lowering part of U^dag sigma_x U oscillates as xi(q)^* e^{-i nu_q t}).
// Inside the returned GeneratorBundle channels are keyed by the ledger
// convention nu = omega + q_ledger Omega, i.e. q_ledger = -q.  For the
// half-period-symmetric profiles used throughout (constant, sinusoidal,
// pulse train) P(q) = P(-q) and the distinction is invisible.

#ifndef FLOQ_QUBIT_HPP
#define FLOQ_QUBIT_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "floq/bath.hpp"
#include "floq/floquet.hpp"
#include "floq/generator.hpp"

namespace floq {

enum class ModulationShape { constant, sinusoidal, pulse_train, tabulated };

// Periodic frequency profile omega(t) > 0 with mean omega0.  The cumulative
// excess phase  delta(t) = int_0^t (omega(s) - omega0) ds  is exact for
// every shape: closed form for constant/sinusoidal, a square wave of exact
// +-pi jumps for the pulse train (kicks at tau/4 and 3 tau/4), and piecewise
// quadratic prefix sums for tabulated profiles.
class ModulationProfile {
 public:
  // Default state is an empty placeholder; build real profiles through the
  // factories below.
  ModulationProfile() = default;

  static ModulationProfile constant_profile(double omega0, double period);
  static ModulationProfile sinusoidal(double omega0, double period,
                                      double amplitude, double phase = 0.0);
  static ModulationProfile pulse_train(double omega0, double period);
  // Piecewise-linear omega(t) through (times, omegas); times must start at 0
  // and end at the period with omega matching at the ends.  omega0 is the
  // derived mean.
  static ModulationProfile tabulated(std::vector<double> times,
                                     std::vector<double> omegas);

  ModulationShape shape() const { return shape_; }
  double omega0() const { return omega0_; }
  double period() const { return period_; }
  double drive_omega() const;  // Omega = 2 pi / period
  double amplitude() const { return amplitude_; }
  double phase() const { return phase_; }
  const std::vector<double>& sample_times() const { return times_; }
  const std::vector<double>& sample_omegas() const { return omegas_; }

  // Instantaneous omega(t) between kicks (the pulse train's deltas live in
  // phase_excess, not here).
  double omega(double t) const;
  double phase_excess(double t) const;  // delta(t), periodic
  // Quadrature breakpoints of one period (includes 0 and period).
  std::vector<double> breakpoints() const;

 private:
  void validate() const;

  ModulationShape shape_ = ModulationShape::constant;
  double omega0_ = 0.0;
  double period_ = 0.0;
  double amplitude_ = 0.0;
  double phase_ = 0.0;
  std::vector<double> times_, omegas_, prefix_;  // tabulated
};

// xi(q) = (1/tau) int_0^tau exp{i delta(t)} e^{i q Omega t} dt by adaptive
// quadrature over the profile's smooth pieces.
std::complex<double> xi(const ModulationProfile& mod, int q);
double pq(const ModulationProfile& mod, int q);  // P(q) = |xi(q)|^2

// T_a(q) = omega0 / (omega0 - q Omega) * T_a; returns a signed infinity at
// the resonant point omega0 = q Omega.
double effective_temperature(double bath_temperature, double omega0,
                             double drive_omega, int q);

struct QubitModel {
  ModulationProfile modulation;
  std::vector<BathSpec> baths;
  int truncation = 0;           // Q
  std::vector<double> p_table;  // P(q) for q = -Q..Q
  double captured_mass = 0.0;   // sum of p_table

  double p(int q) const;
  double q_mass_deficit() const { return 1.0 - captured_mass; }
};

// Q < 0 selects the shape default: 31 for pulse trains, 8 otherwise.
QubitModel make_qubit_model(ModulationProfile modulation,
                            std::vector<BathSpec> baths, int truncation = -1);

struct AveragedRates {
  double excited = 0.0;  // decay rate from |e>: sum_q P(q) G(nu_q)
  double ground = 0.0;   // excitation rate from |g>: sum_q P(q) G(-nu_q)
};

std::map<std::string, AveragedRates> averaged_rates(const QubitModel& model);

// T_eff = omega0 / ln[(sum_a Re_a) / (sum_a Rg_a)]; infinite (returned as
// +-inf) when the rate sums balance exactly.
double t_eff(const QubitModel& model);

// Channel family L^a_q in closed form, interoperable with dynamics/thermo.
GeneratorBundle build_qubit_bundle(const QubitModel& model);

// (1 - q Omega / omega0) Tr[(L^a_q rho) H0] for the workbench channel q of
// bath `bath_label`; zero if that channel was dropped by the rate floor.
double single_harmonic_current(const QubitModel& model,
                               const GeneratorBundle& bundle,
                               const DensityMatrix& rho,
                               const std::string& bath_label, int q);

// Exact closed-form propagator U(t,0) = exp(-i phi(t) sigma_z / 2),
// phi(t) = omega0 t + delta(t).
Propagator exact_qubit_propagator(const ModulationProfile& mod);

// H0 = omega0 sigma_z / 2.
HermitianOperator qubit_hamiltonian(const ModulationProfile& mod);

}  // namespace floq

#endif  // FLOQ_QUBIT_HPP
