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

#include "floq/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "floq/errors.hpp"
#include "floq/quadrature.hpp"

namespace floq {

namespace {

constexpr double kPi = std::numbers::pi;

double fold_period(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0) r += period;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModulationProfile

ModulationProfile ModulationProfile::constant_profile(double omega0,
                                                      double period) {
  ModulationProfile m;
  m.shape_ = ModulationShape::constant;
  m.omega0_ = omega0;
  m.period_ = period;
  m.validate();
  return m;
}

ModulationProfile ModulationProfile::sinusoidal(double omega0, double period,
                                                double amplitude,
                                                double phase) {
  ModulationProfile m;
  m.shape_ = ModulationShape::sinusoidal;
  m.omega0_ = omega0;
  m.period_ = period;
  m.amplitude_ = amplitude;
  m.phase_ = phase;
  m.validate();
  return m;
}

ModulationProfile ModulationProfile::pulse_train(double omega0,
                                                 double period) {
  ModulationProfile m;
  m.shape_ = ModulationShape::pulse_train;
  m.omega0_ = omega0;
  m.period_ = period;
  m.validate();
  return m;
}

ModulationProfile ModulationProfile::tabulated(std::vector<double> times,
                                               std::vector<double> omegas) {
  if (times.size() != omegas.size() || times.size() < 2)
    throw InvariantViolation(
        "ModulationProfile: tabulated profile needs matching sample lists "
        "with at least two points");
  if (times.front() != 0.0)
    throw InvariantViolation("ModulationProfile: samples must start at t = 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] <= times[i - 1])
      throw InvariantViolation("ModulationProfile: times must be ascending");
  if (std::abs(omegas.front() - omegas.back()) > 1e-12)
    throw InvariantViolation(
        "ModulationProfile: omega must match at the period endpoints");

  ModulationProfile m;
  m.shape_ = ModulationShape::tabulated;
  m.period_ = times.back();
  m.times_ = std::move(times);
  m.omegas_ = std::move(omegas);

  // Exact trapezoid integral of the piecewise-linear profile.
  double area = 0.0;
  m.prefix_.assign(m.times_.size(), 0.0);
  for (std::size_t i = 1; i < m.times_.size(); ++i) {
    area += 0.5 * (m.omegas_[i] + m.omegas_[i - 1]) *
            (m.times_[i] - m.times_[i - 1]);
    m.prefix_[i] = area;
  }
  m.omega0_ = area / m.period_;
  m.validate();
  return m;
}

void ModulationProfile::validate() const {
  if (!(omega0_ > 0))
    throw InvariantViolation("ModulationProfile: omega0 must be > 0");
  if (!(period_ > 0))
    throw InvariantViolation("ModulationProfile: period must be > 0");
  if (shape_ == ModulationShape::sinusoidal &&
      std::abs(amplitude_) >= omega0_)
    throw InvariantViolation(
        "ModulationProfile: |amplitude| must stay below omega0 so that "
        "omega(t) > 0");
  if (shape_ == ModulationShape::tabulated)
    for (double w : omegas_)
      if (!(w > 0))
        throw InvariantViolation(
            "ModulationProfile: tabulated omega samples must be > 0");
  // Mean invariant: delta(period) = 0 up to roundoff.
  if (std::abs(phase_excess(period_)) > 1e-10 * (1.0 + omega0_ * period_))
    throw InvariantViolation(
        "ModulationProfile: profile mean deviates from omega0");
}

double ModulationProfile::drive_omega() const { return 2.0 * kPi / period_; }

double ModulationProfile::omega(double t) const {
  double r = fold_period(t, period_);
  switch (shape_) {
    case ModulationShape::constant:
    case ModulationShape::pulse_train:
      return omega0_;
    case ModulationShape::sinusoidal:
      return omega0_ + amplitude_ * std::sin(drive_omega() * r + phase_);
    case ModulationShape::tabulated: {
      auto it = std::upper_bound(times_.begin(), times_.end(), r);
      std::size_t hi = std::min<std::size_t>(it - times_.begin(),
                                             times_.size() - 1);
      std::size_t lo = hi - 1;
      double f = (r - times_[lo]) / (times_[hi] - times_[lo]);
      return (1.0 - f) * omegas_[lo] + f * omegas_[hi];
    }
  }
  return omega0_;
}

double ModulationProfile::phase_excess(double t) const {
  // delta is periodic; whole periods contribute nothing.
  double r = fold_period(t, period_);
  switch (shape_) {
    case ModulationShape::constant:
      return 0.0;
    case ModulationShape::sinusoidal: {
      double om = drive_omega();
      return amplitude_ / om * (std::cos(phase_) - std::cos(om * r + phase_));
    }
    case ModulationShape::pulse_train:
      // +pi kick at tau/4, -pi kick at 3 tau/4.
      return (r >= 0.25 * period_ && r < 0.75 * period_) ? kPi : 0.0;
    case ModulationShape::tabulated: {
      auto it = std::upper_bound(times_.begin(), times_.end(), r);
      std::size_t hi = std::min<std::size_t>(it - times_.begin(),
                                             times_.size() - 1);
      std::size_t lo = hi - 1;
      double dt = r - times_[lo];
      double slope = (omegas_[hi] - omegas_[lo]) / (times_[hi] - times_[lo]);
      double integral =
          prefix_[lo] + omegas_[lo] * dt + 0.5 * slope * dt * dt;
      return integral - omega0_ * r;
    }
  }
  return 0.0;
}

std::vector<double> ModulationProfile::breakpoints() const {
  switch (shape_) {
    case ModulationShape::pulse_train:
      return {0.0, 0.25 * period_, 0.75 * period_, period_};
    case ModulationShape::tabulated:
      return times_;
    default:
      return {0.0, period_};
  }
}

// ---------------------------------------------------------------------------
// Harmonic weights

std::complex<double> xi(const ModulationProfile& mod, int q) {
  double om = mod.drive_omega();
  auto integrand = [&mod, om, q](double t) {
    return std::exp(kImag * (mod.phase_excess(t) + q * om * t));
  };
  std::complex<double> val =
      integrate_complex_segmented(integrand, mod.breakpoints(), 1e-11);
  return val / mod.period();
}

double pq(const ModulationProfile& mod, int q) { return std::norm(xi(mod, q)); }

double effective_temperature(double bath_temperature, double omega0,
                             double drive_omega, int q) {
  double denom = omega0 - q * drive_omega;
  if (denom == 0.0)
    return std::numeric_limits<double>::infinity();
  return omega0 / denom * bath_temperature;
}

// ---------------------------------------------------------------------------
// QubitModel

double QubitModel::p(int q) const {
  if (std::abs(q) > truncation) return 0.0;
  return p_table[q + truncation];
}

QubitModel make_qubit_model(ModulationProfile modulation,
                            std::vector<BathSpec> baths, int truncation) {
  if (baths.empty())
    throw InvariantViolation("make_qubit_model: at least one bath required");
  if (truncation < 0)
    truncation =
        modulation.shape() == ModulationShape::pulse_train ? 31 : 8;
  QubitModel model;
  model.modulation = std::move(modulation);
  model.baths = std::move(baths);
  model.truncation = truncation;
  model.p_table.resize(2 * truncation + 1);
  model.captured_mass = 0.0;
  for (int q = -truncation; q <= truncation; ++q) {
    double p = pq(model.modulation, q);
    model.p_table[q + truncation] = p;
    model.captured_mass += p;
  }
  // Parseval fixes sum_q P(q) = 1; the captured mass at truncation Q is
  // reported through q_mass_deficit().  Kinked profiles (pulse trains) have
  // 1/q^2 tails and legitimately keep a percent-level deficit at Q = 31.
  return model;
}

std::map<std::string, AveragedRates> averaged_rates(const QubitModel& model) {
  std::map<std::string, AveragedRates> out;
  double omega0 = model.modulation.omega0();
  double drive = model.modulation.drive_omega();
  for (const auto& bath : model.baths) {
    AveragedRates rates;
    for (int q = -model.truncation; q <= model.truncation; ++q) {
      double nu = omega0 - q * drive;
      rates.excited += model.p(q) * bath.rate(nu);
      rates.ground += model.p(q) * bath.rate(-nu);
    }
    out[bath.label()] = rates;
  }
  return out;
}

double t_eff(const QubitModel& model) {
  double up = 0.0, down = 0.0;
  for (const auto& [label, rates] : averaged_rates(model)) {
    down += rates.excited;
    up += rates.ground;
  }
  if (down <= 0.0 || up <= 0.0)
    throw InvariantViolation("t_eff: averaged rates vanish");
  double log_ratio = std::log(down / up);
  if (log_ratio == 0.0) return std::numeric_limits<double>::infinity();
  return model.modulation.omega0() / log_ratio;
}

GeneratorBundle build_qubit_bundle(const QubitModel& model) {
  const double omega0 = model.modulation.omega0();
  const double drive = model.modulation.drive_omega();
  HermitianOperator h0 = qubit_hamiltonian(model.modulation);

  GeneratorBundle bundle;
  bundle.mode = GeneratorBundle::Mode::floquet;
  bundle.dim = 2;
  bundle.drive_omega = drive;
  bundle.hbar = h0;

  for (const auto& bath : model.baths) {
    for (int q = -model.truncation; q <= model.truncation; ++q) {
      double weight = model.p(q);
      double nu = omega0 - q * drive;
      double rate_down = bath.rate(nu);
      double rate_up = bath.rate(-nu);
      if (weight * rate_down < kChannelRateFloor &&
          weight * rate_up < kChannelRateFloor)
        continue;
      ChannelGenerator ch;
      ch.bath_label = bath.label();
      ch.bath_temperature = bath.temperature();
      // Ledger key: nu = omega + q_ledger * Omega with omega = omega0.
      ch.q = -q;
      ch.omega = omega0;
      ch.nu = nu;
      ch.jump_down = std::sqrt(weight) * sigma_minus();
      ch.rate_down = rate_down;
      ch.rate_up = rate_up;
      Superoperator sop = rate_down * dissipator_superop(ch.jump_down);
      sop += rate_up * dissipator_superop(dagger(ch.jump_down));
      ch.superop = std::move(sop);
      ch.local_gibbs =
          local_gibbs_state(h0, omega0, nu, bath.temperature());
      bundle.channels.push_back(std::move(ch));
    }
  }
  std::sort(bundle.channels.begin(), bundle.channels.end(),
            [](const ChannelGenerator& a, const ChannelGenerator& b) {
              if (a.bath_label != b.bath_label)
                return a.bath_label < b.bath_label;
              if (a.q != b.q) return a.q < b.q;
              return a.omega < b.omega;
            });
  Superoperator total = Superoperator::zero(2);
  for (const auto& ch : bundle.channels) total += ch.superop;
  bundle.total = std::move(total);
  return bundle;
}

double single_harmonic_current(const QubitModel& model,
                               const GeneratorBundle& bundle,
                               const DensityMatrix& rho,
                               const std::string& bath_label, int q) {
  const double omega0 = model.modulation.omega0();
  const double drive = model.modulation.drive_omega();
  const ChannelGenerator* ch = bundle.find_channel(bath_label, -q, omega0);
  if (ch == nullptr) return 0.0;
  double energy_flow =
      (ch->superop.apply(rho.entries()) * bundle.hbar.entries())
          .trace()
          .real();
  return (1.0 - q * drive / omega0) * energy_flow;
}

Propagator exact_qubit_propagator(const ModulationProfile& mod) {
  ModulationProfile copy = mod;
  double period = mod.period();
  auto fn = [copy](double t) {
    double phi = copy.omega0() * t + copy.phase_excess(t);
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::exp(-kImag * 0.5 * phi);
    u(1, 1) = std::exp(kImag * 0.5 * phi);
    return u;
  };
  return Propagator(2, period, fn);
}

HermitianOperator qubit_hamiltonian(const ModulationProfile& mod) {
  return HermitianOperator(0.5 * mod.omega0() * pauli_z());
}

}  // namespace floq
