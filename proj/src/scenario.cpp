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

#include "floq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "floq/errors.hpp"

namespace floq {

namespace {

using nlohmann::ordered_json;

constexpr double kSecondLawTol = 1e-10;
constexpr double kFirstLawTol = 1e-9;
constexpr double kTransientSigmaTol = 1e-10;

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::vector<BathSpec> build_baths(const ScenarioConfig& cfg) {
  std::vector<BathSpec> baths;
  for (const auto& b : cfg.baths) {
    if (b.model == "flat") {
      baths.push_back(make_flat_bath(b.label, b.temperature, b.gamma0));
    } else if (b.model == "ohmic") {
      baths.push_back(
          make_ohmic_bath(b.label, b.temperature, b.gamma0, b.cutoff));
    } else {
      std::vector<double> ws, gs;
      for (const auto& [w, g] : b.grid) {
        ws.push_back(w);
        gs.push_back(g);
      }
      baths.push_back(
          make_tabulated_bath(b.label, b.temperature, std::move(ws),
                              std::move(gs)));
    }
  }
  return baths;
}

ModulationProfile build_modulation(const ModulationConfig& mc) {
  if (mc.shape == "constant")
    return ModulationProfile::constant_profile(mc.omega0, mc.period);
  if (mc.shape == "sinusoidal")
    return ModulationProfile::sinusoidal(mc.omega0, mc.period, mc.amplitude,
                                         mc.phase);
  if (mc.shape == "pulse_train")
    return ModulationProfile::pulse_train(mc.omega0, mc.period);
  auto [ts, ws] = read_modulation_csv(mc.samples_file);
  return ModulationProfile::tabulated(std::move(ts), std::move(ws));
}

PeriodicHamiltonian build_hamiltonian(const ScenarioConfig& cfg) {
  const HamiltonianConfig& hc = cfg.hamiltonian;
  if (hc.kind == "constant")
    return PeriodicHamiltonian::constant(HermitianOperator(hc.matrix),
                                         hc.period);
  if (hc.kind == "piecewise") {
    std::vector<std::pair<double, HermitianOperator>> segments;
    for (const auto& [dur, m] : hc.segments)
      segments.emplace_back(dur, HermitianOperator(m));
    return PeriodicHamiltonian::piecewise(std::move(segments));
  }
  // diagonal_sinusoidal
  int dim = cfg.dim;
  double omega_drive = 2.0 * std::numbers::pi / hc.period;
  auto base = hc.base;
  auto amps = hc.amplitudes;
  auto phases = hc.phases;
  auto eval = [dim, omega_drive, base, amps, phases](double t) {
    Matrix m = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
      m(i, i) = base[i] + amps[i] * std::sin(omega_drive * t + phases[i]);
    return m;
  };
  return PeriodicHamiltonian::sampled(dim, hc.period, eval,
                                      HamiltonianForm::diagonal_modulated);
}

void write_file(const std::filesystem::path& path, const std::string& content,
                RunOutcome& outcome) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  outcome.written_files.push_back(path.string());
}

std::string unit_comment(const ScenarioConfig& cfg) {
  if (cfg.output.energy_unit.empty()) return "";
  return "# energy_unit: " + cfg.output.energy_unit + "\n";
}

ordered_json state_json(const ScenarioConfig& cfg, const AssembledSystem& sys,
                        const DensityMatrix& rho) {
  ordered_json j;
  j["dim"] = rho.dim();
  if (!cfg.output.energy_unit.empty())
    j["energy_unit"] = cfg.output.energy_unit;
  ordered_json entries = ordered_json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < rho.dim(); ++c)
      row.push_back({rho.entries()(r, c).real(), rho.entries()(r, c).imag()});
    entries.push_back(row);
  }
  j["entries"] = entries;
  ordered_json pops = ordered_json::array();
  for (int r = 0; r < rho.dim(); ++r)
    pops.push_back(rho.entries()(r, r).real());
  j["populations"] = pops;
  if (sys.qubit) {
    double te = t_eff(*sys.qubit);
    if (std::isfinite(te)) j["t_eff"] = te;
  }
  if (sys.bundle.mode == GeneratorBundle::Mode::floquet) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sys.bundle.hbar.entries());
    ordered_json eps = ordered_json::array();
    for (int k = 0; k < sys.bundle.dim; ++k) eps.push_back(es.eigenvalues()(k));
    j["quasi_energies"] = eps;
  }
  return j;
}

void check_report_laws(const ThermoReport& rep, const std::string& context,
                       RunOutcome& outcome) {
  if (rep.second_law_margin > kSecondLawTol) {
    outcome.exit_code = 2;
    outcome.messages.push_back(context + ": second law violated, sum J/T = " +
                               g17(rep.second_law_margin));
  }
  if (rep.first_law_residual > kFirstLawTol) {
    outcome.exit_code = 2;
    outcome.messages.push_back(context +
                               ": first-law residual " +
                               g17(rep.first_law_residual) + " exceeds 1e-9");
  }
}

struct SweepRow {
  double value = 0.0;
  std::map<std::string, double> currents;
  double power = 0.0;
  double second_law_margin = 0.0;
  double first_law_residual = 0.0;
};

void apply_axis(ScenarioConfig& cfg, const std::string& axis, double value) {
  if (axis == "Omega") {
    if (cfg.system_type != "qubit")
      throw ConfigError("run.sweep.axis: Omega sweeps need a qubit system");
    if (!(value > 0)) throw ConfigError("run.sweep.values: Omega must be > 0");
    cfg.modulation.period = 2.0 * std::numbers::pi / value;
    return;
  }
  if (axis == "period") {
    if (!(value > 0)) throw ConfigError("run.sweep.values: period must be > 0");
    if (cfg.system_type == "qubit")
      cfg.modulation.period = value;
    else
      cfg.hamiltonian.period = value;
    return;
  }
  if (axis == "amplitude") {
    if (cfg.system_type != "qubit" || cfg.modulation.shape != "sinusoidal")
      throw ConfigError(
          "run.sweep.axis: amplitude sweeps need a sinusoidal qubit "
          "modulation");
    cfg.modulation.amplitude = value;
    return;
  }
  if (axis.rfind("T:", 0) == 0 || axis.rfind("gamma0:", 0) == 0) {
    bool temp = axis.rfind("T:", 0) == 0;
    std::string label = axis.substr(temp ? 2 : 7);
    for (auto& b : cfg.baths) {
      if (b.label != label) continue;
      if (temp)
        b.temperature = value;
      else
        b.gamma0 = value;
      return;
    }
    throw ConfigError("run.sweep.axis: unknown bath '" + label + "'");
  }
  throw ConfigError("run.sweep.axis: unknown axis '" + axis + "'");
}

SweepRow solve_sweep_point(ScenarioConfig cfg, const std::string& axis,
                           double value) {
  apply_axis(cfg, axis, value);
  AssembledSystem sys = assemble_system(cfg);
  DensityMatrix rho = steady_state(sys.bundle);
  ThermoReport rep = steady_report(sys.bundle, rho);
  SweepRow row;
  row.value = value;
  row.currents = rep.per_bath;
  row.power = rep.power;
  row.second_law_margin = rep.second_law_margin;
  row.first_law_residual = rep.first_law_residual;
  return row;
}

}  // namespace

AssembledSystem assemble_system(const ScenarioConfig& cfg) {
  std::vector<BathSpec> baths = build_baths(cfg);

  if (cfg.system_type == "qubit") {
    ModulationProfile profile = build_modulation(cfg.modulation);
    QubitModel model =
        make_qubit_model(profile, baths, cfg.floquet.q_truncation);
    AssembledSystem sys{build_qubit_bundle(model),
                        exact_qubit_propagator(profile), std::move(model)};
    return sys;
  }

  // generic
  PeriodicHamiltonian h = build_hamiltonian(cfg);
  // one coupling per bath, every bath coupled
  if (cfg.couplings.size() != baths.size())
    throw ConfigError(
        "config.system.couplings: generic systems need exactly one coupling "
        "per bath");
  std::vector<BathSpec> coupled;
  std::vector<HermitianOperator> ops;
  for (const auto& cc : cfg.couplings) {
    for (const auto& b : baths)
      if (b.label() == cc.bath) coupled.push_back(b);
    ops.emplace_back(cc.matrix);
  }
  if (coupled.size() != baths.size())
    throw ConfigError(
        "config.system.couplings: each bath must be referenced exactly once");

  if (cfg.hamiltonian.kind == "constant") {
    std::vector<std::pair<HermitianOperator, BathSpec>> pairs;
    for (std::size_t i = 0; i < ops.size(); ++i)
      pairs.emplace_back(ops[i], coupled[i]);
    AssembledSystem sys{build_static(HermitianOperator(cfg.hamiltonian.matrix),
                                     pairs),
                        make_propagator(h, cfg.floquet.steps_per_period),
                        std::nullopt};
    return sys;
  }

  int q_max = cfg.floquet.q_truncation < 0 ? 8 : cfg.floquet.q_truncation;
  Propagator prop = make_propagator(h, cfg.floquet.steps_per_period);
  MonodromyResult mono = monodromy(prop);
  std::vector<FloquetDecomposition> decs;
  for (const auto& op : ops)
    decs.push_back(
        harmonic_decompose(op, prop, mono, q_max, cfg.floquet.grid_n));
  AssembledSystem sys{build_floquet(decs, coupled), std::move(prop),
                      std::nullopt};
  return sys;
}

DensityMatrix initial_state(const ScenarioConfig& cfg,
                            const AssembledSystem& sys) {
  const int d = sys.bundle.dim;
  const std::string& kind = cfg.run.initial_state;
  if (kind == "maximally_mixed")
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
  if (kind == "gibbs")
    return gibbs_state(sys.bundle.hbar, cfg.baths.front().temperature);
  if (kind == "matrix") return DensityMatrix(cfg.run.initial_matrix);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sys.bundle.hbar.entries());
  int idx = kind == "excited" ? d - 1 : 0;  // eigenvalues ascend
  Vector v = es.eigenvectors().col(idx);
  return DensityMatrix(v * v.adjoint());
}

RunOutcome run_scenario(ScenarioConfig cfg, const std::string& out_dir,
                        const std::string& mode) {
  if (!out_dir.empty()) cfg.output.directory = out_dir;
  if (!mode.empty()) cfg.run.mode = mode;

  RunOutcome outcome;
  std::filesystem::path dir(cfg.output.directory);
  std::filesystem::create_directories(dir);
  bool want_json = false, want_csv = false;
  for (const auto& f : cfg.output.formats) {
    want_json |= f == "json";
    want_csv |= f == "csv";
  }

  if (cfg.run.mode == "sweep") {
    std::vector<double> values = cfg.run.sweep.values;
    std::sort(values.begin(), values.end());
    std::vector<std::future<SweepRow>> futures;
    for (double v : values)
      futures.push_back(std::async(std::launch::async, solve_sweep_point, cfg,
                                   cfg.run.sweep.axis, v));
    std::vector<SweepRow> rows;
    for (auto& f : futures) rows.push_back(f.get());

    std::vector<std::string> labels;
    for (const auto& b : cfg.baths) labels.push_back(b.label);
    std::sort(labels.begin(), labels.end());
    std::string csv = unit_comment(cfg);
    csv += cfg.run.sweep.axis;
    for (const auto& l : labels) csv += ",J_" + l;
    csv += ",power,second_law_margin,first_law_residual\n";
    for (const auto& row : rows) {
      csv += g17(row.value);
      for (const auto& l : labels) {
        auto it = row.currents.find(l);
        csv += "," + g17(it == row.currents.end() ? 0.0 : it->second);
      }
      csv += "," + g17(row.power);
      csv += "," + g17(row.second_law_margin);
      csv += "," + g17(row.first_law_residual);
      csv += "\n";
      if (row.second_law_margin > kSecondLawTol ||
          row.first_law_residual > kFirstLawTol) {
        outcome.exit_code = 2;
        outcome.messages.push_back(
            "sweep point " + g17(row.value) + ": law check failed");
      }
    }
    write_file(dir / "sweep.csv", csv, outcome);
    return outcome;
  }

  AssembledSystem sys = assemble_system(cfg);
  DensityMatrix rho_ss = steady_state(sys.bundle);
  ThermoReport rep = steady_report(sys.bundle, rho_ss);
  check_report_laws(rep, "steady state", outcome);

  if (want_json) {
    write_file(dir / "steady_state.json",
               state_json(cfg, sys, rho_ss).dump(2) + "\n", outcome);
    write_file(dir / "thermo_report.json", report_to_json(rep), outcome);
  }
  if (want_csv)
    write_file(dir / "thermo_report.csv", unit_comment(cfg) + report_to_csv(rep),
               outcome);

  if (cfg.run.mode == "evolve") {
    DensityMatrix rho0 = initial_state(cfg, sys);
    Trajectory traj =
        evolve(sys.bundle, nullptr, rho0, cfg.run.t_end, cfg.run.dt);
    std::string csv = unit_comment(cfg);
    csv += "t";
    for (int i = 0; i < sys.bundle.dim; ++i)
      csv += ",pop_" + std::to_string(i);
    csv += ",entropy,sigma\n";
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
      ThermoReport sample = make_report(sys.bundle, traj.states[n]);
      Matrix rho_lab = traj.states[n].entries();
      if (sys.propagator) {
        Matrix u = sys.propagator->at(traj.times[n]);
        rho_lab = u * rho_lab * u.adjoint();
      }
      csv += g17(traj.times[n]);
      for (int i = 0; i < sys.bundle.dim; ++i)
        csv += "," + g17(rho_lab(i, i).real());
      csv += "," + g17(sample.entropy);
      csv += "," + g17(sample.entropy_production);
      csv += "\n";
      if (sample.entropy_production < -kTransientSigmaTol) {
        outcome.exit_code = 2;
        outcome.messages.push_back(
            "evolve: sigma(t) = " + g17(sample.entropy_production) +
            " < 0 at t = " + g17(traj.times[n]));
      }
    }
    write_file(dir / "trajectory.csv", csv, outcome);
  }
  return outcome;
}

std::string pq_table_csv(const ScenarioConfig& cfg) {
  if (cfg.system_type != "qubit")
    throw ConfigError("pq: requires a qubit system");
  ModulationProfile profile = build_modulation(cfg.modulation);
  std::vector<BathSpec> baths = build_baths(cfg);
  QubitModel model =
      make_qubit_model(profile, baths, cfg.floquet.q_truncation);
  std::string out = "q,P\n";
  for (int q = -model.truncation; q <= model.truncation; ++q)
    out += std::to_string(q) + "," + g17(model.p(q)) + "\n";
  out += "# captured_mass," + g17(model.captured_mass) + "\n";
  return out;
}

}  // namespace floq
