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

#include "floq/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "floq/errors.hpp"

namespace floq {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double opt_number(const json& j, const std::string& path, const char* key,
                  double fallback) {
  if (!j.contains(key)) return fallback;
  return get_number(j.at(key), path + "." + key);
}

int opt_int(const json& j, const std::string& path, const char* key,
            int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer())
    fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::string opt_string(const json& j, const std::string& path, const char* key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  return get_string(j.at(key), path + "." + key);
}

Complex parse_entry(const json& j, const std::string& path) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  fail(path, "matrix entry must be a number or [re, im]");
}

Matrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a matrix (array of rows)");
  std::size_t rows = j.size();
  Matrix m(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != rows)
      fail(path, "matrix must be square");
    for (std::size_t c = 0; c < rows; ++c)
      m(r, c) = parse_entry(row[c],
                            path + "[" + std::to_string(r) + "][" +
                                std::to_string(c) + "]");
  }
  return m;
}

ordered_json serialize_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

ModulationConfig parse_modulation(const json& j, const std::string& path) {
  check_keys(j, path,
             {"shape", "omega0", "period", "amplitude", "phase",
              "samples_file"});
  ModulationConfig mod;
  mod.shape = opt_string(j, path, "shape", "constant");
  if (mod.shape != "constant" && mod.shape != "sinusoidal" &&
      mod.shape != "pulse_train" && mod.shape != "tabulated")
    fail(path + ".shape", "unknown shape '" + mod.shape + "'");
  mod.omega0 = opt_number(j, path, "omega0", 1.0);
  mod.period = opt_number(j, path, "period", 6.283185307179586);
  mod.amplitude = opt_number(j, path, "amplitude", 0.0);
  mod.phase = opt_number(j, path, "phase", 0.0);
  mod.samples_file = opt_string(j, path, "samples_file", "");
  if (mod.shape == "tabulated" && mod.samples_file.empty())
    fail(path + ".samples_file", "required for tabulated modulation");
  if (mod.shape != "tabulated" && !(mod.omega0 > 0))
    fail(path + ".omega0", "must be > 0");
  if (!(mod.period > 0)) fail(path + ".period", "must be > 0");
  return mod;
}

HamiltonianConfig parse_hamiltonian(const json& j, const std::string& path,
                                    int dim) {
  check_keys(j, path,
             {"kind", "period", "matrix", "segments", "base", "amplitudes",
              "phases"});
  HamiltonianConfig h;
  h.kind = opt_string(j, path, "kind", "constant");
  h.period = opt_number(j, path, "period", 6.283185307179586);
  if (!(h.period > 0)) fail(path + ".period", "must be > 0");
  if (h.kind == "constant") {
    if (!j.contains("matrix")) fail(path + ".matrix", "required");
    h.matrix = parse_matrix(j.at("matrix"), path + ".matrix");
    if (h.matrix.rows() != dim)
      fail(path + ".matrix", "dimension does not match system.dim");
  } else if (h.kind == "piecewise") {
    if (!j.contains("segments")) fail(path + ".segments", "required");
    const json& segs = j.at("segments");
    if (!segs.is_array() || segs.empty())
      fail(path + ".segments", "expected a non-empty array");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      std::string spath = path + ".segments[" + std::to_string(i) + "]";
      check_keys(segs[i], spath, {"duration", "matrix"});
      if (!segs[i].contains("duration") || !segs[i].contains("matrix"))
        fail(spath, "needs duration and matrix");
      double dur = get_number(segs[i].at("duration"), spath + ".duration");
      if (!(dur > 0)) fail(spath + ".duration", "must be > 0");
      Matrix m = parse_matrix(segs[i].at("matrix"), spath + ".matrix");
      if (m.rows() != dim)
        fail(spath + ".matrix", "dimension does not match system.dim");
      h.segments.emplace_back(dur, std::move(m));
    }
    double total = 0.0;
    for (const auto& [dur, m] : h.segments) total += dur;
    h.period = total;
  } else if (h.kind == "diagonal_sinusoidal") {
    for (const char* key : {"base", "amplitudes", "phases"}) {
      if (!j.contains(key)) {
        if (std::string(key) == "phases") continue;  // defaults to zeros
        fail(path + "." + key, "required");
      }
      const json& arr = j.at(key);
      if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        fail(path + "." + key, "expected an array of length system.dim");
      std::vector<double> vals;
      for (std::size_t i = 0; i < arr.size(); ++i)
        vals.push_back(
            get_number(arr[i], path + "." + key + "[" + std::to_string(i) + "]"));
      if (std::string(key) == "base") h.base = vals;
      if (std::string(key) == "amplitudes") h.amplitudes = vals;
      if (std::string(key) == "phases") h.phases = vals;
    }
    if (h.phases.empty()) h.phases.assign(dim, 0.0);
  } else {
    fail(path + ".kind", "unknown kind '" + h.kind + "'");
  }
  return h;
}

BathConfig parse_bath(const json& j, const std::string& path) {
  check_keys(j, path,
             {"label", "model", "temperature", "gamma0", "cutoff", "grid"});
  BathConfig b;
  if (!j.contains("label")) fail(path + ".label", "required");
  b.label = get_string(j.at("label"), path + ".label");
  b.model = opt_string(j, path, "model", "flat");
  if (b.model != "flat" && b.model != "ohmic" && b.model != "tabulated")
    fail(path + ".model", "unknown model '" + b.model + "'");
  b.temperature = opt_number(j, path, "temperature", 1.0);
  if (!(b.temperature > 0))
    fail(path + ".temperature",
         "must be > 0 (bath '" + b.label + "')");
  b.gamma0 = opt_number(j, path, "gamma0", 1.0);
  if (b.model != "tabulated" && !(b.gamma0 > 0))
    fail(path + ".gamma0", "must be > 0 (bath '" + b.label + "')");
  b.cutoff = opt_number(j, path, "cutoff", 10.0);
  if (b.model == "ohmic" && !(b.cutoff > 0))
    fail(path + ".cutoff", "must be > 0 (bath '" + b.label + "')");
  if (b.model == "tabulated") {
    if (!j.contains("grid")) fail(path + ".grid", "required for tabulated");
    const json& grid = j.at("grid");
    if (!grid.is_array() || grid.size() < 2)
      fail(path + ".grid", "expected at least two [omega, G] pairs");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const json& pt = grid[i];
      std::string ppath = path + ".grid[" + std::to_string(i) + "]";
      if (!pt.is_array() || pt.size() != 2)
        fail(ppath, "expected [omega, G]");
      double w = get_number(pt[0], ppath + "[0]");
      double g = get_number(pt[1], ppath + "[1]");
      if (g < 0) fail(ppath + "[1]", "rate must be >= 0");
      b.grid.emplace_back(w, g);
    }
  }
  return b;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> read_modulation_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("modulation samples file not found: " + path);
  std::vector<double> ts, ws;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double t, w;
    char comma;
    if (ls >> t >> comma >> w && comma == ',') {
      ts.push_back(t);
      ws.push_back(w);
    } else if (!first) {
      throw ConfigError("malformed modulation CSV line: " + line);
    }
    first = false;
  }
  if (ts.size() < 2)
    throw ConfigError("modulation CSV needs at least two samples: " + path);
  return {std::move(ts), std::move(ws)};
}

ScenarioConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  check_keys(j, "config", {"system", "baths", "floquet", "run", "output"});
  ScenarioConfig cfg;

  if (!j.contains("system")) fail("config.system", "required");
  const json& sys = j.at("system");
  check_keys(sys, "config.system",
             {"type", "modulation", "dim", "hamiltonian", "couplings"});
  cfg.system_type = opt_string(sys, "config.system", "type", "qubit");
  if (cfg.system_type == "qubit") {
    for (const char* bad : {"dim", "hamiltonian", "couplings"})
      if (sys.contains(bad))
        fail(std::string("config.system.") + bad,
             "not valid for qubit systems");
    if (sys.contains("modulation"))
      cfg.modulation =
          parse_modulation(sys.at("modulation"), "config.system.modulation");
    cfg.dim = 2;
  } else if (cfg.system_type == "generic") {
    if (sys.contains("modulation"))
      fail("config.system.modulation", "not valid for generic systems");
    cfg.dim = opt_int(sys, "config.system", "dim", 2);
    if (cfg.dim < 2 || cfg.dim > 64)
      fail("config.system.dim", "must be between 2 and 64");
    if (!sys.contains("hamiltonian"))
      fail("config.system.hamiltonian", "required");
    cfg.hamiltonian = parse_hamiltonian(sys.at("hamiltonian"),
                                        "config.system.hamiltonian", cfg.dim);
    if (!sys.contains("couplings"))
      fail("config.system.couplings", "required");
    const json& cps = sys.at("couplings");
    if (!cps.is_array() || cps.empty())
      fail("config.system.couplings", "expected a non-empty array");
    for (std::size_t i = 0; i < cps.size(); ++i) {
      std::string cpath = "config.system.couplings[" + std::to_string(i) + "]";
      check_keys(cps[i], cpath, {"bath", "matrix"});
      if (!cps[i].contains("bath") || !cps[i].contains("matrix"))
        fail(cpath, "needs bath and matrix");
      CouplingConfig cc;
      cc.bath = get_string(cps[i].at("bath"), cpath + ".bath");
      cc.matrix = parse_matrix(cps[i].at("matrix"), cpath + ".matrix");
      if (cc.matrix.rows() != cfg.dim)
        fail(cpath + ".matrix", "dimension does not match system.dim");
      cfg.couplings.push_back(std::move(cc));
    }
  } else {
    fail("config.system.type", "must be 'qubit' or 'generic'");
  }

  if (!j.contains("baths") || !j.at("baths").is_array() ||
      j.at("baths").empty())
    fail("config.baths", "expected a non-empty array");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < j.at("baths").size(); ++i) {
    BathConfig b = parse_bath(j.at("baths")[i],
                              "config.baths[" + std::to_string(i) + "]");
    if (!labels.insert(b.label).second)
      fail("config.baths[" + std::to_string(i) + "].label",
           "duplicate label '" + b.label + "'");
    cfg.baths.push_back(std::move(b));
  }
  if (cfg.system_type == "generic")
    for (std::size_t i = 0; i < cfg.couplings.size(); ++i)
      if (!labels.count(cfg.couplings[i].bath))
        fail("config.system.couplings[" + std::to_string(i) + "].bath",
             "references unknown bath '" + cfg.couplings[i].bath + "'");

  if (j.contains("floquet")) {
    const json& f = j.at("floquet");
    check_keys(f, "config.floquet", {"Q", "steps_per_period", "grid_N"});
    cfg.floquet.q_truncation = opt_int(f, "config.floquet", "Q", -1);
    cfg.floquet.steps_per_period =
        opt_int(f, "config.floquet", "steps_per_period", 1024);
    cfg.floquet.grid_n = opt_int(f, "config.floquet", "grid_N", 512);
    if (cfg.floquet.steps_per_period < 64)
      fail("config.floquet.steps_per_period", "must be >= 64");
    if (cfg.floquet.q_truncation == 0 || cfg.floquet.q_truncation < -1)
      fail("config.floquet.Q", "must be >= 1 (or omitted for the default)");
  }
  int q_eff = cfg.floquet.q_truncation;
  if (q_eff < 0)
    q_eff = (cfg.system_type == "qubit" && cfg.modulation.shape == "pulse_train")
                ? 31
                : 8;
  if (cfg.floquet.grid_n < 4 * q_eff + 4)
    fail("config.floquet.grid_N", "must be >= 4*Q + 4");

  if (j.contains("run")) {
    const json& r = j.at("run");
    check_keys(r, "config.run",
               {"mode", "initial_state", "initial_matrix", "t_end", "dt",
                "sweep"});
    cfg.run.mode = opt_string(r, "config.run", "mode", "steady");
    if (cfg.run.mode != "steady" && cfg.run.mode != "evolve" &&
        cfg.run.mode != "sweep")
      fail("config.run.mode", "must be steady, evolve, or sweep");
    cfg.run.initial_state =
        opt_string(r, "config.run", "initial_state", "excited");
    const std::set<std::string> states{"excited", "ground", "maximally_mixed",
                                       "gibbs", "matrix"};
    if (!states.count(cfg.run.initial_state))
      fail("config.run.initial_state", "unknown initial state");
    if (cfg.run.initial_state == "matrix") {
      if (!r.contains("initial_matrix"))
        fail("config.run.initial_matrix", "required for initial_state=matrix");
      cfg.run.initial_matrix =
          parse_matrix(r.at("initial_matrix"), "config.run.initial_matrix");
      if (cfg.run.initial_matrix.rows() != cfg.dim)
        fail("config.run.initial_matrix", "dimension mismatch");
    } else if (r.contains("initial_matrix")) {
      fail("config.run.initial_matrix",
           "only valid with initial_state=matrix");
    }
    cfg.run.t_end = opt_number(r, "config.run", "t_end", 10.0);
    cfg.run.dt = opt_number(r, "config.run", "dt", 0.05);
    if (!(cfg.run.dt > 0)) fail("config.run.dt", "must be > 0");
    if (!(cfg.run.t_end >= 0)) fail("config.run.t_end", "must be >= 0");
    if (cfg.run.mode == "sweep") {
      if (!r.contains("sweep")) fail("config.run.sweep", "required");
      const json& s = r.at("sweep");
      check_keys(s, "config.run.sweep", {"axis", "values"});
      if (!s.contains("axis") || !s.contains("values"))
        fail("config.run.sweep", "needs axis and values");
      cfg.run.sweep.axis = get_string(s.at("axis"), "config.run.sweep.axis");
      const json& vals = s.at("values");
      if (!vals.is_array() || vals.empty())
        fail("config.run.sweep.values", "expected a non-empty array");
      for (std::size_t i = 0; i < vals.size(); ++i)
        cfg.run.sweep.values.push_back(get_number(
            vals[i], "config.run.sweep.values[" + std::to_string(i) + "]"));
    } else if (r.contains("sweep")) {
      fail("config.run.sweep", "only valid with mode=sweep");
    }
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    check_keys(o, "config.output", {"directory", "formats", "energy_unit"});
    cfg.output.directory = opt_string(o, "config.output", "directory", "out");
    if (o.contains("formats")) {
      cfg.output.formats.clear();
      const json& fm = o.at("formats");
      if (!fm.is_array() || fm.empty())
        fail("config.output.formats", "expected a non-empty array");
      for (std::size_t i = 0; i < fm.size(); ++i) {
        std::string f = get_string(
            fm[i], "config.output.formats[" + std::to_string(i) + "]");
        if (f != "json" && f != "csv")
          fail("config.output.formats", "unknown format '" + f + "'");
        cfg.output.formats.push_back(f);
      }
    }
    cfg.output.energy_unit =
        opt_string(o, "config.output", "energy_unit", "");
  }
  return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  ordered_json j;
  ordered_json sys;
  sys["type"] = cfg.system_type;
  if (cfg.system_type == "qubit") {
    ordered_json mod;
    mod["shape"] = cfg.modulation.shape;
    mod["omega0"] = cfg.modulation.omega0;
    mod["period"] = cfg.modulation.period;
    mod["amplitude"] = cfg.modulation.amplitude;
    mod["phase"] = cfg.modulation.phase;
    if (!cfg.modulation.samples_file.empty())
      mod["samples_file"] = cfg.modulation.samples_file;
    sys["modulation"] = mod;
  } else {
    sys["dim"] = cfg.dim;
    ordered_json ham;
    ham["kind"] = cfg.hamiltonian.kind;
    if (cfg.hamiltonian.kind == "constant") {
      ham["period"] = cfg.hamiltonian.period;
      ham["matrix"] = serialize_matrix(cfg.hamiltonian.matrix);
    } else if (cfg.hamiltonian.kind == "piecewise") {
      ordered_json segs = ordered_json::array();
      for (const auto& [dur, m] : cfg.hamiltonian.segments) {
        ordered_json seg;
        seg["duration"] = dur;
        seg["matrix"] = serialize_matrix(m);
        segs.push_back(seg);
      }
      ham["segments"] = segs;
    } else {
      ham["period"] = cfg.hamiltonian.period;
      ham["base"] = cfg.hamiltonian.base;
      ham["amplitudes"] = cfg.hamiltonian.amplitudes;
      ham["phases"] = cfg.hamiltonian.phases;
    }
    sys["hamiltonian"] = ham;
    ordered_json cps = ordered_json::array();
    for (const auto& cc : cfg.couplings) {
      ordered_json c;
      c["bath"] = cc.bath;
      c["matrix"] = serialize_matrix(cc.matrix);
      cps.push_back(c);
    }
    sys["couplings"] = cps;
  }
  j["system"] = sys;

  ordered_json baths = ordered_json::array();
  for (const auto& b : cfg.baths) {
    ordered_json bj;
    bj["label"] = b.label;
    bj["model"] = b.model;
    bj["temperature"] = b.temperature;
    if (b.model == "tabulated") {
      ordered_json grid = ordered_json::array();
      for (const auto& [w, g] : b.grid) grid.push_back({w, g});
      bj["grid"] = grid;
    } else {
      bj["gamma0"] = b.gamma0;
      if (b.model == "ohmic") bj["cutoff"] = b.cutoff;
    }
    baths.push_back(bj);
  }
  j["baths"] = baths;

  ordered_json fl;
  fl["Q"] = cfg.floquet.q_truncation;
  fl["steps_per_period"] = cfg.floquet.steps_per_period;
  fl["grid_N"] = cfg.floquet.grid_n;
  j["floquet"] = fl;

  ordered_json run;
  run["mode"] = cfg.run.mode;
  run["initial_state"] = cfg.run.initial_state;
  if (cfg.run.initial_state == "matrix")
    run["initial_matrix"] = serialize_matrix(cfg.run.initial_matrix);
  run["t_end"] = cfg.run.t_end;
  run["dt"] = cfg.run.dt;
  if (cfg.run.mode == "sweep") {
    ordered_json sw;
    sw["axis"] = cfg.run.sweep.axis;
    sw["values"] = cfg.run.sweep.values;
    run["sweep"] = sw;
  }
  j["run"] = run;

  ordered_json out;
  out["directory"] = cfg.output.directory;
  out["formats"] = cfg.output.formats;
  out["energy_unit"] = cfg.output.energy_unit;
  j["output"] = out;

  return j.dump(2) + "\n";
}

}  // namespace floq
