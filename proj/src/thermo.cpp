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

#include "floq/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "floq/errors.hpp"

namespace floq {

namespace {

constexpr double kSecondLawTol = 1e-10;
constexpr double kFirstLawTol = 1e-9;
constexpr double kRegularizationEps = 1e-12;
constexpr double kRankThreshold = 1e-12;

// Mix in the maximally mixed state when rho is (numerically) rank
// deficient, so ln rho stays finite.
DensityMatrix regularize(const DensityMatrix& rho, bool* applied) {
  if (rho.min_eigenvalue() >= kRankThreshold) {
    if (applied) *applied = false;
    return rho;
  }
  int d = rho.dim();
  Matrix mixed = (1.0 - kRegularizationEps) * rho.entries() +
                 kRegularizationEps / d * Matrix::Identity(d, d);
  if (applied) *applied = true;
  return DensityMatrix(hermitize(mixed));
}

double format_ready(double x) { return x == 0.0 ? 0.0 : x; }  // kill -0

void append_g17(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", format_ready(x));
  out += buf;
}

}  // namespace

double local_current(const ChannelGenerator& ch, const DensityMatrix& rho,
                     const HermitianOperator& hbar) {
  if (ch.is_dephasing())
    throw UnsupportedChannel(
        "local_current: omega = 0 channels carry no heat and are excluded "
        "from the ledger");
  Matrix moved = ch.superop.apply(rho.entries());
  double energy_flow = (moved * hbar.entries()).trace().real();
  return (ch.nu / ch.omega) * energy_flow;
}

double local_current_dual(const ChannelGenerator& ch,
                          const DensityMatrix& rho) {
  if (ch.is_dephasing() || !ch.local_gibbs)
    throw UnsupportedChannel("local_current_dual: channel has no local Gibbs");
  Matrix moved = ch.superop.apply(rho.entries());
  Matrix log_gibbs = hermitian_log(ch.local_gibbs->entries());
  return -ch.bath_temperature * (moved * log_gibbs).trace().real();
}

std::map<std::string, double> bath_currents(const GeneratorBundle& bundle,
                                            const DensityMatrix& rho) {
  std::map<std::string, double> out;
  for (const auto& ch : bundle.channels) {
    out.try_emplace(ch.bath_label, 0.0);
    if (ch.is_dephasing()) continue;
    out[ch.bath_label] += local_current(ch, rho, bundle.hbar);
  }
  return out;
}

double entropy_production(const GeneratorBundle& bundle,
                          const DensityMatrix& rho, bool* regularized) {
  DensityMatrix reg = regularize(rho, regularized);
  Matrix moved = bundle.total.apply(reg.entries());
  Matrix log_rho = hermitian_log(reg.entries());
  double entropy_rate = -(moved * log_rho).trace().real();

  std::map<std::string, double> temperature_of;
  for (const auto& ch : bundle.channels)
    temperature_of[ch.bath_label] = ch.bath_temperature;
  double clausius = 0.0;
  for (const auto& [label, current] : bath_currents(bundle, reg))
    clausius += current / temperature_of[label];
  double sigma = entropy_rate - clausius;
  if (sigma < -kSecondLawTol) {
    std::ostringstream os;
    os << "entropy_production: sigma = " << sigma
       << " violates Spohn non-negativity";
    throw NumericalFailure(os.str());
  }
  return sigma;
}

ThermoReport make_report(const GeneratorBundle& bundle,
                         const DensityMatrix& rho) {
  ThermoReport rep;
  DensityMatrix reg = regularize(rho, &rep.regularized);

  std::map<std::string, double> temperature_of;
  for (const auto& ch : bundle.channels) {
    temperature_of[ch.bath_label] = ch.bath_temperature;
    rep.per_bath.try_emplace(ch.bath_label, 0.0);
    if (ch.is_dephasing()) continue;
    ChannelCurrent row;
    row.bath = ch.bath_label;
    row.q = ch.q;
    row.omega = ch.omega;
    row.nu = ch.nu;
    row.current = local_current(ch, reg, bundle.hbar);
    rep.per_channel.push_back(row);
    rep.per_bath[ch.bath_label] += row.current;
  }
  rep.total_heat = 0.0;
  rep.second_law_margin = 0.0;
  for (const auto& [label, current] : rep.per_bath) {
    rep.total_heat += current;
    rep.second_law_margin += current / temperature_of[label];
  }
  rep.power = -rep.total_heat;

  rep.entropy = von_neumann_entropy(reg.entries());
  Matrix moved = bundle.total.apply(reg.entries());
  rep.entropy_rate = -(moved * hermitian_log(reg.entries())).trace().real();
  rep.entropy_production = rep.entropy_rate - rep.second_law_margin;

  // Rotating-frame energy balance, summed channel-wise in ledger order:
  // sum_ch Tr[(L_ch rho) Hbar] = Tr[(L rho) Hbar], zero at steady state.
  double residual = 0.0;
  for (const auto& ch : bundle.channels)
    residual +=
        (ch.superop.apply(reg.entries()) * bundle.hbar.entries())
            .trace()
            .real();
  rep.first_law_residual = std::abs(residual);

  rep.second_law_ok = rep.second_law_margin <= kSecondLawTol;
  rep.first_law_ok = rep.first_law_residual <= kFirstLawTol;
  return rep;
}

ThermoReport steady_report(const GeneratorBundle& bundle,
                           const DensityMatrix& rho_ss) {
  double defect = frobenius(bundle.total.apply(rho_ss.entries()));
  if (defect > 1e-9) {
    std::ostringstream os;
    os << "steady_report: state is not stationary, |L rho| = " << defect;
    throw NotStationary(os.str());
  }
  return make_report(bundle, rho_ss);
}

std::string report_to_json(const ThermoReport& report) {
  std::string out = "{\n  \"per_channel\": [\n";
  for (std::size_t i = 0; i < report.per_channel.size(); ++i) {
    const auto& row = report.per_channel[i];
    out += "    {\"bath\": \"" + row.bath + "\", \"q\": ";
    out += std::to_string(row.q);
    out += ", \"omega\": ";
    append_g17(out, row.omega);
    out += ", \"nu\": ";
    append_g17(out, row.nu);
    out += ", \"current\": ";
    append_g17(out, row.current);
    out += i + 1 < report.per_channel.size() ? "},\n" : "}\n";
  }
  out += "  ],\n  \"per_bath\": {";
  bool first = true;
  for (const auto& [label, current] : report.per_bath) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + label + "\": ";
    append_g17(out, current);
  }
  out += "},\n";
  auto field = [&out](const char* name, double value, bool comma = true) {
    out += "  \"";
    out += name;
    out += "\": ";
    append_g17(out, value);
    if (comma) out += ",";
    out += "\n";
  };
  field("total_heat", report.total_heat);
  field("power", report.power);
  field("entropy", report.entropy);
  field("entropy_rate", report.entropy_rate);
  field("entropy_production", report.entropy_production);
  field("second_law_margin", report.second_law_margin);
  field("first_law_residual", report.first_law_residual);
  out += std::string("  \"second_law_ok\": ") +
         (report.second_law_ok ? "true" : "false") + ",\n";
  out += std::string("  \"first_law_ok\": ") +
         (report.first_law_ok ? "true" : "false") + ",\n";
  out += std::string("  \"regularized\": ") +
         (report.regularized ? "true" : "false") + "\n}\n";
  return out;
}

std::string report_to_csv(const ThermoReport& report) {
  std::string out = "bath,q,omega,nu,current\n";
  for (const auto& row : report.per_channel) {
    out += row.bath + ",";
    out += std::to_string(row.q);
    out += ",";
    append_g17(out, row.omega);
    out += ",";
    append_g17(out, row.nu);
    out += ",";
    append_g17(out, row.current);
    out += "\n";
  }
  return out;
}

}  // namespace floq
