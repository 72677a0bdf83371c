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

#include "floq/bath.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <utility>

#include "floq/errors.hpp"

namespace floq {

BathSpec::BathSpec(std::string label, double temperature,
                   std::function<double(double)> positive_branch,
                   std::string model, std::map<std::string, double> params)
    : label_(std::move(label)),
      temperature_(temperature),
      positive_branch_(std::move(positive_branch)),
      model_(std::move(model)),
      params_(std::move(params)) {
  if (!(temperature_ > 0)) {
    std::ostringstream os;
    os << "BathSpec '" << label_ << "': temperature must be > 0, got "
       << temperature_;
    throw InvariantViolation(os.str());
  }
}

double BathSpec::rate(double omega) const {
  if (!std::isfinite(omega))
    throw InvariantViolation("BathSpec::rate: omega is not finite");
  if (omega >= 0) return positive_branch_(omega);
  return std::exp(omega / temperature_) * positive_branch_(-omega);
}

double eval_rate(const BathSpec& bath, double omega) {
  return bath.rate(omega);
}

BathSpec make_flat_bath(std::string label, double temperature, double gamma0) {
  if (!(gamma0 > 0))
    throw InvariantViolation("make_flat_bath: gamma0 must be > 0");
  return BathSpec(std::move(label), temperature,
                  [gamma0](double) { return gamma0; }, "flat",
                  {{"gamma0", gamma0}});
}

BathSpec make_ohmic_bath(std::string label, double temperature, double gamma0,
                         double cutoff) {
  if (!(gamma0 > 0))
    throw InvariantViolation("make_ohmic_bath: gamma0 must be > 0");
  if (!(cutoff > 0))
    throw InvariantViolation("make_ohmic_bath: cutoff must be > 0");
  return BathSpec(
      std::move(label), temperature,
      [gamma0, cutoff](double w) { return gamma0 * w * std::exp(-w / cutoff); },
      "ohmic", {{"gamma0", gamma0}, {"cutoff", cutoff}});
}

BathSpec make_tabulated_bath(std::string label, double temperature,
                             std::vector<double> omegas,
                             std::vector<double> rates) {
  if (omegas.size() != rates.size() || omegas.size() < 2)
    throw InvariantViolation(
        "make_tabulated_bath: need matching grids with at least two points");
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (omegas[i] < 0)
      throw InvariantViolation("make_tabulated_bath: grid must be omega >= 0");
    if (i > 0 && omegas[i] <= omegas[i - 1])
      throw InvariantViolation("make_tabulated_bath: grid must be ascending");
    if (rates[i] < 0)
      throw InvariantViolation("make_tabulated_bath: rates must be >= 0");
  }
  auto w = std::make_shared<std::vector<double>>(std::move(omegas));
  auto g = std::make_shared<std::vector<double>>(std::move(rates));
  return BathSpec(
      std::move(label), temperature,
      [w, g](double x) {
        if (x < w->front() || x > w->back()) return 0.0;
        auto it = std::upper_bound(w->begin(), w->end(), x);
        if (it == w->begin()) return g->front();
        if (it == w->end()) return g->back();
        std::size_t hi = it - w->begin();
        std::size_t lo = hi - 1;
        double f = ((*w)[hi] == (*w)[lo])
                       ? 0.0
                       : (x - (*w)[lo]) / ((*w)[hi] - (*w)[lo]);
        return (1.0 - f) * (*g)[lo] + f * (*g)[hi];
      },
      "tabulated", {});
}

}  // namespace floq
