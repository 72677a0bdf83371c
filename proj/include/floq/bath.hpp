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

// Bath spectral densities G(omega) at fixed temperature.  Only the positive
// branch is user-supplied; the negative branch is *defined* through the KMS
// relation G(-omega) = e^{-omega/T} G(omega), so detailed balance holds
// identically rather than approximately.  Coupling strength is folded into
// the rate scale gamma0: all rates are physical transition rates.

#ifndef FLOQ_BATH_HPP
#define FLOQ_BATH_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace floq {

class BathSpec {
 public:
  BathSpec(std::string label, double temperature,
           std::function<double(double)> positive_branch, std::string model,
           std::map<std::string, double> params);

  const std::string& label() const { return label_; }
  double temperature() const { return temperature_; }
  const std::string& model() const { return model_; }
  const std::map<std::string, double>& params() const { return params_; }

  // G(omega) for any real omega; omega < 0 goes through the KMS closure.
  double rate(double omega) const;

 private:
  std::string label_;
  double temperature_;
  std::function<double(double)> positive_branch_;
  std::string model_;
  std::map<std::string, double> params_;
};

double eval_rate(const BathSpec& bath, double omega);

// Constant gamma0 on omega >= 0.
BathSpec make_flat_bath(std::string label, double temperature, double gamma0);

// gamma0 * omega * exp(-omega / cutoff) on omega >= 0.
BathSpec make_ohmic_bath(std::string label, double temperature, double gamma0,
                         double cutoff);

// Linear interpolation of (omega_i, G_i) samples on omega >= 0; zero below
// the first grid point and above the last.
BathSpec make_tabulated_bath(std::string label, double temperature,
                             std::vector<double> omegas,
                             std::vector<double> rates);

}  // namespace floq

#endif  // FLOQ_BATH_HPP
