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

#include "floq/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "floq/errors.hpp"

namespace floq {

namespace {

// One channel from its lowering operator and the two KMS-paired rates.
// For omega = 0 the jump is Hermitian and the channel is pure dephasing
// with rate G(0) each way.
ChannelGenerator make_channel(const std::string& bath_label,
                              double bath_temperature, int q, double omega,
                              double nu, Matrix jump_down, double rate_down,
                              double rate_up, const HermitianOperator& hbar) {
  ChannelGenerator ch;
  ch.bath_label = bath_label;
  ch.bath_temperature = bath_temperature;
  ch.q = q;
  ch.omega = omega;
  ch.nu = nu;
  ch.jump_down = std::move(jump_down);
  ch.rate_down = rate_down;
  ch.rate_up = rate_up;
  Superoperator sop = rate_down * dissipator_superop(ch.jump_down);
  sop += rate_up * dissipator_superop(dagger(ch.jump_down));
  ch.superop = std::move(sop);
  if (omega > 0.0)
    ch.local_gibbs = local_gibbs_state(hbar, omega, nu, bath_temperature);
  return ch;
}

void sort_channels(std::vector<ChannelGenerator>& channels) {
  std::sort(channels.begin(), channels.end(),
            [](const ChannelGenerator& a, const ChannelGenerator& b) {
              if (a.bath_label != b.bath_label)
                return a.bath_label < b.bath_label;
              if (a.q != b.q) return a.q < b.q;
              return a.omega < b.omega;
            });
}

Superoperator sum_channels(const std::vector<ChannelGenerator>& channels,
                           int dim) {
  Superoperator total = Superoperator::zero(dim);
  for (const auto& ch : channels) total += ch.superop;
  return total;
}

}  // namespace

const ChannelGenerator* GeneratorBundle::find_channel(const std::string& bath,
                                                      int q, double omega,
                                                      double tol) const {
  for (const auto& ch : channels)
    if (ch.bath_label == bath && ch.q == q && std::abs(ch.omega - omega) <= tol)
      return &ch;
  return nullptr;
}

DensityMatrix gibbs_state(const HermitianOperator& h, double temperature) {
  if (!(temperature > 0))
    throw InvariantViolation("gibbs_state: temperature must be > 0");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  // Shift by the ground energy before exponentiating.
  double e0 = es.eigenvalues().minCoeff();
  Vector weights(h.dim());
  for (int k = 0; k < h.dim(); ++k)
    weights(k) = std::exp(-(es.eigenvalues()(k) - e0) / temperature);
  Matrix rho = es.eigenvectors() * weights.asDiagonal() *
               es.eigenvectors().adjoint();
  rho /= rho.trace();
  return DensityMatrix(hermitize(rho));
}

DensityMatrix local_gibbs_state(const HermitianOperator& hbar, double omega,
                                double nu, double temperature) {
  if (omega <= 0)
    throw UnsupportedChannel("local_gibbs_state: requires omega > 0");
  // rho ~ exp(-(nu/omega) Hbar / T); the scale (nu/omega)/T may be negative
  // (inverted channel), the state is full rank either way.
  double scale = (nu / omega) / temperature;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hbar.entries());
  RealVector exponents = -scale * es.eigenvalues();
  double shift = exponents.maxCoeff();
  Vector weights(hbar.dim());
  for (int k = 0; k < hbar.dim(); ++k)
    weights(k) = std::exp(exponents(k) - shift);
  Matrix rho = es.eigenvectors() * weights.asDiagonal() *
               es.eigenvectors().adjoint();
  rho /= rho.trace();
  return DensityMatrix(hermitize(rho));
}

GeneratorBundle build_static(
    const HermitianOperator& h,
    const std::vector<std::pair<HermitianOperator, BathSpec>>& couplings,
    double degeneracy_tol) {
  GeneratorBundle bundle;
  bundle.mode = GeneratorBundle::Mode::static_mode;
  bundle.dim = h.dim();
  bundle.drive_omega = 0.0;
  bundle.hbar = h;

  SpectralDecomposition dec = spectral_decompose(h, degeneracy_tol);
  for (const auto& [s, bath] : couplings) {
    if (s.dim() != h.dim())
      throw DimensionMismatch("build_static: coupling dim mismatch");
    auto components = bohr_components(s, dec);
    for (const auto& [omega, s_omega] : components) {
      if (omega < 0) continue;  // covered by the omega >= 0 partner channel
      double rate_down = bath.rate(omega);
      double rate_up = bath.rate(-omega);
      if (rate_down < kChannelRateFloor && rate_up < kChannelRateFloor)
        continue;
      // s_omega is tagged e^{+i omega t}; the lowering operator is its
      // adjoint.  At omega = 0 the component is Hermitian already.
      Matrix jump_down = omega == 0.0 ? s_omega : dagger(s_omega);
      bundle.channels.push_back(make_channel(bath.label(), bath.temperature(),
                                             0, omega, omega,
                                             std::move(jump_down), rate_down,
                                             rate_up, h));
    }
  }
  sort_channels(bundle.channels);
  bundle.total = sum_channels(bundle.channels, bundle.dim);
  return bundle;
}

GeneratorBundle build_floquet(
    const std::vector<FloquetDecomposition>& decompositions,
    const std::vector<BathSpec>& baths) {
  if (decompositions.size() != baths.size() || decompositions.empty())
    throw DimensionMismatch(
        "build_floquet: one harmonic decomposition per bath coupling");

  const FloquetDecomposition& first = decompositions.front();
  GeneratorBundle bundle;
  bundle.mode = GeneratorBundle::Mode::floquet;
  bundle.dim = first.averaged_hamiltonian.dim();
  bundle.drive_omega = first.drive_omega;
  bundle.hbar = first.averaged_hamiltonian;

  for (std::size_t j = 0; j < baths.size(); ++j) {
    const FloquetDecomposition& fd = decompositions[j];
    const BathSpec& bath = baths[j];
    if (fd.averaged_hamiltonian.dim() != bundle.dim ||
        std::abs(fd.drive_omega - bundle.drive_omega) >
            1e-12 * bundle.drive_omega)
      throw DimensionMismatch(
          "build_floquet: decompositions disagree on system or drive");

    for (const auto& [key, s_wq] : fd.harmonics) {
      double omega = fd.omega_at(key.first);
      int q = key.second;
      if (omega < 0) continue;  // the (omega >= 0, -q) channel covers it
      if (omega == 0.0 && q != 0) {
        std::ostringstream os;
        os << "build_floquet: bath '" << bath.label()
           << "' produced an omega = 0 harmonic with q = " << q
           << " (norm " << frobenius(s_wq)
           << "); such channels are not representable in the ledger";
        throw UnsupportedChannel(os.str());
      }
      double nu = omega + q * fd.drive_omega;
      double rate_down = bath.rate(nu);
      double rate_up = bath.rate(-nu);
      if (rate_down < kChannelRateFloor && rate_up < kChannelRateFloor)
        continue;
      Matrix jump_down = omega == 0.0 ? s_wq : dagger(s_wq);
      bundle.channels.push_back(
          make_channel(bath.label(), bath.temperature(), q, omega, nu,
                       std::move(jump_down), rate_down, rate_up,
                       bundle.hbar));
    }
  }
  sort_channels(bundle.channels);
  bundle.total = sum_channels(bundle.channels, bundle.dim);
  return bundle;
}

Matrix schroedinger_rhs(const GeneratorBundle& bundle, const Matrix& h_at_t,
                        const Matrix& rho, const UnitaryOperator* u_at_t) {
  if (rho.rows() != bundle.dim || h_at_t.rows() != bundle.dim)
    throw DimensionMismatch("schroedinger_rhs: dimension mismatch");
  Matrix unitary_part = -kImag * commutator(h_at_t, rho);
  if (u_at_t == nullptr) return unitary_part + bundle.total.apply(rho);
  Superoperator rotated = heisenberg_frame(bundle.total, *u_at_t);
  return unitary_part + rotated.apply(rho);
}

}  // namespace floq
