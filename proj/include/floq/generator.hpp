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

// Generator builder: assembles LGKS generators channel by channel, both for
// a constant Hamiltonian (static Davies generator) and for a periodically
// driven one (the Floquet channel family).  A channel (j, q, omega >= 0)
// exchanges quanta nu = omega + q Omega with bath j:
//
//   L^j_{q omega} = G_j(nu) D[A] + G_j(-nu) D[A^dag],
//
// where A lowers the averaged Hamiltonian Hbar by omega (A = S_{omega q}^dag
// in the raising-tagged harmonic convention of floquet.hpp).  Channels are
// kept individually because the heat-current ledger is defined channel-wise.

#ifndef FLOQ_GENERATOR_HPP
#define FLOQ_GENERATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "floq/bath.hpp"
#include "floq/floquet.hpp"
#include "floq/operators.hpp"

namespace floq {

// Channels whose up and down rates both fall below this are dropped.
inline constexpr double kChannelRateFloor = 1e-14;

struct ChannelGenerator {
  std::string bath_label;
  double bath_temperature = 0.0;
  int q = 0;           // harmonic index (0 in static mode)
  double omega = 0.0;  // quasi-Bohr frequency, >= 0
  double nu = 0.0;     // omega + q Omega, the exchanged quantum (signed)
  Matrix jump_down;    // lowers Hbar by omega; carries the harmonic weight
  double rate_down = 0.0;  // G_j(nu)
  double rate_up = 0.0;    // G_j(-nu)
  Superoperator superop = Superoperator::zero(1);
  // Gibbs-like stationary state of this channel alone; absent for omega = 0.
  std::optional<DensityMatrix> local_gibbs;

  bool is_dephasing() const { return omega == 0.0; }
};

struct GeneratorBundle {
  enum class Mode { static_mode, floquet };
  Mode mode = Mode::static_mode;
  int dim = 0;
  double drive_omega = 0.0;  // Omega; zero in static mode
  HermitianOperator hbar;    // averaged Hamiltonian (H itself in static mode)
  std::vector<ChannelGenerator> channels;  // sorted by (bath, q, omega)
  Superoperator total = Superoperator::zero(1);

  const ChannelGenerator* find_channel(const std::string& bath, int q,
                                       double omega, double tol = 1e-9) const;
};

// Davies generator for constant H with one Hermitian coupling per bath.
GeneratorBundle build_static(const HermitianOperator& h,
                             const std::vector<std::pair<HermitianOperator,
                                                         BathSpec>>& couplings,
                             double degeneracy_tol = 1e-9);

// Floquet channel family from per-coupling harmonic decompositions (one
// FloquetDecomposition per coupling, all over the same drive).  omega = 0
// harmonics with q != 0 are rejected (the ledger divides by omega).
GeneratorBundle build_floquet(
    const std::vector<FloquetDecomposition>& decompositions,
    const std::vector<BathSpec>& baths);

// Right-hand side of the Schroedinger-picture master equation,
// -i[H(t), rho] + L(t) rho with L(t) the frame-rotated dissipator.  When
// `u_at_t` is null the interaction-picture form -i[Hbar, rho] + L rho is
// used (exact for the diagonal qubit model where L(t) = L).
Matrix schroedinger_rhs(const GeneratorBundle& bundle, const Matrix& h_at_t,
                        const Matrix& rho,
                        const UnitaryOperator* u_at_t = nullptr);

// Gibbs state Z^{-1} e^{-H/T}.
DensityMatrix gibbs_state(const HermitianOperator& h, double temperature);

// Gibbs-like state Z^{-1} exp(-(nu/omega) Hbar / T) of one channel.
DensityMatrix local_gibbs_state(const HermitianOperator& hbar, double omega,
                                double nu, double temperature);

}  // namespace floq

#endif  // FLOQ_GENERATOR_HPP
