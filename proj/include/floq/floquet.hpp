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

// Floquet engine: time-ordered propagation of periodic Hamiltonians,
// monodromy / quasi-energy extraction, and the harmonic decomposition
//   U(t,0)^dag S U(t,0) = sum_{omega, q} e^{i(omega + q Omega) t} S_{omega q}
// with omega the quasi-Bohr frequencies of the averaged Hamiltonian and
// Omega = 2 pi / tau.  Quasi-energies are folded to (-Omega/2, Omega/2];
// only omega + q Omega and the derived channel rates are branch-invariant.

#ifndef FLOQ_FLOQUET_HPP
#define FLOQ_FLOQUET_HPP

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "floq/operators.hpp"

namespace floq {

enum class HamiltonianForm {
  constant,
  piecewise_constant,
  diagonal_modulated,
  smooth_sampled,
};

// tau-periodic Hamiltonian H(t).  Periodicity is checked on a sample grid at
// construction for evaluator-backed forms.
class PeriodicHamiltonian {
 public:
  static PeriodicHamiltonian constant(HermitianOperator h, double period);
  // Segments are (duration, H) pairs; durations must sum to the period.
  static PeriodicHamiltonian piecewise(
      std::vector<std::pair<double, HermitianOperator>> segments);
  // evaluator must satisfy H(t) = H(t + period).  With form
  // diagonal_modulated, H(t) must be diagonal for all t (checked on a grid);
  // the propagator then integrates the diagonal phases by quadrature instead
  // of stepping.
  static PeriodicHamiltonian sampled(
      int dim, double period, std::function<Matrix(double)> evaluator,
      HamiltonianForm form = HamiltonianForm::smooth_sampled);

  int dim() const { return dim_; }
  double period() const { return period_; }
  HamiltonianForm form() const { return form_; }
  const std::vector<std::pair<double, Matrix>>& segments() const {
    return segments_;
  }

  Matrix at(double t) const;

 private:
  PeriodicHamiltonian() = default;
  void check_periodicity() const;

  int dim_ = 0;
  double period_ = 0.0;
  HamiltonianForm form_ = HamiltonianForm::constant;
  std::vector<std::pair<double, Matrix>> segments_;  // piecewise / constant
  std::function<Matrix(double)> evaluator_;          // sampled forms
};

// U(t,0) for all t >= 0.  The supplied closure only needs to cover one
// period; later times are reached through monodromy powers.
class Propagator {
 public:
  Propagator(int dim, double period, std::function<Matrix(double)> u_in_period);

  int dim() const { return dim_; }
  double period() const { return period_; }
  Matrix at(double t) const;
  const Matrix& monodromy_matrix() const { return monodromy_; }

 private:
  int dim_;
  double period_;
  std::function<Matrix(double)> u_;
  Matrix monodromy_;
  // Schur factors of the (normal) monodromy for cheap integer powers.
  Matrix schur_q_;
  Vector schur_eigs_;
};

// Midpoint-exponential stepping for the sampled forms; exact segment
// exponentials for constant / piecewise-constant; quadrature phases for
// diagonal-modulated.  Per-period unitarity drift above 1e-8 raises
// AccuracyError.
Propagator make_propagator(const PeriodicHamiltonian& h,
                           int steps_per_period = 1024);

// U(t,0) as a validated unitary.
UnitaryOperator propagate(const PeriodicHamiltonian& h, double t,
                          int steps_per_period = 1024);

struct MonodromyResult {
  UnitaryOperator u_period;            // U(tau, 0)
  std::vector<double> quasi_energies;  // ascending, in (-Omega/2, Omega/2]
  HermitianOperator averaged_hamiltonian;  // Hbar = sum eps_k Pi_k
  SpectralDecomposition quasi_spec;        // levels + quasi-Bohr set of Hbar
  double period = 0.0;
  double drive_omega = 0.0;
  bool degenerate = false;  // quasi-energy clusters were merged
};

MonodromyResult monodromy(const Propagator& prop,
                          double degeneracy_tol = 1e-9);
MonodromyResult monodromy(const PeriodicHamiltonian& h,
                          int steps_per_period = 1024,
                          double degeneracy_tol = 1e-9);

struct FloquetDecomposition {
  double period = 0.0;
  double drive_omega = 0.0;  // Omega = 2 pi / period
  std::vector<double> quasi_energies;
  HermitianOperator averaged_hamiltonian;
  SpectralDecomposition quasi_spec;
  int truncation = 0;  // Q
  bool quasi_degenerate = false;
  double reconstruction_error = 0.0;
  // (index into quasi_spec.bohr_frequencies, q) -> S_{omega q}
  std::map<std::pair<int, int>, Matrix> harmonics;

  double omega_at(int bohr_index) const {
    return quasi_spec.bohr_frequencies[bohr_index];
  }
  int bohr_index_of(double omega) const;
};

// Sector-projection-then-DFT extraction of the S_{omega q} on grid_n
// period samples, truncated at |q| <= q_max.  grid_n must be >= 4 q_max + 4.
// The stored reconstruction error is the max Frobenius defect of the
// harmonic sum against U^dag S U on a 37-point off-grid time sample; above
// recon_tol the decomposition is rejected with TruncationError.
FloquetDecomposition harmonic_decompose(const HermitianOperator& s,
                                        const Propagator& prop,
                                        const MonodromyResult& mono,
                                        int q_max, int grid_n,
                                        double recon_tol = 1e-6);
FloquetDecomposition harmonic_decompose(const HermitianOperator& s,
                                        const PeriodicHamiltonian& h,
                                        int q_max, int grid_n,
                                        int steps_per_period = 1024,
                                        double recon_tol = 1e-6);

// Conjugation by U: operators as U A U^dag, superoperators as the sandwich.
Matrix heisenberg_frame(const Matrix& op, const UnitaryOperator& u);
Superoperator heisenberg_frame(const Superoperator& s, const UnitaryOperator& u);

}  // namespace floq

#endif  // FLOQ_FLOQUET_HPP
