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

// Operator core: validated operator types, spectral decomposition into
// Bohr-frequency components, vectorized superoperators, and a Choi-matrix
// complete-positivity diagnostic.
//
// Frequency tagging convention: bohr_components(S, dec) returns the map
// omega -> S_omega with  e^{iHt} S e^{-iHt} = sum_omega e^{i omega t} S_omega,
// i.e. S_omega = sum_{eps_k - eps_l = omega} P_k S P_l.  For a qubit with
// H = sigma_z/2 and S = sigma_x this puts sigma_plus at omega = +1.  The
// component that *lowers* the energy by omega > 0 is therefore S_{-omega}
// = S_omega^dag; generator assembly picks that one as the jump operator.

#ifndef FLOQ_OPERATORS_HPP
#define FLOQ_OPERATORS_HPP

#include <map>
#include <vector>

#include "floq/linalg.hpp"

namespace floq {

// Dense Hermitian matrix in energy units (hbar = k_B = 1).  The default
// state is an empty 0x0 placeholder so aggregates can be built up in stages.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(Matrix entries, double tol = 1e-12);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }

 private:
  Matrix m_;
};

class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix entries, double tol = 1e-10);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }

 private:
  Matrix m_;
};

// Hermitian within 1e-12, unit trace within 1e-12, min eigenvalue >= -1e-10.
// `tol_scale` relaxes all three bands uniformly (the dynamics solver uses
// 1e4, i.e. a 1e-8 budget, when validating evolved states).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries, double tol_scale = 1.0);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }
  double min_eigenvalue() const;

 private:
  Matrix m_;
};

// dim^2 x dim^2 matrix acting on column-vectorized density matrices.
class Superoperator {
 public:
  Superoperator(Matrix matrix, int dim);
  static Superoperator zero(int dim);
  static Superoperator identity(int dim);

  int dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }

  Matrix apply(const Matrix& rho) const;

  // Largest violation of trace annihilation, |vec(I)^dag M| (a generator
  // must keep this at zero).
  double trace_annihilation_defect() const;

  Superoperator& operator+=(const Superoperator& other);
  friend Superoperator operator+(Superoperator a, const Superoperator& b) {
    a += b;
    return a;
  }
  friend Superoperator operator*(double s, Superoperator a) {
    a.m_ *= s;
    return a;
  }

 private:
  Matrix m_;
  int dim_;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;   // ascending, degeneracies merged
  std::vector<Matrix> projectors;    // one per merged level, sum to identity
  std::vector<double> bohr_frequencies;  // sorted, deduplicated, contains 0,
                                         // closed under negation
  int dim = 0;

  // Representative Bohr value for eps_k - eps_l under the merged clustering;
  // guarantees rep(k,l) = -rep(l,k) exactly.
  double bohr_of(int k, int l) const;
};

// Eigenvalues within degeneracy_tol are merged into a single projector.
SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         double degeneracy_tol = 1e-9);

// Components with Frobenius norm below this are dropped from decompositions
// and generator channels.
inline constexpr double kComponentNormFloor = 1e-14;

// Map omega -> S_omega under the tagging convention documented above.
std::map<double, Matrix> bohr_components(const HermitianOperator& s,
                                         const SpectralDecomposition& dec);

// Superoperator M with M vec(rho) = vec(A rho B).
Superoperator superop_sandwich(const Matrix& a, const Matrix& b);

// Standard dissipator D[A] rho = A rho A^dag - (1/2){A^dag A, rho}.
Superoperator dissipator_superop(const Matrix& a);

// -i[H, .] as a superoperator.
Superoperator hamiltonian_superop(const Matrix& h);

// Conjugation rho -> U rho U^dag as a superoperator.
Superoperator conjugation_superop(const Matrix& u);

// Unnormalized Choi matrix  J = sum_{kl} E_kl (x) M(E_kl).
Matrix choi_matrix(const Superoperator& m);

struct ChoiVerdict {
  bool cp_ok = false;
  double min_eigenvalue = 0.0;
};

// Forms the Choi matrix of exp(L dt) and reports its minimum eigenvalue;
// cp_ok iff it is >= -1e-8.  Diagnostic only, never throws on failure.
ChoiVerdict choi_positivity_check(const Superoperator& generator,
                                  double dt = 1e-3);

}  // namespace floq

#endif  // FLOQ_OPERATORS_HPP
