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

#include "floq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "floq/errors.hpp"

namespace floq {

HermitianOperator::HermitianOperator(Matrix entries, double tol)
    : m_(std::move(entries)) {
  if (m_.rows() != m_.cols())
    throw DimensionMismatch("HermitianOperator: matrix is not square");
  if (!is_hermitian(m_, tol)) {
    std::ostringstream os;
    os << "HermitianOperator: entries deviate from the conjugate transpose "
          "by more than "
       << tol;
    throw InvariantViolation(os.str());
  }
}

UnitaryOperator::UnitaryOperator(Matrix entries, double tol)
    : m_(std::move(entries)) {
  if (m_.rows() != m_.cols())
    throw DimensionMismatch("UnitaryOperator: matrix is not square");
  double defect =
      (m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())).norm();
  if (defect > tol) {
    std::ostringstream os;
    os << "UnitaryOperator: |U^dag U - I|_F = " << defect << " exceeds " << tol;
    throw InvariantViolation(os.str());
  }
}

DensityMatrix::DensityMatrix(Matrix entries, double tol_scale)
    : m_(std::move(entries)) {
  if (m_.rows() != m_.cols())
    throw DimensionMismatch("DensityMatrix: matrix is not square");
  if (!is_hermitian(m_, 1e-12 * tol_scale))
    throw InvariantViolation("DensityMatrix: not Hermitian");
  double tr = m_.trace().real();
  if (std::abs(m_.trace().imag()) > 1e-12 * tol_scale ||
      std::abs(tr - 1.0) > 1e-12 * tol_scale) {
    std::ostringstream os;
    os << "DensityMatrix: trace = " << tr << " is not 1";
    throw InvariantViolation(os.str());
  }
  double lam_min = min_eigenvalue();
  if (lam_min < -1e-10 * tol_scale) {
    std::ostringstream os;
    os << "DensityMatrix: minimum eigenvalue " << lam_min << " below floor";
    throw InvariantViolation(os.str());
  }
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_);
  return es.eigenvalues().minCoeff();
}

Superoperator::Superoperator(Matrix matrix, int dim)
    : m_(std::move(matrix)), dim_(dim) {
  if (m_.rows() != m_.cols() ||
      m_.rows() != static_cast<Eigen::Index>(dim) * dim)
    throw DimensionMismatch("Superoperator: matrix must be dim^2 x dim^2");
}

Superoperator Superoperator::zero(int dim) {
  return Superoperator(Matrix::Zero(dim * dim, dim * dim), dim);
}

Superoperator Superoperator::identity(int dim) {
  return Superoperator(Matrix::Identity(dim * dim, dim * dim), dim);
}

Matrix Superoperator::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw DimensionMismatch("Superoperator::apply: dimension mismatch");
  return unvec(m_ * vec(rho), dim_);
}

double Superoperator::trace_annihilation_defect() const {
  Vector id_vec = vec(Matrix::Identity(dim_, dim_));
  return (id_vec.adjoint() * m_).cwiseAbs().maxCoeff();
}

Superoperator& Superoperator::operator+=(const Superoperator& other) {
  if (other.dim_ != dim_)
    throw DimensionMismatch("Superoperator: dimension mismatch in sum");
  m_ += other.m_;
  return *this;
}

double SpectralDecomposition::bohr_of(int k, int l) const {
  if (k == l) return 0.0;
  double d = eigenvalues[k] - eigenvalues[l];
  // Snap to the clustered representative so that (k,l) and (l,k) map to
  // exactly opposite values.
  double best = 0.0;
  double best_err = std::abs(d);
  for (double w : bohr_frequencies) {
    if (std::abs(w - d) < best_err) {
      best_err = std::abs(w - d);
      best = w;
    }
  }
  return best;
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         double degeneracy_tol) {
  if (degeneracy_tol <= 0)
    throw InvariantViolation("spectral_decompose: degeneracy_tol must be > 0");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  if (es.info() != Eigen::Success)
    throw NumericalFailure("spectral_decompose: eigensolver failed");

  SpectralDecomposition dec;
  dec.dim = h.dim();
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();

  // Cluster ascending eigenvalues by consecutive gap.
  int n = h.dim();
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && vals(stop) - vals(stop - 1) <= degeneracy_tol) ++stop;
    double mean = 0.0;
    Matrix proj = Matrix::Zero(n, n);
    for (int k = start; k < stop; ++k) {
      mean += vals(k);
      proj += vecs.col(k) * vecs.col(k).adjoint();
    }
    dec.eigenvalues.push_back(mean / (stop - start));
    dec.projectors.push_back(proj);
    start = stop;
  }

  // Bohr set: clustered positive differences, mirrored, plus zero.
  std::vector<double> pos;
  for (std::size_t k = 0; k < dec.eigenvalues.size(); ++k)
    for (std::size_t l = 0; l < k; ++l)
      pos.push_back(dec.eigenvalues[k] - dec.eigenvalues[l]);
  std::sort(pos.begin(), pos.end());
  std::vector<double> reps;
  std::size_t i = 0;
  while (i < pos.size()) {
    std::size_t j = i + 1;
    double sum = pos[i];
    while (j < pos.size() && pos[j] - pos[j - 1] <= degeneracy_tol) {
      sum += pos[j];
      ++j;
    }
    reps.push_back(sum / (j - i));
    i = j;
  }
  for (auto it = reps.rbegin(); it != reps.rend(); ++it)
    dec.bohr_frequencies.push_back(-*it);
  dec.bohr_frequencies.push_back(0.0);
  for (double r : reps) dec.bohr_frequencies.push_back(r);

  // Snap merged eigenvalue differences onto the representatives (bohr_of
  // does this lazily; nothing else to store).
  return dec;
}

std::map<double, Matrix> bohr_components(const HermitianOperator& s,
                                         const SpectralDecomposition& dec) {
  if (s.dim() != dec.dim)
    throw DimensionMismatch("bohr_components: dimension mismatch");
  std::map<double, Matrix> out;
  int m = static_cast<int>(dec.projectors.size());
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      Matrix block = dec.projectors[k] * s.entries() * dec.projectors[l];
      double w = dec.bohr_of(k, l);
      auto it = out.find(w);
      if (it == out.end())
        out.emplace(w, block);
      else
        it->second += block;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (frobenius(it->second) < kComponentNormFloor)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Superoperator superop_sandwich(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch("superop_sandwich: nonconforming dimensions");
  return Superoperator(kron(b.transpose(), a), static_cast<int>(a.rows()));
}

Superoperator dissipator_superop(const Matrix& a) {
  int d = static_cast<int>(a.rows());
  Matrix id = Matrix::Identity(d, d);
  Matrix ada = a.adjoint() * a;
  Matrix m = kron(a.conjugate(), a) - 0.5 * kron(id, ada) -
             0.5 * kron(ada.transpose(), id);
  return Superoperator(std::move(m), d);
}

Superoperator hamiltonian_superop(const Matrix& h) {
  int d = static_cast<int>(h.rows());
  Matrix id = Matrix::Identity(d, d);
  Matrix m = -kImag * (kron(id, h) - kron(h.transpose(), id));
  return Superoperator(std::move(m), d);
}

Superoperator conjugation_superop(const Matrix& u) {
  return superop_sandwich(u, u.adjoint());
}

Matrix choi_matrix(const Superoperator& m) {
  int d = m.dim();
  Matrix j = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      Matrix e = Matrix::Zero(d, d);
      e(k, l) = 1.0;
      j += kron(e, m.apply(e));
    }
  }
  return j;
}

ChoiVerdict choi_positivity_check(const Superoperator& generator, double dt) {
  if (dt <= 0)
    throw InvariantViolation("choi_positivity_check: dt must be > 0");
  Superoperator channel(expm(generator.matrix() * dt), generator.dim());
  Matrix j = hermitize(choi_matrix(channel));
  Eigen::SelfAdjointEigenSolver<Matrix> es(j);
  ChoiVerdict v;
  v.min_eigenvalue = es.eigenvalues().minCoeff();
  v.cp_ok = v.min_eigenvalue >= -1e-8;
  return v;
}

}  // namespace floq
