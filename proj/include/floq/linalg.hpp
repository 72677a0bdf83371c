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

// Dense complex-matrix helpers shared by all modules.  Vectorization is
// column-stacking throughout: vec(rho)(i + dim*j) = rho(i,j), so that
// vec(A rho B) = (B^T (x) A) vec(rho).

#ifndef FLOQ_LINALG_HPP
#define FLOQ_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace floq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

// Kronecker product A (x) B.
Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int dim);

Matrix dagger(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

double frobenius(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol);

// Closest Hermitian matrix (A + A^dag)/2.
Matrix hermitize(const Matrix& m);

// exp(-i t H) for Hermitian H, built from the eigendecomposition so the
// result is unitary to machine precision.
Matrix hermitian_propagator(const Matrix& h, double t);

// exp(M) for a general complex matrix (Pade scaling-and-squaring).
Matrix expm(const Matrix& m);

// Matrix logarithm of a positive definite Hermitian matrix; eigenvalues are
// floored at `floor_value` before taking the log.
Matrix hermitian_log(const Matrix& m, double floor_value = 1e-300);

// Von Neumann entropy -Tr[rho ln rho] of a Hermitian positive matrix.
double von_neumann_entropy(const Matrix& rho);

// Pauli matrices and friends on the qubit convention sigma_z = diag(1, -1),
// i.e. index 0 is the excited state.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix sigma_plus();   // |e><g|
Matrix sigma_minus();  // |g><e|

}  // namespace floq

#endif  // FLOQ_LINALG_HPP
