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

#ifndef FLOQ_TEST_HELPERS_HPP
#define FLOQ_TEST_HELPERS_HPP

#include <random>

#include "floq/linalg.hpp"
#include "floq/operators.hpp"

namespace floq::test {

inline Matrix random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  return hermitize(random_matrix(dim, rng));
}

inline Matrix random_density(int dim, std::mt19937_64& rng) {
  Matrix a = random_matrix(dim, rng);
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return hermitize(rho);
}

// Trace norm |A|_1 of a Hermitian matrix.
inline double trace_norm(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  return es.eigenvalues().cwiseAbs().sum();
}

inline double trace_distance(const Matrix& a, const Matrix& b) {
  return 0.5 * trace_norm(a - b);
}

}  // namespace floq::test

#endif  // FLOQ_TEST_HELPERS_HPP
