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

#include "floq/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "floq/errors.hpp"

namespace floq {

namespace {

// Hermitize, clip tiny negative eigenvalues, renormalize.  Violations worse
// than `clip_floor` are reported, not fixed.
DensityMatrix sanitize_state(const Matrix& raw, double clip_floor = -1e-10) {
  Matrix h = hermitize(raw);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  double lam_min = es.eigenvalues().minCoeff();
  if (lam_min < clip_floor) {
    std::ostringstream os;
    os << "state eigenvalue " << lam_min << " below clip floor " << clip_floor;
    throw NumericalFailure(os.str());
  }
  RealVector clipped = es.eigenvalues().cwiseMax(0.0);
  Matrix rho = es.eigenvectors() *
               clipped.cast<Complex>().asDiagonal() *
               es.eigenvectors().adjoint();
  rho /= rho.trace();
  return DensityMatrix(hermitize(rho));
}

}  // namespace

Trajectory evolve(const GeneratorBundle& bundle, const Propagator* u,
                  const DensityMatrix& rho0, double t_end, double dt) {
  if (!(dt > 0)) throw InvariantViolation("evolve: dt must be > 0");
  if (t_end < 0) throw InvariantViolation("evolve: t_end must be >= 0");
  if (rho0.dim() != bundle.dim)
    throw DimensionMismatch("evolve: state dimension mismatch");

  Trajectory traj;
  traj.frame = u == nullptr ? Frame::interaction : Frame::schroedinger;

  Matrix step = expm(bundle.total.matrix() * dt);
  Vector v = vec(rho0.entries());
  int n_steps = static_cast<int>(std::round(t_end / dt));

  for (int n = 0; n <= n_steps; ++n) {
    double t = n * dt;
    Matrix rho_i = unvec(v, bundle.dim);
    Matrix rho_out = rho_i;
    if (u != nullptr) {
      Matrix ut = u->at(t);
      rho_out = ut * rho_i * ut.adjoint();
    }
    // Validate with the relaxed 1e-8 budget; failures are numerical errors.
    try {
      traj.states.emplace_back(hermitize(rho_out), 1e4);
    } catch (const InvariantViolation& e) {
      std::ostringstream os;
      os << "evolve: state invariant violated at t = " << t << ": "
         << e.what();
      throw NumericalFailure(os.str());
    }
    traj.times.push_back(t);
    if (n < n_steps) v = step * v;
  }
  return traj;
}

DensityMatrix steady_state(const GeneratorBundle& bundle) {
  const int d = bundle.dim;
  Eigen::JacobiSVD<Matrix> svd(bundle.total.matrix(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sing = svd.singularValues();
  double largest = sing(0);
  double second_smallest = sing(sing.size() - 2);
  if (second_smallest <= 1e-8 * largest) {
    int null_dim = 0;
    for (Eigen::Index i = 0; i < sing.size(); ++i)
      if (sing(i) <= 1e-8 * largest) ++null_dim;
    std::ostringstream os;
    os << "steady_state: stationary manifold has dimension " << null_dim
       << " (degenerate generator)";
    throw NonUniqueSteadyState(os.str(), null_dim);
  }

  Vector null_vec = svd.matrixV().col(d * d - 1);
  Matrix rho = unvec(null_vec, d);
  // The null vector carries an arbitrary phase; rotate so the trace is
  // real positive before sanitizing.
  Complex tr = rho.trace();
  if (std::abs(tr) < 1e-14)
    throw NumericalFailure("steady_state: null vector is traceless");
  rho *= std::conj(tr) / std::abs(tr);
  DensityMatrix out = sanitize_state(rho);

  double defect = frobenius(bundle.total.apply(out.entries()));
  if (defect > 1e-9) {
    std::ostringstream os;
    os << "steady_state: |L rho| = " << defect << " exceeds 1e-9";
    throw NumericalFailure(os.str());
  }
  return out;
}

Trajectory limit_cycle(const GeneratorBundle& bundle, const DensityMatrix& rho,
                       const Propagator& u, int grid_n) {
  if (grid_n < 2)
    throw InvariantViolation("limit_cycle: grid_n must be >= 2");
  double defect = frobenius(bundle.total.apply(rho.entries()));
  if (defect > 1e-9) {
    std::ostringstream os;
    os << "limit_cycle: input is not stationary, |L rho| = " << defect;
    throw NotStationary(os.str());
  }
  Trajectory traj;
  traj.frame = Frame::schroedinger;
  double tau = u.period();
  for (int n = 0; n <= grid_n; ++n) {
    double t = tau * n / grid_n;
    Matrix ut = u.at(t);
    traj.times.push_back(t);
    traj.states.emplace_back(hermitize(ut * rho.entries() * ut.adjoint()));
  }
  double closure =
      (traj.states.back().entries() - traj.states.front().entries()).norm();
  if (closure > 1e-9) {
    std::ostringstream os;
    os << "limit_cycle: endpoint differs from start by " << closure;
    throw NumericalFailure(os.str());
  }
  return traj;
}

}  // namespace floq
