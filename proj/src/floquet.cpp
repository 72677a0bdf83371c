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

#include "floq/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "floq/errors.hpp"
#include "floq/quadrature.hpp"

namespace floq {

namespace {

constexpr double kPi = std::numbers::pi;

// Offset keeping the reconstruction sample points away from any DFT grid.
constexpr double kOffGridShift = 0.31830988618367;  // 1/pi
constexpr int kOffGridPoints = 37;

}  // namespace

// ---------------------------------------------------------------------------
// PeriodicHamiltonian

PeriodicHamiltonian PeriodicHamiltonian::constant(HermitianOperator h,
                                                  double period) {
  if (period <= 0)
    throw InvariantViolation("PeriodicHamiltonian: period must be > 0");
  PeriodicHamiltonian p;
  p.dim_ = h.dim();
  p.period_ = period;
  p.form_ = HamiltonianForm::constant;
  p.segments_.emplace_back(period, h.entries());
  return p;
}

PeriodicHamiltonian PeriodicHamiltonian::piecewise(
    std::vector<std::pair<double, HermitianOperator>> segments) {
  if (segments.empty())
    throw InvariantViolation("PeriodicHamiltonian: no segments");
  PeriodicHamiltonian p;
  p.dim_ = segments.front().second.dim();
  p.form_ = HamiltonianForm::piecewise_constant;
  double total = 0.0;
  for (auto& [dur, h] : segments) {
    if (dur <= 0)
      throw InvariantViolation("PeriodicHamiltonian: segment duration <= 0");
    if (h.dim() != p.dim_)
      throw DimensionMismatch("PeriodicHamiltonian: segment dim mismatch");
    total += dur;
    p.segments_.emplace_back(dur, h.entries());
  }
  p.period_ = total;
  return p;
}

PeriodicHamiltonian PeriodicHamiltonian::sampled(
    int dim, double period, std::function<Matrix(double)> evaluator,
    HamiltonianForm form) {
  if (period <= 0)
    throw InvariantViolation("PeriodicHamiltonian: period must be > 0");
  if (form != HamiltonianForm::smooth_sampled &&
      form != HamiltonianForm::diagonal_modulated)
    throw InvariantViolation(
        "PeriodicHamiltonian: sampled() takes smooth_sampled or "
        "diagonal_modulated");
  PeriodicHamiltonian p;
  p.dim_ = dim;
  p.period_ = period;
  p.form_ = form;
  p.evaluator_ = std::move(evaluator);
  p.check_periodicity();
  return p;
}

void PeriodicHamiltonian::check_periodicity() const {
  const int samples = 16;
  for (int i = 0; i < samples; ++i) {
    double t = period_ * (i + 0.5) / samples;
    Matrix a = evaluator_(t);
    if (a.rows() != dim_ || a.cols() != dim_)
      throw DimensionMismatch("PeriodicHamiltonian: evaluator dim mismatch");
    if (!is_hermitian(a, 1e-12))
      throw InvariantViolation("PeriodicHamiltonian: evaluator not Hermitian");
    if ((a - evaluator_(t + period_)).norm() > 1e-12)
      throw InvariantViolation(
          "PeriodicHamiltonian: evaluator is not periodic with the declared "
          "period");
    if (form_ == HamiltonianForm::diagonal_modulated) {
      Matrix off = a;
      off.diagonal().setZero();
      if (off.norm() > 1e-12)
        throw InvariantViolation(
            "PeriodicHamiltonian: diagonal_modulated evaluator returned "
            "off-diagonal entries");
    }
  }
}

Matrix PeriodicHamiltonian::at(double t) const {
  double r = std::fmod(t, period_);
  if (r < 0) r += period_;
  switch (form_) {
    case HamiltonianForm::constant:
      return segments_.front().second;
    case HamiltonianForm::piecewise_constant: {
      double acc = 0.0;
      for (const auto& [dur, h] : segments_) {
        acc += dur;
        if (r < acc) return h;
      }
      return segments_.back().second;
    }
    default:
      return evaluator_(r);
  }
}

// ---------------------------------------------------------------------------
// Propagator

Propagator::Propagator(int dim, double period,
                       std::function<Matrix(double)> u_in_period)
    : dim_(dim), period_(period), u_(std::move(u_in_period)) {
  monodromy_ = u_(period_);
  Eigen::ComplexSchur<Matrix> schur(monodromy_);
  if (schur.info() != Eigen::Success)
    throw NumericalFailure("Propagator: Schur decomposition failed");
  schur_q_ = schur.matrixU();
  schur_eigs_ = schur.matrixT().diagonal();
}

Matrix Propagator::at(double t) const {
  if (t < 0) throw InvariantViolation("Propagator: t must be >= 0");
  double k = std::floor(t / period_ + 1e-12);
  double r = t - k * period_;
  if (r < 0) r = 0;
  Matrix u = u_(r);
  long n = static_cast<long>(k);
  if (n == 0) return u;
  Vector powers(dim_);
  for (int i = 0; i < dim_; ++i)
    powers(i) = std::pow(schur_eigs_(i), static_cast<double>(n));
  return u * (schur_q_ * powers.asDiagonal() * schur_q_.adjoint());
}

namespace {

struct SegmentExp {
  Matrix vectors;
  RealVector values;
  double duration;
};

Matrix segment_step(const SegmentExp& seg, double dt) {
  Vector phases(seg.values.size());
  for (Eigen::Index i = 0; i < seg.values.size(); ++i)
    phases(i) = std::exp(-kImag * seg.values(i) * dt);
  return seg.vectors * phases.asDiagonal() * seg.vectors.adjoint();
}

}  // namespace

Propagator make_propagator(const PeriodicHamiltonian& h, int steps_per_period) {
  if (steps_per_period < 64)
    throw InvariantViolation("make_propagator: steps_per_period must be >= 64");
  const double tau = h.period();
  const int dim = h.dim();

  std::function<Matrix(double)> u;
  switch (h.form()) {
    case HamiltonianForm::constant: {
      Matrix hm = h.at(0.0);
      u = [hm](double t) { return hermitian_propagator(hm, t); };
      break;
    }
    case HamiltonianForm::piecewise_constant: {
      auto segs = std::make_shared<std::vector<SegmentExp>>();
      for (const auto& [dur, m] : h.segments()) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        segs->push_back({es.eigenvectors(), es.eigenvalues(), dur});
      }
      u = [segs, dim](double t) {
        Matrix acc = Matrix::Identity(dim, dim);
        double left = t;
        for (const auto& seg : *segs) {
          if (left <= 0) break;
          double dt = std::min(left, seg.duration);
          acc = segment_step(seg, dt) * acc;
          left -= dt;
        }
        return acc;
      };
      break;
    }
    case HamiltonianForm::diagonal_modulated: {
      PeriodicHamiltonian hc = h;
      u = [hc, dim](double t) {
        Vector phases(dim);
        for (int j = 0; j < dim; ++j) {
          double phi = t == 0.0
                           ? 0.0
                           : integrate(
                                 [&hc, j](double s) {
                                   return hc.at(s)(j, j).real();
                                 },
                                 0.0, t, 1e-13);
          phases(j) = std::exp(-kImag * phi);
        }
        Matrix m = Matrix::Zero(dim, dim);
        m.diagonal() = phases;
        return m;
      };
      break;
    }
    case HamiltonianForm::smooth_sampled: {
      PeriodicHamiltonian hc = h;
      double dt = tau / steps_per_period;
      u = [hc, dim, dt](double t) {
        Matrix acc = Matrix::Identity(dim, dim);
        double done = 0.0;
        while (done < t - 1e-15 * (t + 1.0)) {
          double step = std::min(dt, t - done);
          Matrix hm = hc.at(done + 0.5 * step);
          acc = hermitian_propagator(hm, step) * acc;
          done += step;
        }
        return acc;
      };
      break;
    }
  }

  Propagator prop(dim, tau, std::move(u));
  double drift = (prop.monodromy_matrix().adjoint() * prop.monodromy_matrix() -
                  Matrix::Identity(dim, dim))
                     .norm();
  if (drift > 1e-8) {
    std::ostringstream os;
    os << "make_propagator: per-period unitarity drift " << drift
       << " exceeds 1e-8; increase steps_per_period";
    throw AccuracyError(os.str());
  }
  return prop;
}

UnitaryOperator propagate(const PeriodicHamiltonian& h, double t,
                          int steps_per_period) {
  return UnitaryOperator(make_propagator(h, steps_per_period).at(t));
}

// ---------------------------------------------------------------------------
// Monodromy and quasi-energies

MonodromyResult monodromy(const Propagator& prop, double degeneracy_tol) {
  const double tau = prop.period();
  const double omega_drive = 2.0 * kPi / tau;
  const int dim = prop.dim();
  Matrix m = prop.monodromy_matrix();

  Eigen::ComplexSchur<Matrix> schur(m);
  if (schur.info() != Eigen::Success)
    throw NumericalFailure("monodromy: Schur decomposition failed");
  const Matrix& q = schur.matrixU();
  Vector lambda = schur.matrixT().diagonal();

  // Cluster eigenvalues on the unit circle; |lambda_i - lambda_j| ~ tau *
  // |eps_i - eps_j| for nearby phases.
  std::vector<int> cluster_of(dim, -1);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < dim; ++i) {
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(lambda(i) - lambda(clusters[c].front())) <=
          degeneracy_tol * tau) {
        cluster_of[i] = static_cast<int>(c);
        break;
      }
    }
    if (cluster_of[i] < 0) {
      cluster_of[i] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    clusters[cluster_of[i]].push_back(i);
  }

  struct Level {
    double eps;
    Matrix proj;
  };
  std::vector<Level> levels;
  bool merged = false;
  for (const auto& members : clusters) {
    if (members.size() > 1) merged = true;
    Complex mean_lambda{0.0, 0.0};
    Matrix proj = Matrix::Zero(dim, dim);
    for (int i : members) {
      mean_lambda += lambda(i);
      proj += q.col(i) * q.col(i).adjoint();
    }
    mean_lambda /= std::abs(mean_lambda);
    // lambda = e^{-i theta}; quasi-energy eps = theta / tau folded to
    // (-Omega/2, Omega/2].
    double eps = -std::arg(mean_lambda) / tau;
    if (eps < -0.5 * omega_drive * (1.0 - 1e-12)) eps += omega_drive;
    levels.push_back({eps, std::move(proj)});
  }
  std::sort(levels.begin(), levels.end(),
            [](const Level& a, const Level& b) { return a.eps < b.eps; });

  Matrix hbar = Matrix::Zero(dim, dim);
  std::vector<double> eps_list;
  for (const auto& lv : levels) {
    hbar += lv.eps * lv.proj;
    eps_list.push_back(lv.eps);
  }
  hbar = hermitize(hbar);

  MonodromyResult out{UnitaryOperator(m),
                      eps_list,
                      HermitianOperator(hbar),
                      {},
                      tau,
                      omega_drive,
                      merged};

  SpectralDecomposition dec;
  dec.dim = dim;
  dec.eigenvalues = eps_list;
  for (auto& lv : levels) dec.projectors.push_back(std::move(lv.proj));
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
  out.quasi_spec = std::move(dec);
  return out;
}

MonodromyResult monodromy(const PeriodicHamiltonian& h, int steps_per_period,
                          double degeneracy_tol) {
  return monodromy(make_propagator(h, steps_per_period), degeneracy_tol);
}

// ---------------------------------------------------------------------------
// Harmonic decomposition

int FloquetDecomposition::bohr_index_of(double omega) const {
  const auto& bf = quasi_spec.bohr_frequencies;
  int best = 0;
  double best_err = std::abs(bf[0] - omega);
  for (std::size_t i = 1; i < bf.size(); ++i) {
    if (std::abs(bf[i] - omega) < best_err) {
      best_err = std::abs(bf[i] - omega);
      best = static_cast<int>(i);
    }
  }
  return best;
}

FloquetDecomposition harmonic_decompose(const HermitianOperator& s,
                                        const Propagator& prop,
                                        const MonodromyResult& mono,
                                        int q_max, int grid_n,
                                        double recon_tol) {
  if (q_max < 1)
    throw InvariantViolation("harmonic_decompose: q_max must be >= 1");
  if (grid_n < 4 * q_max + 4)
    throw InvariantViolation("harmonic_decompose: grid_n must be >= 4*Q + 4");
  if (s.dim() != prop.dim())
    throw DimensionMismatch("harmonic_decompose: dimension mismatch");

  const double tau = prop.period();
  const double omega_drive = mono.drive_omega;
  const auto& spec = mono.quasi_spec;
  const int n_levels = static_cast<int>(spec.projectors.size());

  FloquetDecomposition fd;
  fd.period = tau;
  fd.drive_omega = omega_drive;
  fd.quasi_energies = mono.quasi_energies;
  fd.averaged_hamiltonian = mono.averaged_hamiltonian;
  fd.quasi_spec = spec;
  fd.truncation = q_max;
  fd.quasi_degenerate = mono.degenerate;

  // Sample W(t) = U^dag S U over one period.
  std::vector<Matrix> w(grid_n);
  for (int n = 0; n < grid_n; ++n) {
    Matrix u = prop.at(tau * n / grid_n);
    w[n] = u.adjoint() * s.entries() * u;
  }

  // Project onto quasi-Bohr sectors, strip the e^{i omega t} phase, and DFT
  // the remaining periodic signal in q.
  for (int k = 0; k < n_levels; ++k) {
    for (int l = 0; l < n_levels; ++l) {
      double omega = spec.bohr_of(k, l);
      int w_idx = fd.bohr_index_of(omega);
      std::vector<Matrix> g(grid_n);
      bool sector_empty = true;
      for (int n = 0; n < grid_n; ++n) {
        double t = tau * n / grid_n;
        g[n] = std::exp(-kImag * omega * t) *
               (spec.projectors[k] * w[n] * spec.projectors[l]).eval();
        if (sector_empty && g[n].norm() > kComponentNormFloor)
          sector_empty = false;
      }
      if (sector_empty) continue;
      for (int q = -q_max; q <= q_max; ++q) {
        Matrix c = Matrix::Zero(s.dim(), s.dim());
        for (int n = 0; n < grid_n; ++n) {
          double t = tau * n / grid_n;
          c += g[n] * std::exp(-kImag * (q * omega_drive) * t);
        }
        c /= static_cast<double>(grid_n);
        auto key = std::make_pair(w_idx, q);
        auto it = fd.harmonics.find(key);
        if (it == fd.harmonics.end())
          fd.harmonics.emplace(key, std::move(c));
        else
          it->second += c;
      }
    }
  }

  for (auto it = fd.harmonics.begin(); it != fd.harmonics.end();) {
    if (frobenius(it->second) < kComponentNormFloor)
      it = fd.harmonics.erase(it);
    else
      ++it;
  }

  // Off-grid reconstruction defect.
  double err = 0.0;
  for (int j = 0; j < kOffGridPoints; ++j) {
    double t = tau * (j + kOffGridShift) / kOffGridPoints;
    Matrix u = prop.at(t);
    Matrix target = u.adjoint() * s.entries() * u;
    Matrix sum = Matrix::Zero(s.dim(), s.dim());
    for (const auto& [key, op] : fd.harmonics) {
      double nu = fd.omega_at(key.first) + key.second * omega_drive;
      sum += std::exp(kImag * nu * t) * op;
    }
    err = std::max(err, (target - sum).norm());
  }
  fd.reconstruction_error = err;
  if (err > recon_tol) {
    std::ostringstream os;
    os << "harmonic_decompose: reconstruction error " << err << " exceeds "
       << recon_tol << " at Q = " << q_max
       << "; increase Q (or grid_n) for this drive";
    throw TruncationError(os.str());
  }
  return fd;
}

FloquetDecomposition harmonic_decompose(const HermitianOperator& s,
                                        const PeriodicHamiltonian& h,
                                        int q_max, int grid_n,
                                        int steps_per_period,
                                        double recon_tol) {
  Propagator prop = make_propagator(h, steps_per_period);
  MonodromyResult mono = monodromy(prop);
  return harmonic_decompose(s, prop, mono, q_max, grid_n, recon_tol);
}

// ---------------------------------------------------------------------------
// Frame rotation

Matrix heisenberg_frame(const Matrix& op, const UnitaryOperator& u) {
  if (op.rows() != u.dim() || op.cols() != u.dim())
    throw DimensionMismatch("heisenberg_frame: dimension mismatch");
  return u.entries() * op * u.entries().adjoint();
}

Superoperator heisenberg_frame(const Superoperator& s,
                               const UnitaryOperator& u) {
  if (s.dim() != u.dim())
    throw DimensionMismatch("heisenberg_frame: dimension mismatch");
  Superoperator k = conjugation_superop(u.entries());
  return Superoperator(k.matrix() * s.matrix() * k.matrix().adjoint(), s.dim());
}

}  // namespace floq
