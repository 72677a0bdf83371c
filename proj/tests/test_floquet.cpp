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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "floq/errors.hpp"
#include "floq/floquet.hpp"
#include "floq/qubit.hpp"
#include "test_helpers.hpp"

using namespace floq;
using test::random_hermitian;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Fixed rotated qutrit base Hamiltonian with quasi-energies safely inside
// the first Brillouin zone at Omega = 1.
Matrix qutrit_base() {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << -0.31, 0.04, 0.36;
  std::mt19937_64 rng(2024);
  Matrix r = random_hermitian(3, rng);
  Matrix u = hermitian_propagator(r, 0.7);
  return hermitize(u * d * u.adjoint());
}

// Two-segment drive H0 +- eps V, normalized direction.
PeriodicHamiltonian weak_two_step(double eps, Matrix* v_out = nullptr) {
  Matrix h0 = qutrit_base();
  std::mt19937_64 rng(5150);
  Matrix v = random_hermitian(3, rng);
  v /= v.norm();
  if (v_out) *v_out = v;
  return PeriodicHamiltonian::piecewise(
      {{0.5 * kTau, HermitianOperator(h0 + eps * v)},
       {0.5 * kTau, HermitianOperator(h0 - eps * v)}});
}

}  // namespace

TEST_CASE("propagate: constant Hamiltonian is the exact exponential") {
  std::mt19937_64 rng(11);
  Matrix h = random_hermitian(3, rng);
  auto ph = PeriodicHamiltonian::constant(HermitianOperator(h), 1.7);
  for (double t : {0.4, 1.7, 5.3}) {
    UnitaryOperator u = propagate(ph, t);
    CHECK((u.entries() - hermitian_propagator(h, t)).norm() < 1e-10);
  }
}

TEST_CASE("propagate: diagonal modulation matches the quadrature oracle") {
  const double omega0 = 1.3, amp = 0.6;
  auto eval = [omega0, amp](double t) {
    Matrix m = Matrix::Zero(2, 2);
    double w = omega0 + amp * std::sin(t);
    m(0, 0) = 0.5 * w;
    m(1, 1) = -0.5 * w;
    return m;
  };
  auto ph = PeriodicHamiltonian::sampled(2, kTau, eval,
                                         HamiltonianForm::diagonal_modulated);
  for (double t : {0.9, 3.7}) {
    UnitaryOperator u = propagate(ph, t);
    // Independent oracle: composite Simpson on a fine fixed grid.
    int n = 20000;
    double integral = 0.0;
    for (int i = 0; i < n; ++i) {
      double a = t * i / n, b = t * (i + 1) / n;
      auto f = [&](double s) { return omega0 + amp * std::sin(s); };
      integral += (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }
    Complex expected = std::exp(-kImag * 0.5 * integral);
    CHECK(std::abs(u.entries()(0, 0) - expected) < 1e-9);
    CHECK(std::abs(u.entries()(1, 1) - std::conj(expected)) < 1e-9);
  }
}

TEST_CASE("propagate: piecewise drive is the product of exact exponentials") {
  std::mt19937_64 rng(23);
  Matrix h1 = random_hermitian(3, rng);
  Matrix h2 = random_hermitian(3, rng);
  auto ph = PeriodicHamiltonian::piecewise(
      {{1.1, HermitianOperator(h1)}, {0.7, HermitianOperator(h2)}});
  UnitaryOperator u = propagate(ph, 1.8);
  Matrix expected = hermitian_propagator(h2, 0.7) * hermitian_propagator(h1, 1.1);
  CHECK((u.entries() - expected).norm() < 1e-10);
  // halfway into the second segment
  UnitaryOperator u_mid = propagate(ph, 1.45);
  Matrix expected_mid =
      hermitian_propagator(h2, 0.35) * hermitian_propagator(h1, 1.1);
  CHECK((u_mid.entries() - expected_mid).norm() < 1e-10);
}

TEST_CASE("propagate enforces the step budget precondition") {
  auto ph = PeriodicHamiltonian::constant(
      HermitianOperator(0.5 * pauli_z()), 1.0);
  CHECK_THROWS_AS(propagate(ph, 1.0, 32), InvariantViolation);
}

TEST_CASE("unitarity of returned propagators") {
  Matrix v;
  auto ph = weak_two_step(0.2, &v);
  for (double t : {0.3, 2.9, 11.0}) {
    Matrix u = make_propagator(ph).at(t);
    CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).norm() < 1e-10);
  }
}

TEST_CASE("Richardson consistency: doubling steps shifts U(tau) by <= 1e-8") {
  // Mild smooth noncommuting drive inside the default step budget.
  const double eps = 5e-4;
  auto eval = [eps](double t) {
    return (0.5 * pauli_z() + eps * std::cos(t) * pauli_x()).eval();
  };
  auto ph = PeriodicHamiltonian::sampled(2, kTau, eval);
  Matrix u1 = make_propagator(ph, 1024).at(kTau);
  Matrix u2 = make_propagator(ph, 2048).at(kTau);
  CHECK((u1 - u2).norm() <= 1e-8);
}

TEST_CASE("monodromy: constant qubit at large Omega is unfolded") {
  auto ph = PeriodicHamiltonian::constant(
      HermitianOperator(0.5 * pauli_z()), 2.0 * std::numbers::pi / 10.0);
  MonodromyResult mono = monodromy(ph);
  REQUIRE(mono.quasi_energies.size() == 2);
  CHECK(mono.quasi_energies[0] == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(mono.quasi_energies[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_FALSE(mono.degenerate);
}

TEST_CASE("monodromy: diagonal modulation gives Hbar = omega0 sigma_z / 2") {
  // omega(t) = omega0 + A sin(Omega t), mean omega0, Omega large enough that
  // +-omega0/2 stays inside the zone.
  const double omega0 = 0.8, amp = 0.3;
  auto eval = [omega0, amp](double t) {
    Matrix m = Matrix::Zero(2, 2);
    double w = omega0 + amp * std::sin(t);
    m(0, 0) = 0.5 * w;
    m(1, 1) = -0.5 * w;
    return m;
  };
  auto ph = PeriodicHamiltonian::sampled(2, kTau, eval,
                                         HamiltonianForm::diagonal_modulated);
  MonodromyResult mono = monodromy(ph);
  Matrix expected = 0.5 * omega0 * pauli_z();
  CHECK((mono.averaged_hamiltonian.entries() - expected).norm() < 1e-9);
}

TEST_CASE("monodromy: e^{-i Hbar tau} reproduces U(tau,0)") {
  auto ph = weak_two_step(0.35);
  Propagator prop = make_propagator(ph);
  MonodromyResult mono = monodromy(prop);
  Matrix rebuilt =
      hermitian_propagator(mono.averaged_hamiltonian.entries(), kTau);
  CHECK((rebuilt - prop.monodromy_matrix()).norm() < 1e-8);
}

TEST_CASE("monodromy flags quasi-energy degeneracy (omega0 multiple of Omega)") {
  // U(tau) = exp(-i omega0 tau sigma_z / 2) with omega0 = 2 Omega: both
  // eigenvalues coincide at +1.
  const double omega0 = 2.0;
  auto ph = PeriodicHamiltonian::constant(
      HermitianOperator(0.5 * omega0 * pauli_z()), kTau);
  MonodromyResult mono = monodromy(ph);
  CHECK(mono.degenerate);
  CHECK(mono.quasi_energies.size() == 1);
}

TEST_CASE("harmonic_decompose: constant drive keeps only q = 0") {
  std::mt19937_64 rng(41);
  Matrix h = random_hermitian(3, rng);
  h *= 0.3 / h.norm();  // keep the spectrum inside the zone at Omega = 1
  Matrix s = random_hermitian(3, rng);
  auto ph = PeriodicHamiltonian::constant(HermitianOperator(h), kTau);
  auto dec = spectral_decompose(HermitianOperator(h));
  auto comps = bohr_components(HermitianOperator(s), dec);

  FloquetDecomposition fd =
      harmonic_decompose(HermitianOperator(s), ph, 4, 64);
  CHECK(fd.reconstruction_error < 1e-9);
  for (const auto& [key, op] : fd.harmonics) {
    if (key.second != 0) {
      CHECK(op.norm() < 1e-10);
      continue;
    }
    double omega = fd.omega_at(key.first);
    // match against the static Bohr component at this frequency
    double best = 1e9;
    const Matrix* match = nullptr;
    for (const auto& [w, sw] : comps)
      if (std::abs(w - omega) < best) {
        best = std::abs(w - omega);
        match = &sw;
      }
    REQUIRE(match != nullptr);
    CHECK(best < 1e-9);
    CHECK((op - *match).norm() < 1e-10);
  }
}

TEST_CASE("harmonic_decompose: sinusoidal qubit weights match P(q)") {
  const double omega0 = 1.0, amp = 0.8, period = kTau / 2.7;
  auto eval = [omega0, amp, period](double t) {
    Matrix m = Matrix::Zero(2, 2);
    double w = omega0 + amp * std::sin(2.0 * std::numbers::pi / period * t);
    m(0, 0) = 0.5 * w;
    m(1, 1) = -0.5 * w;
    return m;
  };
  auto ph = PeriodicHamiltonian::sampled(2, period, eval,
                                         HamiltonianForm::diagonal_modulated);
  FloquetDecomposition fd =
      harmonic_decompose(HermitianOperator(pauli_x()), ph, 8, 64);
  CHECK(fd.reconstruction_error < 1e-8);

  ModulationProfile profile =
      ModulationProfile::sinusoidal(omega0, period, amp);
  int idx = fd.bohr_index_of(omega0);
  REQUIRE(std::abs(fd.omega_at(idx) - omega0) < 1e-9);
  for (int q = -6; q <= 6; ++q) {
    double weight = 0.0;
    auto it = fd.harmonics.find({idx, q});
    if (it != fd.harmonics.end()) {
      double n = it->second.norm();
      weight = n * n;
    }
    CHECK(weight == doctest::Approx(pq(profile, q)).epsilon(1e-8));
  }
}

TEST_CASE("harmonic_decompose: weak two-step qutrit reconstructs at Q = 20") {
  auto ph = weak_two_step(3e-6);
  std::mt19937_64 rng(67);
  Matrix s = random_hermitian(3, rng);
  s /= s.norm();
  FloquetDecomposition fd =
      harmonic_decompose(HermitianOperator(s), ph, 20, 128);
  CHECK(fd.reconstruction_error <= 1e-6);
}

TEST_CASE("harmonic_decompose: truncation failure raises TruncationError") {
  auto ph = weak_two_step(0.4);  // strong kinks, tiny Q
  std::mt19937_64 rng(68);
  Matrix s = random_hermitian(3, rng);
  CHECK_THROWS_AS(harmonic_decompose(HermitianOperator(s), ph, 1, 64),
                  TruncationError);
}

TEST_CASE("harmonic pairing S_{-omega,-q} = S_{omega q}^dag") {
  const double omega0 = 1.0, amp = 0.5;
  auto eval = [omega0, amp](double t) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 0.5 * (omega0 + amp * std::sin(t));
    m(1, 1) = -0.5 * (omega0 + amp * std::sin(t));
    return m;
  };
  auto ph = PeriodicHamiltonian::sampled(2, kTau, eval,
                                         HamiltonianForm::diagonal_modulated);
  FloquetDecomposition fd =
      harmonic_decompose(HermitianOperator(pauli_x()), ph, 8, 64);
  for (const auto& [key, op] : fd.harmonics) {
    double omega = fd.omega_at(key.first);
    int partner_idx = fd.bohr_index_of(-omega);
    auto it = fd.harmonics.find({partner_idx, -key.second});
    REQUIRE(it != fd.harmonics.end());
    CHECK((it->second - op.adjoint()).norm() < 1e-10);
  }
}

TEST_CASE("harmonic_decompose validates the grid precondition") {
  auto ph = PeriodicHamiltonian::constant(
      HermitianOperator(0.5 * pauli_z()), kTau);
  CHECK_THROWS_AS(
      harmonic_decompose(HermitianOperator(pauli_x()), ph, 8, 16),
      InvariantViolation);
}

TEST_CASE("heisenberg_frame: identity and the sigma_z -> sigma_y rotation") {
  std::mt19937_64 rng(3);
  Matrix op = random_hermitian(2, rng);
  UnitaryOperator id(Matrix::Identity(2, 2));
  CHECK((heisenberg_frame(op, id) - op).norm() < 1e-15);

  UnitaryOperator u(hermitian_propagator(pauli_x(), std::numbers::pi / 4.0));
  Matrix rotated = heisenberg_frame(pauli_z(), u);
  Matrix direct = u.entries() * pauli_z() * u.entries().adjoint();
  CHECK((rotated - direct).norm() < 1e-14);
  // e^{-i sigma_x pi/4} sigma_z e^{+i sigma_x pi/4} = -sigma_y
  CHECK((rotated + pauli_y()).norm() < 1e-12);
}

TEST_CASE("heisenberg_frame superoperator transports stationary states") {
  Superoperator d = dissipator_superop(sigma_minus());
  Matrix ground = Matrix::Zero(2, 2);
  ground(1, 1) = 1.0;
  CHECK(d.apply(ground).norm() < 1e-14);

  std::mt19937_64 rng(9);
  UnitaryOperator u(hermitian_propagator(random_hermitian(2, rng), 0.83));
  Superoperator rotated = heisenberg_frame(d, u);
  Matrix rotated_state = u.entries() * ground * u.entries().adjoint();
  CHECK(rotated.apply(rotated_state).norm() < 1e-13);
}
