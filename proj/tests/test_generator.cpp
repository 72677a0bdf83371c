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
#include <map>
#include <numbers>

#include "floq/errors.hpp"
#include "floq/generator.hpp"
#include "floq/qubit.hpp"
#include "test_helpers.hpp"

using namespace floq;
using test::random_hermitian;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

PeriodicHamiltonian sinusoidal_qubit_drive(double omega0, double amp,
                                           double period) {
  auto eval = [omega0, amp, period](double t) {
    Matrix m = Matrix::Zero(2, 2);
    double w = omega0 +
               amp * std::sin(2.0 * std::numbers::pi / period * t);
    m(0, 0) = 0.5 * w;
    m(1, 1) = -0.5 * w;
    return m;
  };
  return PeriodicHamiltonian::sampled(2, period, eval,
                                      HamiltonianForm::diagonal_modulated);
}

// (effective down, up) rates keyed by the exchanged quantum nu.
std::map<long long, std::pair<double, double>> effective_rates(
    const GeneratorBundle& bundle, const std::string& bath) {
  std::map<long long, std::pair<double, double>> out;
  for (const auto& ch : bundle.channels) {
    if (ch.bath_label != bath) continue;
    double w2 = ch.jump_down.squaredNorm();
    long long key = std::llround(ch.nu * 1e9);
    out[key].first += w2 * ch.rate_down;
    out[key].second += w2 * ch.rate_up;
  }
  return out;
}

}  // namespace

TEST_CASE("build_static: qubit with one flat bath has a single emission channel") {
  const double omega0 = 1.0, gamma0 = 0.4, temperature = 2.0;
  auto bundle = build_static(
      HermitianOperator(0.5 * omega0 * pauli_z()),
      {{HermitianOperator(pauli_x()),
        make_flat_bath("b", temperature, gamma0)}});
  REQUIRE(bundle.channels.size() == 1);
  const auto& ch = bundle.channels.front();
  CHECK(ch.omega == doctest::Approx(omega0).epsilon(1e-12));
  CHECK(ch.q == 0);
  CHECK(ch.rate_down == doctest::Approx(gamma0).epsilon(1e-14));
  CHECK(ch.rate_up ==
        doctest::Approx(gamma0 * std::exp(-omega0 / temperature))
            .epsilon(1e-13));
  CHECK((ch.jump_down - sigma_minus()).norm() < 1e-12);
}

TEST_CASE("build_static: Gibbs state is stationary") {
  std::mt19937_64 rng(101);
  for (int dim : {2, 3, 4}) {
    Matrix h = random_hermitian(dim, rng);
    Matrix s = random_hermitian(dim, rng);
    double temperature = 1.3;
    auto bundle =
        build_static(HermitianOperator(h),
                     {{HermitianOperator(s),
                       make_ohmic_bath("o", temperature, 1.0, 8.0)}});
    DensityMatrix gibbs = gibbs_state(HermitianOperator(h), temperature);
    CHECK(frobenius(bundle.total.apply(gibbs.entries())) < 1e-10);
  }
}

TEST_CASE("build_static: generator commutes with the Hamiltonian part") {
  std::mt19937_64 rng(103);
  for (int dim : {2, 3, 4}) {
    Matrix h = random_hermitian(dim, rng);
    Matrix s = random_hermitian(dim, rng);
    auto bundle = build_static(
        HermitianOperator(h),
        {{HermitianOperator(s), make_flat_bath("b", 0.9, 0.7)}});
    Matrix k = hamiltonian_superop(h).matrix();
    const Matrix& l = bundle.total.matrix();
    CHECK((l * k - k * l).norm() < 1e-10);
    // exhaustive basis check
    Superoperator ad(k, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        Matrix e = Matrix::Zero(dim, dim);
        e(a, b) = 1.0;
        Matrix lhs = bundle.total.apply(ad.apply(e));
        Matrix rhs = ad.apply(bundle.total.apply(e));
        CHECK((lhs - rhs).norm() < 1e-10);
      }
  }
}

TEST_CASE("build_static: omega = 0 coupling content becomes pure dephasing") {
  // Coupling with diagonal part in the H eigenbasis.
  Matrix h = Matrix::Zero(3, 3);
  h.diagonal() << -0.4, 0.1, 0.5;
  Matrix s = Matrix::Zero(3, 3);
  s.diagonal() << 1.0, -0.5, 0.25;
  s(0, 1) = s(1, 0) = 0.3;
  auto bundle = build_static(
      HermitianOperator(h),
      {{HermitianOperator(s), make_flat_bath("b", 1.0, 0.5)}});
  const ChannelGenerator* deph = bundle.find_channel("b", 0, 0.0);
  REQUIRE(deph != nullptr);
  CHECK(deph->rate_down == deph->rate_up);
  CHECK(deph->rate_down == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_FALSE(deph->local_gibbs.has_value());
  CHECK(is_hermitian(deph->jump_down, 1e-12));
}

TEST_CASE("channel invariants: KMS pairing, trace annihilation, CP") {
  auto model = make_qubit_model(
      ModulationProfile::sinusoidal(1.0, kTau, 0.5),
      {make_flat_bath("h", 2.0, 0.3), make_ohmic_bath("c", 0.5, 1.0, 6.0)},
      6);
  auto bundle = build_qubit_bundle(model);
  REQUIRE(bundle.channels.size() > 4);
  for (const auto& ch : bundle.channels) {
    CHECK(ch.rate_up ==
          doctest::Approx(std::exp(-ch.nu / ch.bath_temperature) *
                          ch.rate_down)
              .epsilon(1e-12));
    CHECK(ch.superop.trace_annihilation_defect() < 1e-12);
    auto verdict = choi_positivity_check(ch.superop);
    CHECK(verdict.cp_ok);
  }
  CHECK(bundle.total.trace_annihilation_defect() < 1e-12);
  CHECK(choi_positivity_check(bundle.total).cp_ok);

  // total equals the channel sum
  Superoperator resum = Superoperator::zero(2);
  for (const auto& ch : bundle.channels) resum += ch.superop;
  CHECK((resum.matrix() - bundle.total.matrix()).norm() < 1e-12);
}

TEST_CASE("per-channel local Gibbs states are annihilated by their channel") {
  auto model = make_qubit_model(
      ModulationProfile::sinusoidal(1.0, kTau / 0.73, 0.4),
      {make_flat_bath("h", 2.0, 0.3), make_flat_bath("c", 0.5, 0.6)}, 5);
  auto bundle = build_qubit_bundle(model);
  for (const auto& ch : bundle.channels) {
    REQUIRE(ch.local_gibbs.has_value());
    CHECK(frobenius(ch.superop.apply(ch.local_gibbs->entries())) < 1e-10);
  }
}

TEST_CASE("build_floquet: no-driving limit reduces to build_static") {
  Matrix h = 0.5 * pauli_z();
  Matrix s = pauli_x();
  BathSpec bath = make_flat_bath("b", 1.0, 0.8);
  auto static_bundle = build_static(HermitianOperator(h),
                                    {{HermitianOperator(s), bath}});
  // constant drive at Omega = 4 (no folding), Q = 1: the q != 0 harmonics
  // vanish and only the static channels survive
  auto ph = PeriodicHamiltonian::constant(HermitianOperator(h), kTau / 4.0);
  auto fd = harmonic_decompose(HermitianOperator(s), ph, 1, 64);
  auto floquet_bundle = build_floquet({fd}, {bath});
  CHECK((floquet_bundle.total.matrix() - static_bundle.total.matrix()).norm() <
        1e-12);
  CHECK(floquet_bundle.channels.size() == static_bundle.channels.size());
}

TEST_CASE("build_floquet: sinusoidal qubit channel rates match P(q) G(nu)") {
  const double omega0 = 1.0, amp = 0.8, period = kTau / 2.7;
  const double drive = 2.0 * std::numbers::pi / period;
  BathSpec bath = make_flat_bath("b", 1.4, 0.9);
  auto ph = sinusoidal_qubit_drive(omega0, amp, period);
  auto fd = harmonic_decompose(HermitianOperator(pauli_x()), ph, 8, 64);
  auto bundle = build_floquet({fd}, {bath});

  ModulationProfile profile =
      ModulationProfile::sinusoidal(omega0, period, amp);
  auto rates = effective_rates(bundle, "b");
  for (int q = -6; q <= 6; ++q) {
    double nu = omega0 - q * drive;
    double expected_down = pq(profile, q) * bath.rate(nu);
    double expected_up = pq(profile, q) * bath.rate(-nu);
    auto it = rates.find(std::llround(nu * 1e9));
    double down = it == rates.end() ? 0.0 : it->second.first;
    double up = it == rates.end() ? 0.0 : it->second.second;
    CHECK(down == doctest::Approx(expected_down).epsilon(1e-8));
    CHECK(up == doctest::Approx(expected_up).epsilon(1e-8));
  }
}

TEST_CASE("build_floquet rejects omega = 0 harmonics with q != 0") {
  // Weak noncommuting two-step drive with a coupling that has diagonal
  // content in the quasi-energy basis: the zero sector oscillates.
  Matrix h0 = Matrix::Zero(3, 3);
  h0.diagonal() << -0.31, 0.04, 0.36;
  std::mt19937_64 rng(77);
  Matrix v = random_hermitian(3, rng);
  v /= v.norm();
  auto ph = PeriodicHamiltonian::piecewise(
      {{0.5 * kTau, HermitianOperator(h0 + 3e-6 * v)},
       {0.5 * kTau, HermitianOperator(h0 - 3e-6 * v)}});
  Matrix s = random_hermitian(3, rng);
  s /= s.norm();
  auto fd = harmonic_decompose(HermitianOperator(s), ph, 20, 128);
  CHECK_THROWS_AS(build_floquet({fd}, {make_flat_bath("b", 1.0, 1.0)}),
                  UnsupportedChannel);
}

TEST_CASE("schroedinger_rhs: trace-free and population-decoupling") {
  auto model = make_qubit_model(ModulationProfile::pulse_train(1.0, kTau),
                                {make_flat_bath("b", 1.0, 0.5)}, 15);
  auto bundle = build_qubit_bundle(model);
  std::mt19937_64 rng(19);
  Matrix rho = test::random_density(2, rng);
  Matrix h_t = 0.5 * 1.3 * pauli_z();  // instantaneous H(t)
  Matrix rhs = schroedinger_rhs(bundle, h_t, rho);
  CHECK(std::abs(rhs.trace()) < 1e-12);

  // diagonal in, diagonal out (paper's qubit block structure)
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.3;
  diag(1, 1) = 0.7;
  Matrix out = schroedinger_rhs(bundle, h_t, diag);
  CHECK(std::abs(out(0, 1)) < 1e-14);
  CHECK(std::abs(out(1, 0)) < 1e-14);

  // coherence in, coherence out
  Matrix coh = Matrix::Zero(2, 2);
  coh(0, 1) = 1.0;
  Matrix out2 = schroedinger_rhs(bundle, h_t, coh);
  CHECK(std::abs(out2(0, 0)) < 1e-14);
  CHECK(std::abs(out2(1, 1)) < 1e-14);
}

TEST_CASE("schroedinger_rhs at the steady state reduces to the unitary part") {
  auto model = make_qubit_model(ModulationProfile::constant_profile(1.0, kTau),
                                {make_flat_bath("b", 1.0, 0.5)}, 1);
  auto bundle = build_qubit_bundle(model);
  DensityMatrix gibbs = gibbs_state(bundle.hbar, 1.0);
  Matrix rhs = schroedinger_rhs(bundle, bundle.hbar.entries(), gibbs.entries());
  // [Hbar, rho] = 0 and L rho = 0
  CHECK(rhs.norm() < 1e-12);
}

TEST_CASE("equal-temperature floquet bundle relaxes to the global Gibbs") {
  const double temperature = 1.1;
  auto model = make_qubit_model(
      ModulationProfile::constant_profile(0.9, kTau / 4.0),
      {make_flat_bath("a", temperature, 0.4),
       make_ohmic_bath("b", temperature, 0.8, 5.0)},
      1);
  auto bundle = build_qubit_bundle(model);
  DensityMatrix gibbs = gibbs_state(bundle.hbar, temperature);
  CHECK(frobenius(bundle.total.apply(gibbs.entries())) < 1e-8);
}
