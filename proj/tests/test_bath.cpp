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
#include <limits>

#include "floq/bath.hpp"
#include "floq/errors.hpp"

using namespace floq;

TEST_CASE("flat bath: KMS relation applied to the constant branch") {
  BathSpec bath = make_flat_bath("b", 1.0, 1.0);
  CHECK(eval_rate(bath, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_rate(bath, -2.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(eval_rate(bath, -2.0) == doctest::Approx(0.13534).epsilon(1e-4));
}

TEST_CASE("continuity of the two branches at omega = 0") {
  BathSpec flat = make_flat_bath("b", 0.7, 0.3);
  CHECK(eval_rate(flat, 0.0) ==
        doctest::Approx(eval_rate(flat, -1e-300)).epsilon(1e-12));
  BathSpec ohmic = make_ohmic_bath("o", 2.0, 1.0, 3.0);
  CHECK(eval_rate(ohmic, 0.0) == 0.0);
}

TEST_CASE("ohmic bath: direct formula evaluation") {
  BathSpec bath = make_ohmic_bath("o", 1.0, 1.0, 10.0);
  CHECK(eval_rate(bath, 1.0) ==
        doctest::Approx(std::exp(-0.1)).epsilon(1e-14));
  CHECK(eval_rate(bath, 1.0) == doctest::Approx(0.90484).epsilon(1e-4));
}

TEST_CASE("factories validate their parameters") {
  CHECK_THROWS_AS(make_flat_bath("b", -1.0, 1.0), InvariantViolation);
  CHECK_THROWS_AS(make_flat_bath("b", 1.0, 0.0), InvariantViolation);
  CHECK_THROWS_AS(make_ohmic_bath("o", 1.0, 1.0, -2.0), InvariantViolation);
  CHECK_THROWS_AS(make_tabulated_bath("t", 1.0, {0.0, 1.0}, {0.1, -0.1}),
                  InvariantViolation);
  CHECK_THROWS_AS(make_tabulated_bath("t", 1.0, {1.0, 0.5}, {0.1, 0.1}),
                  InvariantViolation);
}

TEST_CASE("flat factory example") {
  BathSpec bath = make_flat_bath("b", 1.0, 0.1);
  CHECK(eval_rate(bath, 5.0) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("non-finite omega is rejected") {
  BathSpec bath = make_flat_bath("b", 1.0, 1.0);
  CHECK_THROWS_AS(eval_rate(bath, std::numeric_limits<double>::quiet_NaN()),
                  InvariantViolation);
  CHECK_THROWS_AS(eval_rate(bath, std::numeric_limits<double>::infinity()),
                  InvariantViolation);
}

TEST_CASE("detailed-balance ratio on a frequency grid, both models") {
  for (double t : {0.5, 1.0, 2.0}) {
    BathSpec flat = make_flat_bath("f", t, 0.8);
    BathSpec ohmic = make_ohmic_bath("o", t, 1.3, 3.0);
    for (double w : {0.5, 1.0, 3.0}) {
      CHECK(eval_rate(flat, w) / eval_rate(flat, -w) ==
            doctest::Approx(std::exp(w / t)).epsilon(1e-12));
      CHECK(eval_rate(ohmic, w) / eval_rate(ohmic, -w) ==
            doctest::Approx(std::exp(w / t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("KMS identity on a dense grid (relative 1e-12)") {
  BathSpec flat = make_flat_bath("f", 1.7, 0.4);
  BathSpec ohmic = make_ohmic_bath("o", 0.9, 2.0, 5.0);
  for (int i = 1; i <= 50; ++i) {
    double w = 0.2 * i;
    for (const BathSpec* bath : {&flat, &ohmic}) {
      double lhs = eval_rate(*bath, -w);
      double rhs = std::exp(-w / bath->temperature()) * eval_rate(*bath, w);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("non-negativity on a grid spanning both signs") {
  BathSpec ohmic = make_ohmic_bath("o", 1.0, 1.0, 2.0);
  for (int i = -100; i <= 100; ++i) {
    double w = 0.2 * i;
    CHECK(eval_rate(ohmic, w) >= 0.0);
  }
}

TEST_CASE("tabulated bath interpolates and obeys KMS") {
  BathSpec bath =
      make_tabulated_bath("t", 1.5, {0.5, 1.0, 2.0}, {0.0, 0.4, 0.2});
  CHECK(eval_rate(bath, 0.75) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(eval_rate(bath, 1.5) == doctest::Approx(0.3).epsilon(1e-14));
  // clamped to zero outside the grid
  CHECK(eval_rate(bath, 0.2) == 0.0);
  CHECK(eval_rate(bath, 3.0) == 0.0);
  CHECK(eval_rate(bath, -1.0) ==
        doctest::Approx(std::exp(-1.0 / 1.5) * 0.4).epsilon(1e-13));
}
