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

#include "floq/quadrature.hpp"

#include <cmath>

#include "floq/errors.hpp"

namespace floq {

namespace {

using Cx = std::complex<double>;

constexpr int kMaxDepth = 48;

Cx adapt(const std::function<Cx(double)>& f, double a, double b, Cx fa, Cx fm,
         Cx fb, Cx whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  Cx flm = f(lm);
  Cx frm = f(rm);
  Cx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  Cx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  Cx delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (std::abs(a) + 1.0))
    return left + right + delta / 15.0;
  if (depth >= kMaxDepth)
    throw AccuracyError("quadrature: adaptive Simpson depth limit reached");
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

Cx integrate_cx(const std::function<Cx(double)>& f, double a, double b,
                double tol) {
  if (!(b > a)) return Cx{0.0, 0.0};
  Cx fa = f(a);
  Cx fb = f(b);
  double m = 0.5 * (a + b);
  Cx fm = f(m);
  Cx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adapt(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  return integrate_cx([&f](double t) { return Cx{f(t), 0.0}; }, a, b, abs_tol)
      .real();
}

Cx integrate_complex(const std::function<Cx(double)>& f, double a, double b,
                     double abs_tol) {
  return integrate_cx(f, a, b, abs_tol);
}

Cx integrate_complex_segmented(const std::function<Cx(double)>& f,
                               const std::vector<double>& breakpoints,
                               double abs_tol) {
  if (breakpoints.size() < 2)
    throw DimensionMismatch("quadrature: need at least two breakpoints");
  Cx total{0.0, 0.0};
  double per_piece = abs_tol / static_cast<double>(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    total += integrate_cx(f, breakpoints[i], breakpoints[i + 1], per_piece);
  return total;
}

}  // namespace floq
