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

#ifndef FLOQ_QUADRATURE_HPP
#define FLOQ_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace floq {

// Adaptive Simpson quadrature on [a, b] to absolute tolerance abs_tol.
// Throws AccuracyError if the recursion depth limit is hit before the
// tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol = 1e-12);

// Same, but the integrand is only piecewise smooth: the integral is split at
// the given interior breakpoints first.
std::complex<double> integrate_complex_segmented(
    const std::function<std::complex<double>(double)>& f,
    const std::vector<double>& breakpoints, double abs_tol = 1e-12);

}  // namespace floq

#endif  // FLOQ_QUADRATURE_HPP
