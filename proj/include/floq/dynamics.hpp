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

// Dynamics under the master equation: interaction-picture propagation by
// matrix exponential of the vectorized generator (exact for the
// time-independent L), steady states from the SVD null space, and periodic
// limit cycles rho(t) = U(t,0) rho_ss U(t,0)^dag.

#ifndef FLOQ_DYNAMICS_HPP
#define FLOQ_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "floq/floquet.hpp"
#include "floq/generator.hpp"
#include "floq/operators.hpp"

namespace floq {

enum class Frame { schroedinger, interaction };

struct Trajectory {
  std::vector<double> times;          // ascending
  std::vector<DensityMatrix> states;  // validated along the way
  Frame frame = Frame::interaction;
};

// rho_I(t) = e^{L t} rho0, rotated by U(t,0) into the Schroedinger frame
// when a propagator is supplied.  States are sampled at 0, dt, 2dt, ...
// through t_end; any state invariant violated beyond a 1e-8 budget raises
// NumericalFailure.
Trajectory evolve(const GeneratorBundle& bundle, const Propagator* u,
                  const DensityMatrix& rho0, double t_end, double dt);

// Null vector of the vectorized generator (smallest singular direction),
// Hermitized, positivity-clipped at -1e-10 and trace-normalized.  If the
// second-smallest singular value is below 1e-8 of the largest, the
// stationary manifold is degenerate and NonUniqueSteadyState is thrown.
DensityMatrix steady_state(const GeneratorBundle& bundle);

// One period of the limit cycle rho(t) = U(t,0) rho U(t,0)^dag on grid_n
// points (endpoint t = tau included).  The input must satisfy
// |L rho| <= 1e-9 or NotStationary is thrown.
Trajectory limit_cycle(const GeneratorBundle& bundle, const DensityMatrix& rho,
                       const Propagator& u, int grid_n);

}  // namespace floq

#endif  // FLOQ_DYNAMICS_HPP
