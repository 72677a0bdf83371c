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

#ifndef FLOQ_ERRORS_HPP
#define FLOQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// A constructed value violates one of its declared invariants
// (non-Hermitian input, non-unitary propagator, bad density matrix, ...).
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

// Numerical accuracy budget exceeded (integrator drift, quadrature failure).
class AccuracyError : public Error {
 public:
  explicit AccuracyError(const std::string& msg) : Error(msg) {}
};

// Harmonic truncation too small for the requested reconstruction tolerance.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// Channel configuration the v1 ledger cannot represent (omega = 0 with q != 0).
class UnsupportedChannel : public Error {
 public:
  explicit UnsupportedChannel(const std::string& msg) : Error(msg) {}
};

// The generator has a stationary manifold of dimension > 1.
class NonUniqueSteadyState : public Error {
 public:
  NonUniqueSteadyState(const std::string& msg, int null_dim)
      : Error(msg), null_dimension(null_dim) {}
  int null_dimension;
};

class NotStationary : public Error {
 public:
  explicit NotStationary(const std::string& msg) : Error(msg) {}
};

// A state stopped satisfying its invariants in the middle of a computation.
class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

// Scenario configuration problems; messages are path-qualified.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace floq

#endif  // FLOQ_ERRORS_HPP
