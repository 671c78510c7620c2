// Copyright 2026 The delaynet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DELAYNET_ERRORS_HPP_
#define DELAYNET_ERRORS_HPP_

#include <stdexcept>

namespace delaynet {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input file or argument failed schema/shape validation.
struct ValidationError final : Error {
  using Error::Error;
};

/// Crossing arcs between two partition blocks disagree in sign.
struct MixedSignCrossing final : Error {
  using Error::Error;
};

/// Mixture proportions are negative or do not sum to one.
struct InvalidProportions final : Error {
  using Error::Error;
};

/// A node has no in-neighbors, so its row cannot be normalized.
struct ZeroRow final : Error {
  using Error::Error;
};

/// An iterative kernel (eigensolver, Halley) failed to converge.
struct NoConvergence final : Error {
  using Error::Error;
};

/// Convergence rate requested for a non-convergent discrete system.
struct NotConvergent final : Error {
  using Error::Error;
};

/// Outlier eigenvalue requested while the entry mean is zero.
struct DegenerateMean final : Error {
  using Error::Error;
};

/// An eigenvalue has positive real part; delay boundary undefined.
struct PositiveRealPart final : Error {
  using Error::Error;
};

/// Requested delay lies at or beyond the stability threshold.
struct DelayOutOfRange final : Error {
  using Error::Error;
};

/// No crossover delay exists for any eigenvalue.
struct NoCrossover final : Error {
  using Error::Error;
};

/// Trajectory tail fit too poor to report a decay rate.
struct PoorFit final : Error {
  using Error::Error;
};

/// Integration step too large for the method of steps.
struct StepTooLarge final : Error {
  using Error::Error;
};

}  // namespace delaynet

#endif  // DELAYNET_ERRORS_HPP_
