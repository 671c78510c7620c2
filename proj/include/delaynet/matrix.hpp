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

#ifndef DELAYNET_MATRIX_HPP_
#define DELAYNET_MATRIX_HPP_

#include <Eigen/Dense>
#include <cmath>

#include "delaynet/errors.hpp"

namespace delaynet {

/// Dense square signed weight matrix. Entry (i, j) is the weight w_ij of
/// the arc from node j to node i; a zero entry means no arc. Signs carry
/// the trust (+) / mistrust (-) semantics.
using SignedMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Row sums of |m|.
inline Vector abs_row_sums(const SignedMatrix& m) {
  return m.cwiseAbs().rowwise().sum();
}

inline bool has_zero_diagonal(const SignedMatrix& m) {
  return m.diagonal().isZero(0.0);
}

/// Throws ValidationError unless m is square with finite entries.
inline void require_signed_matrix(const SignedMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ValidationError("matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw ValidationError("matrix entries must be finite");
  }
}

}  // namespace delaynet

#endif  // DELAYNET_MATRIX_HPP_
