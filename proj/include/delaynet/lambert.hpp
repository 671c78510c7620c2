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

#ifndef DELAYNET_LAMBERT_HPP_
#define DELAYNET_LAMBERT_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "delaynet/errors.hpp"

namespace delaynet {

/// Principal-branch Lambert W value with its achieved residual |w e^w - z|.
struct LambertValue {
  std::complex<double> w;
  double residual = 0.0;
};

namespace detail {

using cd = std::complex<double>;

// Series around the branch point z = -1/e in p = sqrt(2(e z + 1)).
inline cd lambert_branchpoint(cd z) {
  const cd p = std::sqrt(2.0 * (2.718281828459045235 * z + 1.0));
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// [2/2] Pade of W around 0; good within roughly |z| < 2 away from the
// branch cut.
inline cd lambert_pade0(cd z) {
  return z * (60.0 + z * (114.0 + 17.0 * z)) / (60.0 + z * (174.0 + 101.0 * z));
}

// Asymptotic guess log z - log log z (+ first correction). The principal
// log places real z < -1/e on the upper side of the branch cut, matching
// the upper-half-plane limit of W_0 there.
inline cd lambert_asymptotic(cd z) {
  const cd l1 = std::log(z);
  const cd l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace detail

/// Branch-0 Lambert W: the solution w of w e^w = z with largest real
/// part. Staged initial guesses (branch-point series, Pade near 0,
/// asymptotic log) refined by Halley iteration until the residual
/// |w e^w - z| drops below 1e-13 * max(1, |z|); the returned residual is
/// always within the 1e-12 * max(1, |z|) contract.
inline LambertValue lambert_w0(std::complex<double> z) {
  using detail::cd;
  if (z == cd(0.0, 0.0)) return {cd(0.0, 0.0), 0.0};

  const double scale = std::max(1.0, std::abs(z));
  const cd ez1 = 2.718281828459045235 * z + 1.0;

  // At (double resolution of) the branch point, w = -1 is the best
  // representable answer; Halley stalls there because the root is double.
  if (std::abs(ez1) < 1e-14) {
    return {cd(-1.0, 0.0), std::abs(-std::exp(-1.0) - z)};
  }

  cd w;
  if (std::abs(ez1) < 0.82) {
    w = detail::lambert_branchpoint(z);
  } else if (z.real() > -1.0 && z.real() < 1.5 && std::abs(z.imag()) < 1.0 &&
             z.real() > -2.5 * std::abs(z.imag()) - 0.2) {
    w = detail::lambert_pade0(z);
  } else {
    w = detail::lambert_asymptotic(z);
  }

  const double target = 1e-13 * scale;
  cd best_w = w;
  double best_res = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100; ++it) {
    const cd ew = std::exp(w);
    const cd f = w * ew - z;
    const double res = std::abs(f);
    if (res < best_res) {
      best_res = res;
      best_w = w;
    }
    if (res <= target) return {w, res};
    cd wp1 = w + 1.0;
    if (std::abs(wp1) < 1e-12) wp1 = cd(1e-12, 0.0);  // Halley pole guard
    const cd denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    w -= f / denom;
  }
  if (best_res <= 1e-12 * scale) return {best_w, best_res};
  throw NoConvergence("lambert_w0: Halley iteration did not reach residual bound");
}

}  // namespace delaynet

#endif  // DELAYNET_LAMBERT_HPP_
