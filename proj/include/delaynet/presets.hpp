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

#ifndef DELAYNET_PRESETS_HPP_
#define DELAYNET_PRESETS_HPP_

#include <array>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"

namespace delaynet {

/// Canonical 5-node benchmark network mixing trust and mistrust arcs,
/// row-normalized, with no self-loops. Its pure-trust |W| and pure-
/// mistrust -|W| variants oscillate forever, while the signed mix
/// neutralizes to zero.
inline SignedMatrix trust_mistrust_network() {
  SignedMatrix w(5, 5);
  w << 0.0, 0.3, 0.0, 0.0, -0.7,
      -0.5, 0.0, 0.0, 0.5, 0.0,
      -0.5, -0.3, 0.0, 0.2, 0.0,
       0.0, -0.5, 0.0, 0.0, -0.5,
      -0.5, 0.0, 0.0, -0.5, 0.0;
  return w;
}

/// Initial opinions used with the benchmark network.
inline Vector trust_mistrust_x0() {
  Vector x0(5);
  x0 << -0.5, -0.25, 0.0, 1.0 / 3.0, 0.5;
  return x0;
}

/// The four canonical complex-mixture scenarios, keyed 'a'..'d':
///   a: pure trust/mistrust pairs
///   b: equal thirds of (+/-), (+/+), (+/0)
///   c: equal thirds of (+/-), (-/-), (-/0)
///   d: all five types equally likely
/// Order: (+/+), (-/-), (+/-), (+/0), (-/0).
inline std::array<double, 5> scenario_proportions(char key) {
  switch (key) {
    case 'a': return {0.0, 0.0, 1.0, 0.0, 0.0};
    case 'b': return {1.0 / 3.0, 0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0};
    case 'c': return {0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0, 1.0 / 3.0};
    case 'd': return {0.2, 0.2, 0.2, 0.2, 0.2};
    default: throw ValidationError("scenario key must be one of a, b, c, d");
  }
}

}  // namespace delaynet

#endif  // DELAYNET_PRESETS_HPP_
