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

#ifndef DELAYNET_RNG_HPP_
#define DELAYNET_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace delaynet::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 step: advances `state` and returns the next 64-bit output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless mix of two words; used to derive sub-seeds and stream roots.
inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b * kGolden + 0x6a09e667f3bcc909ULL);
  std::uint64_t z = splitmix64(s);
  return splitmix64(s) ^ z;
}

/// Deterministic random stream addressed by (seed, stream id).
///
/// Every logical unit of randomness (one matrix pair, one trial, one
/// initial condition) owns its own stream, so draws are independent of
/// the order in which other streams are consumed. Within a stream the
/// draw sequence is fixed: callers must document their draw layout.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix(seed, stream_id)) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log argument.
  double uniform01_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Normal(0, sigma^2) via Box-Muller; consumes exactly two words.
  double normal(double sigma = 1.0) {
    const double u1 = uniform01_open();
    const double u2 = uniform01();
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace delaynet::rng

#endif  // DELAYNET_RNG_HPP_
