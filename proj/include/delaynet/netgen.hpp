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

#ifndef DELAYNET_NETGEN_HPP_
#define DELAYNET_NETGEN_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"
#include "delaynet/rng.hpp"

namespace delaynet {

enum class MixtureKind {
  kRandom,   // each directed arc drawn independently, strength ~ N(0, sigma^2)
  kComplex,  // unordered pairs typed by the five-way interaction mix
};

/// Parameters of the random signed-network constructions.
///
/// For kComplex, `proportions` holds, in order, the shares of the five
/// pair types: mutual trust (+/+), mutual mistrust (-/-), trust/mistrust
/// (+/-), unilateral trust (+/0), unilateral mistrust (-/0).
struct MixtureSpec {
  int n = 0;
  double p_connect = 0.0;
  double sigma = 1.0;
  MixtureKind kind = MixtureKind::kRandom;
  std::array<double, 5> proportions{};  // kComplex only
  std::uint64_t seed = 0;

  /// Throws on malformed parameters. Proportions must be nonnegative and
  /// sum to one; degenerate all-positive or all-negative mixes are legal
  /// to generate, but the asymptotic theory assumes general_case().
  void validate() const {
    if (n < 2) throw ValidationError("mixture: n must be at least 2");
    if (!(p_connect > 0.0) || p_connect > 1.0) {
      throw ValidationError("mixture: connection probability must be in (0, 1]");
    }
    if (!(sigma > 0.0)) throw ValidationError("mixture: sigma must be positive");
    if (kind == MixtureKind::kComplex) {
      double sum = 0.0;
      for (double p : proportions) {
        if (p < 0.0) throw InvalidProportions("proportions must be nonnegative");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidProportions("proportions must sum to one");
      }
    }
  }

  /// True when trust and mistrust genuinely coexist:
  /// P(+/+) + P(+/0) < 1 and P(-/-) + P(-/0) < 1.
  bool general_case() const {
    if (kind == MixtureKind::kRandom) return true;
    return proportions[0] + proportions[3] < 1.0 &&
           proportions[1] + proportions[4] < 1.0;
  }
};

/// Moments of the mixture entering the spectral-law predictions.
struct MixtureStats {
  MixtureKind kind = MixtureKind::kRandom;
  double p_hat = 1.0;             // probability an interacting pair side is nonzero
  double p_bar = 0.0;             // signed mean share
  double p_star = 0.0;            // pair cross-correlation share
  double expected_row_sum = 0.0;  // asymptotic |S|_i: (n-1) P p_hat E|Z|
  double e_abs_z = 0.0;           // E|Z| = sigma sqrt(2/pi)
  double p_connect = 0.0;
  double sigma = 1.0;
};

/// P-hat, P-bar, P-star and the asymptotic row-sum constant for a spec.
inline MixtureStats mixture_stats(const MixtureSpec& spec) {
  spec.validate();
  MixtureStats s;
  s.kind = spec.kind;
  s.p_connect = spec.p_connect;
  s.sigma = spec.sigma;
  s.e_abs_z = spec.sigma * std::sqrt(2.0 / 3.14159265358979323846);
  if (spec.kind == MixtureKind::kComplex) {
    const auto& q = spec.proportions;  // (+/+), (-/-), (+/-), (+/0), (-/0)
    s.p_hat = q[0] + q[2] + q[1] + 0.5 * q[3] + 0.5 * q[4];
    s.p_bar = q[0] - q[1] + 0.5 * q[3] - 0.5 * q[4];
    s.p_star = q[0] + q[1] - q[2];
  } else {
    s.p_hat = 1.0;
    s.p_bar = 0.0;
    s.p_star = 0.0;
  }
  s.expected_row_sum = (spec.n - 1) * spec.p_connect * s.p_hat * s.e_abs_z;
  return s;
}

namespace detail {

// Stream layout (documented so draws stay order-independent):
//  kRandom : stream id = i*n + j for the ordered pair (i, j), i != j;
//            draw 0 = arc-existence uniform, draws 1-2 = normal strength.
//  kComplex: stream id = i*n + j for the unordered pair i < j;
//            draw 0 = interaction uniform, draw 1 = type uniform,
//            draw 2 = side coin, draws 3.. = strength normals.
// Retry attempt a derives its generator root as mix(seed, a).

inline bool fill_random(const MixtureSpec& spec, std::uint64_t root, SignedMatrix& s) {
  const int n = spec.n;
  s.setZero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rng::Stream st(root, static_cast<std::uint64_t>(i) * n + j);
      if (st.bernoulli(spec.p_connect)) {
        s(i, j) = st.normal(spec.sigma);
      }
    }
  }
  return (s.cwiseAbs().rowwise().sum().array() > 0.0).all();
}

inline bool fill_complex(const MixtureSpec& spec, std::uint64_t root, SignedMatrix& s) {
  const int n = spec.n;
  s.setZero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rng::Stream st(root, static_cast<std::uint64_t>(i) * n + j);
      if (!st.bernoulli(spec.p_connect)) continue;
      const double u = st.uniform01();
      int type = 4;  // top bucket absorbs the rounding tail at u ~ 1
      double cum = 0.0;
      for (int t = 0; t < 5; ++t) {
        cum += spec.proportions[t];
        if (u < cum) {
          type = t;
          break;
        }
      }
      const bool coin = st.bernoulli(0.5);
      switch (type) {
        case 0:  // (+/+): independent |Z| on both sides
          s(i, j) = std::abs(st.normal(spec.sigma));
          s(j, i) = std::abs(st.normal(spec.sigma));
          break;
        case 1:  // (-/-)
          s(i, j) = -std::abs(st.normal(spec.sigma));
          s(j, i) = -std::abs(st.normal(spec.sigma));
          break;
        case 2: {  // (+/-): opposite signs, independent magnitudes
          const double a = std::abs(st.normal(spec.sigma));
          const double b = std::abs(st.normal(spec.sigma));
          s(i, j) = coin ? a : -a;
          s(j, i) = coin ? -b : b;
          break;
        }
        case 3: {  // (+/0): one side trusts, the other is silent
          const double a = std::abs(st.normal(spec.sigma));
          (coin ? s(i, j) : s(j, i)) = a;
          break;
        }
        default: {  // (-/0)
          const double a = std::abs(st.normal(spec.sigma));
          (coin ? s(i, j) : s(j, i)) = -a;
          break;
        }
      }
    }
  }
  return (s.cwiseAbs().rowwise().sum().array() > 0.0).all();
}

}  // namespace detail

/// Raw strength matrix S for the random mixture: every ordered pair
/// (i, j), i != j, carries an arc with probability P, strength drawn
/// from Normal(0, sigma^2); zero diagonal. Deterministic per seed.
/// Draws with an empty row are retried (up to 100 derived sub-seeds).
inline SignedMatrix generate_random_mixture(const MixtureSpec& spec) {
  spec.validate();
  if (spec.kind != MixtureKind::kRandom) {
    throw ValidationError("generate_random_mixture: spec.kind must be kRandom");
  }
  SignedMatrix s;
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (detail::fill_random(spec, rng::mix(spec.seed, attempt), s)) return s;
  }
  throw ZeroRow("generate_random_mixture: a node kept drawing no in-neighbors");
}

/// Raw strength matrix S for the complex mixture: each unordered pair
/// interacts with probability P and is typed by the five proportions;
/// strengths are half-normal |Z| with signs and sides set by the type.
inline SignedMatrix generate_complex_mixture(const MixtureSpec& spec) {
  spec.validate();
  if (spec.kind != MixtureKind::kComplex) {
    throw ValidationError("generate_complex_mixture: spec.kind must be kComplex");
  }
  SignedMatrix s;
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (detail::fill_complex(spec, rng::mix(spec.seed, attempt), s)) return s;
  }
  throw ZeroRow("generate_complex_mixture: a node kept drawing no in-neighbors");
}

/// Dispatch on spec.kind.
inline SignedMatrix generate(const MixtureSpec& spec) {
  return spec.kind == MixtureKind::kRandom ? generate_random_mixture(spec)
                                           : generate_complex_mixture(spec);
}

/// Row normalization w_ij = s_ij / sum_k |s_ik| (i != j), w_ii = 0, so
/// every row of |W| sums to one. Throws ZeroRow when a node has no
/// in-neighbors.
inline SignedMatrix normalize_rows(const SignedMatrix& s) {
  require_signed_matrix(s);
  const int n = static_cast<int>(s.rows());
  SignedMatrix w = s;
  w.diagonal().setZero();
  for (int i = 0; i < n; ++i) {
    const double r = w.row(i).cwiseAbs().sum();
    if (!(r > 0.0)) {
      throw ZeroRow("normalize_rows: row " + std::to_string(i) + " of |S| sums to zero");
    }
    w.row(i) /= r;
  }
  return w;
}

/// Negated Laplacian -L of a zero-diagonal weight matrix: off-diagonal
/// entries copy w, the diagonal is -sum_k |w_ik|. The continuous system
/// reads dX/dt = (-L) X(t - tau_c); for row-normalized w this equals
/// W - I, so its spectrum is W's shifted left by one.
inline SignedMatrix build_laplacian(const SignedMatrix& w) {
  require_signed_matrix(w);
  if (!has_zero_diagonal(w)) {
    throw ValidationError("build_laplacian: input must have a zero diagonal");
  }
  SignedMatrix neg_l = w;
  neg_l.diagonal() = -w.cwiseAbs().rowwise().sum();
  return neg_l;
}

}  // namespace delaynet

#endif  // DELAYNET_NETGEN_HPP_
