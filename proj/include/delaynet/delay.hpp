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

#ifndef DELAYNET_DELAY_HPP_
#define DELAYNET_DELAY_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "delaynet/errors.hpp"
#include "delaynet/lambert.hpp"
#include "delaynet/spectral.hpp"

namespace delaynet {

inline constexpr double kPi = std::numbers::pi;

/// Sentinel boundary delay for a zero eigenvalue: it never destabilizes,
/// and a finite sentinel keeps min-reductions total.
inline constexpr double kZeroEigenvalueSentinel = 1e18;

/// Boundary delay of the teardrop stability curve for the eigenvalue
/// x + iy of the system matrix:
///   y != 0        : |arctan(-x/y)| / sqrt(x^2 + y^2)
///   y = 0, x < 0  : pi / (2|x|)
///   x = y = 0     : sentinel (never destabilizes)
///   x = 0, y != 0 : 0 (unstable at any positive delay)
/// Throws PositiveRealPart for x > 0.
inline double teardrop_tau(double x, double y) {
  if (x > 0.0) {
    throw PositiveRealPart("teardrop_tau: eigenvalue has positive real part");
  }
  if (x == 0.0 && y == 0.0) return kZeroEigenvalueSentinel;
  if (x == 0.0) return 0.0;
  if (y == 0.0) return kPi / (2.0 * -x);
  return std::abs(std::atan(-x / y)) / std::hypot(x, y);
}

/// Delay-margin and rate report for one spectrum.
struct DelayReport {
  std::vector<std::pair<std::complex<double>, double>> per_eig_boundary;
  double tau_star = 0.0;
  std::optional<double> tau_tilde;
  bool accel_possible = false;
  std::vector<std::pair<double, double>> rate_curve;  // (tau_c, R_tau)
  double r0 = 0.0;
};

namespace detail {

// Eigenvalues sorted by ascending |Re|; tiny values are snapped to an
// exact zero so solver noise on a structurally zero eigenvalue does not
// masquerade as instability.
inline std::vector<std::complex<double>> continuous_ordered(const SpectralSummary& eigs) {
  std::vector<std::complex<double>> a = eigs.eigenvalues;
  const double snap = 1e-10 * std::max(1.0, eigs.spectral_radius);
  for (auto& l : a) {
    if (std::abs(l) <= snap) l = {0.0, 0.0};
  }
  sort_eigenvalues(a, EigenOrder::kAbsRealAscending);
  return a;
}

inline void require_strictly_stable(const std::vector<std::complex<double>>& alpha) {
  for (const auto& a : alpha) {
    if (a.real() >= 0.0) {
      throw PositiveRealPart("spectrum must lie strictly in the open left half-plane");
    }
  }
}

}  // namespace detail

/// Per-eigenvalue teardrop boundaries and their minimum tau*. Requires
/// Re <= 0 throughout with Re < 0 for every nonzero eigenvalue.
inline DelayReport tau_star(const SpectralSummary& eigs) {
  DelayReport rep;
  const auto alpha = detail::continuous_ordered(eigs);
  if (alpha.empty()) throw ValidationError("tau_star: empty spectrum");
  rep.tau_star = kZeroEigenvalueSentinel;
  double r0 = std::numeric_limits<double>::infinity();
  for (const auto& a : alpha) {
    const double t = teardrop_tau(a.real(), a.imag());
    rep.per_eig_boundary.emplace_back(a, t);
    rep.tau_star = std::min(rep.tau_star, t);
    if (a != std::complex<double>(0.0, 0.0)) r0 = std::min(r0, std::abs(a.real()));
  }
  rep.r0 = std::isfinite(r0) ? r0 : 0.0;
  return rep;
}

/// Closed-form threshold for the random mixture (normalized, shifted by
/// one): min of the uppermost-point and leftmost-point boundaries
///   tau_u = alpha / sqrt(alpha^2 + n P sigma^2) * arctan(alpha / sqrt(n P sigma^2)),
///   tau_l = alpha pi / (2 alpha + 2 sqrt(n P sigma^2)),
/// with alpha = (n-1) P E|Z|.
inline double tau_star_random(const MixtureStats& stats, int n) {
  if (stats.kind != MixtureKind::kRandom) {
    throw ValidationError("tau_star_random: needs random-mixture stats");
  }
  if (n < 2) throw ValidationError("tau_star_random: n must be at least 2");
  const double alpha = (n - 1) * stats.p_connect * stats.e_abs_z;
  const double nps = n * stats.p_connect * stats.sigma * stats.sigma;
  const double root = std::sqrt(nps);
  const double tau_u = alpha / std::sqrt(alpha * alpha + nps) * std::atan(alpha / root);
  const double tau_l = alpha * kPi / (2.0 * alpha + 2.0 * root);
  return std::min(tau_u, tau_l);
}

/// Closed-form threshold for the complex mixture from the ellipse
/// geometry: min over the rightmost/leftmost/uppermost boundaries, plus
/// the outlier boundary when the outlier exists.
inline double tau_star_complex(const EllipsePrediction& pred, int n) {
  if (n < 2) throw ValidationError("tau_star_complex: n must be at least 2");
  const double e = pred.center_shift;
  const double tau_r = kPi / (2.0 * std::abs(pred.a - e - 1.0));
  const double tau_l = kPi / (2.0 * std::abs(-pred.a - e - 1.0));
  const double tau_u =
      std::atan((1.0 - e) / pred.b) / std::sqrt((e - 1.0) * (e - 1.0) + pred.b * pred.b);
  double result = std::min({tau_r, tau_l, tau_u});
  if (pred.outlier) {
    const double lam_hat = *pred.outlier + e;
    result = std::min(result, kPi / (2.0 * std::abs(lam_hat - e - 1.0)));
  }
  return result;
}

/// Delay rate gain g(x) = Re(W_0(x)) / Re(x) on the closed left
/// half-plane, with the continuity value g(0) = 1.
inline double delay_gain(std::complex<double> x) {
  if (x.real() > 0.0) {
    throw PositiveRealPart("delay_gain: argument must have Re <= 0");
  }
  if (x == std::complex<double>(0.0, 0.0)) return 1.0;
  if (x.real() == 0.0) {
    throw PositiveRealPart("delay_gain: purely imaginary argument is outside the domain");
  }
  return lambert_w0(x).w.real() / x.real();
}

/// Convergence rate of the delayed system at delay tau_c:
///   R_tau = min_k g(alpha_k tau_c) |Re(alpha_k)|,
/// which equals -max_k Re(W_0(alpha_k tau_c)) / tau_c, the positive
/// decay exponent of the slowest characteristic root. At tau_c = 0 this
/// is R_0 = |Re(alpha_1)|. Requires 0 <= tau_c < tau*.
inline double rate_continuous(const SpectralSummary& eigs, double tau_c) {
  const auto alpha = detail::continuous_ordered(eigs);
  detail::require_strictly_stable(alpha);
  if (tau_c < 0.0) throw ValidationError("rate_continuous: tau_c must be nonnegative");
  if (tau_c == 0.0) return std::abs(alpha.front().real());
  double r = std::numeric_limits<double>::infinity();
  for (const auto& a : alpha) {
    const double bound = teardrop_tau(a.real(), a.imag());
    if (tau_c >= bound) {
      throw DelayOutOfRange("rate_continuous: tau_c is at or beyond tau*");
    }
    r = std::min(r, delay_gain(a * tau_c) * std::abs(a.real()));
  }
  return r;
}

/// Acceleration condition: every eigenvalue sharing the dominant real
/// part (relative tolerance 1e-9) must have its argument strictly inside
/// (3 pi / 4, 5 pi / 4).
inline bool accel_condition(const SpectralSummary& eigs) {
  const auto alpha = detail::continuous_ordered(eigs);
  detail::require_strictly_stable(alpha);
  const double re1 = alpha.front().real();
  for (const auto& a : alpha) {
    if (std::abs(a.real() - re1) > 1e-9 * std::abs(re1)) continue;
    if (std::abs(std::arg(a)) <= 3.0 * kPi / 4.0) return false;
  }
  return true;
}

/// Crossover delay: smallest eta_i solving g(alpha_i tau) =
/// |Re(alpha_1)| / |Re(alpha_i)| on (0, tau*_i). Brackets are located by
/// scanning 64 log-spaced samples per eigenvalue and refined by
/// bisection to 1e-10; eigenvalues whose scan shows no sign change are
/// skipped. Throws NoCrossover when no eigenvalue admits a solution.
inline double tau_tilde(const SpectralSummary& eigs) {
  const auto alpha = detail::continuous_ordered(eigs);
  detail::require_strictly_stable(alpha);
  const double re1 = std::abs(alpha.front().real());

  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : alpha) {
    const double bound = teardrop_tau(a.real(), a.imag());
    const double target = re1 / std::abs(a.real());
    auto f = [&](double tau) { return delay_gain(a * tau) - target; };

    // 64 log-spaced scan points on (0, tau*_i).
    const double hi = bound * (1.0 - 1e-9);
    const double lo = bound * 1e-8;
    double prev_t = lo;
    double prev_f = f(lo);
    double a_lo = 0.0, a_hi = 0.0;
    bool bracketed = false;
    for (int k = 1; k < 64; ++k) {
      const double t = lo * std::pow(hi / lo, k / 63.0);
      const double ft = f(t);
      if (prev_f > 0.0 && ft <= 0.0) {
        a_lo = prev_t;
        a_hi = t;
        bracketed = true;
        break;
      }
      prev_t = t;
      prev_f = ft;
    }
    if (!bracketed) continue;

    while (a_hi - a_lo > 1e-10) {
      const double mid = 0.5 * (a_lo + a_hi);
      (f(mid) > 0.0 ? a_lo : a_hi) = mid;
    }
    best = std::min(best, 0.5 * (a_lo + a_hi));
  }
  if (!std::isfinite(best)) {
    throw NoCrossover("tau_tilde: rate never returns to R_0 before tau*");
  }
  return best;
}

/// Rate-versus-delay report: R_tau on an even grid over [0, 0.999 tau*),
/// with tau*, the crossover tau-tilde (when one exists), the
/// acceleration flag, and R_0.
inline DelayReport rate_sweep(const SpectralSummary& eigs, int samples) {
  if (samples < 8) throw ValidationError("rate_sweep: need at least 8 samples");
  DelayReport rep = tau_star(eigs);
  detail::require_strictly_stable(detail::continuous_ordered(eigs));
  rep.accel_possible = accel_condition(eigs);
  try {
    rep.tau_tilde = tau_tilde(eigs);
  } catch (const NoCrossover&) {
    rep.tau_tilde.reset();
  }
  const double top = 0.999 * rep.tau_star;
  rep.rate_curve.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double tau = top * k / samples;
    rep.rate_curve.emplace_back(tau, rate_continuous(eigs, tau));
  }
  rep.r0 = rep.rate_curve.front().second;
  return rep;
}

/// Polar samples of the boundary curve r(theta) = |arctan(-cot theta)| / tau
/// for theta in (3 pi / 4, 5 pi / 4); the convergence region scales as
/// 1 / tau.
inline std::vector<std::pair<double, double>> boundary_curve(double tau, int points) {
  if (!(tau > 0.0)) throw ValidationError("boundary_curve: tau must be positive");
  if (points < 2) throw ValidationError("boundary_curve: need at least 2 points");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(points);
  for (int k = 0; k < points; ++k) {
    const double theta =
        3.0 * kPi / 4.0 + (kPi / 2.0) * (k + 0.5) / points;  // open interval
    const double r = std::abs(std::atan(-1.0 / std::tan(theta))) / tau;
    curve.emplace_back(theta, r);
  }
  return curve;
}

}  // namespace delaynet

#endif  // DELAYNET_DELAY_HPP_
