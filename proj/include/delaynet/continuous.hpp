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

#ifndef DELAYNET_CONTINUOUS_HPP_
#define DELAYNET_CONTINUOUS_HPP_

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"

namespace delaynet {

/// Delayed linear system dX/dt = neg_laplacian * X(t - tau_c) with the
/// constant initial history X(t) = x0 on [-tau_c, 0]. The step size is
/// snapped to tau_c / m so that delayed lookups land on stored segments.
struct ContinuousSystem {
  SignedMatrix neg_laplacian;
  double tau_c = 0.0;
  Vector x0;
  double dt = 0.0;
  double horizon = 0.0;

  /// Validates and snaps dt. Throws StepTooLarge when dt_request exceeds
  /// tau_c (method of steps needs dt <= tau_c) or, for the undelayed
  /// case, exceeds 0.1 / ||L||_inf.
  static ContinuousSystem make(SignedMatrix neg_l, double tau_c, Vector x0,
                               double dt_request, double horizon) {
    require_signed_matrix(neg_l);
    if (tau_c < 0.0) throw ValidationError("tau_c must be nonnegative");
    if (x0.size() != neg_l.rows()) throw ValidationError("x0 length must match matrix");
    if (!(dt_request > 0.0)) throw ValidationError("dt must be positive");
    const double min_horizon = tau_c > 0.0 ? 10.0 * tau_c : 10.0;
    if (horizon < min_horizon) {
      throw ValidationError("horizon must be at least 10*tau_c (or 10 when undelayed)");
    }
    ContinuousSystem s;
    s.tau_c = tau_c;
    s.horizon = horizon;
    if (tau_c > 0.0) {
      if (dt_request > tau_c) {
        throw StepTooLarge("dt must not exceed tau_c");
      }
      const auto m = static_cast<long long>(std::llround(tau_c / dt_request));
      s.dt = tau_c / static_cast<double>(std::max<long long>(1, m));
    } else {
      const double linf = neg_l.cwiseAbs().rowwise().sum().maxCoeff();
      if (linf > 0.0 && dt_request > 0.1 / linf) {
        throw StepTooLarge("dt too large for the undelayed system");
      }
      s.dt = dt_request;
    }
    s.neg_laplacian = std::move(neg_l);
    s.x0 = std::move(x0);
    return s;
  }

  /// Default step: tau_c / 64, or 1/128 when undelayed.
  static double default_dt(double tau_c) { return tau_c > 0.0 ? tau_c / 64.0 : 1.0 / 128.0; }
};

enum class ContinuousOutcome { kConvergedZero, kDiverged, kUndetermined };

inline const char* to_string(ContinuousOutcome o) {
  switch (o) {
    case ContinuousOutcome::kConvergedZero: return "converged_zero";
    case ContinuousOutcome::kDiverged: return "diverged";
    case ContinuousOutcome::kUndetermined: return "undetermined";
  }
  return "unknown";
}

struct ContinuousTrajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  ContinuousOutcome outcome = ContinuousOutcome::kUndetermined;
  std::optional<double> measured_rate;  // set when converged with R^2 >= 0.9
};

namespace detail {

struct TailFit {
  double slope = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

// Least-squares slope of -log||X||_inf over the final half of the
// samples, skipping those below 1e-13.
inline TailFit fit_tail(const std::vector<double>& times, const std::vector<Vector>& states) {
  TailFit fit;
  const std::size_t half = times.size() / 2;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = half; k < times.size(); ++k) {
    const double a = states[k].cwiseAbs().maxCoeff();
    if (a < 1e-13) continue;
    pts.emplace_back(times[k], -std::log(a));
  }
  fit.points = static_cast<int>(pts.size());
  if (pts.size() < 3) return fit;
  double st = 0, sy = 0;
  for (auto [t, y] : pts) st += t, sy += y;
  const double mt = st / pts.size(), my = sy / pts.size();
  double stt = 0, sty = 0, syy = 0;
  for (auto [t, y] : pts) {
    stt += (t - mt) * (t - mt);
    sty += (t - mt) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (stt == 0.0) return fit;
  fit.slope = sty / stt;
  fit.r_squared = syy > 0.0 ? (sty * sty) / (stt * syy) : 1.0;
  return fit;
}

}  // namespace detail

/// Method-of-steps integration with the classical 4-stage Runge-Kutta
/// scheme. The delayed argument is read from stored nodes via cubic
/// Hermite interpolation (state and derivative at the two bracketing
/// nodes); with dt = tau_c / m every delayed stage time falls either on
/// a node or mid-segment, and derivative discontinuities sit on nodes.
inline ContinuousTrajectory integrate(const ContinuousSystem& sys) {
  const SignedMatrix& a = sys.neg_laplacian;
  const double dt = sys.dt;
  const double tau = sys.tau_c;
  const auto steps = static_cast<std::size_t>(std::ceil(sys.horizon / dt - 1e-12));

  ContinuousTrajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(sys.x0);

  std::vector<Vector> deriv;  // dX/dt at node k, for Hermite lookup
  deriv.reserve(steps + 1);

  const double x0_amp = sys.x0.cwiseAbs().maxCoeff();
  const double diverge_at = 1e6 * std::max(x0_amp, 1e-300);

  // X(s) for s <= t_k; history before t = 0 is the constant x0.
  auto value_at = [&](double s) -> Vector {
    if (s <= 1e-12 * dt) return sys.x0;
    const double u = s / dt;
    auto j = static_cast<std::size_t>(u + 1e-9);
    const double th = u - static_cast<double>(j);
    if (th < 1e-9) return traj.states[j];
    const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
    const double h10 = th * (1 - th) * (1 - th);
    const double h01 = th * th * (3 - 2 * th);
    const double h11 = th * th * (th - 1);
    return h00 * traj.states[j] + h10 * dt * deriv[j] + h01 * traj.states[j + 1] +
           h11 * dt * deriv[j + 1];
  };

  bool dipped_below_zero_band = false;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    Vector next;
    if (tau > 0.0) {
      // RHS depends only on history, so RK4 reduces to Simpson on it.
      const Vector k1 = a * value_at(t - tau);
      deriv.push_back(k1);
      const Vector k2 = a * value_at(t + 0.5 * dt - tau);
      const Vector k4 = a * value_at(t + dt - tau);
      next = traj.states[k] + (dt / 6.0) * (k1 + 4.0 * k2 + k4);
    } else {
      const Vector& x = traj.states[k];
      const Vector k1 = a * x;
      const Vector k2 = a * (x + 0.5 * dt * k1);
      const Vector k3 = a * (x + 0.5 * dt * k2);
      const Vector k4 = a * (x + dt * k3);
      deriv.push_back(k1);
      next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    traj.times.push_back(t + dt);
    traj.states.push_back(std::move(next));

    const double amp = traj.states.back().cwiseAbs().maxCoeff();
    if (amp > diverge_at) {
      traj.outcome = ContinuousOutcome::kDiverged;
      return traj;
    }
    if (amp < 1e-8) dipped_below_zero_band = true;
  }

  if (dipped_below_zero_band) {
    traj.outcome = ContinuousOutcome::kConvergedZero;
  } else {
    const double final_amp = traj.states.back().cwiseAbs().maxCoeff();
    const auto fit = detail::fit_tail(traj.times, traj.states);
    // Decay shows as positive slope of -log||X||.
    if (fit.points >= 3 && fit.slope > 0.0 && final_amp < 1e-3 * x0_amp) {
      traj.outcome = ContinuousOutcome::kConvergedZero;
    } else {
      traj.outcome = ContinuousOutcome::kUndetermined;
    }
  }
  if (traj.outcome == ContinuousOutcome::kConvergedZero) {
    const auto fit = detail::fit_tail(traj.times, traj.states);
    if (fit.points >= 3 && fit.r_squared >= 0.9) traj.measured_rate = fit.slope;
  }
  return traj;
}

/// Empirical decay exponent: least-squares slope of -log||X(t)||_inf
/// over the final half of the trajectory, skipping samples below 1e-13.
/// Throws PoorFit when the fit has R^2 < 0.9 or too few usable points
/// (the caller should extend the horizon).
inline double measure_rate(const ContinuousTrajectory& traj) {
  if (traj.outcome != ContinuousOutcome::kConvergedZero) {
    throw ValidationError("measure_rate: trajectory must be classified converged_zero");
  }
  const auto fit = detail::fit_tail(traj.times, traj.states);
  if (fit.points < 3 || fit.r_squared < 0.9) {
    throw PoorFit("measure_rate: tail fit R^2 below 0.9; extend the horizon");
  }
  return fit.slope;
}

}  // namespace delaynet

#endif  // DELAYNET_CONTINUOUS_HPP_
