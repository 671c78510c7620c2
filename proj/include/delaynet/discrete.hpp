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

#ifndef DELAYNET_DISCRETE_HPP_
#define DELAYNET_DISCRETE_HPP_

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "delaynet/errors.hpp"
#include "delaynet/graph.hpp"
#include "delaynet/matrix.hpp"
#include "delaynet/spectral.hpp"

namespace delaynet {

/// Delayed discrete-time opinion system
///   X(k+1) = diag(self_weights) X(k) + coupling * X(k - tau_d),
/// with constant pre-history X(k) = X(0) for k <= 0. For the signed
/// stochastic model, |self_weights_i| + sum_j |coupling_ij| = 1 per row.
struct DiscreteSystem {
  Vector self_weights;   // diagonal of W-hat, entries >= 0
  SignedMatrix coupling;  // W-tilde, zero diagonal
  int tau_d = 0;
  Vector x0;

  int size() const { return static_cast<int>(coupling.rows()); }

  /// Splits a full weight matrix into self-loop and coupling parts.
  static DiscreteSystem from_matrix(const SignedMatrix& w, int tau_d, Vector x0) {
    require_signed_matrix(w);
    if (tau_d < 0) throw ValidationError("tau_d must be nonnegative");
    if (x0.size() != w.rows()) throw ValidationError("x0 length must match matrix size");
    if ((w.diagonal().array() < 0.0).any()) {
      throw ValidationError("self-loop weights must be nonnegative");
    }
    DiscreteSystem s;
    s.self_weights = w.diagonal();
    s.coupling = w;
    s.coupling.diagonal().setZero();
    s.tau_d = tau_d;
    s.x0 = std::move(x0);
    return s;
  }

  SignedMatrix full_matrix() const {
    SignedMatrix w = coupling;
    w.diagonal() = self_weights;
    return w;
  }
};

enum class DiscreteOutcome {
  kConvergedZero,
  kBipartiteConsensus,
  kConvergedOther,
  kNotConverged,
  kDiverged,
};

inline const char* to_string(DiscreteOutcome o) {
  switch (o) {
    case DiscreteOutcome::kConvergedZero: return "converged_zero";
    case DiscreteOutcome::kBipartiteConsensus: return "bipartite_consensus";
    case DiscreteOutcome::kConvergedOther: return "converged_other";
    case DiscreteOutcome::kNotConverged: return "not_converged";
    case DiscreteOutcome::kDiverged: return "diverged";
  }
  return "unknown";
}

/// Simulated opinion path plus its tail classification.
struct Trajectory {
  std::vector<Vector> states;  // states[k] = X(k), states[0] = X(0)
  DiscreteOutcome outcome = DiscreteOutcome::kNotConverged;
  int steps_run = 0;
  double consensus_alpha = 0.0;  // bipartite consensus magnitude
  std::pair<std::vector<int>, std::vector<int>> bipartition;  // sign split
};

/// Delay-free block-companion form A of the system: top block row is
/// [W-hat, 0, ..., 0, W-tilde] with identity subdiagonal blocks, size
/// n(tau_d + 1). Absolute row sums equal one whenever the system's do.
inline SignedMatrix build_augmented(const DiscreteSystem& sys) {
  const int n = sys.size();
  const int m = n * (sys.tau_d + 1);
  SignedMatrix a = SignedMatrix::Zero(m, m);
  if (sys.tau_d == 0) {
    a = sys.full_matrix();
    return a;
  }
  for (int i = 0; i < n; ++i) a(i, i) = sys.self_weights(i);
  a.topRightCorner(n, n) = sys.coupling;
  for (int r = 1; r <= sys.tau_d; ++r) {
    a.block(r * n, (r - 1) * n, n, n).setIdentity();
  }
  return a;
}

namespace detail {

// Tail-window classification. The window holds the most recent
// max(50, 5(tau_d+1)) states once available.
inline void classify_tail(Trajectory& t, int tau_d, double tol) {
  const int window = std::max(50, 5 * (tau_d + 1));
  const int have = static_cast<int>(t.states.size());
  if (have < window + 1) {
    t.outcome = DiscreteOutcome::kNotConverged;
    return;
  }
  const int n = static_cast<int>(t.states.front().size());
  const int begin = have - window;

  double tail_max = 0.0;
  double delta_max = 0.0;
  for (int k = begin; k < have; ++k) {
    tail_max = std::max(tail_max, t.states[k].cwiseAbs().maxCoeff());
    delta_max = std::max(delta_max, (t.states[k] - t.states[k - 1]).cwiseAbs().maxCoeff());
  }
  if (tail_max < tol) {
    t.outcome = DiscreteOutcome::kConvergedZero;
    return;
  }

  // Bipartite consensus: common magnitude alpha > 1e-3 and a sign
  // pattern frozen across the window.
  const Vector& last = t.states.back();
  double alpha = last.cwiseAbs().mean();
  bool bipartite = alpha > 1e-3;
  for (int k = begin; bipartite && k < have; ++k) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(std::abs(t.states[k](i)) - alpha) >= 1e-4 ||
          (t.states[k](i) > 0) != (last(i) > 0) ||
          (t.states[k](i) < 0) != (last(i) < 0)) {
        bipartite = false;
        break;
      }
    }
  }
  if (bipartite) {
    t.outcome = DiscreteOutcome::kBipartiteConsensus;
    t.consensus_alpha = alpha;
    for (int i = 0; i < n; ++i) {
      (last(i) >= 0 ? t.bipartition.first : t.bipartition.second).push_back(i);
    }
    return;
  }
  t.outcome = delta_max < tol ? DiscreteOutcome::kConvergedOther
                              : DiscreteOutcome::kNotConverged;
}

}  // namespace detail

/// Iterates the delayed recursion, reading X(0) for the delayed term
/// until k >= tau_d, and classifies the tail window: converged_zero,
/// bipartite_consensus, converged_other, diverged (|x| > 1e6, only
/// reachable for malformed inputs), else not_converged.
inline Trajectory simulate(const DiscreteSystem& sys, int max_steps, double tol = 1e-6) {
  if (max_steps < 1) throw ValidationError("simulate: max_steps must be >= 1");
  if (!(tol > 0.0)) throw ValidationError("simulate: tol must be positive");

  const int window = std::max(50, 5 * (sys.tau_d + 1));
  Trajectory t;
  t.states.reserve(static_cast<std::size_t>(max_steps) + 1);
  t.states.push_back(sys.x0);

  for (int k = 0; k < max_steps; ++k) {
    const Vector& delayed = t.states[static_cast<std::size_t>(std::max(0, k - sys.tau_d))];
    Vector next = sys.self_weights.cwiseProduct(t.states.back()) + sys.coupling * delayed;
    t.states.push_back(std::move(next));
    t.steps_run = k + 1;

    const double amp = t.states.back().cwiseAbs().maxCoeff();
    if (amp > 1e6) {
      t.outcome = DiscreteOutcome::kDiverged;
      return t;
    }
    // Early exit only on neutralization: once a full window sits below
    // tol, unit absolute row sums keep every future state there too.
    // The other verdicts need the full run (a slow decay toward zero
    // can masquerade as a settled nonzero state mid-flight).
    if (t.steps_run >= window && t.steps_run % window == 0) {
      double tail_max = 0.0;
      for (int k = t.steps_run - window + 1; k <= t.steps_run; ++k) {
        tail_max = std::max(tail_max, t.states[static_cast<std::size_t>(k)].cwiseAbs().maxCoeff());
      }
      if (tail_max < tol) {
        t.outcome = DiscreteOutcome::kConvergedZero;
        return t;
      }
    }
  }
  detail::classify_tail(t, sys.tau_d, tol);
  return t;
}

/// True iff every closed SCC of the graph contains a positive self-loop.
inline bool check_cscc_selfloop_condition(const SignedMatrix& w) {
  const SccDecomposition d = scc_decompose(w);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (!d.closed[c]) continue;
    bool loop = false;
    for (int v : d.components[c]) {
      if (w(v, v) > 0.0) loop = true;
    }
    if (!loop) return false;
  }
  return true;
}

/// Convergence rate R = -log |theta_1| with theta_1 the largest-modulus
/// eigenvalue of the augmented matrix. For loop-free systems the root
/// identity theta^(tau_d+1) = lambda gives the fast path
/// R = -log |lambda_1| / (tau_d + 1) from the eigenvalues of W alone.
inline double discrete_rate(const DiscreteSystem& sys) {
  const double guard = 1.0 - 1e-10;
  if (sys.self_weights.isZero(0.0)) {
    const double rho = eigenvalues(sys.coupling).spectral_radius;
    const double theta1 = std::pow(rho, 1.0 / (sys.tau_d + 1));
    if (theta1 >= guard) {
      throw NotConvergent("discrete_rate: spectral radius of A is not below one");
    }
    return -std::log(theta1);
  }
  const double theta1 = eigenvalues(build_augmented(sys)).spectral_radius;
  if (theta1 >= guard) {
    throw NotConvergent("discrete_rate: spectral radius of A is not below one");
  }
  return -std::log(theta1);
}

/// Step budget sized from the spectral rate estimate:
/// 10 (tau_d + 1) ceil(1 / R_est), capped at 100000. Systems without a
/// convergent spectrum get the full cap.
inline int default_max_steps(const DiscreteSystem& sys) {
  const long long aug_size = static_cast<long long>(sys.size()) * (sys.tau_d + 1);
  if (!sys.self_weights.isZero(0.0) && aug_size > 2000) {
    return 100000;  // augmented eigensolve too costly for a default
  }
  try {
    const double r_est = discrete_rate(sys);
    const double steps = 10.0 * (sys.tau_d + 1) * std::ceil(1.0 / r_est);
    return static_cast<int>(std::min(steps, 1e5));
  } catch (const NotConvergent&) {
    return 100000;
  }
}

/// Hausdorff distance between the eigenvalues of the augmented matrix
/// and the (tau_d+1)-th complex roots of the eigenvalues of w. Requires
/// a zero diagonal (no self-loops), where the identity
/// det(lambda I - A) = det(lambda^(tau_d+1) I - W) holds.
inline double root_identity_check(const SignedMatrix& w, int tau_d) {
  require_signed_matrix(w);
  if (!has_zero_diagonal(w)) {
    throw ValidationError("root_identity_check: needs a zero diagonal");
  }
  const int n = static_cast<int>(w.rows());
  const int m = tau_d + 1;

  DiscreteSystem sys;
  sys.self_weights = Vector::Zero(n);
  sys.coupling = w;
  sys.tau_d = tau_d;
  sys.x0 = Vector::Zero(n);

  const auto theta = eigenvalues(build_augmented(sys)).eigenvalues;

  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<std::size_t>(n) * m);
  for (const auto& lam : eigenvalues(w).eigenvalues) {
    const double r = std::pow(std::abs(lam), 1.0 / m);
    const double phi = std::arg(lam);
    for (int k = 0; k < m; ++k) {
      const double ang = (phi + 2.0 * 3.14159265358979323846 * k) / m;
      roots.push_back(std::polar(r, ang));
    }
  }

  auto directed = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& a : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& b : to) best = std::min(best, std::abs(a - b));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(theta, roots), directed(roots, theta));
}

}  // namespace delaynet

#endif  // DELAYNET_DISCRETE_HPP_
