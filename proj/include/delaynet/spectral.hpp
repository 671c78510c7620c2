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

#ifndef DELAYNET_SPECTRAL_HPP_
#define DELAYNET_SPECTRAL_HPP_

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"
#include "delaynet/netgen.hpp"

namespace delaynet {

enum class EigenOrder {
  kModulusDescending,  // discrete-time convention: |l_1| >= |l_2| >= ...
  kAbsRealAscending,   // continuous-time convention: |Re a_1| <= |Re a_2| <= ...
};

/// Full eigenvalue set of a real square matrix, sorted per `order`.
struct SpectralSummary {
  std::vector<std::complex<double>> eigenvalues;
  EigenOrder order = EigenOrder::kModulusDescending;
  double spectral_radius = 0.0;
  double rightmost_real = 0.0;
};

inline void sort_eigenvalues(std::vector<std::complex<double>>& ev, EigenOrder order) {
  auto key_lt = [order](const std::complex<double>& a, const std::complex<double>& b) {
    const double ka = order == EigenOrder::kModulusDescending ? -std::abs(a)
                                                              : std::abs(a.real());
    const double kb = order == EigenOrder::kModulusDescending ? -std::abs(b)
                                                              : std::abs(b.real());
    if (ka != kb) return ka < kb;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(ev.begin(), ev.end(), key_lt);
}

/// All eigenvalues of a dense real matrix (Hessenberg + implicit-shift QR
/// via Eigen's real Schur path). Complex values come in conjugate pairs;
/// each satisfies the residual contract ||Mv - lv|| <= 1e-8 ||M||_F.
inline SpectralSummary eigenvalues(const SignedMatrix& m,
                                   EigenOrder order = EigenOrder::kModulusDescending) {
  require_signed_matrix(m);
  Eigen::EigenSolver<SignedMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigenvalues: QR iteration failed to converge");
  }
  SpectralSummary s;
  s.order = order;
  const auto& ev = solver.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  sort_eigenvalues(s.eigenvalues, order);
  s.spectral_radius = 0.0;
  s.rightmost_real = -std::numeric_limits<double>::infinity();
  for (const auto& l : s.eigenvalues) {
    s.spectral_radius = std::max(s.spectral_radius, std::abs(l));
    s.rightmost_real = std::max(s.rightmost_real, l.real());
  }
  return s;
}

/// Predicted bulk radius of the normalized random mixture:
/// sqrt(n P sigma^2) / ((n-1) P E|Z|).
inline double predict_circular(const MixtureStats& stats, int n) {
  if (stats.kind != MixtureKind::kRandom) {
    throw ValidationError("predict_circular: needs random-mixture stats");
  }
  const double num = std::sqrt(n * stats.p_connect * stats.sigma * stats.sigma);
  return num / ((n - 1) * stats.p_connect * stats.e_abs_z);
}

/// Elliptic-law geometry for the normalized complex mixture: mean shift,
/// variance, cross-moment, ellipse semi-axes, extreme points, and the
/// mean-induced outlier when |nE| exceeds sqrt(nV).
struct EllipsePrediction {
  double center_shift = 0.0;  // E := E(w_ij); ellipse is centered at -E
  double v = 0.0;             // V := Var(w_ij)
  double t = 0.0;             // T := E(w_ij w_ji)
  double zeta = 0.0;          // (T - E^2) / V
  double a = 0.0;             // horizontal semi-axis sqrt(nV)(1 + zeta)
  double b = 0.0;             // vertical semi-axis sqrt(nV)(1 - zeta)
  std::optional<double> outlier;  // lambda_outlier = lambda_hat - E
  std::complex<double> q_rightmost, q_leftmost, q_uppermost;
  std::optional<std::complex<double>> q_outlier;
};

inline EllipsePrediction predict_ellipse(const MixtureStats& stats, int n) {
  if (stats.kind != MixtureKind::kComplex) {
    throw ValidationError("predict_ellipse: needs complex-mixture stats");
  }
  const double p = stats.p_connect;
  const double ez = stats.e_abs_z;
  const double cm = (n - 1) * p * stats.p_hat * ez;

  EllipsePrediction e;
  e.center_shift = stats.p_bar / ((n - 1) * stats.p_hat);
  const double ew2 = p * stats.p_hat * stats.sigma * stats.sigma / (cm * cm);
  e.v = ew2 - e.center_shift * e.center_shift;
  e.t = p * stats.p_star * ez * ez / (cm * cm);
  e.zeta = (e.t - e.center_shift * e.center_shift) / e.v;
  const double sqrt_nv = std::sqrt(n * e.v);
  e.a = sqrt_nv * (1.0 + e.zeta);
  e.b = sqrt_nv * (1.0 - e.zeta);

  e.q_rightmost = {e.a - e.center_shift, 0.0};
  e.q_leftmost = {-e.a - e.center_shift, 0.0};
  e.q_uppermost = {-e.center_shift, e.b};

  if (std::abs(n * e.center_shift) > sqrt_nv) {
    if (e.center_shift == 0.0) {
      throw DegenerateMean("predict_ellipse: outlier branch with zero mean");
    }
    const double lam_hat =
        n * e.center_shift +
        (e.t - e.center_shift * e.center_shift) / e.center_shift;
    e.outlier = lam_hat - e.center_shift;
    e.q_outlier = std::complex<double>(*e.outlier, 0.0);
  }
  return e;
}

/// Share of eigenvalues inside the slack-inflated predicted ellipse. The
/// eigenvalue nearest the predicted outlier is matched and excluded from
/// the containment count; its relative error is reported separately.
struct ContainmentReport {
  double fraction_inside = 0.0;
  int n_inside = 0;
  int n_total = 0;  // eigenvalues counted (matched outlier excluded)
  std::optional<std::complex<double>> outlier_matched;
  std::optional<double> outlier_error;  // |matched - predicted| / |predicted|
};

inline ContainmentReport containment_check(const SpectralSummary& summary,
                                           const EllipsePrediction& pred,
                                           double slack = 1.15) {
  if (slack < 0.0) throw ValidationError("containment_check: slack must be >= 0");
  std::vector<std::complex<double>> ev = summary.eigenvalues;

  ContainmentReport r;
  if (pred.q_outlier && !ev.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < ev.size(); ++k) {
      if (std::abs(ev[k] - *pred.q_outlier) < std::abs(ev[best] - *pred.q_outlier)) {
        best = k;
      }
    }
    r.outlier_matched = ev[best];
    r.outlier_error = std::abs(ev[best] - *pred.q_outlier) / std::abs(*pred.q_outlier);
    ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(best));
  }

  const double ax = pred.a * slack;
  const double by = pred.b * slack;
  for (const auto& l : ev) {
    const double x = l.real() + pred.center_shift;
    const double y = l.imag();
    double q;
    if (by > 0.0) {
      q = (x / ax) * (x / ax) + (y / by) * (y / by);
    } else {  // degenerate segment: vertical extent must vanish
      q = (std::abs(y) <= 1e-12) ? (x / ax) * (x / ax) : 2.0;
    }
    if (q <= 1.0) ++r.n_inside;
  }
  r.n_total = static_cast<int>(ev.size());
  r.fraction_inside = r.n_total ? static_cast<double>(r.n_inside) / r.n_total : 1.0;
  return r;
}

}  // namespace delaynet

#endif  // DELAYNET_SPECTRAL_HPP_
