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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "delaynet/lambert.hpp"

using namespace delaynet;
using cd = std::complex<double>;

TEST_CASE("lambert: pinned values", "[lambert]") {
  CHECK(lambert_w0(cd(0, 0)).w == cd(0, 0));

  const auto we = lambert_w0(cd(std::exp(1.0), 0));
  CHECK(std::abs(we.w - cd(1, 0)) < 1e-12);

  const auto wb = lambert_w0(cd(-std::exp(-1.0), 0));
  CHECK(std::abs(wb.w - cd(-1, 0)) < 1e-12);

  // (i pi/2) e^(i pi/2) = -pi/2
  const auto wp = lambert_w0(cd(-std::numbers::pi / 2, 0));
  CHECK(std::abs(wp.w - cd(0, std::numbers::pi / 2)) < 1e-12);

  // literature value of W0(-1)
  const auto wm1 = lambert_w0(cd(-1, 0));
  CHECK(wm1.w.real() == Catch::Approx(-0.31813150520476413).epsilon(1e-9));
  CHECK(wm1.w.imag() == Catch::Approx(1.3372357014306895).epsilon(1e-9));
}

TEST_CASE("lambert: residual bound on a log-polar grid", "[lambert]") {
  // 100 radii x 100 angles covering |z| in [1e-8, 1e3], all quadrants.
  for (int ir = 0; ir < 100; ++ir) {
    const double r = std::pow(10.0, -8.0 + 11.0 * ir / 99.0);
    for (int ia = 0; ia < 100; ++ia) {
      const double ang = -std::numbers::pi + 2 * std::numbers::pi * (ia + 0.5) / 100.0;
      const cd z = std::polar(r, ang);
      const auto v = lambert_w0(z);
      const double bound = 1e-12 * std::max(1.0, std::abs(z));
      INFO("z = " << z.real() << " + " << z.imag() << "i");
      REQUIRE(v.residual <= bound);
      REQUIRE(std::abs(v.w * std::exp(v.w) - z) <= bound);
      // branch-0 region: Re w >= -1, |Im w| <= pi
      REQUIRE(v.w.real() >= -1.0 - 1e-9);
      REQUIRE(std::abs(v.w.imag()) <= std::numbers::pi);
    }
  }
}

TEST_CASE("lambert: conjugate symmetry off the branch cut", "[lambert]") {
  for (int k = 0; k < 200; ++k) {
    const double r = std::pow(10.0, -3.0 + 6.0 * k / 199.0);
    const double ang = 0.05 + (std::numbers::pi - 0.1) * k / 199.0;
    const cd z = std::polar(r, ang);
    const auto a = lambert_w0(z).w;
    const auto b = lambert_w0(std::conj(z)).w;
    CHECK(std::abs(b - std::conj(a)) < 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("lambert: upper-half limit on the cut and real-axis behavior", "[lambert]") {
  // Below the branch point the value leaves the real axis through the
  // upper half-plane; the residual bound holds along the whole cut.
  const auto on_cut = lambert_w0(cd(-2.0, 0.0));
  CHECK(on_cut.w.imag() > 0.0);
  for (int k = 0; k < 60; ++k) {
    const double r = std::pow(10.0, -0.3 + 3.3 * k / 59.0);  // 0.5 .. 1000
    const auto v = lambert_w0(cd(-r, 0.0));
    INFO("z = -" << r);
    REQUIRE(v.residual <= 1e-12 * std::max(1.0, r));
    if (r > std::exp(-1.0)) REQUIRE(v.w.imag() > 0.0);
    REQUIRE(v.w.imag() < std::numbers::pi);
  }
  // On (-1/e, inf) the principal branch stays real.
  for (double x : {-0.25, -0.05, 0.1, 0.5, 2.0, 10.0, 500.0}) {
    const auto v = lambert_w0(cd(x, 0.0));
    CHECK(std::abs(v.w.imag()) < 1e-12);
    CHECK(v.w.real() >= -1.0);
  }
  // W is increasing on the real axis
  double prev = -1.0;
  for (double x : {-0.3, -0.1, 0.0, 0.3, 1.0, 3.0}) {
    const double w = lambert_w0(cd(x, 0.0)).w.real();
    CHECK(w >= prev);
    prev = w;
  }
}
