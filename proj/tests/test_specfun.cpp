// SPDX-License-Identifier: Apache-2.0
//
// irsnoma — secrecy-performance analysis of an IRS-assisted NOMA downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rng.hpp"
#include "specfun.hpp"

using namespace irsnoma;
using namespace irsnoma::specfun;

namespace {

// E1(x) directly from its defining series (independent oracle).
double e1_series_oracle(double x) {
  double sum = -kEulerGamma - std::log(x);
  double term = 1.0;
  for (int n = 1; n <= 60; ++n) {
    term *= x / n;
    sum += (n % 2 ? term : -term) / n;
  }
  return sum;
}

}  // namespace

TEST_CASE("log_gamma matches pinned values and the library reference") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  // Gamma(3.5) = 15 sqrt(pi) / 8 by the recurrence from Gamma(1/2)
  CHECK(log_gamma(3.5) == doctest::Approx(std::log(15.0 * std::sqrt(M_PI) / 8.0)).epsilon(1e-13));
  for (double x = 0.5; x <= 400.0; x += 0.4142) {
    double ref = std::lgamma(x);
    CHECK(std::fabs(log_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
  }
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("lower incomplete gamma: pinned points and quadrature oracle") {
  auto z = lower_incomplete_gamma(2.0, 0.0);
  CHECK(z.lower == 0.0);
  CHECK(z.regularized == 0.0);

  auto g11 = lower_incomplete_gamma(1.0, 1.0);
  CHECK(g11.lower == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(g11.regularized == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

  // gamma(2.5, 3) against adaptive quadrature of t^{1.5} e^{-t} on [0, 3]
  double oracle = oracles::adaptive_simpson(
      [](double t) { return t <= 0.0 ? 0.0 : std::pow(t, 1.5) * std::exp(-t); }, 0.0, 3.0,
      1e-13);
  auto g = lower_incomplete_gamma(2.5, 3.0);
  CHECK(g.lower == doctest::Approx(oracle).epsilon(1e-10));

  CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lower_incomplete_gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("regularized incomplete gamma is a CDF in x") {
  for (double s : {0.5, 1.0, 2.5, 7.0, 40.5}) {
    double prev = -1.0;
    for (double x = 0.0; x <= 8.0 * s; x += 0.05 * s) {
      double p = gamma_p(s, x);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(p >= prev - 1e-14);
      prev = p;
    }
    CHECK(gamma_p(s, 60.0 * s) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gamma_q(s, 0.0) == 1.0);
  }
}

TEST_CASE("marcum Q of order 1/2") {
  for (double a : {0.0, 0.3, 1.0, 4.0}) CHECK(marcum_q_half(a, 0.0) == 1.0);
  // survival of the noncentral chi-square with 1 dof, by quadrature
  CHECK(marcum_q_half(0.0, 1.0) ==
        doctest::Approx(std::erfc(1.0 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(marcum_q_half(0.0, 1.0) ==
        doctest::Approx(oracles::noncentral_chi2_df1_survival(0.0, 1.0)).epsilon(1e-9));
  CHECK(marcum_q_half(1.0, 1.0) ==
        doctest::Approx(0.5 * (std::erfc(0.0) + std::erfc(std::sqrt(2.0)))).epsilon(1e-14));
  // series-definition route
  CHECK(marcum_q_half(1.0, 1.0) ==
        doctest::Approx(oracles::marcum_q_half_series(1.0, 1.0)).epsilon(1e-12));
  CHECK(marcum_q_half(2.5, 1.75) ==
        doctest::Approx(oracles::marcum_q_half_series(2.5, 1.75)).epsilon(1e-12));
  CHECK_THROWS_AS(marcum_q_half(-1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(marcum_q_half(0.0, -1.0), std::domain_error);
}

TEST_CASE("marcum Q monotonicity") {
  const double grid[] = {0.0, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0};
  for (double a : grid) {
    double prev = 2.0;
    for (double b : grid) {
      double q = marcum_q_half(a, b);
      CHECK(q >= 0.0);
      CHECK(q <= 1.0);
      CHECK(q <= prev + 1e-15);  // nonincreasing in b
      prev = q;
    }
  }
  for (double b : grid) {
    double prev = -1.0;
    for (double a : grid) {
      double q = marcum_q_half(a, b);
      CHECK(q >= prev - 1e-15);  // nondecreasing in a
      prev = q;
    }
  }
}

TEST_CASE("hyp2f1 at -1") {
  CHECK(hyp2f1_at_minus1(3.0, 0.0, 2.0) == 1.0);
  CHECK(hyp2f1_at_minus1(1.0, 1.0, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // direct alternating series with Euler acceleration
  CHECK(hyp2f1_at_minus1(2.0, 0.5, 2.5) ==
        doctest::Approx(oracles::hyp2f1_minus1_direct(2.0, 0.5, 2.5)).epsilon(1e-10));
  CHECK_THROWS_AS(hyp2f1_at_minus1(1.0, 1.0, -2.0), std::domain_error);
  SeriesControl tiny{1e-12, 3};
  CHECK_THROWS_AS(hyp2f1_at_minus1(2.0, 0.5, 2.5, tiny), ConvergenceError);
}

TEST_CASE("hyp2f1 Pfaff route agrees with the direct series on random pairs") {
  RandomStream rng(99, 0);
  for (int i = 0; i < 100; ++i) {
    double mc = 0.5 + 4.5 * rng.uniform01();
    double md = 0.5 + 4.5 * rng.uniform01();
    if (mc > md) std::swap(mc, md);
    double a = 2.0 * mc, b = mc - md + 0.5, c = mc + md + 0.5;
    double direct = oracles::hyp2f1_minus1_direct(a, b, c);
    CHECK(hyp2f1_at_minus1(a, b, c) == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("exponential integral for negative arguments") {
  CHECK(exp_integral_ei(-1.0) == doctest::Approx(-e1_series_oracle(1.0)).epsilon(1e-10));
  // continued-fraction bracket e^{-x}/x (1 - 1/x) <= E1(x) <= e^{-x}/x
  double v = -exp_integral_ei(-10.0);
  CHECK(v <= std::exp(-10.0) / 10.0 * (1.0 + 1e-12));
  CHECK(v >= std::exp(-10.0) / 10.0 * 0.9);
  CHECK(std::fabs(exp_integral_ei(-700.0)) < 1e-300);
  CHECK_THROWS_AS(exp_integral_ei(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_ei(1.0), std::domain_error);
  // scaled companion agrees where both are representable
  for (double x : {0.25, 0.5, 1.0, 2.0, 17.0}) {
    CHECK(e1_exp_scaled(x) ==
          doctest::Approx(-exp_integral_ei(-x) * std::exp(x)).epsilon(1e-12));
  }
}

TEST_CASE("gauss-laguerre rules") {
  auto r1 = gauss_laguerre_rule(1);
  CHECK(r1.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-13));

  auto r2 = gauss_laguerre_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(r2.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(r2.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-13));
  CHECK(r2.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-13));

  auto r100 = gauss_laguerre_rule(100);
  double sw = 0.0, swx = 0.0;
  for (int i = 0; i < 100; ++i) {
    sw += r100.weights[i];
    swx += r100.weights[i] * r100.nodes[i];
    CHECK(r100.nodes[i] > 0.0);
    if (i) CHECK(r100.nodes[i] > r100.nodes[i - 1]);
    CHECK(r100.weights[i] > 0.0);
  }
  CHECK(std::fabs(sw - 1.0) <= 1e-12);
  CHECK(std::fabs(swx - 1.0) <= 1e-9);

  CHECK_THROWS_AS(gauss_laguerre_rule(0), std::domain_error);
  CHECK_THROWS_AS(gauss_laguerre_rule(513), std::domain_error);
  CHECK_NOTHROW(gauss_laguerre_rule(512));
}

TEST_CASE("quadrature rules integrate their weight-function moments") {
  // degree <= 2n-1 exactness, both families
  for (int n = 1; n <= 8; ++n) {
    auto gl = gauss_laguerre_rule(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double m = 0.0;
      for (int i = 0; i < n; ++i) m += gl.weights[i] * std::pow(gl.nodes[i], k);
      double exact = std::exp(log_gamma(k + 1.0));
      CHECK(std::fabs(m - exact) / exact <= 1e-9);
    }
    auto cg = chebyshev_gauss_rule(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double m = 0.0;
      for (int i = 0; i < n; ++i) m += cg.weights[i] * std::pow(cg.nodes[i], k);
      if (k % 2) {
        CHECK(std::fabs(m) <= 1e-12);
      } else {
        // int_{-1}^{1} x^k / sqrt(1 - x^2) dx = pi (k-1)!! / k!!
        double exact = M_PI;
        for (int j = k; j >= 2; j -= 2) exact *= (j - 1.0) / j;
        CHECK(std::fabs(m - exact) / exact <= 1e-9);
      }
    }
  }
}

TEST_CASE("chebyshev-gauss rules") {
  auto r1 = chebyshev_gauss_rule(1);
  CHECK(std::fabs(r1.nodes[0]) < 1e-15);
  CHECK(r1.weights[0] == doctest::Approx(M_PI).epsilon(1e-15));

  auto r2 = chebyshev_gauss_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(std::cos(M_PI / 4.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(std::cos(3.0 * M_PI / 4.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(M_PI / 2.0).epsilon(1e-15));

  auto r100 = chebyshev_gauss_rule(100);
  double sw = 0.0;
  for (double w : r100.weights) sw += w;
  CHECK(sw == doctest::Approx(M_PI).epsilon(1e-13));
  for (double t : r100.nodes) {
    CHECK(t > -1.0);
    CHECK(t < 1.0);
  }
  CHECK_THROWS_AS(chebyshev_gauss_rule(0), std::domain_error);
}

TEST_CASE("poisson half mixture sum") {
  // lambda = 0: only k = 0 survives
  CHECK(poisson_half_mixture_sum(0.0, [](int) { return 1.0; }) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  // reduction to the chi-square CDF at lambda = 0
  for (double x : {0.3, 1.0, 4.0}) {
    double v = poisson_half_mixture_sum(0.0, [&](int k) {
      return lower_incomplete_gamma(k + 0.5, 0.5 * x).lower;
    });
    CHECK(v == doctest::Approx(gamma_p(0.5, 0.5 * x)).epsilon(1e-12));
  }
  // total probability of the mixture
  for (double lam : {0.0, 1.0, 10.0, 78.25, 100.0}) {
    double v =
        poisson_half_mixture_sum(lam, [](int k) { return std::exp(log_gamma(k + 0.5)); });
    CHECK(std::fabs(v - 1.0) <= 1e-9);
  }
  // regularized variant agrees with the raw one
  for (double lam : {0.5, 12.0}) {
    auto raw = poisson_half_mixture_sum(
        lam, [](int k) { return lower_incomplete_gamma(k + 0.5, 0.8).lower; });
    auto reg = poisson_half_mixture_sum_regularized(
        lam, [](int k) { return gamma_p(k + 0.5, 0.8); });
    CHECK(raw == doctest::Approx(reg).epsilon(1e-12));
  }
  CHECK_THROWS_AS(poisson_half_mixture_sum(-1.0, [](int) { return 1.0; }), std::domain_error);
  SeriesControl tiny{1e-12, 5};
  CHECK_THROWS_AS(poisson_half_mixture_sum(
                      100.0, [](int k) { return std::exp(log_gamma(k + 0.5)); }, tiny),
                  ConvergenceError);
}
