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

#include "analytic.hpp"
#include "montecarlo.hpp"
#include "oracles.hpp"

using namespace irsnoma;
using namespace irsnoma::analytic;
using channel::Scenario;

namespace {

SystemConfig random_config(RandomStream& rng) {
  SystemConfig c;
  c.a1 = 0.05 + 0.4 * rng.uniform01();
  c.a2 = 1.0 - c.a1;
  c.n = 1 + static_cast<int>(12 * rng.uniform01());
  c.m1 = 0.5 + 3.0 * rng.uniform01();
  c.m2 = 0.5 + 3.0 * rng.uniform01();
  c.m3 = 0.5 + 3.0 * rng.uniform01();
  c.d1 = 5.0 + 80.0 * rng.uniform01();
  c.d_b1 = 2.0 + 20.0 * rng.uniform01();
  c.d_b2 = 2.0 + 20.0 * rng.uniform01();
  c.d_e = 2.0 + 50.0 * rng.uniform01();
  c.rho_db = 40.0 * rng.uniform01();
  c.rho_e_db = 20.0 * rng.uniform01();
  c.u1 = 60;
  c.u2 = 60;
  return c;
}

}  // namespace

TEST_CASE("cdf of the user-1 SNR") {
  Scenario scn{SystemConfig{}};
  CHECK(cdf_gamma_b1(0.0, scn) == 0.0);
  CHECK(cdf_gamma_b1(1e9, scn) == doctest::Approx(1.0).epsilon(1e-12));
  double unit = scn.cfg.a1 * scn.rho * scn.g_b1;
  CHECK(cdf_gamma_b1(unit, scn) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("cdf of the user-2 SINR, CLT regime") {
  SystemConfig c;
  c.n = 30;
  c.rho_db = 20.0;
  Scenario scn(c);
  CHECK(cdf_gamma_b2_low(0.0, scn) == 0.0);
  CHECK(cdf_gamma_b2_low(-1.0, scn) == 0.0);
  CHECK(cdf_gamma_b2_low(c.a2 / c.a1, scn) == 1.0);
  CHECK(cdf_gamma_b2_low(1e9, scn) == 1.0);
  // against the empirical CDF
  double lo = 0.0, hi = c.a2 / c.a1;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (cdf_gamma_b2_low(mid, scn) < 0.999 ? lo : hi) = mid;
  }
  std::vector<double> grid(60);
  for (int i = 0; i < 60; ++i) grid[i] = (i + 1) * hi / 60.0;
  auto emp = mc::empirical_cdf_gamma_b2(scn, 300000, grid, 21);
  for (int i = 0; i < 60; ++i)
    CHECK(std::fabs(emp.probs[i] - cdf_gamma_b2_low(grid[i], scn)) <= 0.02);
}

TEST_CASE("cdf of the user-2 SINR, tail regime") {
  SystemConfig c;  // m1 = 3, m2 = 1, N = 1
  c.rho_db = 20.0;
  Scenario scn(c);
  CHECK(cdf_gamma_b2_high(0.0, scn) == 0.0);
  CHECK(cdf_gamma_b2_high(c.a2 / c.a1, scn) == 1.0);

  // against the exact product-pair CDF: F(x) = P(|g||h| <= y_h(x)); probe
  // the quantiles 1e-3 and 1e-4 of the exact law
  for (double target : {1e-3, 1e-4}) {
    double lo = 0.0, hi = 3.0;
    for (int it = 0; it < 100; ++it) {
      double mid = 0.5 * (lo + hi);
      (oracles::cascaded_pair_cdf(mid, c.m2, c.m1) < target ? lo : hi) = mid;
    }
    const double u = 0.5 * (lo + hi);  // exact quantile of |g||h|
    // invert y_h(x) = u: x = u^2 rho L a2 / (1 + u^2 rho L a1)
    const double l2 = scn.l2_eff * scn.rho;
    double x = u * u * l2 * c.a2 / (1.0 + u * u * l2 * c.a1);
    double approx = cdf_gamma_b2_high(x, scn);
    CHECK(std::fabs(approx - target) / target <= 0.10);
  }

  SystemConfig eq;
  eq.m1 = eq.m2 = 2.0;
  Scenario scn_eq(eq);
  CHECK_THROWS_AS(cdf_gamma_b2_high(0.5, scn_eq), std::domain_error);
}

TEST_CASE("all cdfs are monotone and within [0,1] on random configs") {
  RandomStream rng(31, 0);
  for (int i = 0; i < 20; ++i) {
    SystemConfig c = random_config(rng);
    Scenario scn(c);
    double ceiling = c.a2 / c.a1;
    double prev_lo = -1.0, prev_hi = -1.0, prev_b1 = -1.0;
    bool high_ok = c.m1 != c.m2;
    for (int j = 0; j <= 1000; ++j) {
      double x = ceiling * j / 1000.0 * 1.05;
      double f1 = cdf_gamma_b1(x * 10.0, scn);
      double fl = cdf_gamma_b2_low(x, scn);
      CHECK(f1 >= std::max(0.0, prev_b1));
      CHECK(fl >= std::max(0.0, prev_lo));
      CHECK(f1 <= 1.0);
      CHECK(fl <= 1.0);
      prev_b1 = f1;
      prev_lo = fl;
      if (high_ok) {
        double fh = cdf_gamma_b2_high(x, scn);
        CHECK(fh >= std::max(0.0, prev_hi));
        CHECK(fh <= 1.0);
        prev_hi = fh;
      }
    }
  }
}

TEST_CASE("sop of user 1") {
  SystemConfig c;
  c.r1 = 0.0;
  c.rho_e_db = -400.0;
  Scenario s0(c);
  CHECK(sop_user1(s0) == 0.0);

  SystemConfig ch;
  ch.rho_db = 200.0;
  Scenario sh(ch);
  CHECK(sop_user1(sh) <= 1e-12);

  // pinned-Eve Monte-Carlo oracle at the reference point
  SystemConfig cd;
  Scenario sd(cd);
  auto est = mc::estimate_sop(sd, 1000000, 42, mc::EveMode::Mean);
  CHECK(std::fabs(est.user1.value - sop_user1(sd)) <= 3.0 * est.user1.std_error + 1e-9);
}

TEST_CASE("sop of user 2") {
  SystemConfig c;
  c.r2 = 0.0;
  c.rho_e_db = -400.0;
  c.rho_db = 60.0;
  Scenario s0(c);
  CHECK(sop_user2(s0, Sop2Regime::Low) <= 1e-6);

  // outage certain once y2 crosses the SINR ceiling
  SystemConfig cy;
  cy.rho_e_db = 120.0;  // a2 mu rho_e LE >> a2/a1
  cy.n = 16;
  Scenario sy(cy);
  CHECK(sop_user2(sy, Sop2Regime::Low) == 1.0);
  CHECK(sop_user2(sy, Sop2Regime::High) == 1.0);

  // CLT form against pinned-Eve MC at the CLT-accurate point
  SystemConfig cm;
  cm.n = 30;
  cm.rho_db = 20.0;
  Scenario sm(cm);
  auto est = mc::estimate_sop(sm, 200000, 17, mc::EveMode::Mean);
  CHECK(std::fabs(est.user2.value - sop_user2(sm, Sop2Regime::Low)) <= 0.02);

  SystemConfig eq;
  eq.m1 = eq.m2 = 1.0;
  eq.rho_db = 20.0;
  Scenario seq(eq);
  CHECK_THROWS_AS(sop_user2(seq, Sop2Regime::High), std::domain_error);

  // auto regime switches at 30 dB and falls back to Low for equal shapes
  SystemConfig ca;
  ca.rho_db = 29.0;
  CHECK(sop2_regime_auto(Scenario(ca)) == Sop2Regime::Low);
  ca.rho_db = 31.0;
  CHECK(sop2_regime_auto(Scenario(ca)) == Sop2Regime::High);
  eq.rho_db = 31.0;
  CHECK(sop2_regime_auto(Scenario(eq)) == Sop2Regime::Low);
  ca.sop2_regime = Sop2RegimeChoice::Low;
  CHECK(sop2_regime_auto(Scenario(ca)) == Sop2Regime::Low);
}

TEST_CASE("sop of user 2 is nonincreasing in rho (CLT regime)") {
  SystemConfig c;
  c.n = 30;
  double prev = 2.0;
  for (double rho = 0.0; rho <= 30.0; rho += 2.0) {
    c.rho_db = rho;
    double p = sop_user2(Scenario(c), Sop2Regime::Low);
    CHECK(p <= prev + 1e-12);
    prev = p;
  }
}

TEST_CASE("network sop combines the per-user probabilities") {
  RandomStream rng(32, 0);
  for (int i = 0; i < 10; ++i) {
    SystemConfig c = random_config(rng);
    Scenario scn(c);
    double p1 = sop_user1(scn);
    double p2 = sop_user2_auto(scn);
    double pn = sop_network(scn);
    CHECK(pn == doctest::Approx(1.0 - (1.0 - p1) * (1.0 - p2)).epsilon(1e-12));
    CHECK(pn >= std::max(p1, p2) - 1e-12);
    CHECK(pn <= 1.0);
  }
}

TEST_CASE("sop of user 1 is nondecreasing in N") {
  SystemConfig c;
  c.rho_db = 40.0;
  double prev = -1.0;
  for (int n = 1; n <= 64; ++n) {
    c.n = n;
    double p = sop_user1(Scenario(c));
    CHECK(p >= prev - 1e-15);
    prev = p;
  }
}

TEST_CASE("asymptotic sops") {
  SystemConfig c;
  c.rho_db = 40.0;
  Scenario s1(c);
  c.rho_db = 40.0 + 10.0 * std::log10(2.0);  // rho doubled
  Scenario s2(c);
  CHECK(asymptotic_sop(s2, Which::User1) ==
        doctest::Approx(0.5 * asymptotic_sop(s1, Which::User1)).epsilon(1e-12));

  // finite-difference log-log slopes (exact power laws)
  auto slope = [](Which which, SystemConfig cfg) {
    cfg.rho_db = 40.0;
    double lo = std::log10(asymptotic_sop(Scenario(cfg), which));
    cfg.rho_db = 50.0;
    double hi = std::log10(asymptotic_sop(Scenario(cfg), which));
    return -(hi - lo);
  };
  SystemConfig cs;
  CHECK(slope(Which::User1, cs) == doctest::Approx(1.0).epsilon(1e-6));
  cs.n = 3;  // m_s = 1 -> diversity 3
  CHECK(slope(Which::User2, cs) == doctest::Approx(3.0).epsilon(1e-6));

  // network asymptote equals the user-1 branch once m_s N > 1
  cs.rho_db = 45.0;
  Scenario sn(cs);
  CHECK(asymptotic_sop(sn, Which::Network) ==
        doctest::Approx(asymptotic_sop(sn, Which::User1)).epsilon(1e-14));

  // boundary m_s N == 1: flagged, dominant branch returned
  SystemConfig cb;  // N = 1, m_s = 1
  cb.rho_db = 45.0;
  Scenario sb(cb);
  bool boundary = false;
  double v = asymptotic_sop(sb, Which::Network, &boundary);
  CHECK(boundary);
  CHECK(v == doctest::Approx(std::max(asymptotic_sop(sb, Which::User1),
                                      asymptotic_sop(sb, Which::User2))).epsilon(1e-14));
}

TEST_CASE("sop floor of user 1") {
  // formula at R1 = 0 is mu LE / gB1
  SystemConfig c;
  c.r1 = 0.0;
  Scenario s(c);
  CHECK(sop1_floor(s) == doctest::Approx(s.mu * s.le_geo / s.g_b1).epsilon(1e-12));

  // clamp to 1 once mu explodes with N
  SystemConfig cbig;
  cbig.n = 64;
  cbig.d1 = 5.0;
  cbig.d_e = 5.0;
  Scenario sbig(cbig);
  CHECK(sop1_floor(sbig) == 1.0);

  // limit check: with rho_e = rho inside the floor regime the closed form
  // approaches the floor within 1% (geometry chosen so 60 dB is inside it;
  // the reference geometry reaches its floor only near 108 dB)
  SystemConfig cf;
  cf.d_b1 = 5.0;
  cf.d1 = 7.5;
  cf.d_e = 7.5;
  cf.rho_db = 60.0;
  cf.rho_e_db = 60.0;
  Scenario sf(cf);
  CHECK(std::fabs(sop_user1(sf) - sop1_floor(sf)) / sop1_floor(sf) <= 0.01);
}

TEST_CASE("diversity orders and slopes") {
  SystemConfig c;
  c.m1 = 3.0;
  c.m2 = 1.0;
  c.n = 3;
  auto s = diversity_and_slopes(Scenario(c));
  CHECK(s.diversity_user1 == 1.0);
  CHECK(s.diversity_user2 == 3.0);
  CHECK(s.diversity_network == 1.0);
  CHECK(s.slope_user1 == 1.0);
  CHECK(s.slope_user2 == 0.0);

  SystemConfig ch;
  ch.m1 = 0.5;
  ch.m2 = 0.5;
  ch.n = 1;
  auto sh = diversity_and_slopes(Scenario(ch));
  CHECK(sh.diversity_user2 == 0.5);
  CHECK(sh.diversity_network == 0.5);
}

TEST_CASE("ergodic rate of Eve") {
  // visible-Eve geometry: the reference distances push the rate below the
  // resolution of the u1-node quadrature, so probe a closer Eve
  SystemConfig c;
  c.n = 30;
  c.rho_e_db = 30.0;
  c.d1 = 10.0;
  c.d_e = 5.0;
  Scenario scn(c);
  double r1 = ergodic_rate_eve(1, scn);
  double r2 = ergodic_rate_eve(2, scn);
  CHECK(r2 > r1);
  CHECK(r1 > 0.0);
  auto est = mc::estimate_asc(scn, 1000000, 77);
  CHECK(std::fabs(r1 - est.rate_e1.value) <= 0.05);
  CHECK(std::fabs(r2 - est.rate_e2.value) <= 0.05);

  // rho_e -> 0 kills the rate
  SystemConfig c0 = c;
  c0.rho_e_db = -300.0;
  Scenario s0(c0);
  CHECK(ergodic_rate_eve(1, s0) <= 1e-12);

  CHECK_THROWS_AS(ergodic_rate_eve(3, scn), std::invalid_argument);
}

TEST_CASE("ergodic rate of Eve is monotone in N and rho_e") {
  SystemConfig c;
  c.d1 = 10.0;
  c.d_e = 5.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      c.n = 2 + 6 * i;
      c.rho_e_db = 10.0 + 5.0 * j;
      double v = ergodic_rate_eve(2, Scenario(c));
      if (j > 0) {
        c.rho_e_db -= 5.0;
        CHECK(v >= ergodic_rate_eve(2, Scenario(c)) - 1e-12);
        c.rho_e_db += 5.0;
      }
      if (i > 0) {
        c.n -= 6;
        CHECK(v >= ergodic_rate_eve(2, Scenario(c)) - 1e-12);
        c.n += 6;
      }
    }
  }
}

TEST_CASE("ergodic rates of the legitimate users") {
  // user 1 against Monte-Carlo at the reference point
  SystemConfig c;
  Scenario scn(c);
  auto est = mc::estimate_asc(scn, 300000, 3);
  CHECK(std::fabs(ergodic_rate_user(1, scn) - est.rate_b1.value) <= 0.02);

  // high-SNR expansion (geometry inside the asymptotic regime at 60 dB)
  SystemConfig ca;
  ca.d_b1 = 2.0;
  ca.alpha_b1 = 2.0;
  ca.rho_db = 60.0;
  Scenario sa(ca);
  double expansion = std::log2(ca.a1 * sa.rho * sa.g_b1) - kEulerGamma / kLn2;
  CHECK(std::fabs(ergodic_rate_user(1, sa) - expansion) <= 0.01);

  // user 2 approaches log2(1 + a2/a1)
  SystemConfig c2;
  c2.n = 30;
  c2.rho_db = 200.0;
  Scenario s2(c2);
  CHECK(ergodic_rate_user(2, s2) == doctest::Approx(std::log2(5.0)).epsilon(1e-9));

  // and against Monte-Carlo in a mid-SNR regime
  SystemConfig cm;
  cm.n = 30;
  cm.rho_db = 50.0;
  cm.d1 = 50.0;
  cm.d_b2 = 2.0;
  Scenario smc(cm);
  auto est2 = mc::estimate_asc(smc, 300000, 4);
  CHECK(std::fabs(ergodic_rate_user(2, smc) - est2.rate_b2.value) <= 0.1);
}

TEST_CASE("average secrecy capacity") {
  SystemConfig c;
  c.n = 30;
  c.rho_db = 30.0;
  c.rho_e_db = 30.0;
  Scenario scn(c);
  double q = asc(2, scn, AscMethod::Quadrature);
  double j = asc(2, scn, AscMethod::Jensen);
  CHECK(std::fabs(q - j) <= 0.3);
  CHECK(q >= 0.0);
  CHECK(j >= 0.0);
  CHECK_THROWS_AS(asc(1, scn, AscMethod::Jensen), std::invalid_argument);

  // Jensen with no eavesdropper: log2((mu2 rho L + 1)/(a1 mu2 rho L + 1))
  SystemConfig c0 = c;
  c0.rho_e_db = -400.0;
  Scenario s0(c0);
  double s = s0.mu2 * s0.rho * s0.l2_geo;
  CHECK(asc(2, s0, AscMethod::Jensen) ==
        doctest::Approx(std::log2((s + 1.0) / (c.a1 * s + 1.0))).epsilon(1e-12));

  // asc1 against Monte-Carlo at the reference geometry
  SystemConfig cm;
  cm.n = 30;
  cm.rho_db = 40.0;
  cm.rho_e_db = 30.0;
  Scenario smc(cm);
  auto est = mc::estimate_asc(smc, 300000, 6);
  CHECK(std::fabs(asc(1, smc, AscMethod::Quadrature) - est.asc1_diff.value) <= 0.05);
}

TEST_CASE("asc asymptotes") {
  SystemConfig c;
  c.n = 30;
  c.rho_e_db = -400.0;
  Scenario s(c);
  CHECK(asc_asymptotic(2, s, AscMethod::Jensen) ==
        doctest::Approx(std::log2(5.0)).epsilon(1e-12));

  // ceiling approach at 80 dB
  SystemConfig ch;
  ch.n = 30;
  ch.rho_db = 80.0;
  ch.rho_e_db = 30.0;
  Scenario sh(ch);
  CHECK(std::fabs(asc(2, sh, AscMethod::Quadrature) -
                  asc_asymptotic(2, sh, AscMethod::Quadrature)) <= 0.01);
  CHECK(std::fabs(asc(2, sh, AscMethod::Jensen) -
                  asc_asymptotic(2, sh, AscMethod::Jensen)) <= 0.01);

  // the user-1 asymptote gains exactly 2 bits per factor-4 in rho
  SystemConfig c4 = ch;
  c4.rho_db = 60.0;
  Scenario sa(c4);
  c4.rho_db = 60.0 + 10.0 * std::log10(4.0);
  Scenario sb(c4);
  CHECK(asc_asymptotic(1, sb, AscMethod::Quadrature) -
            asc_asymptotic(1, sa, AscMethod::Quadrature) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(asc_asymptotic(1, sa, AscMethod::Jensen), std::invalid_argument);
}

TEST_CASE("high-SNR slopes of the asc") {
  SystemConfig c;
  c.n = 30;
  c.rho_e_db = 30.0;
  c.d_b1 = 2.0;
  c.d1 = 50.0;
  c.d_b2 = 2.0;
  c.rho_db = 55.0;
  Scenario sa(c);
  c.rho_db = 55.0 + 10.0 * std::log10(2.0);
  Scenario sb(c);
  double d1 = asc(1, sb, AscMethod::Quadrature) - asc(1, sa, AscMethod::Quadrature);
  double d2 = asc(2, sb, AscMethod::Quadrature) - asc(2, sa, AscMethod::Quadrature);
  CHECK(std::fabs(d1 - 1.0) <= 0.02);  // S1 = 1 bit per octave pair
  CHECK(std::fabs(d2) <= 0.02);        // S2 = 0
}

TEST_CASE("strict-paper variants") {
  SystemConfig c;
  c.n = 30;
  c.rho_db = 40.0;
  c.rho_e_db = 30.0;
  Scenario s(c);
  SystemConfig cp = c;
  cp.strict_paper = true;
  Scenario sp(cp);

  // printed C2^b uses the direct-link distance pair in the numerator gain
  double geo_strict = std::pow(c.d1, -c.alpha1) * std::pow(c.d_b1, -c.alpha_b1);
  double sstrict = sp.mu2 * sp.rho * geo_strict;
  double eve = 1.0 + c.a2 * sp.mu * sp.le_geo * sp.rho_e;
  CHECK(asc(2, sp, AscMethod::Jensen) ==
        doctest::Approx(std::max(0.0, std::log2((sstrict + 1.0) /
                                                ((c.a1 * sstrict + 1.0) * eve))))
            .epsilon(1e-12));

  // printed user-1 asymptote flips the sign of the log term
  double lead = std::log2(c.a1 * s.rho * s.g_b1);
  CHECK(asc_asymptotic(1, s, AscMethod::Quadrature) -
            asc_asymptotic(1, sp, AscMethod::Quadrature) ==
        doctest::Approx(2.0 * lead).epsilon(1e-9));
}

TEST_CASE("metric bundle") {
  SystemConfig c;
  c.n = 3;
  c.rho_db = 40.0;
  Scenario scn(c);
  auto m = evaluate_metrics(scn);
  CHECK(m.sop1 == doctest::Approx(sop_user1(scn)));
  CHECK(m.sop2 == doctest::Approx(sop_user2_auto(scn)));
  CHECK(m.sop_network >= std::max(m.sop1, m.sop2) - 1e-12);
  CHECK(m.sop2_method == MethodTag::HighSNR);  // auto regime above 30 dB
  c.rho_db = 20.0;
  Scenario s2(c);
  CHECK(evaluate_metrics(s2).sop2_method == MethodTag::LowSNR);
}
