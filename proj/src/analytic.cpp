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

#include "analytic.hpp"

#include <algorithm>
#include <cmath>

#include "common.hpp"

namespace irsnoma::analytic {

using specfun::gamma_p;
using specfun::gamma_q;

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Series budget for the internal mixtures: the Poisson(lambda/2) bulk plus
// a generous tail, never below the configured max_terms.
specfun::SeriesControl mixture_control(const Scenario& scn, double lambda) {
  specfun::SeriesControl ctrl = scn.cfg.series;
  double half = 0.5 * lambda;
  int need = static_cast<int>(half + 14.0 * std::sqrt(half + 1.0) + 60.0);
  ctrl.max_terms = std::max(ctrl.max_terms, need);
  return ctrl;
}

void check_user(int user) {
  if (user != 1 && user != 2)
    throw std::invalid_argument("user index must be 1 or 2");
}

}  // namespace

const char* method_tag_name(MethodTag tag) {
  switch (tag) {
    case MethodTag::ClosedForm: return "ClosedForm";
    case MethodTag::LowSNR: return "LowSNR";
    case MethodTag::HighSNR: return "HighSNR";
    case MethodTag::Asymptotic: return "Asymptotic";
    case MethodTag::Jensen: return "Jensen";
    case MethodTag::Quadrature: return "Quadrature";
  }
  return "?";
}

double cdf_gamma_b1(double x, const Scenario& scn) {
  if (x <= 0.0) return 0.0;
  return 1.0 - std::exp(-x / (scn.cfg.a1 * scn.rho * scn.g_b1));
}

double cdf_gamma_b2_low(double x, const Scenario& scn) {
  const double ceiling = scn.cfg.a2 / scn.cfg.a1;
  if (x <= 0.0) return 0.0;
  if (x >= ceiling) return 1.0;
  const double arg = x / (scn.cfg.n * (1.0 - scn.pair2.eps) * scn.rho *
                          (scn.cfg.a2 - scn.cfg.a1 * x) * scn.l2_eff);
  return clamp01(1.0 - specfun::marcum_q_half(std::sqrt(scn.lambda2), std::sqrt(arg)));
}

double cdf_gamma_b2_high(double x, const Scenario& scn) {
  if (!scn.pair2.m_tilde)
    throw std::domain_error("cdf_gamma_b2_high: requires m1 != m2");
  const double ceiling = scn.cfg.a2 / scn.cfg.a1;
  if (x <= 0.0) return 0.0;
  if (x >= ceiling) return 1.0;
  const double ms = scn.pair2.m_c, ml = scn.pair2.m_d;
  const int n = scn.cfg.n;
  const double arg = 2.0 * std::sqrt(ms * ml * x /
                                     (scn.rho * (scn.cfg.a2 - scn.cfg.a1 * x) * scn.l2_eff));
  const double p = gamma_p(2.0 * ms * n, arg);
  if (p <= 0.0) return 0.0;
  const double ln = n * scn.pair2.log_m_tilde - ms * n * std::log(4.0 * ms * ml) + std::log(p);
  return clamp01(std::exp(ln));
}

double sop_user1(const Scenario& scn) {
  return clamp01(1.0 - std::exp(-scn.y1() / (scn.cfg.a1 * scn.rho * scn.g_b1)));
}

Sop2Regime sop2_regime_auto(const Scenario& scn) {
  switch (scn.cfg.sop2_regime) {
    case Sop2RegimeChoice::Low: return Sop2Regime::Low;
    case Sop2RegimeChoice::High: return Sop2Regime::High;
    case Sop2RegimeChoice::Auto: break;
  }
  if (scn.cfg.rho_db <= 30.0 || scn.cfg.m1 == scn.cfg.m2) return Sop2Regime::Low;
  return Sop2Regime::High;
}

double sop_user2(const Scenario& scn, Sop2Regime regime) {
  const double y2 = scn.y2();
  if (y2 >= scn.cfg.a2 / scn.cfg.a1) return 1.0;  // outage certain beyond the SINR ceiling
  if (y2 <= 0.0) return 0.0;
  if (regime == Sop2Regime::Low) {
    const double yl = y2 / (scn.cfg.n * (1.0 - scn.pair2.eps) * scn.rho *
                            (scn.cfg.a2 - scn.cfg.a1 * y2) * scn.l2_eff);
    auto kernel = [&](int k) { return gamma_p(k + 0.5, 0.5 * yl); };
    return clamp01(specfun::poisson_half_mixture_sum_regularized(
        scn.lambda2, kernel, mixture_control(scn, scn.lambda2)));
  }
  return cdf_gamma_b2_high(y2, scn);
}

double sop_user2_auto(const Scenario& scn) { return sop_user2(scn, sop2_regime_auto(scn)); }

double sop_network(const Scenario& scn) {
  const double p1 = sop_user1(scn);
  const double p2 = sop_user2_auto(scn);
  return clamp01(1.0 - (1.0 - p1) * (1.0 - p2));
}

namespace {

double asymptotic_sop_user1(const Scenario& scn) {
  return scn.y1() / (scn.cfg.a1 * scn.rho * scn.g_b1);
}

double asymptotic_sop_user2(const Scenario& scn) {
  if (!scn.pair2.m_tilde)
    throw std::domain_error("asymptotic_sop(User2): requires m1 != m2");
  const double y2 = scn.y2();
  if (!(y2 > 0.0)) return 0.0;
  if (y2 >= scn.cfg.a2 / scn.cfg.a1) return 1.0;
  const double ms = scn.pair2.m_c;
  const int n = scn.cfg.n;
  const double yh =
      std::sqrt(y2 / (scn.rho * (scn.cfg.a2 - scn.cfg.a1 * y2) * scn.l2_eff));
  return std::exp(n * scn.pair2.log_m_tilde + 2.0 * ms * n * std::log(yh) -
                  specfun::log_gamma(2.0 * ms * n + 1.0));
}

}  // namespace

double asymptotic_sop(const Scenario& scn, Which which, bool* boundary) {
  if (boundary) *boundary = false;
  switch (which) {
    case Which::User1:
      return asymptotic_sop_user1(scn);
    case Which::User2:
      return asymptotic_sop_user2(scn);
    case Which::Network: {
      const double msn = scn.pair2.m_c * scn.cfg.n;
      if (msn > 1.0) return asymptotic_sop_user1(scn);
      if (msn < 1.0) return asymptotic_sop_user2(scn);
      // The piecewise form excludes equality; report the dominant branch.
      if (boundary) *boundary = true;
      return std::max(asymptotic_sop_user1(scn), asymptotic_sop_user2(scn));
    }
  }
  throw std::invalid_argument("asymptotic_sop: bad selector");
}

double sop1_floor(const Scenario& scn) {
  return clamp01(std::exp2(scn.cfg.r1) * scn.mu * scn.le_geo / scn.g_b1);
}

AsymptoticSummary diversity_and_slopes(const Scenario& scn) {
  AsymptoticSummary s;
  s.diversity_user1 = 1.0;
  s.diversity_user2 = scn.pair2.m_c * scn.cfg.n;
  s.diversity_network = std::min(s.diversity_user1, s.diversity_user2);
  s.slope_user1 = 1.0;
  s.slope_user2 = 0.0;
  s.sop1_floor = sop1_floor(scn);
  return s;
}

double ergodic_rate_eve(int user, const Scenario& scn) {
  check_user(user);
  const double ai = user == 1 ? scn.cfg.a1 : scn.cfg.a2;
  const double scale = 2.0 * scn.rho_e * scn.cfg.n * (1.0 - scn.pair_e.eps) * scn.le_eff;
  if (!(scale > 0.0)) return 0.0;
  const auto& gl = scn.laguerre;
  const int nl = gl.order;
  // Per-node constants: plain-integral weight / (1 + x) and the incomplete-
  // gamma argument x / (scale * a_i).
  std::vector<double> w(nl), arg(nl);
  for (int l = 0; l < nl; ++l) {
    w[l] = gl.scaled_weight(l) / (1.0 + gl.nodes[l]);
    arg[l] = gl.nodes[l] / (scale * ai);
  }
  auto kernel = [&](int k) {
    double acc = 0.0;
    for (int l = 0; l < nl; ++l) acc += w[l] * gamma_q(k + 0.5, arg[l]);
    return acc;
  };
  double sum = specfun::poisson_half_mixture_sum_regularized(
      scn.lambda_e, kernel, mixture_control(scn, scn.lambda_e));
  return std::max(0.0, sum / kLn2);
}

double ergodic_rate_user(int user, const Scenario& scn) {
  check_user(user);
  if (user == 1) {
    const double z = 1.0 / (scn.cfg.a1 * scn.rho * scn.g_b1);
    return specfun::e1_exp_scaled(z) / kLn2;
  }
  const double a1 = scn.cfg.a1, a2 = scn.cfg.a2;
  const double cap = std::log2(1.0 + a2 / a1);
  const double scale = scn.cfg.n * (1.0 - scn.pair2.eps) * scn.rho * a1 * scn.l2_eff;
  if (!(scale > 0.0)) return 0.0;
  const auto& cg = scn.chebyshev;
  const int np = cg.order;
  std::vector<double> w(np), arg(np);
  for (int p = 0; p < np; ++p) {
    const double t = cg.nodes[p];
    w[p] = cg.weights[p] * std::sqrt(1.0 - t * t) / (1.0 + t + 2.0 * a1 / a2);
    arg[p] = (t + 1.0) / (scale * (1.0 - t));
  }
  auto kernel = [&](int i) {
    double acc = 0.0;
    for (int p = 0; p < np; ++p) acc += w[p] * gamma_p(i + 0.5, arg[p]);
    return acc;
  };
  double corr = specfun::poisson_half_mixture_sum_regularized(
                    scn.lambda2, kernel, mixture_control(scn, scn.lambda2)) /
                kLn2;
  return std::max(0.0, cap - corr);
}

double asc(int user, const Scenario& scn, AscMethod method) {
  check_user(user);
  if (method == AscMethod::Jensen) {
    if (user != 2)
      throw std::invalid_argument("asc: the Jensen bound is defined for user 2 only");
    const double geo = scn.cfg.strict_paper
                           ? channel::path_gain(scn.cfg.d1, scn.cfg.alpha1) *
                                 channel::path_gain(scn.cfg.d_b1, scn.cfg.alpha_b1)
                           : scn.l2_geo;
    const double s = scn.mu2 * scn.rho * geo;
    const double eve = 1.0 + scn.cfg.a2 * scn.mu * scn.le_geo * scn.rho_e;
    return std::max(0.0, std::log2((s + 1.0) / ((scn.cfg.a1 * s + 1.0) * eve)));
  }
  return std::max(0.0, ergodic_rate_user(user, scn) - ergodic_rate_eve(user, scn));
}

double asc_asymptotic(int user, const Scenario& scn, AscMethod method) {
  check_user(user);
  if (user == 1) {
    if (method == AscMethod::Jensen)
      throw std::invalid_argument("asc_asymptotic: the Jensen form is defined for user 2 only");
    const double s = scn.cfg.a1 * scn.rho * scn.g_b1;
    const double lead = scn.cfg.strict_paper ? std::log2(1.0 / s) : std::log2(s);
    return lead - kEulerGamma / kLn2 - ergodic_rate_eve(1, scn);
  }
  if (method == AscMethod::Quadrature)
    return std::log2(1.0 + scn.cfg.a2 / scn.cfg.a1) - ergodic_rate_eve(2, scn);
  return std::log2(1.0 / (scn.cfg.a1 *
                          (1.0 + scn.cfg.a2 * scn.mu * scn.rho_e * scn.le_geo)));
}

SecrecyMetrics evaluate_metrics(const Scenario& scn) {
  SecrecyMetrics m;
  m.sop1 = sop_user1(scn);
  const Sop2Regime regime = sop2_regime_auto(scn);
  m.sop2 = sop_user2(scn, regime);
  m.sop2_method = regime == Sop2Regime::Low ? MethodTag::LowSNR : MethodTag::HighSNR;
  m.sop_network = clamp01(1.0 - (1.0 - m.sop1) * (1.0 - m.sop2));
  m.asc1 = asc(1, scn, AscMethod::Quadrature);
  m.asc2 = asc(2, scn, AscMethod::Quadrature);
  return m;
}

}  // namespace irsnoma::analytic
