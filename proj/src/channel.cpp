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

#include "channel.hpp"

#include <cmath>

#include "common.hpp"

namespace irsnoma::channel {

using specfun::log_gamma;

PairStats pair_stats(double m_a, double m_b, const specfun::SeriesControl& ctrl) {
  if (!(m_a >= 0.5) || !(m_b >= 0.5))
    throw std::domain_error("pair_stats: Nakagami shapes must be >= 0.5");
  PairStats p;
  p.m_c = std::min(m_a, m_b);
  p.m_d = std::max(m_a, m_b);
  // eps = (1/(m_a m_b)) [Gamma(m_a+1/2)/Gamma(m_a)]^2 [Gamma(m_b+1/2)/Gamma(m_b)]^2
  p.eps = std::exp(2.0 * (log_gamma(m_a + 0.5) - log_gamma(m_a)) +
                   2.0 * (log_gamma(m_b + 0.5) - log_gamma(m_b)) - std::log(m_a * m_b));
  p.a = 2.0 * p.m_c;
  p.b = p.m_c - p.m_d + 0.5;
  p.c = p.m_c + p.m_d + 0.5;
  p.d = 2.0 * std::sqrt(p.m_c * p.m_d);
  p.log_omega = 0.5 * std::log(M_PI) + (p.m_c - p.m_d + 1.0) * std::log(4.0) +
                p.m_c * std::log(p.m_c * p.m_d) + log_gamma(2.0 * p.m_c) +
                log_gamma(2.0 * p.m_d) - log_gamma(p.m_c) - log_gamma(p.m_d) -
                log_gamma(p.m_c + p.m_d + 0.5);
  p.omega = std::exp(p.log_omega);
  p.k1 = specfun::hyp2f1_at_minus1(p.a, p.b, p.c, ctrl);
  p.k2 = specfun::hyp2f1_at_minus1(p.a + 1.0, p.b + 1.0, p.c + 1.0, ctrl);
  p.k3 = specfun::hyp2f1_at_minus1(p.a + 2.0, p.b + 2.0, p.c + 2.0, ctrl);
  if (p.m_c != p.m_d) {
    p.log_m_tilde = 0.5 * std::log(M_PI) + (p.m_c - p.m_d + 1.0) * std::log(4.0) +
                    p.m_c * std::log(p.m_c * p.m_d) + log_gamma(2.0 * p.m_c) +
                    log_gamma(2.0 * p.m_d - 2.0 * p.m_c) - log_gamma(p.m_c) -
                    log_gamma(p.m_d) - log_gamma(p.m_d - p.m_c + 0.5);
    p.m_tilde = std::exp(p.log_m_tilde);
  }
  return p;
}

PairStats::Mho PairStats::mho(int n) const {
  Mho m;
  const double d2 = d * d;
  m.m1 = (a * n + 1.0) / d2;
  m.m2 = 4.0 * a * b * b * k2 * k2 * (n - 1.0) / (c * c * d2 * k1 * k1);
  m.m3 = 4.0 * a * b * n * k2 / (c * d2 * k1);
  // The product rule gives the F'' term the prefactor N k1^{N-1}, one k1
  // power below the common k1^N, hence the 1/k1 here. Without it the N=1
  // unit-power identity E[Z^2] = 1 fails.
  m.m4 = (4.0 * (a + 1.0) * (b * b + b) * k3 / ((c * c + c) * d2) -
          4.0 * b * k2 / (c * d2)) /
         k1;
  m.total = m.m1 + m.m2 - m.m3 + m.m4;
  return m;
}

double expected_gain_squared(const PairStats& pair, int n) {
  if (n < 1) throw std::domain_error("expected_gain_squared: N must be >= 1");
  const double mho = pair.mho(n).total;
  if (!(mho > 0.0)) throw std::runtime_error("expected_gain_squared: nonpositive mho");
  double ln = std::log(pair.a * n) + n * pair.log_omega - pair.a * n * std::log(pair.d) +
              n * std::log(pair.k1) + std::log(mho);
  if (ln > 709.0)
    throw std::overflow_error("expected_gain_squared: value exceeds double range");
  return std::exp(ln);
}

double gain_squared_oracle(const PairStats& pair, int n) {
  if (n < 1) throw std::domain_error("gain_squared_oracle: N must be >= 1");
  return n + static_cast<double>(n) * (n - 1.0) * pair.eps;
}

double mu1_growth_factor(const PairStats& pair) {
  return std::exp((2.0 * pair.m_c - 1.0) * kLn2 +
                  (pair.m_c - 0.5) * std::log(pair.m_c * pair.m_d) + log_gamma(pair.m_c) +
                  log_gamma(pair.m_d));
}

double path_gain(double distance, double exponent) {
  if (!(distance > 0.0)) throw std::domain_error("path_gain: distance must be positive");
  return std::pow(distance, -exponent);
}

double sample_nakagami(double m, RandomStream& rng) {
  if (!(m >= 0.5)) throw std::domain_error("sample_nakagami: shape must be >= 0.5");
  return std::sqrt(rng.gamma(m) / m);
}

Scenario::Scenario(const SystemConfig& config) : cfg(config) {
  cfg.validate();
  rho = std::pow(10.0, cfg.rho_db / 10.0);
  rho_e = std::pow(10.0, cfg.rho_e_db / 10.0);
  g_b1 = path_gain(cfg.d_b1, cfg.alpha_b1);
  l2_geo = path_gain(cfg.d1, cfg.alpha1) * path_gain(cfg.d_b2, cfg.alpha_b2);
  le_geo = path_gain(cfg.d1, cfg.alpha1) * path_gain(cfg.d_e, cfg.alpha_e);
  l2_eff = cfg.beta * cfg.beta * l2_geo;
  le_eff = cfg.beta * cfg.beta * le_geo;
  pair2 = pair_stats(cfg.m1, cfg.m2, cfg.series);
  pair_e = pair_stats(cfg.m1, cfg.m3, cfg.series);
  ez2_user2 = expected_gain_squared(pair2, cfg.n);
  ez2_eve = expected_gain_squared(pair_e, cfg.n);
  mu2 = cfg.beta * cfg.beta * ez2_user2;
  mu = cfg.beta * cfg.beta * ez2_eve;
  lambda2 = pair2.lambda(cfg.n);
  lambda_e = pair_e.lambda(cfg.n);
  laguerre = specfun::gauss_laguerre_rule(cfg.u1);
  chebyshev = specfun::chebyshev_gauss_rule(cfg.u2);
}

double Scenario::y1() const {
  return std::exp2(cfg.r1) * (1.0 + cfg.a1 * rho_e * mu * le_geo) - 1.0;
}

double Scenario::y2() const {
  return std::exp2(cfg.r2) * (1.0 + cfg.a2 * rho_e * mu * le_geo) - 1.0;
}

ChannelDraw draw_channels(const Scenario& scn, RandomStream& rng) {
  const int n = scn.cfg.n;
  ChannelDraw draw;
  draw.h.resize(n);
  draw.g_b2.resize(n);
  draw.g_e.resize(n);
  for (int i = 0; i < n; ++i) draw.h[i] = sample_nakagami(scn.cfg.m1, rng);
  for (int i = 0; i < n; ++i) draw.g_b2[i] = sample_nakagami(scn.cfg.m2, rng);
  for (int i = 0; i < n; ++i) draw.g_e[i] = sample_nakagami(scn.cfg.m3, rng);
  draw.h_b1_sq = rng.exponential();
  double s2 = 0.0, se = 0.0;
  for (int i = 0; i < n; ++i) {
    s2 += draw.g_b2[i] * draw.h[i];
    se += draw.g_e[i] * draw.h[i];
  }
  draw.h_hat_b2 = scn.cfg.beta * s2;
  draw.h_hat_e = scn.cfg.beta * se;
  return draw;
}

Sinrs instantaneous_sinrs(const ChannelDraw& draw, const Scenario& scn) {
  Sinrs s;
  s.gamma_b1 = scn.rho * scn.cfg.a1 * draw.h_b1_sq * scn.g_b1;
  const double hg = draw.h_hat_b2 * draw.h_hat_b2 * scn.l2_geo;
  s.gamma_b2 = scn.cfg.a2 * hg / (scn.cfg.a1 * hg + 1.0 / scn.rho);
  const double eg = scn.rho_e * draw.h_hat_e * draw.h_hat_e * scn.le_geo;
  s.gamma_e1 = scn.cfg.a1 * eg;
  s.gamma_e2 = scn.cfg.a2 * eg;
  return s;
}

}  // namespace irsnoma::channel
