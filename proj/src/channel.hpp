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
//
// Derived fading statistics of the cascaded (product-pair) links and the
// Monte-Carlo channel sampler. All small-scale fading is unit mean power;
// large-scale effects enter only through explicit d^-alpha factors.

#ifndef IRSNOMA_CHANNEL_HPP
#define IRSNOMA_CHANNEL_HPP

#include <optional>
#include <vector>

#include "config.hpp"
#include "rng.hpp"
#include "specfun.hpp"

namespace irsnoma::channel {

// Constants of one cascaded Nakagami pair z = |g||h| with shapes
// (m_c, m_d) = (min, max). eps is E[z]^2; the high-SNR tail constant
// m_tilde exists only for distinct shapes.
struct PairStats {
  double m_c = 0.0, m_d = 0.0;
  double eps = 0.0;
  std::optional<double> m_tilde;
  double log_m_tilde = 0.0;  // valid when m_tilde is set
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double omega = 0.0, log_omega = 0.0;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;

  double lambda(int n_elements) const { return n_elements * eps / (1.0 - eps); }

  struct Mho {
    double m1, m2, m3, m4, total;
  };
  Mho mho(int n_elements) const;
};

PairStats pair_stats(double m_a, double m_b, const specfun::SeriesControl& ctrl = {});

// E[Z^2] for Z = sum of N cascaded products: a N omega^N d^{-aN} k1^N mho,
// evaluated in log space.
double expected_gain_squared(const PairStats& pair, int n_elements);

// Independent moment identity E[Z^2] = N + N(N-1) eps.
double gain_squared_oracle(const PairStats& pair, int n_elements);

// mu_1 = 2^{2 m_c - 1} (m_c m_d)^{m_c - 1/2} Gamma(m_c) Gamma(m_d);
// exceeds 1 whenever m_d > m_c >= 1/2, driving E[Z^2] -> inf with N.
double mu1_growth_factor(const PairStats& pair);

double path_gain(double distance, double exponent);  // d^-alpha

// Nakagami-m magnitude with unit mean power: sqrt(Gamma(m, 1/m)).
double sample_nakagami(double m, RandomStream& rng);

// One realization of every fading coefficient and the co-phased
// equivalent gains (scaled by the amplitude reflection coefficient).
struct ChannelDraw {
  std::vector<double> h;     // BS-IRS magnitudes
  std::vector<double> g_b2;  // IRS-user2 magnitudes
  std::vector<double> g_e;   // IRS-Eve magnitudes
  double h_b1_sq = 0.0;      // |h_B1|^2, unit-mean exponential
  double h_hat_b2 = 0.0;     // beta * sum g_b2[i] h[i]
  double h_hat_e = 0.0;      // beta * sum g_e[i] h[i]  (worst-case co-phasing)
};

// Precomputed per-config quantities shared by the analytic and Monte-Carlo
// paths. Immutable after construction; safe to share across threads.
struct Scenario {
  SystemConfig cfg;
  double rho = 0.0, rho_e = 0.0;       // linear SNRs
  double g_b1 = 0.0;                   // dB1^-alphaB1
  double l2_geo = 0.0, le_geo = 0.0;   // d1^-alpha1 * {dB2^-alphaB2, dE^-alphaE}
  double l2_eff = 0.0, le_eff = 0.0;   // include beta^2
  PairStats pair2, pair_e;             // (m1,m2) and (m1,m3)
  double ez2_user2 = 0.0, ez2_eve = 0.0;
  double mu2 = 0.0, mu = 0.0;          // beta^2-scaled second moments
  double lambda2 = 0.0, lambda_e = 0.0;
  specfun::QuadratureRule laguerre, chebyshev;

  explicit Scenario(const SystemConfig& config);

  double y1() const;  // 2^R1 (1 + a1 rho_e mu LE) - 1
  double y2() const;  // 2^R2 (1 + a2 rho_e mu LE) - 1
};

ChannelDraw draw_channels(const Scenario& scn, RandomStream& rng);

struct Sinrs {
  double gamma_b1, gamma_b2, gamma_e1, gamma_e2;
};

Sinrs instantaneous_sinrs(const ChannelDraw& draw, const Scenario& scn);

}  // namespace irsnoma::channel

#endif  // IRSNOMA_CHANNEL_HPP
