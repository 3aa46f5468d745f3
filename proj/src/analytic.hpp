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
// Closed-form secrecy metrics: CDFs of the per-user SINRs, secrecy outage
// probabilities with their asymptotes and floor, ergodic rates, average
// secrecy capacities (series/quadrature route and the Jensen bound), and
// the diversity-order / high-SNR-slope summary.
//
// All functions are pure; quadrature rules and pair statistics are taken
// from the shared read-only Scenario.

#ifndef IRSNOMA_ANALYTIC_HPP
#define IRSNOMA_ANALYTIC_HPP

#include "channel.hpp"

namespace irsnoma::analytic {

using channel::Scenario;

enum class MethodTag { ClosedForm, LowSNR, HighSNR, Asymptotic, Jensen, Quadrature };

const char* method_tag_name(MethodTag tag);

struct SecrecyMetrics {
  double sop1 = 0.0, sop2 = 0.0, sop_network = 0.0;
  double asc1 = 0.0, asc2 = 0.0;
  MethodTag sop1_method = MethodTag::ClosedForm;
  MethodTag sop2_method = MethodTag::LowSNR;
  MethodTag sop_network_method = MethodTag::ClosedForm;
  MethodTag asc1_method = MethodTag::Quadrature;
  MethodTag asc2_method = MethodTag::Quadrature;
};

struct AsymptoticSummary {
  double diversity_user1 = 1.0;
  double diversity_user2 = 0.0;  // m_s N
  double diversity_network = 0.0;
  double slope_user1 = 1.0;
  double slope_user2 = 0.0;
  double sop1_floor = 0.0;
};

// CDF of the user-1 SNR: 1 - exp(-x / (a1 rho dB1^-alphaB1)).
double cdf_gamma_b1(double x, const Scenario& scn);

// CLT-regime CDF of the user-2 SINR (Marcum-Q form); 0 below 0, 1 at and
// beyond the structural ceiling a2/a1.
double cdf_gamma_b2_low(double x, const Scenario& scn);

// Tail-regime CDF of the user-2 SINR; requires m1 != m2.
double cdf_gamma_b2_high(double x, const Scenario& scn);

double sop_user1(const Scenario& scn);

enum class Sop2Regime { Low, High };
double sop_user2(const Scenario& scn, Sop2Regime regime);
// Regime chosen from the config: Auto uses Low for rho <= 30 dB (or equal
// shapes), High above.
double sop_user2_auto(const Scenario& scn);
Sop2Regime sop2_regime_auto(const Scenario& scn);

double sop_network(const Scenario& scn);

enum class Which { User1, User2, Network };

// Leading-order SOP expansions (unclamped power laws). At the network
// boundary m_s N == 1 the piecewise form has no branch: the maximum of both
// is returned and *boundary is set.
double asymptotic_sop(const Scenario& scn, Which which, bool* boundary = nullptr);

// Outage floor of user 1 under rho_e = rho, clamped to [0, 1].
double sop1_floor(const Scenario& scn);

AsymptoticSummary diversity_and_slopes(const Scenario& scn);

// Ergodic rate of Eve decoding user i's stream (Gauss-Laguerre over the
// CLT CDF), and of the legitimate users (closed form / Chebyshev-Gauss).
double ergodic_rate_eve(int user, const Scenario& scn);
double ergodic_rate_user(int user, const Scenario& scn);

enum class AscMethod { Quadrature, Jensen };

// Approximate average secrecy capacity, clamped at 0. Jensen is defined
// for user 2 only.
double asc(int user, const Scenario& scn, AscMethod method);

// High-SNR asymptote (user 1) and ceilings (user 2); unclamped expansions.
double asc_asymptotic(int user, const Scenario& scn, AscMethod method);

SecrecyMetrics evaluate_metrics(const Scenario& scn);

}  // namespace irsnoma::analytic

#endif  // IRSNOMA_ANALYTIC_HPP
