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
// Seeded, parallel Monte-Carlo estimators. Trial t always uses the
// substream (seed, t) and trials are reduced in fixed chunk order, so the
// results are bit-identical for a given (config, trials, seed) regardless
// of the worker-thread count (IRSNOMA_THREADS, 0/unset = hardware).

#ifndef IRSNOMA_MONTECARLO_HPP
#define IRSNOMA_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "channel.hpp"

namespace irsnoma::mc {

using channel::Scenario;

enum class EveMode { Random, Mean };

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  EveMode eve_mode = EveMode::Random;
};

struct SopEstimates {
  McEstimate user1, user2, network;
};

// Per trial: draw channels, form the SINRs, flag outage when the secrecy
// rate log2((1+gamma_B)/(1+gamma_E)) is strictly below the target. Mean
// mode pins |h_hat_E|^2 to its expectation mu. Binomial standard errors.
SopEstimates estimate_sop(const Scenario& scn, uint64_t trials, uint64_t seed, EveMode mode);

struct AscEstimates {
  McEstimate asc1, asc2;            // means of the clamped secrecy rates
  McEstimate asc1_diff, asc2_diff;  // unclamped difference-of-means
  McEstimate rate_b1, rate_b2, rate_e1, rate_e2;
};

AscEstimates estimate_asc(const Scenario& scn, uint64_t trials, uint64_t seed);

struct EmpiricalCdf {
  std::vector<double> grid;
  std::vector<double> probs;
  uint64_t trials = 0;
};

EmpiricalCdf empirical_cdf_gamma_b2(const Scenario& scn, uint64_t trials,
                                    std::span<const double> grid, uint64_t seed);

// Least-squares slope of log10(P) against log10(rho), negated (the
// empirical diversity order). Points are (rho_db, probability).
double fit_loglog_slope(std::span<const std::pair<double, double>> points);

struct OmaEstimates {
  McEstimate sop1, sop2;
  McEstimate asc1, asc2;
};

// Time-sharing OMA baseline: each user served half the resource at full
// power; Eve observes the same halved resource with a_i = 1.
OmaEstimates oma_baseline(const Scenario& scn, uint64_t trials, uint64_t seed);

// Sample means of the squared equivalent gains (cross-checks of the
// cascaded second-moment closed form).
McEstimate estimate_gain_second_moment(const Scenario& scn, uint64_t trials, uint64_t seed);
McEstimate estimate_eve_gain_second_moment(const Scenario& scn, uint64_t trials,
                                           uint64_t seed);

int worker_thread_count();

}  // namespace irsnoma::mc

#endif  // IRSNOMA_MONTECARLO_HPP
