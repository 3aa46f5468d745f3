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
#include <cstdlib>

#include "analytic.hpp"
#include "montecarlo.hpp"

using namespace irsnoma;
using namespace irsnoma::mc;
using channel::Scenario;

namespace {

struct ThreadsGuard {
  std::string saved;
  bool had = false;
  ThreadsGuard() {
    if (const char* s = std::getenv("IRSNOMA_THREADS")) {
      saved = s;
      had = true;
    }
  }
  ~ThreadsGuard() {
    if (had)
      setenv("IRSNOMA_THREADS", saved.c_str(), 1);
    else
      unsetenv("IRSNOMA_THREADS");
  }
};

}  // namespace

TEST_CASE("zero rate targets and silent Eve mean no outage") {
  SystemConfig c;
  c.r1 = 0.0;
  c.r2 = 0.0;
  c.rho_e_db = -400.0;
  Scenario scn(c);
  auto est = estimate_sop(scn, 20000, 1, EveMode::Random);
  CHECK(est.user1.value == 0.0);
  CHECK(est.user2.value == 0.0);
  CHECK(est.network.value == 0.0);
}

TEST_CASE("pinned-Eve estimates reproduce the user-1 closed form") {
  RandomStream rng(404, 0);
  for (int i = 0; i < 10; ++i) {
    SystemConfig c;
    c.n = 1 + static_cast<int>(8 * rng.uniform01());
    c.m1 = 0.5 + 3.0 * rng.uniform01();
    c.m3 = 0.5 + 3.0 * rng.uniform01();
    c.d_b1 = 3.0 + 20.0 * rng.uniform01();
    c.rho_db = 20.0 + 25.0 * rng.uniform01();
    c.rho_e_db = 15.0 * rng.uniform01();
    Scenario scn(c);
    auto est = estimate_sop(scn, 100000, 1000 + i, EveMode::Mean);
    double an = analytic::sop_user1(scn);
    // se of p-hat at the true p; the measured se degenerates to 0 when
    // every trial is an outage
    double se_an = std::sqrt(an * (1.0 - an) / static_cast<double>(est.user1.trials));
    CHECK(std::fabs(est.user1.value - an) <=
          3.0 * std::max(est.user1.std_error, se_an) + 1e-12);
  }
}

TEST_CASE("random-Eve and pinned-Eve estimates are close but distinct") {
  SystemConfig c;
  c.n = 3;
  c.rho_db = 40.0;
  Scenario scn(c);
  auto random_eve = estimate_sop(scn, 200000, 9, EveMode::Random);
  auto mean_eve = estimate_sop(scn, 200000, 9, EveMode::Mean);
  CHECK(random_eve.user1.value > 0.5);
  CHECK(mean_eve.user1.value > 0.5);
  // same order of magnitude
  CHECK(std::fabs(std::log10(random_eve.user1.value / mean_eve.user1.value)) < 1.0);
}

TEST_CASE("network outage dominates both users pathwise") {
  SystemConfig c;
  c.n = 2;
  c.rho_db = 38.0;
  Scenario scn(c);
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    auto est = estimate_sop(scn, 50000, seed, EveMode::Random);
    CHECK(est.network.value >= est.user1.value - 1e-15);
    CHECK(est.network.value >= est.user2.value - 1e-15);
  }
}

TEST_CASE("estimates are bit-identical across worker counts") {
  ThreadsGuard guard;
  SystemConfig c;
  c.n = 4;
  c.rho_db = 35.0;
  Scenario scn(c);
  SopEstimates sop[3];
  AscEstimates asc[3];
  OmaEstimates oma[3];
  const char* threads[] = {"1", "2", "5"};
  for (int i = 0; i < 3; ++i) {
    setenv("IRSNOMA_THREADS", threads[i], 1);
    sop[i] = estimate_sop(scn, 30000, 77, EveMode::Random);
    asc[i] = estimate_asc(scn, 30000, 77);
    oma[i] = oma_baseline(scn, 30000, 77);
  }
  for (int i = 1; i < 3; ++i) {
    CHECK(sop[i].user1.value == sop[0].user1.value);
    CHECK(sop[i].user2.value == sop[0].user2.value);
    CHECK(sop[i].network.value == sop[0].network.value);
    CHECK(asc[i].asc1.value == asc[0].asc1.value);
    CHECK(asc[i].asc2.value == asc[0].asc2.value);
    CHECK(asc[i].asc1.std_error == asc[0].asc1.std_error);
    CHECK(asc[i].rate_e2.value == asc[0].rate_e2.value);
    CHECK(oma[i].sop1.value == oma[0].sop1.value);
    CHECK(oma[i].asc2.value == oma[0].asc2.value);
  }
}

TEST_CASE("repeat runs with the same seed are identical, other seeds differ") {
  SystemConfig c;
  c.n = 2;
  c.rho_db = 40.0;  // mid-range outage probability, so seeds are distinguishable
  Scenario scn(c);
  auto a = estimate_sop(scn, 20000, 5, EveMode::Random);
  auto b = estimate_sop(scn, 20000, 5, EveMode::Random);
  auto d = estimate_sop(scn, 20000, 6, EveMode::Random);
  CHECK(a.user1.value == b.user1.value);
  CHECK(a.user2.value == b.user2.value);
  CHECK(a.user1.value > 0.5);
  CHECK(a.user1.value < 0.95);
  CHECK((a.user1.value != d.user1.value || a.user2.value != d.user2.value));
}

TEST_CASE("Eve equivalent-gain second moment converges to the closed form") {
  SystemConfig c;
  c.n = 12;
  Scenario scn(c);
  auto est = estimate_eve_gain_second_moment(scn, 200000, 3);
  CHECK(std::fabs(est.value - scn.mu) <= 3.0 * est.std_error);
  auto est2 = estimate_gain_second_moment(scn, 200000, 3);
  CHECK(std::fabs(est2.value - scn.mu2) <= 3.0 * est2.std_error);
}

TEST_CASE("asc estimates") {
  SystemConfig c;
  c.n = 3;
  c.rho_db = 30.0;
  c.rho_e_db = -400.0;  // silent Eve: asc equals the user rate
  Scenario scn(c);
  auto est = estimate_asc(scn, 50000, 11);
  CHECK(est.asc1.value == doctest::Approx(est.rate_b1.value).epsilon(1e-12));
  CHECK(est.asc2.value == doctest::Approx(est.rate_b2.value).epsilon(1e-12));

  SystemConfig ce;
  ce.n = 3;
  ce.rho_db = 30.0;
  ce.rho_e_db = 30.0;
  Scenario se(ce);
  auto este = estimate_asc(se, 50000, 12);
  CHECK(este.asc1_diff.value <= este.asc1.value + 1e-15);  // [x]+ >= x
  CHECK(este.asc2_diff.value <= este.asc2.value + 1e-15);
  CHECK(este.asc1_diff.value ==
        doctest::Approx(este.rate_b1.value - este.rate_e1.value).epsilon(1e-10));
}

TEST_CASE("asc of user 2 rises then falls along the N axis when Eve tracks rho") {
  SystemConfig c;
  c.rho_db = 60.0;
  c.rho_e_db = 60.0;
  double v[3];
  int idx = 0;
  for (int n : {1, 16, 64}) {
    c.n = n;
    Scenario scn(c);
    v[idx++] = estimate_asc(scn, 100000, 21).asc2.value;
  }
  CHECK(v[1] > v[0]);
  CHECK(v[1] > v[2]);
}

TEST_CASE("empirical cdf") {
  SystemConfig c;
  c.n = 30;
  c.rho_db = 20.0;
  Scenario scn(c);
  std::vector<double> grid = {0.0, 1e-4, 1e-3, 3e-3, 0.03, 4.0};
  auto emp = empirical_cdf_gamma_b2(scn, 50000, grid, 3);
  CHECK(emp.probs.front() == 0.0);
  CHECK(emp.probs.back() == 1.0);  // at the structural ceiling a2/a1
  for (size_t i = 1; i < emp.probs.size(); ++i) CHECK(emp.probs[i] >= emp.probs[i - 1]);
  // agreement with the CLT form mid-grid
  CHECK(std::fabs(emp.probs[3] - analytic::cdf_gamma_b2_low(grid[3], scn)) <= 0.02);

  CHECK_THROWS_AS(empirical_cdf_gamma_b2(scn, 50000, std::vector<double>{}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(empirical_cdf_gamma_b2(scn, 100, grid, 3), std::invalid_argument);
}

TEST_CASE("log-log slope fits") {
  // exact power laws from the asymptotic expansions
  auto curve = [](analytic::Which which, int n) {
    SystemConfig c;
    c.n = n;
    std::vector<std::pair<double, double>> pts;
    for (double rho : {30.0, 35.0, 40.0, 45.0, 50.0}) {
      c.rho_db = rho;
      pts.push_back({rho, analytic::asymptotic_sop(Scenario(c), which)});
    }
    return pts;
  };
  CHECK(fit_loglog_slope(curve(analytic::Which::User1, 1)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit_loglog_slope(curve(analytic::Which::User2, 3)) ==
        doctest::Approx(3.0).epsilon(1e-6));

  // Monte-Carlo user-2 diversity at N = 1 (geometry exposing the power law)
  SystemConfig c;
  c.n = 1;
  c.rho_e_db = 10.0;
  c.d1 = 4.0;
  c.d_b2 = 6.5;
  c.alpha1 = 2.0;
  c.alpha_b2 = 2.0;
  std::vector<std::pair<double, double>> pts;
  for (double rho : {30.0, 35.0, 40.0, 45.0, 50.0}) {
    c.rho_db = rho;
    auto est = estimate_sop(Scenario(c), 200000, 8, EveMode::Mean);
    pts.push_back({rho, est.user2.value});
  }
  CHECK(std::fabs(fit_loglog_slope(pts) - 1.0) <= 0.10);

  // degenerate inputs
  std::vector<std::pair<double, double>> bad = {{30.0, 0.1}, {40.0, 0.0}, {50.0, 1e-3}};
  CHECK_THROWS_AS(fit_loglog_slope(bad), std::invalid_argument);
  std::vector<std::pair<double, double>> narrow = {{30.0, 0.1}, {32.0, 0.05}, {35.0, 0.02}};
  CHECK_THROWS_AS(fit_loglog_slope(narrow), std::invalid_argument);
  std::vector<std::pair<double, double>> two = {{30.0, 0.1}, {45.0, 0.01}};
  CHECK_THROWS_AS(fit_loglog_slope(two), std::invalid_argument);
}

TEST_CASE("oma baseline") {
  SystemConfig c;
  c.r1 = 0.0;
  c.r2 = 0.0;
  c.rho_e_db = -400.0;
  Scenario scn(c);
  auto est = oma_baseline(scn, 20000, 2);
  CHECK(est.sop1.value == 0.0);
  CHECK(est.sop2.value == 0.0);

  // user-2 NOMA beats user-2 OMA (more transmit power under NOMA)
  SystemConfig cc;
  cc.n = 1;
  cc.rho_db = 40.0;
  cc.rho_e_db = 10.0;
  cc.d1 = 4.0;
  cc.d_b2 = 6.5;
  cc.alpha1 = 2.0;
  cc.alpha_b2 = 2.0;
  Scenario sc(cc);
  auto noma = estimate_sop(sc, 200000, 31, EveMode::Random);
  auto oma = oma_baseline(sc, 200000, 31);
  CHECK(oma.sop2.value >= noma.user2.value - 3.0 * oma.sop2.std_error);

  // OMA user-1 secrecy-capacity slope is 1/2 at high SNR
  SystemConfig ch;
  ch.d_b1 = 2.0;
  ch.alpha_b1 = 2.0;
  ch.rho_e_db = 10.0;
  ch.rho_db = 50.0;
  Scenario s50(ch);
  ch.rho_db = 60.0;
  Scenario s60(ch);
  double a50 = oma_baseline(s50, 200000, 33).asc1.value;
  double a60 = oma_baseline(s60, 200000, 33).asc1.value;
  double slope = (a60 - a50) / std::log2(10.0);
  CHECK(std::fabs(slope - 0.5) <= 0.05);
}

TEST_CASE("too few trials are rejected") {
  SystemConfig c;
  Scenario scn(c);
  CHECK_THROWS_AS(estimate_sop(scn, 10, 1, EveMode::Random), std::invalid_argument);
  CHECK_THROWS_AS(estimate_asc(scn, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(oma_baseline(scn, 10, 1), std::invalid_argument);
}
