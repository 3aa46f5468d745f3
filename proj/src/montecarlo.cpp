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

#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace irsnoma::mc {

namespace {

constexpr uint64_t kChunk = 8192;

// Workers pull whole chunks; chunk c covers trials [c*kChunk, ...). The
// caller combines the per-chunk accumulators in index order, which keeps
// every reduction independent of scheduling.
template <typename Accum, typename Body>
std::vector<Accum> run_chunked(uint64_t trials, const Body& body) {
  const uint64_t nchunks = trials == 0 ? 0 : (trials - 1) / kChunk + 1;
  std::vector<Accum> acc(nchunks);
  const int workers =
      static_cast<int>(std::min<uint64_t>(worker_thread_count(), std::max<uint64_t>(nchunks, 1)));
  std::atomic<uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const uint64_t t0 = c * kChunk;
      const uint64_t t1 = std::min(trials, t0 + kChunk);
      body(acc[c], t0, t1);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return acc;
}

double binomial_se(double p, uint64_t n) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

McEstimate make_mean_estimate(double sum, double sumsq, uint64_t n, uint64_t seed,
                              EveMode mode) {
  McEstimate e;
  e.trials = n;
  e.seed = seed;
  e.eve_mode = mode;
  e.value = sum / static_cast<double>(n);
  double var = std::max(0.0, sumsq / static_cast<double>(n) - e.value * e.value);
  e.std_error = std::sqrt(var / static_cast<double>(n));
  return e;
}

void require_trials(uint64_t trials, uint64_t minimum) {
  if (trials < minimum)
    throw std::invalid_argument("monte-carlo estimate: too few trials requested");
}

}  // namespace

int worker_thread_count() {
  if (const char* s = std::getenv("IRSNOMA_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

SopEstimates estimate_sop(const Scenario& scn, uint64_t trials, uint64_t seed, EveMode mode) {
  require_trials(trials, 1000);
  struct Counts {
    uint64_t u1 = 0, u2 = 0, net = 0;
  };
  // Under Mean-Eve the outage thresholds are the constants y_i of the
  // closed forms; under Random-Eve they depend on the drawn Eve gain.
  const double y1_fixed = scn.y1();
  const double y2_fixed = scn.y2();
  const double r1_pow = std::exp2(scn.cfg.r1);
  const double r2_pow = std::exp2(scn.cfg.r2);
  auto chunks = run_chunked<Counts>(trials, [&](Counts& acc, uint64_t t0, uint64_t t1) {
    for (uint64_t t = t0; t < t1; ++t) {
      RandomStream rng(seed, t);
      channel::ChannelDraw draw = channel::draw_channels(scn, rng);
      channel::Sinrs s = channel::instantaneous_sinrs(draw, scn);
      double y1 = y1_fixed, y2 = y2_fixed;
      if (mode == EveMode::Random) {
        y1 = r1_pow * (1.0 + s.gamma_e1) - 1.0;
        y2 = r2_pow * (1.0 + s.gamma_e2) - 1.0;
      }
      const bool o1 = s.gamma_b1 < y1;
      const bool o2 = s.gamma_b2 < y2;
      acc.u1 += o1;
      acc.u2 += o2;
      acc.net += (o1 || o2);
    }
  });
  uint64_t c1 = 0, c2 = 0, cn = 0;
  for (const auto& c : chunks) {
    c1 += c.u1;
    c2 += c.u2;
    cn += c.net;
  }
  auto make = [&](uint64_t k) {
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.eve_mode = mode;
    e.value = static_cast<double>(k) / static_cast<double>(trials);
    e.std_error = binomial_se(e.value, trials);
    return e;
  };
  return {make(c1), make(c2), make(cn)};
}

AscEstimates estimate_asc(const Scenario& scn, uint64_t trials, uint64_t seed) {
  require_trials(trials, 1000);
  struct Sums {
    double cb1 = 0, cb2 = 0, ce1 = 0, ce2 = 0;
    double d1p = 0, d2p = 0;
    double sq_cb1 = 0, sq_cb2 = 0, sq_ce1 = 0, sq_ce2 = 0;
    double sq_d1p = 0, sq_d2p = 0, sq_d1 = 0, sq_d2 = 0;
  };
  auto chunks = run_chunked<Sums>(trials, [&](Sums& a, uint64_t t0, uint64_t t1) {
    for (uint64_t t = t0; t < t1; ++t) {
      RandomStream rng(seed, t);
      channel::ChannelDraw draw = channel::draw_channels(scn, rng);
      channel::Sinrs s = channel::instantaneous_sinrs(draw, scn);
      const double cb1 = std::log2(1.0 + s.gamma_b1);
      const double cb2 = std::log2(1.0 + s.gamma_b2);
      const double ce1 = std::log2(1.0 + s.gamma_e1);
      const double ce2 = std::log2(1.0 + s.gamma_e2);
      const double d1 = cb1 - ce1, d2 = cb2 - ce2;
      const double d1p = std::max(0.0, d1), d2p = std::max(0.0, d2);
      a.cb1 += cb1; a.cb2 += cb2; a.ce1 += ce1; a.ce2 += ce2;
      a.d1p += d1p; a.d2p += d2p;
      a.sq_cb1 += cb1 * cb1; a.sq_cb2 += cb2 * cb2;
      a.sq_ce1 += ce1 * ce1; a.sq_ce2 += ce2 * ce2;
      a.sq_d1p += d1p * d1p; a.sq_d2p += d2p * d2p;
      a.sq_d1 += d1 * d1;    a.sq_d2 += d2 * d2;
    }
  });
  Sums tot;
  for (const auto& a : chunks) {
    tot.cb1 += a.cb1; tot.cb2 += a.cb2; tot.ce1 += a.ce1; tot.ce2 += a.ce2;
    tot.d1p += a.d1p; tot.d2p += a.d2p;
    tot.sq_cb1 += a.sq_cb1; tot.sq_cb2 += a.sq_cb2;
    tot.sq_ce1 += a.sq_ce1; tot.sq_ce2 += a.sq_ce2;
    tot.sq_d1p += a.sq_d1p; tot.sq_d2p += a.sq_d2p;
    tot.sq_d1 += a.sq_d1;   tot.sq_d2 += a.sq_d2;
  }
  AscEstimates out;
  out.asc1 = make_mean_estimate(tot.d1p, tot.sq_d1p, trials, seed, EveMode::Random);
  out.asc2 = make_mean_estimate(tot.d2p, tot.sq_d2p, trials, seed, EveMode::Random);
  out.asc1_diff =
      make_mean_estimate(tot.cb1 - tot.ce1, tot.sq_d1, trials, seed, EveMode::Random);
  out.asc2_diff =
      make_mean_estimate(tot.cb2 - tot.ce2, tot.sq_d2, trials, seed, EveMode::Random);
  out.rate_b1 = make_mean_estimate(tot.cb1, tot.sq_cb1, trials, seed, EveMode::Random);
  out.rate_b2 = make_mean_estimate(tot.cb2, tot.sq_cb2, trials, seed, EveMode::Random);
  out.rate_e1 = make_mean_estimate(tot.ce1, tot.sq_ce1, trials, seed, EveMode::Random);
  out.rate_e2 = make_mean_estimate(tot.ce2, tot.sq_ce2, trials, seed, EveMode::Random);
  return out;
}

EmpiricalCdf empirical_cdf_gamma_b2(const Scenario& scn, uint64_t trials,
                                    std::span<const double> grid, uint64_t seed) {
  require_trials(trials, 10000);
  if (grid.empty() || !std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("empirical_cdf_gamma_b2: grid must be nonempty and sorted");
  const size_t bins = grid.size() + 1;
  using Hist = std::vector<uint64_t>;
  auto chunks = run_chunked<Hist>(trials, [&](Hist& h, uint64_t t0, uint64_t t1) {
    h.assign(bins, 0);
    for (uint64_t t = t0; t < t1; ++t) {
      RandomStream rng(seed, t);
      channel::ChannelDraw draw = channel::draw_channels(scn, rng);
      channel::Sinrs s = channel::instantaneous_sinrs(draw, scn);
      size_t idx = std::upper_bound(grid.begin(), grid.end(), s.gamma_b2) - grid.begin();
      ++h[idx];
    }
  });
  std::vector<uint64_t> hist(bins, 0);
  for (const auto& h : chunks)
    for (size_t i = 0; i < bins; ++i) hist[i] += h[i];
  EmpiricalCdf cdf;
  cdf.grid.assign(grid.begin(), grid.end());
  cdf.probs.resize(grid.size());
  cdf.trials = trials;
  uint64_t running = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    running += hist[i];
    cdf.probs[i] = static_cast<double>(running) / static_cast<double>(trials);
  }
  return cdf;
}

double fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_loglog_slope: need at least 3 points");
  double lo = points.front().first, hi = points.front().first;
  for (const auto& [rho_db, p] : points) {
    if (!(p > 0.0))
      throw std::invalid_argument("fit_loglog_slope: degenerate point with probability <= 0");
    lo = std::min(lo, rho_db);
    hi = std::max(hi, rho_db);
  }
  if (hi - lo < 10.0)
    throw std::invalid_argument("fit_loglog_slope: points must span at least 10 dB");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(points.size());
  for (const auto& [rho_db, p] : points) {
    const double x = rho_db / 10.0;  // log10(rho)
    const double y = std::log10(p);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

OmaEstimates oma_baseline(const Scenario& scn, uint64_t trials, uint64_t seed) {
  require_trials(trials, 1000);
  struct Sums {
    uint64_t o1 = 0, o2 = 0;
    double d1p = 0, d2p = 0, sq_d1p = 0, sq_d2p = 0;
  };
  auto chunks = run_chunked<Sums>(trials, [&](Sums& a, uint64_t t0, uint64_t t1) {
    for (uint64_t t = t0; t < t1; ++t) {
      RandomStream rng(seed, t);
      channel::ChannelDraw draw = channel::draw_channels(scn, rng);
      const double cb1 = 0.5 * std::log2(1.0 + scn.rho * draw.h_b1_sq * scn.g_b1);
      const double cb2 =
          0.5 * std::log2(1.0 + scn.rho * draw.h_hat_b2 * draw.h_hat_b2 * scn.l2_geo);
      const double ge = scn.rho_e * draw.h_hat_e * draw.h_hat_e * scn.le_geo;
      const double ce = 0.5 * std::log2(1.0 + ge);
      const double d1 = cb1 - ce, d2 = cb2 - ce;
      a.o1 += d1 < scn.cfg.r1;
      a.o2 += d2 < scn.cfg.r2;
      const double d1p = std::max(0.0, d1), d2p = std::max(0.0, d2);
      a.d1p += d1p; a.d2p += d2p;
      a.sq_d1p += d1p * d1p; a.sq_d2p += d2p * d2p;
    }
  });
  Sums tot;
  for (const auto& a : chunks) {
    tot.o1 += a.o1; tot.o2 += a.o2;
    tot.d1p += a.d1p; tot.d2p += a.d2p;
    tot.sq_d1p += a.sq_d1p; tot.sq_d2p += a.sq_d2p;
  }
  OmaEstimates out;
  auto make_p = [&](uint64_t k) {
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.eve_mode = EveMode::Random;
    e.value = static_cast<double>(k) / static_cast<double>(trials);
    e.std_error = binomial_se(e.value, trials);
    return e;
  };
  out.sop1 = make_p(tot.o1);
  out.sop2 = make_p(tot.o2);
  out.asc1 = make_mean_estimate(tot.d1p, tot.sq_d1p, trials, seed, EveMode::Random);
  out.asc2 = make_mean_estimate(tot.d2p, tot.sq_d2p, trials, seed, EveMode::Random);
  return out;
}

namespace {

McEstimate second_moment_impl(const Scenario& scn, uint64_t trials, uint64_t seed, bool eve) {
  struct Sums {
    double s = 0, sq = 0;
  };
  auto chunks = run_chunked<Sums>(trials, [&](Sums& a, uint64_t t0, uint64_t t1) {
    for (uint64_t t = t0; t < t1; ++t) {
      RandomStream rng(seed, t);
      channel::ChannelDraw draw = channel::draw_channels(scn, rng);
      const double g = eve ? draw.h_hat_e : draw.h_hat_b2;
      const double v = g * g;
      a.s += v;
      a.sq += v * v;
    }
  });
  Sums tot;
  for (const auto& a : chunks) {
    tot.s += a.s;
    tot.sq += a.sq;
  }
  return make_mean_estimate(tot.s, tot.sq, trials, seed, EveMode::Random);
}

}  // namespace

McEstimate estimate_gain_second_moment(const Scenario& scn, uint64_t trials, uint64_t seed) {
  require_trials(trials, 1000);
  return second_moment_impl(scn, trials, seed, false);
}

McEstimate estimate_eve_gain_second_moment(const Scenario& scn, uint64_t trials,
                                           uint64_t seed) {
  require_trials(trials, 1000);
  return second_moment_impl(scn, trials, seed, true);
}

}  // namespace irsnoma::mc
