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

#include "config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "common.hpp"

namespace irsnoma {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view v, std::string_view key, int line) {
  std::string buf(v);
  char* end = nullptr;
  double x = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0')
    throw ParseError("key '" + std::string(key) + "': malformed number '" + buf + "'", line);
  return x;
}

int parse_int(std::string_view v, std::string_view key, int line) {
  double x = parse_number(v, key, line);
  double r = std::nearbyint(x);
  if (std::fabs(x - r) > 1e-9 || std::fabs(r) > 1e9)
    throw ParseError("key '" + std::string(key) + "': expected an integer, got '" +
                         std::string(v) + "'",
                     line);
  return static_cast<int>(r);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double noise_power_dbm(double bandwidth_hz) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz);
}

void SystemConfig::finalize() {
  if (tx_power_dbm) {
    rho_db = *tx_power_dbm - noise_power_dbm(bandwidth_hz);
    tx_power_dbm.reset();
  }
  if (rate_target_bps) {
    r1 = r2 = *rate_target_bps / bandwidth_hz;
    rate_target_bps.reset();
  }
}

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError("config: " + msg); };
  if (!(a1 > 0.0) || !(a2 > 0.0)) fail("power fractions must be positive");
  if (std::fabs(a1 + a2 - 1.0) > 1e-12) fail("a1 + a2 must equal 1 (within 1e-12)");
  if (!(a1 < a2)) fail("NOMA ordering requires a1 < a2 (cell-edge user gets more power)");
  if (n < 1) fail("N must be >= 1");
  if (!(m1 >= 0.5) || !(m2 >= 0.5) || !(m3 >= 0.5)) fail("Nakagami shapes must be >= 0.5");
  if (!(d1 > 0.0) || !(d_b1 > 0.0) || !(d_b2 > 0.0) || !(d_e > 0.0))
    fail("distances must be positive");
  if (!(alpha1 >= 2.0) || !(alpha_b1 >= 2.0) || !(alpha_b2 >= 2.0) || !(alpha_e >= 2.0))
    fail("path-loss exponents must be >= 2");
  if (!(r1 >= 0.0) || !(r2 >= 0.0)) fail("rate targets must be >= 0");
  if (!(bandwidth_hz > 0.0)) fail("bandwidth_hz must be positive");
  if (!(beta > 0.0) || beta > 1.0) fail("beta must lie in (0, 1]");
  if (u1 < 1 || u1 > 512) fail("u1 must lie in [1, 512]");
  if (u2 < 1) fail("u2 must be >= 1");
  if (!(series.rel_tol > 0.0)) fail("series_rel_tol must be positive");
  if (series.max_terms < 1) fail("series_max_terms must be >= 1");
  if (!std::isfinite(rho_db) || !std::isfinite(rho_e_db)) fail("SNRs must be finite");
}

void apply_key_value(SystemConfig& cfg, std::string_view key, std::string_view value,
                     int line) {
  auto num = [&] { return parse_number(value, key, line); };
  auto integer = [&] { return parse_int(value, key, line); };
  if (key == "a1") {
    cfg.a1 = num();
    if (!cfg.a2_explicit) cfg.a2 = 1.0 - cfg.a1;
  } else if (key == "a2") {
    cfg.a2 = num();
    cfg.a2_explicit = true;
  }
  else if (key == "N") cfg.n = integer();
  else if (key == "m1") cfg.m1 = num();
  else if (key == "m2") cfg.m2 = num();
  else if (key == "m3") cfg.m3 = num();
  else if (key == "d1") cfg.d1 = num();
  else if (key == "dB1") cfg.d_b1 = num();
  else if (key == "dB2") cfg.d_b2 = num();
  else if (key == "dE") cfg.d_e = num();
  else if (key == "alpha1") cfg.alpha1 = num();
  else if (key == "alphaB1") cfg.alpha_b1 = num();
  else if (key == "alphaB2") cfg.alpha_b2 = num();
  else if (key == "alphaE") cfg.alpha_e = num();
  else if (key == "rho_db") cfg.rho_db = num();
  else if (key == "rho_e_db") cfg.rho_e_db = num();
  else if (key == "R1") cfg.r1 = num();
  else if (key == "R2") cfg.r2 = num();
  else if (key == "bandwidth_hz") cfg.bandwidth_hz = num();
  else if (key == "beta") cfg.beta = num();
  else if (key == "u1") cfg.u1 = integer();
  else if (key == "u2") cfg.u2 = integer();
  else if (key == "series_rel_tol") cfg.series.rel_tol = num();
  else if (key == "series_max_terms") cfg.series.max_terms = integer();
  else if (key == "tx_power_dbm") cfg.tx_power_dbm = num();
  else if (key == "rate_target_bps") cfg.rate_target_bps = num();
  else if (key == "strict_paper") cfg.strict_paper = integer() != 0;
  else if (key == "sop2_regime") {
    if (value == "auto") cfg.sop2_regime = Sop2RegimeChoice::Auto;
    else if (value == "low") cfg.sop2_regime = Sop2RegimeChoice::Low;
    else if (value == "high") cfg.sop2_regime = Sop2RegimeChoice::High;
    else
      throw ParseError("sop2_regime must be one of auto|low|high, got '" +
                           std::string(value) + "'",
                       line);
  } else {
    throw ParseError("unknown key '" + std::string(key) + "'", line);
  }
}

SystemConfig parse_config_text(std::string_view text, const SystemConfig& base) {
  SystemConfig cfg = base;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value, got '" + std::string(line) + "'", line_no);
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    apply_key_value(cfg, key, value, line_no);
  }
  cfg.finalize();
  cfg.validate();
  return cfg;
}

SystemConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string config_echo(const SystemConfig& cfg) {
  std::ostringstream out;
  out << "a1=" << fmt(cfg.a1) << "\na2=" << fmt(cfg.a2) << "\nN=" << cfg.n
      << "\nm1=" << fmt(cfg.m1) << "\nm2=" << fmt(cfg.m2) << "\nm3=" << fmt(cfg.m3)
      << "\nd1=" << fmt(cfg.d1) << "\ndB1=" << fmt(cfg.d_b1) << "\ndB2=" << fmt(cfg.d_b2)
      << "\ndE=" << fmt(cfg.d_e) << "\nalpha1=" << fmt(cfg.alpha1)
      << "\nalphaB1=" << fmt(cfg.alpha_b1) << "\nalphaB2=" << fmt(cfg.alpha_b2)
      << "\nalphaE=" << fmt(cfg.alpha_e) << "\nrho_db=" << fmt(cfg.rho_db)
      << "\nrho_e_db=" << fmt(cfg.rho_e_db) << "\nR1=" << fmt(cfg.r1)
      << "\nR2=" << fmt(cfg.r2) << "\nbandwidth_hz=" << fmt(cfg.bandwidth_hz)
      << "\nbeta=" << fmt(cfg.beta) << "\nu1=" << cfg.u1 << "\nu2=" << cfg.u2
      << "\nseries_rel_tol=" << fmt(cfg.series.rel_tol)
      << "\nseries_max_terms=" << cfg.series.max_terms << "\nsop2_regime="
      << (cfg.sop2_regime == Sop2RegimeChoice::Auto
              ? "auto"
              : cfg.sop2_regime == Sop2RegimeChoice::Low ? "low" : "high")
      << "\nstrict_paper=" << (cfg.strict_paper ? 1 : 0) << "\n";
  return out.str();
}

double config_get(const SystemConfig& cfg, std::string_view key) {
  if (key == "a1") return cfg.a1;
  if (key == "a2") return cfg.a2;
  if (key == "N") return cfg.n;
  if (key == "m1") return cfg.m1;
  if (key == "m2") return cfg.m2;
  if (key == "m3") return cfg.m3;
  if (key == "d1") return cfg.d1;
  if (key == "dB1") return cfg.d_b1;
  if (key == "dB2") return cfg.d_b2;
  if (key == "dE") return cfg.d_e;
  if (key == "alpha1") return cfg.alpha1;
  if (key == "alphaB1") return cfg.alpha_b1;
  if (key == "alphaB2") return cfg.alpha_b2;
  if (key == "alphaE") return cfg.alpha_e;
  if (key == "rho_db") return cfg.rho_db;
  if (key == "rho_e_db") return cfg.rho_e_db;
  if (key == "R1") return cfg.r1;
  if (key == "R2") return cfg.r2;
  if (key == "bandwidth_hz") return cfg.bandwidth_hz;
  if (key == "beta") return cfg.beta;
  if (key == "u1") return cfg.u1;
  if (key == "u2") return cfg.u2;
  if (key == "series_rel_tol") return cfg.series.rel_tol;
  if (key == "series_max_terms") return cfg.series.max_terms;
  if (key == "strict_paper") return cfg.strict_paper ? 1.0 : 0.0;
  throw std::invalid_argument("config_get: unknown key '" + std::string(key) + "'");
}

}  // namespace irsnoma
