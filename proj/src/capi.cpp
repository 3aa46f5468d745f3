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

#include "irsnoma/irsnoma.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ios>
#include <set>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "common.hpp"
#include "montecarlo.hpp"
#include "sweep.hpp"
#include "validate.hpp"

struct irsn_config {
  irsnoma::SystemConfig cfg;
};

struct irsn_table {
  irsnoma::sweep::MetricTable table;
};

namespace {

thread_local std::string g_last_error;

irsn_status to_status(const std::exception& e) {
  g_last_error = e.what();
  if (dynamic_cast<const irsnoma::ParseError*>(&e)) return IRSN_ERR_PARSE;
  if (dynamic_cast<const irsnoma::ValidationError*>(&e)) return IRSN_ERR_VALIDATION;
  if (dynamic_cast<const irsnoma::ConvergenceError*>(&e)) return IRSN_ERR_CONVERGENCE;
  if (dynamic_cast<const std::domain_error*>(&e)) return IRSN_ERR_DOMAIN;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return IRSN_ERR_ARGUMENT;
  if (dynamic_cast<const std::ios_base::failure*>(&e)) return IRSN_ERR_IO;
  return IRSN_ERR_INTERNAL;
}

template <typename Fn>
irsn_status guarded(Fn&& fn) {
  try {
    fn();
    return IRSN_OK;
  } catch (const std::exception& e) {
    return to_status(e);
  } catch (...) {
    g_last_error = "unknown error";
    return IRSN_ERR_INTERNAL;
  }
}

irsn_status require(bool ok, const char* msg) {
  if (ok) return IRSN_OK;
  g_last_error = msg;
  return IRSN_ERR_ARGUMENT;
}

irsn_status copy_out(const std::string& text, char* buffer, size_t capacity, size_t* length) {
  if (length) *length = text.size();
  if (!buffer) return IRSN_OK;
  if (capacity < text.size() + 1) {
    g_last_error = "buffer too small";
    return IRSN_ERR_ARGUMENT;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return IRSN_OK;
}

irsn_estimate convert(const irsnoma::mc::McEstimate& e) {
  return {e.value, e.std_error, e.trials, e.seed,
          e.eve_mode == irsnoma::mc::EveMode::Mean ? 1 : 0};
}

}  // namespace

extern "C" {

const char* irsn_version(void) { return irsnoma::kVersion; }

const char* irsn_status_message(irsn_status status) {
  switch (status) {
    case IRSN_OK: return "ok";
    case IRSN_ERR_ARGUMENT: return "invalid argument";
    case IRSN_ERR_PARSE: return "parse error";
    case IRSN_ERR_VALIDATION: return "config validation error";
    case IRSN_ERR_DOMAIN: return "domain error";
    case IRSN_ERR_CONVERGENCE: return "convergence failure";
    case IRSN_ERR_IO: return "i/o error";
    case IRSN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* irsn_last_error(void) { return g_last_error.c_str(); }

irsn_status irsn_config_create(irsn_config** out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] { *out = new irsn_config{}; });
}

irsn_status irsn_config_load(const char* path, irsn_config** out) {
  if (auto s = require(path && out, "path/out is null")) return s;
  return guarded([&] { *out = new irsn_config{irsnoma::parse_config(path)}; });
}

irsn_status irsn_config_clone(const irsn_config* cfg, irsn_config** out) {
  if (auto s = require(cfg && out, "cfg/out is null")) return s;
  return guarded([&] { *out = new irsn_config{cfg->cfg}; });
}

irsn_status irsn_config_set(irsn_config* cfg, const char* key, const char* value) {
  if (auto s = require(cfg && key && value, "cfg/key/value is null")) return s;
  return guarded([&] { irsnoma::apply_key_value(cfg->cfg, key, value); });
}

irsn_status irsn_config_finalize(irsn_config* cfg) {
  if (auto s = require(cfg != nullptr, "cfg is null")) return s;
  return guarded([&] {
    cfg->cfg.finalize();
    cfg->cfg.validate();
  });
}

irsn_status irsn_config_get(const irsn_config* cfg, const char* key, double* value) {
  if (auto s = require(cfg && key && value, "cfg/key/value is null")) return s;
  return guarded([&] { *value = irsnoma::config_get(cfg->cfg, key); });
}

irsn_status irsn_config_echo(const irsn_config* cfg, char* buffer, size_t capacity,
                             size_t* length) {
  if (auto s = require(cfg != nullptr, "cfg is null")) return s;
  irsn_status rc = IRSN_OK;
  irsn_status g = guarded([&] { rc = copy_out(irsnoma::config_echo(cfg->cfg), buffer, capacity, length); });
  return g != IRSN_OK ? g : rc;
}

void irsn_config_free(irsn_config* cfg) { delete cfg; }

irsn_status irsn_derived_stats(const irsn_config* cfg, irsn_derived* out) {
  if (auto s = require(cfg && out, "cfg/out is null")) return s;
  return guarded([&] {
    irsnoma::channel::Scenario scn(cfg->cfg);
    irsn_derived d{};
    d.eps_user2 = scn.pair2.eps;
    d.lambda_user2 = scn.lambda2;
    d.eps_eve = scn.pair_e.eps;
    d.lambda_eve = scn.lambda_e;
    d.m_tilde_user2_defined = scn.pair2.m_tilde.has_value();
    d.m_tilde_user2 = scn.pair2.m_tilde.value_or(0.0);
    d.mu = scn.mu;
    d.mu2 = scn.mu2;
    d.mu1_growth_user2 = irsnoma::channel::mu1_growth_factor(scn.pair2);
    d.mu1_growth_eve = irsnoma::channel::mu1_growth_factor(scn.pair_e);
    auto sumy = irsnoma::analytic::diversity_and_slopes(scn);
    d.diversity_user1 = sumy.diversity_user1;
    d.diversity_user2 = sumy.diversity_user2;
    d.diversity_network = sumy.diversity_network;
    d.slope_user1 = sumy.slope_user1;
    d.slope_user2 = sumy.slope_user2;
    d.sop1_floor = sumy.sop1_floor;
    *out = d;
  });
}

irsn_status irsn_eval(const irsn_config* cfg, const char* metric, double* out) {
  if (auto s = require(cfg && metric && out, "cfg/metric/out is null")) return s;
  return guarded([&] {
    using namespace irsnoma::analytic;
    irsnoma::channel::Scenario scn(cfg->cfg);
    std::string m = metric;
    if (m == "sop1") *out = sop_user1(scn);
    else if (m == "sop2") *out = sop_user2_auto(scn);
    else if (m == "sop2_low") *out = sop_user2(scn, Sop2Regime::Low);
    else if (m == "sop2_high") *out = sop_user2(scn, Sop2Regime::High);
    else if (m == "sop_net") *out = sop_network(scn);
    else if (m == "asym_sop1") *out = asymptotic_sop(scn, Which::User1);
    else if (m == "asym_sop2") *out = asymptotic_sop(scn, Which::User2);
    else if (m == "asym_sop_net") *out = asymptotic_sop(scn, Which::Network);
    else if (m == "sop1_floor") *out = sop1_floor(scn);
    else if (m == "rate_b1") *out = ergodic_rate_user(1, scn);
    else if (m == "rate_b2") *out = ergodic_rate_user(2, scn);
    else if (m == "rate_e1") *out = ergodic_rate_eve(1, scn);
    else if (m == "rate_e2") *out = ergodic_rate_eve(2, scn);
    else if (m == "asc1") *out = asc(1, scn, AscMethod::Quadrature);
    else if (m == "asc2_quadrature") *out = asc(2, scn, AscMethod::Quadrature);
    else if (m == "asc2_jensen") *out = asc(2, scn, AscMethod::Jensen);
    else if (m == "asc1_asym") *out = asc_asymptotic(1, scn, AscMethod::Quadrature);
    else if (m == "asc2_ceiling_quadrature") *out = asc_asymptotic(2, scn, AscMethod::Quadrature);
    else if (m == "asc2_ceiling_jensen") *out = asc_asymptotic(2, scn, AscMethod::Jensen);
    else throw std::invalid_argument("unknown metric '" + m + "'");
  });
}

irsn_status irsn_mc_sop(const irsn_config* cfg, uint64_t trials, uint64_t seed, int eve_mode,
                        irsn_estimate out[3]) {
  if (auto s = require(cfg && out, "cfg/out is null")) return s;
  return guarded([&] {
    irsnoma::channel::Scenario scn(cfg->cfg);
    auto est = irsnoma::mc::estimate_sop(
        scn, trials, seed,
        eve_mode ? irsnoma::mc::EveMode::Mean : irsnoma::mc::EveMode::Random);
    out[0] = convert(est.user1);
    out[1] = convert(est.user2);
    out[2] = convert(est.network);
  });
}

irsn_status irsn_mc_asc(const irsn_config* cfg, uint64_t trials, uint64_t seed,
                        irsn_estimate out[8]) {
  if (auto s = require(cfg && out, "cfg/out is null")) return s;
  return guarded([&] {
    irsnoma::channel::Scenario scn(cfg->cfg);
    auto est = irsnoma::mc::estimate_asc(scn, trials, seed);
    out[0] = convert(est.asc1);
    out[1] = convert(est.asc2);
    out[2] = convert(est.asc1_diff);
    out[3] = convert(est.asc2_diff);
    out[4] = convert(est.rate_b1);
    out[5] = convert(est.rate_b2);
    out[6] = convert(est.rate_e1);
    out[7] = convert(est.rate_e2);
  });
}

irsn_status irsn_mc_oma(const irsn_config* cfg, uint64_t trials, uint64_t seed,
                        irsn_estimate out[4]) {
  if (auto s = require(cfg && out, "cfg/out is null")) return s;
  return guarded([&] {
    irsnoma::channel::Scenario scn(cfg->cfg);
    auto est = irsnoma::mc::oma_baseline(scn, trials, seed);
    out[0] = convert(est.sop1);
    out[1] = convert(est.sop2);
    out[2] = convert(est.asc1);
    out[3] = convert(est.asc2);
  });
}

irsn_status irsn_run_sweep(const irsn_config* cfg, const char* axis, const double* values,
                           size_t n_values, const char* metrics, uint64_t mc_trials,
                           uint64_t seed, int eve_mode, irsn_table** out) {
  if (auto s = require(cfg && axis && values && metrics && out, "null argument")) return s;
  return guarded([&] {
    std::set<std::string> metric_set;
    std::string list = metrics;
    size_t pos = 0;
    while (pos < list.size()) {
      size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      if (comma > pos) metric_set.insert(list.substr(pos, comma - pos));
      pos = comma + 1;
    }
    auto table = irsnoma::sweep::run_sweep(
        cfg->cfg, irsnoma::sweep::axis_from_name(axis), {values, n_values}, metric_set,
        mc_trials, seed,
        eve_mode ? irsnoma::mc::EveMode::Mean : irsnoma::mc::EveMode::Random);
    *out = new irsn_table{std::move(table)};
  });
}

irsn_status irsn_figure_preset(const irsn_config* cfg, const char* name,
                               const char* const* overrides_kv, size_t n_overrides,
                               uint64_t mc_trials, uint64_t seed, irsn_table** out) {
  if (auto s = require(cfg && name && out, "cfg/name/out is null")) return s;
  if (auto s = require(n_overrides == 0 || overrides_kv, "overrides_kv is null")) return s;
  return guarded([&] {
    std::vector<std::pair<std::string, std::string>> overrides;
    for (size_t i = 0; i < n_overrides; ++i)
      overrides.emplace_back(overrides_kv[2 * i], overrides_kv[2 * i + 1]);
    auto table = irsnoma::sweep::figure_preset(cfg->cfg, name, overrides, mc_trials, seed);
    *out = new irsn_table{std::move(table)};
  });
}

size_t irsn_table_rows(const irsn_table* table) {
  return table ? table->table.axis_values.size() : 0;
}

size_t irsn_table_cols(const irsn_table* table) {
  return table ? table->table.columns.size() + 1 : 0;  // axis column first
}

const char* irsn_table_column_name(const irsn_table* table, size_t col) {
  if (!table || col > table->table.columns.size()) return nullptr;
  if (col == 0) return table->table.axis.c_str();
  return table->table.columns[col - 1].name.c_str();
}

irsn_status irsn_table_cell(const irsn_table* table, size_t row, size_t col, double* out) {
  if (auto s = require(table && out, "table/out is null")) return s;
  if (auto s = require(row < table->table.axis_values.size() &&
                           col <= table->table.columns.size(),
                       "cell index out of range"))
    return s;
  *out = col == 0 ? table->table.axis_values[row] : table->table.columns[col - 1].values[row];
  return IRSN_OK;
}

irsn_status irsn_table_write_csv(const irsn_table* table, const char* path) {
  if (auto s = require(table && path, "table/path is null")) return s;
  return guarded([&] { irsnoma::sweep::write_csv(table->table, path); });
}

irsn_status irsn_table_to_csv(const irsn_table* table, char* buffer, size_t capacity,
                              size_t* length) {
  if (auto s = require(table != nullptr, "table is null")) return s;
  irsn_status rc = IRSN_OK;
  irsn_status g = guarded(
      [&] { rc = copy_out(irsnoma::sweep::to_csv(table->table), buffer, capacity, length); });
  return g != IRSN_OK ? g : rc;
}

void irsn_table_free(irsn_table* table) { delete table; }

irsn_status irsn_validate(const irsn_config* cfg, int quick, const char* csv_path,
                          char** report, int* failures) {
  if (auto s = require(cfg && failures, "cfg/failures is null")) return s;
  return guarded([&] {
    auto rep = irsnoma::validate::run_validation(
        cfg->cfg,
        quick ? irsnoma::validate::Budget::Quick : irsnoma::validate::Budget::Full);
    *failures = rep.failures();
    if (csv_path) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw std::runtime_error(std::string("cannot open '") + csv_path + "'");
      out << rep.csv();
    }
    if (report) {
      std::string text = rep.text();
      char* buf = static_cast<char*>(std::malloc(text.size() + 1));
      if (!buf) throw std::bad_alloc();
      std::memcpy(buf, text.c_str(), text.size() + 1);
      *report = buf;
    }
  });
}

void irsn_string_free(char* s) { std::free(s); }

}  // extern "C"
