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

#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "analytic.hpp"
#include "common.hpp"

namespace irsnoma::sweep {

using analytic::AscMethod;
using analytic::Which;
using mc::EveMode;

namespace {

const std::set<std::string> kKnownMetrics = {"sop1", "sop2",  "sop_net",    "asc1",
                                             "asc2", "rates", "asymptotes", "floors",
                                             "oma"};

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 0x632BE59BD9B4E019ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct PointValues {
  std::map<std::string, double> v;
};

// Everything one axis point can contribute; columns pick what they need.
PointValues compute_point(const SystemConfig& cfg, const std::set<std::string>& metrics,
                          uint64_t mc_trials, uint64_t point_seed, EveMode eve_mode) {
  channel::Scenario scn(cfg);
  PointValues p;
  auto want = [&](const char* m) { return metrics.count(m) > 0; };

  if (want("sop1") || want("sop_net")) p.v["sop1"] = analytic::sop_user1(scn);
  if (want("sop2") || want("sop_net")) p.v["sop2"] = analytic::sop_user2_auto(scn);
  if (want("sop_net")) p.v["sop_net"] = analytic::sop_network(scn);
  if (want("asc1")) p.v["asc1"] = analytic::asc(1, scn, AscMethod::Quadrature);
  if (want("asc2")) {
    p.v["asc2_quadrature"] = analytic::asc(2, scn, AscMethod::Quadrature);
    p.v["asc2_jensen"] = analytic::asc(2, scn, AscMethod::Jensen);
  }
  if (want("rates")) {
    p.v["rate_b1"] = analytic::ergodic_rate_user(1, scn);
    p.v["rate_b2"] = analytic::ergodic_rate_user(2, scn);
    p.v["rate_e1"] = analytic::ergodic_rate_eve(1, scn);
    p.v["rate_e2"] = analytic::ergodic_rate_eve(2, scn);
  }
  if (want("asymptotes")) {
    p.v["asym_sop1"] = analytic::asymptotic_sop(scn, Which::User1);
    p.v["asym_sop2"] = analytic::asymptotic_sop(scn, Which::User2);
    p.v["asym_sop_net"] = analytic::asymptotic_sop(scn, Which::Network);
    p.v["asc1_asym"] = analytic::asc_asymptotic(1, scn, AscMethod::Quadrature);
    p.v["asc2_ceiling_quadrature"] = analytic::asc_asymptotic(2, scn, AscMethod::Quadrature);
    p.v["asc2_ceiling_jensen"] = analytic::asc_asymptotic(2, scn, AscMethod::Jensen);
  }
  if (want("floors")) p.v["sop1_floor"] = analytic::sop1_floor(scn);

  const bool need_sop_mc =
      mc_trials > 0 && (want("sop1") || want("sop2") || want("sop_net"));
  const bool need_asc_mc = mc_trials > 0 && (want("asc1") || want("asc2") || want("rates"));
  if (need_sop_mc) {
    auto est = mc::estimate_sop(scn, mc_trials, point_seed, eve_mode);
    p.v["sop1_mc"] = est.user1.value;
    p.v["sop1_mc_se"] = est.user1.std_error;
    p.v["sop2_mc"] = est.user2.value;
    p.v["sop2_mc_se"] = est.user2.std_error;
    p.v["sop_net_mc"] = est.network.value;
    p.v["sop_net_mc_se"] = est.network.std_error;
  }
  if (need_asc_mc) {
    auto est = mc::estimate_asc(scn, mc_trials, mix_seed(point_seed, 1));
    p.v["asc1_mc"] = est.asc1.value;
    p.v["asc1_mc_se"] = est.asc1.std_error;
    p.v["asc1_diff_mc"] = est.asc1_diff.value;
    p.v["asc1_diff_mc_se"] = est.asc1_diff.std_error;
    p.v["asc2_mc"] = est.asc2.value;
    p.v["asc2_mc_se"] = est.asc2.std_error;
    p.v["asc2_diff_mc"] = est.asc2_diff.value;
    p.v["asc2_diff_mc_se"] = est.asc2_diff.std_error;
    p.v["rate_b1_mc"] = est.rate_b1.value;
    p.v["rate_b1_mc_se"] = est.rate_b1.std_error;
    p.v["rate_b2_mc"] = est.rate_b2.value;
    p.v["rate_b2_mc_se"] = est.rate_b2.std_error;
    p.v["rate_e1_mc"] = est.rate_e1.value;
    p.v["rate_e1_mc_se"] = est.rate_e1.std_error;
    p.v["rate_e2_mc"] = est.rate_e2.value;
    p.v["rate_e2_mc_se"] = est.rate_e2.std_error;
  }
  if (want("oma")) {
    auto est = mc::oma_baseline(scn, mc_trials, mix_seed(point_seed, 2));
    p.v["oma_sop1_mc"] = est.sop1.value;
    p.v["oma_sop1_mc_se"] = est.sop1.std_error;
    p.v["oma_sop2_mc"] = est.sop2.value;
    p.v["oma_sop2_mc_se"] = est.sop2.std_error;
    p.v["oma_asc1_mc"] = est.asc1.value;
    p.v["oma_asc1_mc_se"] = est.asc1.std_error;
    p.v["oma_asc2_mc"] = est.asc2.value;
    p.v["oma_asc2_mc_se"] = est.asc2.std_error;
  }
  return p;
}

struct ColumnDef {
  std::string name;
  std::string method;
};

std::vector<ColumnDef> column_plan(const SystemConfig& cfg,
                                   const std::set<std::string>& metrics, uint64_t mc_trials) {
  std::vector<ColumnDef> cols;
  auto want = [&](const char* m) { return metrics.count(m) > 0; };
  const char* sop2_method = cfg.sop2_regime == Sop2RegimeChoice::Low
                                ? "LowSNR"
                                : cfg.sop2_regime == Sop2RegimeChoice::High
                                      ? "HighSNR"
                                      : "Auto(Low<=30dB<High)";
  if (want("sop1")) cols.push_back({"sop1", "ClosedForm"});
  if (want("sop2")) cols.push_back({"sop2", sop2_method});
  if (want("sop_net")) cols.push_back({"sop_net", "ClosedForm"});
  if (want("asc1")) cols.push_back({"asc1", "Quadrature"});
  if (want("asc2")) {
    cols.push_back({"asc2_quadrature", "Quadrature"});
    cols.push_back({"asc2_jensen", "Jensen"});
  }
  if (want("rates")) {
    cols.push_back({"rate_b1", "ClosedForm"});
    cols.push_back({"rate_b2", "Quadrature"});
    cols.push_back({"rate_e1", "Quadrature"});
    cols.push_back({"rate_e2", "Quadrature"});
  }
  if (want("asymptotes")) {
    cols.push_back({"asym_sop1", "Asymptotic"});
    cols.push_back({"asym_sop2", "Asymptotic"});
    cols.push_back({"asym_sop_net", "Asymptotic"});
    cols.push_back({"asc1_asym", "Asymptotic"});
    cols.push_back({"asc2_ceiling_quadrature", "Asymptotic"});
    cols.push_back({"asc2_ceiling_jensen", "Asymptotic"});
  }
  if (want("floors")) cols.push_back({"sop1_floor", "Asymptotic"});
  if (mc_trials > 0) {
    auto mc_col = [&](const char* base) {
      cols.push_back({std::string(base) + "_mc", "MonteCarlo"});
      cols.push_back({std::string(base) + "_mc_se", "MonteCarlo"});
    };
    if (want("sop1")) mc_col("sop1");
    if (want("sop2")) mc_col("sop2");
    if (want("sop_net")) mc_col("sop_net");
    if (want("asc1")) {
      mc_col("asc1");
      mc_col("asc1_diff");
    }
    if (want("asc2")) {
      mc_col("asc2");
      mc_col("asc2_diff");
    }
    if (want("rates")) {
      mc_col("rate_b1");
      mc_col("rate_b2");
      mc_col("rate_e1");
      mc_col("rate_e2");
    }
    if (want("oma")) {
      mc_col("oma_sop1");
      mc_col("oma_sop2");
      mc_col("oma_asc1");
      mc_col("oma_asc2");
    }
  }
  return cols;
}

void append_config_metadata(MetricTable& table, const SystemConfig& cfg) {
  std::istringstream echo(config_echo(cfg));
  std::string line;
  while (std::getline(echo, line)) {
    size_t eq = line.find('=');
    table.metadata.emplace_back("config." + line.substr(0, eq), line.substr(eq + 1));
  }
}

SystemConfig with_axis(const SystemConfig& cfg, Axis axis, double value) {
  SystemConfig c = cfg;
  switch (axis) {
    case Axis::RhoDb: c.rho_db = value; break;
    case Axis::RhoEDb: c.rho_e_db = value; break;
    case Axis::NIrs: {
      double r = std::nearbyint(value);
      if (std::fabs(value - r) > 1e-9 || r < 1)
        throw std::invalid_argument("run_sweep: N axis values must be positive integers");
      c.n = static_cast<int>(r);
      break;
    }
  }
  return c;
}

}  // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::RhoDb: return "rho_db";
    case Axis::RhoEDb: return "rho_e_db";
    case Axis::NIrs: return "N";
  }
  return "?";
}

Axis axis_from_name(std::string_view name) {
  if (name == "rho_db") return Axis::RhoDb;
  if (name == "rho_e_db") return Axis::RhoEDb;
  if (name == "N") return Axis::NIrs;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                              "' (expected rho_db, rho_e_db or N)");
}

const MetricColumn* MetricTable::find(std::string_view name) const {
  for (const auto& c : columns)
    if (c.name == name) return &c;
  return nullptr;
}

MetricTable run_sweep(const SystemConfig& cfg, Axis axis, std::span<const double> values,
                      const std::set<std::string>& metrics, uint64_t mc_trials,
                      uint64_t seed, EveMode eve_mode) {
  cfg.validate();
  if (values.empty()) throw std::invalid_argument("run_sweep: values must be nonempty");
  if (!std::is_sorted(values.begin(), values.end()))
    throw std::invalid_argument("run_sweep: values must be sorted ascending");
  if (metrics.empty()) throw std::invalid_argument("run_sweep: no metrics requested");
  for (const auto& m : metrics)
    if (!kKnownMetrics.count(m))
      throw std::invalid_argument("run_sweep: unknown metric '" + m + "'");
  if (metrics.count("oma") && mc_trials == 0)
    throw std::invalid_argument("run_sweep: the oma baseline is Monte-Carlo only; set trials > 0");

  MetricTable table;
  table.axis = axis_name(axis);
  table.axis_values.assign(values.begin(), values.end());
  auto plan = column_plan(cfg, metrics, mc_trials);
  for (const auto& def : plan) table.columns.push_back({def.name, def.method, {}});

  for (size_t i = 0; i < values.size(); ++i) {
    SystemConfig pt = with_axis(cfg, axis, values[i]);
    PointValues pv = compute_point(pt, metrics, mc_trials, mix_seed(seed, i), eve_mode);
    for (auto& col : table.columns) {
      auto it = pv.v.find(col.name);
      if (it == pv.v.end())
        throw std::logic_error("run_sweep: missing value for column " + col.name);
      col.values.push_back(it->second);
    }
  }

  std::string metric_list;
  for (const auto& m : metrics) metric_list += (metric_list.empty() ? "" : ",") + m;
  table.metadata.emplace_back("table", "irsnoma-sweep");
  table.metadata.emplace_back("version", kVersion);
  table.metadata.emplace_back("axis", table.axis);
  table.metadata.emplace_back("metrics", metric_list);
  table.metadata.emplace_back("mc_trials", std::to_string(mc_trials));
  table.metadata.emplace_back("seed", std::to_string(seed));
  table.metadata.emplace_back("eve_mode", eve_mode == EveMode::Mean ? "mean" : "random");
  append_config_metadata(table, cfg);
  for (const auto& c : table.columns) table.metadata.emplace_back("method." + c.name, c.method);
  return table;
}

namespace {

// Merge per-curve sweep columns into one table with _N{n} suffixes.
void merge_curve(MetricTable& dst, const MetricTable& src, int n_value) {
  for (const auto& col : src.columns) {
    MetricColumn c = col;
    c.name += "_N" + std::to_string(n_value);
    dst.columns.push_back(std::move(c));
  }
}

std::vector<double> linspace_step(double lo, double hi, double step) {
  std::vector<double> v;
  for (double x = lo; x <= hi + 1e-9; x += step) v.push_back(x);
  return v;
}

}  // namespace

MetricTable figure_preset(const SystemConfig& base, const std::string& name,
                          std::span<const std::pair<std::string, std::string>> overrides,
                          uint64_t mc_trials, uint64_t seed) {
  SystemConfig cfg = base;
  bool n_overridden = false;
  for (const auto& [k, v] : overrides) {
    apply_key_value(cfg, k, v);
    if (k == "N") n_overridden = true;
  }
  cfg.finalize();
  cfg.validate();

  auto trials_or = [&](uint64_t preset_default) {
    return mc_trials == kPresetDefaultTrials ? preset_default : mc_trials;
  };

  MetricTable table;
  auto finish = [&](const std::vector<double>& axis_values, const char* axis,
                    uint64_t trials, const char* eve) {
    table.axis = axis;
    table.axis_values = axis_values;
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("table", "irsnoma-figure");
    meta.emplace_back("version", kVersion);
    meta.emplace_back("preset", name);
    meta.emplace_back("axis", axis);
    meta.emplace_back("mc_trials", std::to_string(trials));
    meta.emplace_back("seed", std::to_string(seed));
    meta.emplace_back("eve_mode", eve);
    table.metadata.insert(table.metadata.begin(), meta.begin(), meta.end());
    append_config_metadata(table, cfg);
    for (const auto& c : table.columns)
      table.metadata.emplace_back("method." + c.name, c.method);
  };

  if (name == "fig2" || name == "fig3" || name == "fig4") {
    // SOP versus transmit SNR, per-N curves, Eve at 10 dB.
    cfg.rho_e_db = 10.0;
    std::vector<int> curves = name == "fig3" ? std::vector<int>{1, 30}
                                             : std::vector<int>{1, 3};
    if (n_overridden) curves = {cfg.n};
    const double hi = name == "fig4" ? 60.0 : 50.0;
    std::vector<double> axis_values = linspace_step(0.0, hi, 5.0);
    uint64_t trials = trials_or(name == "fig4" ? 0 : 200000);
    std::set<std::string> metrics;
    if (name == "fig2") {
      metrics = {"sop1", "floors"};
      if (trials > 0) metrics.insert("oma");
    } else if (name == "fig3") {
      metrics = {"sop2"};
      if (trials > 0) metrics.insert("oma");
      cfg.sop2_regime = Sop2RegimeChoice::Low;
    } else {
      metrics = {"sop1", "sop2", "asymptotes"};
    }
    for (size_t ci = 0; ci < curves.size(); ++ci) {
      SystemConfig c = cfg;
      c.n = curves[ci];
      MetricTable part = run_sweep(c, Axis::RhoDb, axis_values, metrics, trials,
                                   mix_seed(seed, 0xC0FFEE + ci), mc::EveMode::Mean);
      if (name == "fig4") {
        // a SOP figure: drop the ASC asymptote columns that ride along
        // with the "asymptotes" metric group
        std::erase_if(part.columns,
                      [](const MetricColumn& c) { return c.name.rfind("asc", 0) == 0; });
      }
      merge_curve(table, part, curves[ci]);
    }
    finish(axis_values, "rho_db", trials, "mean");
    return table;
  }
  if (name == "fig5") {
    // SOP versus the number of IRS elements at rho = 40 dB.
    cfg.rho_db = 40.0;
    cfg.rho_e_db = 10.0;
    std::vector<double> axis_values;
    for (int n = 1; n <= 64; ++n) axis_values.push_back(n);
    uint64_t trials = trials_or(100000);
    std::set<std::string> metrics = {"sop1", "sop2"};
    MetricTable part =
        run_sweep(cfg, Axis::NIrs, axis_values, metrics, trials, seed, mc::EveMode::Mean);
    table.columns = part.columns;
    finish(axis_values, "N", trials, "mean");
    return table;
  }
  if (name == "fig6") {
    // ASC versus transmit SNR, N = 30, Eve at 30 dB.
    if (!n_overridden) cfg.n = 30;
    cfg.rho_e_db = 30.0;
    std::vector<double> axis_values = linspace_step(0.0, 80.0, 5.0);
    uint64_t trials = trials_or(200000);
    std::set<std::string> metrics = {"asc1", "asc2", "asymptotes"};
    MetricTable part =
        run_sweep(cfg, Axis::RhoDb, axis_values, metrics, trials, seed, mc::EveMode::Random);
    table.columns = part.columns;
    finish(axis_values, "rho_db", trials, "random");
    return table;
  }
  if (name == "fig8") {
    // ASC over the (N, rho) grid with rho_e = rho; long-format table.
    const std::vector<int> ns = {1, 2, 4, 8, 12, 16, 24, 32, 48, 64};
    const std::vector<double> rhos = {0, 10, 20, 30, 40, 50, 60};
    uint64_t trials = trials_or(0);
    MetricColumn col_n{"N", "Grid", {}}, col_rho{"rho_db", "Grid", {}};
    MetricColumn a1{"asc1", "Quadrature", {}}, a2q{"asc2_quadrature", "Quadrature", {}},
        a2j{"asc2_jensen", "Jensen", {}};
    MetricColumn a1m{"asc1_mc", "MonteCarlo", {}}, a2m{"asc2_mc", "MonteCarlo", {}};
    std::vector<double> axis_values;
    size_t idx = 0;
    for (int n : ns) {
      for (double rho : rhos) {
        SystemConfig c = cfg;
        c.n = n;
        c.rho_db = rho;
        c.rho_e_db = rho;
        channel::Scenario scn(c);
        axis_values.push_back(static_cast<double>(idx));
        col_n.values.push_back(n);
        col_rho.values.push_back(rho);
        a1.values.push_back(analytic::asc(1, scn, AscMethod::Quadrature));
        a2q.values.push_back(analytic::asc(2, scn, AscMethod::Quadrature));
        a2j.values.push_back(analytic::asc(2, scn, AscMethod::Jensen));
        if (trials > 0) {
          auto est = mc::estimate_asc(scn, trials, mix_seed(seed, idx));
          a1m.values.push_back(est.asc1.value);
          a2m.values.push_back(est.asc2.value);
        }
        ++idx;
      }
    }
    table.columns = {col_n, col_rho, a1, a2q, a2j};
    if (trials > 0) {
      table.columns.push_back(a1m);
      table.columns.push_back(a2m);
    }
    finish(axis_values, "grid_index", trials, "random");
    return table;
  }
  throw std::invalid_argument("figure_preset: unknown preset '" + name +
                              "' (known: fig2 fig3 fig4 fig5 fig6 fig8)");
}

std::string to_csv(const MetricTable& table) {
  std::ostringstream out;
  for (const auto& [k, v] : table.metadata) out << "# " << k << "=" << v << "\n";
  out << table.axis;
  for (const auto& c : table.columns) out << "," << c.name;
  out << "\n";
  for (size_t i = 0; i < table.axis_values.size(); ++i) {
    out << fmt(table.axis_values[i]);
    for (const auto& c : table.columns) out << "," << fmt(c.values[i]);
    out << "\n";
  }
  return out.str();
}

void write_csv(const MetricTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_csv(table);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

SweepSpec parse_sweep_csv(const std::string& csv_text) {
  SweepSpec spec;
  std::istringstream in(csv_text);
  std::string line;
  std::string config_text;
  bool header_seen = false;
  bool is_sweep = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      std::string kv = line.substr(2);
      size_t eq = kv.find('=');
      if (eq == std::string::npos) continue;
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "table") is_sweep = value == "irsnoma-sweep";
      else if (key == "axis") spec.axis = axis_from_name(value);
      else if (key == "metrics") {
        size_t pos = 0;
        while (pos < value.size()) {
          size_t comma = value.find(',', pos);
          if (comma == std::string::npos) comma = value.size();
          spec.metrics.insert(value.substr(pos, comma - pos));
          pos = comma + 1;
        }
      } else if (key == "mc_trials") spec.mc_trials = std::stoull(value);
      else if (key == "seed") spec.seed = std::stoull(value);
      else if (key == "eve_mode")
        spec.eve_mode = value == "mean" ? EveMode::Mean : EveMode::Random;
      else if (key.rfind("config.", 0) == 0)
        config_text += key.substr(7) + "=" + value + "\n";
      continue;
    }
    if (!header_seen) {  // header row
      header_seen = true;
      continue;
    }
    size_t comma = line.find(',');
    if (comma == std::string::npos || line.empty()) continue;
    spec.values.push_back(std::strtod(line.substr(0, comma).c_str(), nullptr));
  }
  if (!is_sweep)
    throw std::invalid_argument("parse_sweep_csv: not an irsnoma-sweep table");
  spec.cfg = parse_config_text(config_text);
  return spec;
}

}  // namespace irsnoma::sweep
