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
// Command-line front end. Talks to the core exclusively through the C API
// in irsnoma/irsnoma.h.
//
// Exit codes: 0 success, 1 validation failure, 2 input error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsnoma/irsnoma.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(irsn_status status) {
  if (status != IRSN_OK)
    throw InputError(std::string(irsn_status_message(status)) + ": " + irsn_last_error());
}

using ConfigPtr = std::unique_ptr<irsn_config, decltype(&irsn_config_free)>;
using TablePtr = std::unique_ptr<irsn_table, decltype(&irsn_table_free)>;

ConfigPtr make_config(const std::string& path, const std::vector<std::string>& overrides) {
  irsn_config* raw = nullptr;
  check(path.empty() ? irsn_config_create(&raw) : irsn_config_load(path.c_str(), &raw));
  ConfigPtr cfg(raw, &irsn_config_free);
  for (const auto& kv : overrides) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw InputError("--override expects key=value, got '" + kv + "'");
    check(irsn_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()));
  }
  check(irsn_config_finalize(cfg.get()));
  return cfg;
}

// "a:step:b" inclusive range or a comma list.
std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  auto to_num = [](const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw InputError("bad number '" + s + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    size_t c1 = text.find(':'), c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InputError("range must be start:step:stop");
    double start = to_num(text.substr(0, c1));
    double step = to_num(text.substr(c1 + 1, c2 - c1 - 1));
    double stop = to_num(text.substr(c2 + 1));
    if (!(step > 0)) throw InputError("range step must be positive");
    for (double x = start; x <= stop + 1e-9; x += step) out.push_back(x);
  } else {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      out.push_back(to_num(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  if (out.empty()) throw InputError("no sweep values given");
  return out;
}

void write_plot_script(const irsn_table* table, const std::string& csv_path) {
  const std::string path = csv_path + ".plot.py";
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw InputError("cannot open '" + path + "'");
  std::fprintf(f,
               "#!/usr/bin/env python3\n"
               "# generic companion plot for %s\n"
               "import csv\n"
               "import matplotlib.pyplot as plt\n\n"
               "rows = [r for r in csv.reader(open(%s))\n"
               "        if r and not r[0].startswith('#')]\n"
               "header, data = rows[0], [[float(x) for x in r] for r in rows[1:]]\n"
               "axis = [r[0] for r in data]\n"
               "for j, name in enumerate(header[1:], start=1):\n"
               "    if name.endswith('_se'):\n"
               "        continue\n"
               "    plt.plot(axis, [r[j] for r in data], label=name)\n"
               "plt.xlabel(header[0])\n"
               "plt.yscale('log' if any(n.startswith('sop') for n in header[1:]) else 'linear')\n"
               "plt.legend(fontsize=7)\n"
               "plt.grid(True, which='both', alpha=0.3)\n"
               "plt.savefig(%s + '.png', dpi=150)\n",
               csv_path.c_str(), ("'" + csv_path + "'").c_str(),
               ("'" + csv_path + "'").c_str());
  std::fclose(f);
  std::fprintf(stderr, "wrote plotting script %s\n", path.c_str());
  (void)table;
}

void emit_table(const irsn_table* table, const std::string& out_path, bool plot_script) {
  if (!out_path.empty()) {
    check(irsn_table_write_csv(table, out_path.c_str()));
    std::fprintf(stderr, "wrote %zu rows x %zu cols to %s\n", irsn_table_rows(table),
                 irsn_table_cols(table), out_path.c_str());
    if (plot_script) write_plot_script(table, out_path);
    return;
  }
  if (plot_script) throw InputError("--plot-script requires --out");
  size_t len = 0;
  check(irsn_table_to_csv(table, nullptr, 0, &len));
  std::string buf(len + 1, '\0');
  check(irsn_table_to_csv(table, buf.data(), buf.size(), &len));
  std::fwrite(buf.data(), 1, len, stdout);
}

void print_estimate(const char* name, const irsn_estimate& e) {
  std::printf("%-22s %.8g  (se %.3g, trials %" PRIu64 ", seed %" PRIu64 ", eve %s)\n", name,
              e.value, e.std_error, e.trials, e.seed, e.eve_mode ? "mean" : "random");
}

int run(int argc, char** argv) {
  CLI::App app{"irsnoma — secrecy metrics of an IRS-assisted NOMA downlink"};
  app.require_subcommand(1);

  std::string config_path, out_path, values_text = "0:5:50", axis = "rho_db";
  std::string metrics = "sop1,sop2,sop_net";
  std::string eve_mode = "mean", budget = "full", figure_name;
  std::vector<std::string> overrides;
  uint64_t seed = 1, trials = 100000;
  bool preset_trials = true, plot_script = false;

  app.add_option("--config", config_path, "config file (flat key=value)");
  app.add_option("--override", overrides, "config override key=value (repeatable)");
  app.add_option("--seed", seed, "master seed for Monte-Carlo substreams");

  auto* stats = app.add_subcommand("stats", "print the derived channel constants");

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep a parameter and emit a CSV table");
  sweep_cmd->add_option("--axis", axis, "rho_db | rho_e_db | N");
  sweep_cmd->add_option("--values", values_text, "start:step:stop or comma list");
  sweep_cmd->add_option("--metrics", metrics,
                        "comma list: sop1,sop2,sop_net,asc1,asc2,rates,asymptotes,floors,oma");
  sweep_cmd->add_option("--trials", trials, "Monte-Carlo trials per point (0 = analytic only)");
  sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
  sweep_cmd->add_option("--eve-mode", eve_mode, "mean | random");
  sweep_cmd->add_flag("--plot-script", plot_script, "emit a companion plotting script");

  auto* figure = app.add_subcommand("figure", "reproduce a preset sweep (fig2..fig6, fig8)");
  figure->add_option("name", figure_name, "preset name")->required();
  auto* ft = figure->add_option("--trials", trials, "override the preset trial count");
  figure->add_option("--out", out_path, "output CSV path (default stdout)");
  figure->add_flag("--plot-script", plot_script, "emit a companion plotting script");
  figure->callback([&] { preset_trials = ft->count() == 0; });

  auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo estimates at the configured point");
  mc_cmd->add_option("--trials", trials, "number of trials");
  mc_cmd->add_option("--eve-mode", eve_mode, "mean | random");

  auto* validate = app.add_subcommand("validate", "run the built-in validation suite");
  validate->add_option("--budget", budget, "quick | full");
  validate->add_option("--out", out_path, "also write the per-criterion CSV report here");

  // global options (--config/--override/--seed) may follow the subcommand
  for (auto* sub : {stats, sweep_cmd, figure, mc_cmd, validate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitInputError;
  }

  try {
    ConfigPtr cfg = make_config(config_path, overrides);

    if (*stats) {
      irsn_derived d{};
      check(irsn_derived_stats(cfg.get(), &d));
      size_t len = 0;
      check(irsn_config_echo(cfg.get(), nullptr, 0, &len));
      std::string echo(len + 1, '\0');
      check(irsn_config_echo(cfg.get(), echo.data(), echo.size(), &len));
      std::printf("# configuration\n%.*s# derived\n", static_cast<int>(len), echo.c_str());
      std::printf("eps_user2=%.10g\nlambda_user2=%.10g\n", d.eps_user2, d.lambda_user2);
      std::printf("eps_eve=%.10g\nlambda_eve=%.10g\n", d.eps_eve, d.lambda_eve);
      if (d.m_tilde_user2_defined)
        std::printf("m_tilde_user2=%.10g\n", d.m_tilde_user2);
      else
        std::printf("m_tilde_user2=undefined (m1 == m2)\n");
      std::printf("mu=%.10g\nmu2=%.10g\n", d.mu, d.mu2);
      std::printf("mu1_growth_user2=%.10g\nmu1_growth_eve=%.10g\n", d.mu1_growth_user2,
                  d.mu1_growth_eve);
      std::printf("diversity_user1=%g\ndiversity_user2=%g\ndiversity_network=%g\n",
                  d.diversity_user1, d.diversity_user2, d.diversity_network);
      std::printf("slope_user1=%g\nslope_user2=%g\n", d.slope_user1, d.slope_user2);
      std::printf("sop1_floor=%.10g\n", d.sop1_floor);
      return kExitOk;
    }

    if (*sweep_cmd) {
      std::vector<double> values = parse_values(values_text);
      irsn_table* raw = nullptr;
      check(irsn_run_sweep(cfg.get(), axis.c_str(), values.data(), values.size(),
                           metrics.c_str(), trials, seed, eve_mode == "mean" ? 1 : 0, &raw));
      TablePtr table(raw, &irsn_table_free);
      emit_table(table.get(), out_path, plot_script);
      return kExitOk;
    }

    if (*figure) {
      irsn_table* raw = nullptr;
      check(irsn_figure_preset(cfg.get(), figure_name.c_str(), nullptr, 0,
                               preset_trials ? UINT64_MAX : trials, seed, &raw));
      TablePtr table(raw, &irsn_table_free);
      emit_table(table.get(), out_path, plot_script);
      return kExitOk;
    }

    if (*mc_cmd) {
      irsn_estimate sop[3], asc[8];
      check(irsn_mc_sop(cfg.get(), trials, seed, eve_mode == "mean" ? 1 : 0, sop));
      check(irsn_mc_asc(cfg.get(), trials, seed, asc));
      print_estimate("sop1", sop[0]);
      print_estimate("sop2", sop[1]);
      print_estimate("sop_network", sop[2]);
      print_estimate("asc1", asc[0]);
      print_estimate("asc2", asc[1]);
      print_estimate("asc1_diff", asc[2]);
      print_estimate("asc2_diff", asc[3]);
      print_estimate("rate_b1", asc[4]);
      print_estimate("rate_b2", asc[5]);
      print_estimate("rate_e1", asc[6]);
      print_estimate("rate_e2", asc[7]);
      return kExitOk;
    }

    if (*validate) {
      if (budget != "quick" && budget != "full")
        throw InputError("--budget must be quick or full");
      char* report = nullptr;
      int failures = 0;
      check(irsn_validate(cfg.get(), budget == "quick" ? 1 : 0,
                          out_path.empty() ? nullptr : out_path.c_str(), &report,
                          &failures));
      std::fputs(report, stdout);
      irsn_string_free(report);
      return failures == 0 ? kExitOk : kExitValidationFailure;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
