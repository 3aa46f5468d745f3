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
// Parameter sweeps, figure presets and CSV emission. Tables carry their
// full provenance (config echo, seed, trials) as '#' metadata lines, so a
// table re-parsed and re-run reproduces itself bit-identically.

#ifndef IRSNOMA_SWEEP_HPP
#define IRSNOMA_SWEEP_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "montecarlo.hpp"

namespace irsnoma::sweep {

enum class Axis { RhoDb, RhoEDb, NIrs };

const char* axis_name(Axis axis);
Axis axis_from_name(std::string_view name);

struct MetricColumn {
  std::string name;
  std::string method;  // metric method tag
  std::vector<double> values;
};

struct MetricTable {
  std::string axis;
  std::vector<double> axis_values;
  std::vector<MetricColumn> columns;
  std::vector<std::pair<std::string, std::string>> metadata;  // emitted in order

  const MetricColumn* find(std::string_view name) const;
};

// Known metric selectors: sop1, sop2, sop_net, asc1, asc2, rates,
// asymptotes, floors, oma. MC columns appear when mc_trials > 0 (oma
// always needs trials). Values must be sorted ascending.
MetricTable run_sweep(const SystemConfig& cfg, Axis axis, std::span<const double> values,
                      const std::set<std::string>& metrics, uint64_t mc_trials,
                      uint64_t seed, mc::EveMode eve_mode = mc::EveMode::Mean);

inline constexpr uint64_t kPresetDefaultTrials = ~uint64_t{0};

// Presets reproducing the reference sweeps: fig2..fig6 and fig8.
// Overrides are key=value pairs applied to the base config; overriding N
// replaces the preset's curve multiplex where it has one.
MetricTable figure_preset(const SystemConfig& base, const std::string& name,
                          std::span<const std::pair<std::string, std::string>> overrides,
                          uint64_t mc_trials = kPresetDefaultTrials, uint64_t seed = 1);

std::string to_csv(const MetricTable& table);
void write_csv(const MetricTable& table, const std::string& path);

// Provenance parsed back from a sweep table's metadata; rerun() of the
// returned spec reproduces the table.
struct SweepSpec {
  SystemConfig cfg;
  Axis axis = Axis::RhoDb;
  std::vector<double> values;
  std::set<std::string> metrics;
  uint64_t mc_trials = 0;
  uint64_t seed = 0;
  mc::EveMode eve_mode = mc::EveMode::Mean;
};

SweepSpec parse_sweep_csv(const std::string& csv_text);

}  // namespace irsnoma::sweep

#endif  // IRSNOMA_SWEEP_HPP
