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

#ifndef IRSNOMA_CONFIG_HPP
#define IRSNOMA_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "specfun.hpp"

namespace irsnoma {

enum class Sop2RegimeChoice { Auto, Low, High };

// Full scenario parameterization. Defaults are the reference deployment:
// a1/a2 = 0.2/0.8, m1 = 3, m2 = m3 = 1, d1 = 100 m, dB2 = 10 m, dE = 50 m,
// dB1 = 20 m, reflected-path exponents 2.5, direct-path exponent 3.5,
// R1 = R2 = 0.1 bit/s/Hz (100 kbps over 1 MHz), beta = 1, u1 = u2 = 100.
struct SystemConfig {
  double a1 = 0.2, a2 = 0.8;  // NOMA power fractions, a1 + a2 = 1, a1 < a2
  int n = 1;                  // IRS element count
  double m1 = 3.0, m2 = 1.0, m3 = 1.0;  // Nakagami shapes: BS-IRS, IRS-user2, IRS-Eve
  double d1 = 100.0, d_b1 = 20.0, d_b2 = 10.0, d_e = 50.0;          // meters
  double alpha1 = 2.5, alpha_b1 = 3.5, alpha_b2 = 2.5, alpha_e = 2.5;
  double rho_db = 30.0;    // legitimate transmit SNR [dB]
  double rho_e_db = 10.0;  // Eve transmit SNR [dB]
  double r1 = 0.1, r2 = 0.1;      // secrecy rate targets [bit/s/Hz]
  double bandwidth_hz = 1e6;
  double beta = 1.0;              // IRS amplitude reflection coefficient
  int u1 = 100, u2 = 100;         // Gauss-Laguerre / Chebyshev-Gauss orders
  specfun::SeriesControl series;
  Sop2RegimeChoice sop2_regime = Sop2RegimeChoice::Auto;
  bool strict_paper = false;  // reproduce printed forms of the C2^b / asymptotic-rate expressions

  // dBm entry mode; applied by finalize() and cleared.
  std::optional<double> tx_power_dbm;
  std::optional<double> rate_target_bps;

  // Set once a2 is assigned explicitly; until then an a1 assignment keeps
  // the pair complementary (a2 = 1 - a1).
  bool a2_explicit = false;

  void finalize();         // resolve dBm / absolute-rate entry modes
  void validate() const;   // throws ValidationError naming the violated invariant
};

// Noise power sigma^2 = -174 + 10 log10(BW) [dBm].
double noise_power_dbm(double bandwidth_hz);

// Flat key=value text, '#' comments. Unknown keys and malformed numbers are
// ParseErrors carrying the line number; invariant violations are
// ValidationErrors. The returned config is finalized and validated.
SystemConfig parse_config(const std::string& path);
SystemConfig parse_config_text(std::string_view text, const SystemConfig& base = {});

// Apply one key=value pair (CLI --override). Does not finalize.
void apply_key_value(SystemConfig& cfg, std::string_view key, std::string_view value,
                     int line = 0);

// Canonical key=value serialization of a finalized config; parsing it back
// reproduces the config exactly.
std::string config_echo(const SystemConfig& cfg);

// Read one field by canonical key (numeric echo of apply_key_value).
double config_get(const SystemConfig& cfg, std::string_view key);

}  // namespace irsnoma

#endif  // IRSNOMA_CONFIG_HPP
