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
// The built-in validation suite: eleven cross-checks of the closed forms
// against independent oracles and seeded Monte-Carlo runs. `validate`
// (CLI) and the acceptance test binary both run exactly this.

#ifndef IRSNOMA_VALIDATE_HPP
#define IRSNOMA_VALIDATE_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace irsnoma::validate {

enum class Budget { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<CriterionResult> results;
  int failures() const;
  std::string text() const;  // one pass/fail line per criterion
  std::string csv() const;
};

// Runs with the given config as the baseline; criteria override the
// parameters they pin. Quick shrinks the trial budgets (~20x) and doubles
// the statistical tolerances.
ValidationReport run_validation(const SystemConfig& base, Budget budget);

}  // namespace irsnoma::validate

#endif  // IRSNOMA_VALIDATE_HPP
