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
// Independent verification routes used by the validation suite and the
// tests. These deliberately avoid the closed-form code paths they check:
// plain quadrature, direct series summation, and elementary identities.

#ifndef IRSNOMA_ORACLES_HPP
#define IRSNOMA_ORACLES_HPP

#include <functional>

namespace irsnoma::oracles {

// Recursive adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

// Survival function of a noncentral chi-square with 1 dof and
// noncentrality delta = a^2, at b^2, by direct quadrature of the density
// e^{-(v^2+a^2)/2} cosh(a v) sqrt(2/pi) over [0, b].
double noncentral_chi2_df1_survival(double a, double b);

// Marcum Q_{1/2} through its series definition
// sum_k Poisson(k; a^2/2) Q(k+1/2, b^2/2).
double marcum_q_half_series(double a, double b);

// 2F1(a, b; c; -1) by direct summation of the defining alternating series
// with Euler (repeated-averaging) acceleration of the tail.
double hyp2f1_minus1_direct(double a, double b, double c);

// P(|g||h| <= u) for independent unit-power Nakagami magnitudes with
// shapes m_g and m_h, by quadrature over the h marginal.
double cascaded_pair_cdf(double u, double m_g, double m_h);

}  // namespace irsnoma::oracles

#endif  // IRSNOMA_ORACLES_HPP
