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

#include "oracles.hpp"

#include <cmath>
#include <vector>

#include "common.hpp"
#include "specfun.hpp"

namespace irsnoma::oracles {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double noncentral_chi2_df1_survival(double a, double b) {
  if (b == 0.0) return 1.0;
  auto density = [a](double v) {
    return std::sqrt(2.0 / M_PI) * std::exp(-0.5 * (v * v + a * a)) * std::cosh(a * v);
  };
  double cdf = adaptive_simpson(density, 0.0, b, 1e-13);
  return 1.0 - cdf;
}

double marcum_q_half_series(double a, double b) {
  const double half = 0.5 * a * a;
  double logw = -half;  // ln Poisson pmf at k = 0
  double sum = 0.0;
  for (int k = 0; k < 4000; ++k) {
    if (k > 0) logw += std::log(half) - std::log(static_cast<double>(k));
    double c = std::exp(logw) * specfun::gamma_q(k + 0.5, 0.5 * b * b);
    sum += c;
    if (k > half && c <= 1e-16 * sum) break;
  }
  return sum;
}

double hyp2f1_minus1_direct(double a, double b, double c) {
  // Terms t_n = (a)_n (b)_n / ((c)_n n!) (-1)^n. For b <= 0 the early
  // Pochhammer factors flip sign; sum that head directly and accelerate
  // only the strictly-alternating tail.
  int head_len = 0;
  if (b < 0.0) head_len = static_cast<int>(std::ceil(1.0 - b)) + 1;
  if (a < 0.0) head_len = std::max(head_len, static_cast<int>(std::ceil(1.0 - a)) + 1);

  double term = 1.0;
  double head = 0.0;
  int n = 0;
  for (; n < head_len; ++n) {
    head += term;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * -1.0;
  }
  constexpr int kDepth = 64;
  std::vector<double> partial(kDepth + 1);
  double run = 0.0;
  for (int j = 0; j <= kDepth; ++j) {
    run += term;
    partial[j] = run;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * -1.0;
    ++n;
  }
  // Euler transform: repeated averaging of the partial sums.
  for (int len = kDepth; len >= 1; --len)
    for (int j = 0; j < len; ++j) partial[j] = 0.5 * (partial[j] + partial[j + 1]);
  return head + partial[0];
}

double cascaded_pair_cdf(double u, double m_g, double m_h) {
  if (u <= 0.0) return 0.0;
  const double log_norm = m_h * std::log(m_h) - specfun::log_gamma(m_h);
  auto integrand = [&](double y) {
    if (y <= 0.0) return 0.0;
    double fh = 2.0 * std::exp(log_norm + (2.0 * m_h - 1.0) * std::log(y) - m_h * y * y);
    double x = u / y;
    return fh * specfun::gamma_p(m_g, m_g * x * x);
  };
  return adaptive_simpson(integrand, 0.0, 8.0, 1e-12);
}

}  // namespace irsnoma::oracles
