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

#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace irsnoma::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kItMax = 20000;
constexpr double kSqrt2 = 1.4142135623730950488;

void check_series_control(const SeriesControl& ctrl) {
  if (!(ctrl.rel_tol > 0.0)) throw std::domain_error("SeriesControl: rel_tol must be > 0");
  if (ctrl.max_terms < 1) throw std::domain_error("SeriesControl: max_terms must be >= 1");
}

}  // namespace

// Lanczos, g = 607/128; Godfrey's coefficient set, ~1e-15 relative accuracy
// for real x > 0 (Press et al., Numerical Recipes, 3rd ed.).
double log_gamma(double x) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
      0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  double y = x;
  double tmp = x + 5.24218750000000000;  // x + g + 1/2
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

namespace {

// P(s, x) by series, valid for x < s + 1.
double gamma_p_series(double s, double x) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  for (int n = 0; n < kItMax; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps)
      return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
  }
  throw ConvergenceError("lower_incomplete_gamma: series did not converge");
}

// Q(s, x) by modified-Lentz continued fraction, valid for x >= s + 1.
double gamma_q_cf(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kItMax; ++i) {
    double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps)
      return h * std::exp(-x + s * std::log(x) - log_gamma(s));
  }
  throw ConvergenceError("lower_incomplete_gamma: continued fraction did not converge");
}

void check_gamma_args(double s, double x) {
  if (!(s > 0.0)) throw std::domain_error("lower_incomplete_gamma: requires s > 0");
  if (!(x >= 0.0)) throw std::domain_error("lower_incomplete_gamma: requires x >= 0");
}

}  // namespace

double gamma_p(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  return x < s + 1.0 ? gamma_p_series(s, x) : 1.0 - gamma_q_cf(s, x);
}

double gamma_q(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 1.0;
  return x < s + 1.0 ? 1.0 - gamma_p_series(s, x) : gamma_q_cf(s, x);
}

IncompleteGamma lower_incomplete_gamma(double s, double x) {
  double p = gamma_p(s, x);
  double lower = p > 0.0 ? std::exp(std::log(p) + log_gamma(s)) : 0.0;
  return {lower, p};
}

double marcum_q_half(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0))
    throw std::domain_error("marcum_q_half: requires a >= 0 and b >= 0");
  return 0.5 * (std::erfc((b - a) / kSqrt2) + std::erfc((b + a) / kSqrt2));
}

double hyp2f1_at_minus1(double a, double b, double c, const SeriesControl& ctrl) {
  if (!(c > 0.0)) throw std::domain_error("hyp2f1_at_minus1: requires c > 0");
  check_series_control(ctrl);
  if (a == 0.0 || b == 0.0) return 1.0;
  // Pfaff keeps all series parameters positive for the Lemma-3 constants:
  // (a, c-b; c) with c-b = 2*m_d > 0.
  const double bb = c - b;
  double term = 1.0;
  double sum = 1.0;
  int small_streak = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    term *= (a + n) * (bb + n) / ((c + n) * (n + 1.0)) * 0.5;
    sum += term;
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(sum)) {
      if (++small_streak >= 2) return std::exp2(-a) * sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("hyp2f1_at_minus1: series did not converge within max_terms");
}

double e1_exp_scaled(double x) {
  if (!(x > 0.0)) throw std::domain_error("e1_exp_scaled: requires x > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{n>=1} (-1)^{n+1} x^n / (n n!)
    double sum = -kEulerGamma - std::log(x);
    double pow_term = 1.0;  // (-x)^n / n!
    for (int n = 1; n <= 100; ++n) {
      pow_term *= -x / n;
      double del = -pow_term / n;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return std::exp(x) * sum;
  }
  // Lentz continued fraction for e^x E1(x) directly (no exp underflow).
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kItMax; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw ConvergenceError("exp_integral_ei: continued fraction did not converge");
}

double exp_integral_ei(double x) {
  if (!(x < 0.0)) throw std::domain_error("exp_integral_ei: requires x < 0");
  double y = -x;
  return -(e1_exp_scaled(y) * std::exp(-y));
}

double QuadratureRule::scaled_weight(int i) const {
  if (kind == QuadratureKind::GaussLaguerre) return std::exp(log_weights[i] + nodes[i]);
  return weights[i];
}

namespace {

// Symmetric tridiagonal QL with implicit shifts, eigenvalues only
// (Press et al.). d holds the diagonal, e[1..n-1] the sub-diagonal.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw ConvergenceError("gauss_laguerre_rule: eigenvalue iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
}

// (L_k(x), L_{k-1}(x)) scaled by 2^exp2 to avoid overflow for large k, x.
struct LaguerrePair {
  double lk;
  double lkm1;
  long exp2;
};

LaguerrePair laguerre_pair(int k, double x) {
  double l0 = 1.0;        // L_0
  double l1 = 1.0 - x;    // L_1
  long ex = 0;
  for (int j = 1; j < k; ++j) {
    double l2 = ((2.0 * j + 1.0 - x) * l1 - j * l0) / (j + 1.0);
    l0 = l1;
    l1 = l2;
    double m = std::max(std::fabs(l0), std::fabs(l1));
    if (m > 0x1p+500) {
      l0 = std::ldexp(l0, -500);
      l1 = std::ldexp(l1, -500);
      ex += 500;
    } else if (m > 0.0 && m < 0x1p-500) {
      l0 = std::ldexp(l0, 500);
      l1 = std::ldexp(l1, 500);
      ex -= 500;
    }
  }
  return {l1, l0, ex};
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int n) {
  if (n < 1 || n > 512)
    throw std::domain_error("gauss_laguerre_rule: order must be in [1, 512]");
  // Jacobi matrix of the monic Laguerre recurrence: diag 2k+1, sub-diag k.
  std::vector<double> d(n), e(n);
  for (int k = 0; k < n; ++k) {
    d[k] = 2.0 * k + 1.0;
    e[k] = static_cast<double>(k);
  }
  tridiagonal_eigenvalues(d, e);

  QuadratureRule rule;
  rule.kind = QuadratureKind::GaussLaguerre;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);
  const double log_np1 = std::log(n + 1.0);
  for (int l = 0; l < n; ++l) {
    double x = d[l];
    // Two Newton steps on L_n; L_n'(x) = n (L_n(x) - L_{n-1}(x)) / x.
    for (int it = 0; it < 2 && n > 1; ++it) {
      LaguerrePair p = laguerre_pair(n, x);
      double deriv = n * (p.lk - p.lkm1) / x;
      if (deriv != 0.0) x -= p.lk / deriv;
    }
    if (n == 1) x = 1.0;
    rule.nodes[l] = x;
    LaguerrePair q = laguerre_pair(n + 1, x);
    double log_lnp1 = std::log(std::fabs(q.lk)) + q.exp2 * kLn2;
    rule.log_weights[l] = std::log(x) - 2.0 * log_np1 - 2.0 * log_lnp1;
    rule.weights[l] = std::exp(rule.log_weights[l]);
  }
  return rule;
}

QuadratureRule chebyshev_gauss_rule(int n) {
  if (n < 1) throw std::domain_error("chebyshev_gauss_rule: order must be >= 1");
  QuadratureRule rule;
  rule.kind = QuadratureKind::ChebyshevGauss;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);
  const double w = M_PI / n;
  const double logw = std::log(w);
  for (int p = 1; p <= n; ++p) {
    rule.nodes[p - 1] = std::cos((2.0 * p - 1.0) * M_PI / (2.0 * n));
    rule.weights[p - 1] = w;
    rule.log_weights[p - 1] = logw;
  }
  return rule;
}

namespace {

template <typename LogWeight>
double mixture_sum(double lambda, const std::function<double(int)>& term,
                   const SeriesControl& ctrl, LogWeight&& log_weight, bool fuse_term_log) {
  if (!(lambda >= 0.0))
    throw std::domain_error("poisson_half_mixture_sum: requires lambda >= 0");
  check_series_control(ctrl);
  const double mode = 0.5 * lambda;
  double sum = 0.0;
  int small_streak = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    double lw = log_weight(k);
    double t = term(k);
    double contribution;
    if (fuse_term_log) {
      contribution =
          t == 0.0 ? 0.0 : std::copysign(std::exp(lw + std::log(std::fabs(t))), t);
    } else {
      contribution = std::exp(lw) * t;
    }
    sum += contribution;
    if (lambda == 0.0) return sum;  // only k = 0 has nonzero weight
    if (k > mode && std::fabs(contribution) <= ctrl.rel_tol * std::fabs(sum)) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("poisson_half_mixture_sum: did not converge within max_terms");
}

}  // namespace

double poisson_half_mixture_sum(double lambda, const std::function<double(int)>& term,
                                const SeriesControl& ctrl) {
  const double log_lambda = lambda > 0.0 ? std::log(lambda) : 0.0;
  auto log_weight = [&](int k) {
    double lw = -0.5 * lambda - log_gamma(k + 0.5) - log_gamma(k + 1.0) - k * kLn2;
    if (k > 0) lw += k * log_lambda;
    return lw;
  };
  return mixture_sum(lambda, term, ctrl, log_weight, /*fuse_term_log=*/true);
}

double poisson_half_mixture_sum_regularized(double lambda,
                                            const std::function<double(int)>& normalized_term,
                                            const SeriesControl& ctrl) {
  const double log_half = lambda > 0.0 ? std::log(0.5 * lambda) : 0.0;
  auto log_weight = [&](int k) {
    double lw = -0.5 * lambda - log_gamma(k + 1.0);
    if (k > 0) lw += k * log_half;
    return lw;
  };
  return mixture_sum(lambda, normalized_term, ctrl, log_weight, /*fuse_term_log=*/false);
}

}  // namespace irsnoma::specfun
