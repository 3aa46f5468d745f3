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
// Self-contained special functions and quadrature rules. Everything here is
// a pure function; QuadratureRule values are immutable after construction.

#ifndef IRSNOMA_SPECFUN_HPP
#define IRSNOMA_SPECFUN_HPP

#include <functional>
#include <vector>

#include "common.hpp"

namespace irsnoma::specfun {

// Truncation control for the infinite series in this library.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 500;
};

// ln Gamma(x) for x > 0. Lanczos approximation, g = 607/128, 14 coefficients.
double log_gamma(double x);

struct IncompleteGamma {
  double lower;        // gamma(s, x), unregularized
  double regularized;  // P(s, x) = gamma(s, x) / Gamma(s)
};

// Lower incomplete gamma. Series for x < s + 1, continued fraction of the
// upper function otherwise.
IncompleteGamma lower_incomplete_gamma(double s, double x);
double gamma_p(double s, double x);  // regularized lower, in [0, 1]
double gamma_q(double s, double x);  // regularized upper, 1 - P

// Marcum Q of order 1/2. Closed form
//   Q_{1/2}(a, b) = [erfc((b-a)/sqrt 2) + erfc((b+a)/sqrt 2)] / 2,
// the survival function of a noncentral chi-square with one degree of
// freedom and noncentrality a^2, evaluated at b^2.
double marcum_q_half(double a, double b);

// 2F1(a, b; c; -1) via the Pfaff transformation to argument 1/2:
//   2F1(a,b;c;-1) = 2^{-a} 2F1(a, c-b; c; 1/2).
// The transformed series has positive terms and ratio -> 1/2.
double hyp2f1_at_minus1(double a, double b, double c, const SeriesControl& ctrl = {});

// Ei(x) for x < 0; equals -E1(-x). Series for |x| <= 1, Lentz continued
// fraction otherwise.
double exp_integral_ei(double x);

// e^x E1(x) for x > 0. Overflow-free companion of exp_integral_ei used by
// the ergodic-rate expressions.
double e1_exp_scaled(double x);

enum class QuadratureKind { GaussLaguerre, ChebyshevGauss };

struct QuadratureRule {
  QuadratureKind kind;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;  // ln w_i; survives underflow of w_i

  // w_i * e^{x_i} for Gauss-Laguerre (the plain-integral weight), w_i for
  // Chebyshev-Gauss. Computed from log_weights so huge nodes stay finite.
  double scaled_weight(int i) const;
};

// Gauss-Laguerre rule: nodes are the roots of L_n, from the Golub-Welsch
// symmetric-tridiagonal eigenproblem with Newton refinement; weights
// w_l = x_l / ((n+1)^2 [L_{n+1}(x_l)]^2).
QuadratureRule gauss_laguerre_rule(int n);

// Chebyshev-Gauss rule: t_p = cos((2p-1)pi/(2n)), p = 1..n, weights pi/n.
QuadratureRule chebyshev_gauss_rule(int n);

// Truncated sum  e^{-lam/2} sum_k lam^k / (k! 2^k Gamma(k+1/2)) * term(k).
// Weights are formed in log space; truncation is on the weighted
// contribution once past the mode k > lam/2.
double poisson_half_mixture_sum(double lambda, const std::function<double(int)>& term,
                                const SeriesControl& ctrl = {});

// Same mixture with Poisson(lam/2) pmf weights and kernels already divided
// by Gamma(k+1/2) (e.g. regularized incomplete gammas). This is the form
// the closed-form evaluators use; it stays finite for large lambda where
// raw Gamma(k+1/2) kernels overflow.
double poisson_half_mixture_sum_regularized(double lambda,
                                            const std::function<double(int)>& normalized_term,
                                            const SeriesControl& ctrl = {});

}  // namespace irsnoma::specfun

#endif  // IRSNOMA_SPECFUN_HPP
