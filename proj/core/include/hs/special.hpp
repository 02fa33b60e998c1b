#pragma once

#include "hs/params.hpp"

namespace hs {

// Gamma function for x > 0 (Lanczos approximation, g = 7, 9 coefficients).
// Relative error below 1e-13 on [0.5, 50].
double gamma_fn(double x);

// log(Gamma(x)) for x > 0; safe where Gamma itself would overflow.
double log_gamma(double x);

// Sharp constant mu* = S_{n+1,2,beta} of the half-space inequality, p = 2.
// Only beta in {1, 2} has a closed form; anything else throws
// NoClosedFormError (general beta is characterized by an ODE only).
double sharp_mu_star(int n, double beta);

// C*_{n+1,2,beta}, the constant on the right-hand side of the inequality;
// satisfies C* * mu* = 1.  Computed from its own Gamma formula, not as a
// reciprocal, so the product is a meaningful consistency check.
double sharp_constant_halfspace(int n, double beta);

// Sharp constant mu_{n+1,beta} of the punctured whole space R^{n+1}\{0\}
// with weight |x|^a.  Degenerate cases: n = 1 gives 0 for every beta >= 0;
// beta = 0 gives the Hardy constant ((n-1)/2)^2.
//
// Note: one Gamma argument here is Gamma(2(n+beta+1)/beta), which makes the
// formula equal the Rayleigh quotient of the known extremal
// u = C/(A + |x|^{beta(n-1)/(n+1)})^{(n+1)/beta} (checked in tests by direct
// quadrature) and reproduces the documented comparison thresholds.
double mu_punctured_space(int n, double beta);

// Sharp constant C_beta of the one-dimensional (Bliss) inequality
//   ( int_0^inf t^{-2-beta} |u|^{2(1+beta)} )^{1/(1+beta)} <= C_beta int |u'|^2.
double bliss_constant(double beta);

enum class HardyVariant { whole_space, half_space };

// Classical Hardy constants: (p/(n+1-p))^p on R^{n+1} with weight |x|^{-p},
// (p/(p-1))^p on the half-space with weight t^{-p}.
double hardy_constant(int n, double p, HardyVariant variant);

enum class Ordering { below, above };

// Whether mu_punctured_space(n, beta) < sharp_mu_star(n, beta).
// Flips from below to above between n = 3/4 (beta = 1) and n = 6/7 (beta = 2).
Ordering compare_star(double beta, int n);

}  // namespace hs
