#pragma once

#include <limits>

#include "hs/errors.hpp"

namespace hs {

// The exponent triple (n, p, beta) of the weighted inequality
//
//   ( int_Omega delta^a |u|^q )^theta  <=  C int_Omega |grad u|^p
//
// together with the exponents it determines.  The ambient dimension is
// n + 1 (coordinates (y, t) with y in R^n on the half-space).
struct Params {
  int n = 1;
  double p = 2.0;
  double beta = 1.0;

  // weight exponent: a = -p + (n+1-p)/(n+1) * beta, always in [-p, 0] for p < n+1
  double a() const { return -p + (n + 1 - p) / (n + 1.0) * beta; }
  // integrand exponent: q = p + p*beta/(n+1)
  double q() const { return p + p * beta / (n + 1.0); }
  // outer power: theta = (n+1)/(n+beta+1)
  double theta() const { return (n + 1.0) / (n + beta + 1.0); }

  // Largest admissible beta: p(n+1)/(n+1-p), unbounded when p = n+1.
  static double beta_max(int n, double p) {
    if (p >= n + 1.0) return std::numeric_limits<double>::infinity();
    return p * (n + 1.0) / (n + 1.0 - p);
  }

  // Open range where equality can be attained (p = 2): beta in
  // (0, 2(n+1)/(n-1)) for n >= 2, beta > 0 for n = 1.
  static double beta_strict_max(int n) {
    if (n <= 1) return std::numeric_limits<double>::infinity();
    return 2.0 * (n + 1.0) / (n - 1.0);
  }

  static Params make(int n, double p, double beta) {
    if (n < 0) throw DomainError("Params: n must be >= 0");
    if (!(p > 1.0) || p > n + 1.0)
      throw DomainError("Params: p must lie in (1, n+1]");
    if (beta < 0.0 || beta > beta_max(n, p))
      throw DomainError("Params: beta outside [0, p(n+1)/(n+1-p)]");
    return Params{n, p, beta};
  }
};

}  // namespace hs
