#pragma once

#include <vector>

#include "hs/test_function.hpp"

namespace hs {

// The closed-form extremal families:
//   beta1_u:   u = C t / ((A+t)^2 + |y-y0|^2)^{(n+1)/2}   (half-space, beta=1)
//   beta2_u:   u = C t / (A^2 + t^2 + |y-y0|^2)^{(n+1)/2} (half-space, beta=2)
//   beta1_v:   v = C (A / ((A+t)^2 + |y-y0|^2))^{(n+1)/2} (the u/t side)
//   beta2_v:   v = C (A / (A^2 + t^2 + |y-y0|^2))^{(n+1)/2}
//   punctured: u = C / (A + |x|^{beta(n-1)/(n+1)})^{(n+1)/beta}  (R^{n+1}\{0})
//   bliss:     u = C t / (1 + A t^beta)^{1/beta}               (half-line)
enum class ExtremalFamily {
  beta1_u,
  beta2_u,
  beta1_v,
  beta2_v,
  punctured,
  bliss
};

struct ExtremalParams {
  double A = 1.0;
  double C = 1.0;
  Point y0;  // center in R^n; empty means the origin
  ExtremalFamily family = ExtremalFamily::beta1_u;
};

// Closed-form value + analytic gradient.  `beta` is only consulted by the
// punctured and bliss families (the others have it baked into their name).
// The punctured family requires n >= 2 and beta in (0, 2(n+1)/(n-1)].
TestFunction make_extremal(ExtremalFamily family, const ExtremalParams& params,
                           int n, double beta = 0.0);

// Analytic Laplacian of the beta1_u / beta2_u families (closed form; both
// reduce to a single power of the denominator).
double extremal_laplacian(ExtremalFamily family, const ExtremalParams& params,
                          int n, std::span<const double> x);

// max over sample points of
//   |Delta u + t^{-2+(n-1)beta/(n+1)} u^{1+2beta/(n+1)}| / local scale.
// Vanishes (to round-off) when C carries the normalization from
// normalize_for_el.
double el_residual(ExtremalFamily family, const ExtremalParams& params, int n,
                   const std::vector<Point>& sample_points);

// The C > 0 for which the Euler-Lagrange equation holds with no extra
// multiplicative constant; solved from the scalar power relation at one
// interior point.
ExtremalParams normalize_for_el(ExtremalFamily family, int n, double beta,
                                double A = 1.0, Point y0 = {});

}  // namespace hs
