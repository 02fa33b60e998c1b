#pragma once

#include <utility>

#include "hs/params.hpp"
#include "hs/quadrature.hpp"
#include "hs/test_function.hpp"

namespace hs {

struct RayleighReport {
  double numerator = 0.0;          // int |grad u|^p
  double denominator_inner = 0.0;  // int delta^a |u|^q
  double J = 0.0;                  // numerator / denominator^theta
  double est_error = 0.0;          // self-convergence + tail estimate
};

// sum of weights * t^{weight_exp} * |grad u|^p  (t = last coordinate).
double dirichlet_energy(const TestFunction& u, const QuadratureGrid& grid,
                        double p, double weight_exp = 0.0);

// sum of weights * distance(x)^a * |u|^q.
double weighted_norm(const TestFunction& u, const QuadratureGrid& grid,
                     double a, double q, const Domain& domain);

// The quotient without an error estimate (cheap; used inside optimizers).
struct QuotientParts {
  double numerator = 0.0;
  double denominator_inner = 0.0;
  double J = 0.0;
};
QuotientParts rayleigh_on_grid(const TestFunction& u, const Domain& domain,
                               const Params& params,
                               const QuadratureGrid& grid);

// Full report; est_error is |J(grid) - J(coarsened grid)| plus the grid's
// tail bound times J.
RayleighReport rayleigh(const TestFunction& u, const Domain& domain,
                        const Params& params, const QuadratureGrid& grid);

// J on (Omega, u) and on (R Omega + x0, u((.-x0)/R)) via the pushed-forward
// grid; the two agree to round-off because the transform is an exact change
// of variables node by node.
std::pair<double, double> dilation_check(const TestFunction& u,
                                         const Domain& domain,
                                         const Params& params, double R,
                                         Point x0, int resolution = 64);

// margin = (1/|k|) int t^k |grad u|  -  int t^{k-1} |u|   (>= 0 in theory)
double check_lemma21(const TestFunction& u, double k,
                     const QuadratureGrid& grid);

// margin = 2^{1/n} int t^k |grad u|
//          - ( int t^{(n+1)k/n} |u|^{(n+1)/n} )^{n/(n+1)}
double check_lemma22(const TestFunction& u, double k,
                     const QuadratureGrid& grid);

// Exponent bundle for the Gagliardo-Nirenberg-type checker.  The generic
// branch is
//   ( int t^l |u|^{p(n+l+1)/e} )^{e/(n+l+1)} <= C int t^{pk-(p-1)l} |grad u|^p
// with e = pk - (p-1)l + n+1-p; p = 1 recovers the first-order form.  The
// k = -n, l = -n-1 branch uses exponent s on the left instead.
struct GnSpec {
  double k = 1.0;
  double l = 0.0;
  double p = 1.0;
  double s = 1.0;          // only for the k = -n, l = -n-1 branch
  double c_est = 0.0;      // 0: report the ratio only, no margin
  void validate(int n) const;
};

struct GgnResult {
  double lhs = 0.0;    // left side, outer power applied
  double rhs = 0.0;    // right side without C
  double ratio = 0.0;  // lhs / rhs (finite iff the inequality has content)
  double margin = 0.0; // c_est * rhs - lhs, NaN when c_est == 0
};

GgnResult check_ggn(const TestFunction& u, const GnSpec& spec,
                    const QuadratureGrid& grid);

// margin of the gamma-shifted second-order inequality at alpha = 2:
//   S^{-1} [ int ( t^{2-gamma} |grad u|^2 - (gamma(gamma-2)/4) t^{-gamma} u^2 ) ]
//   - ( int t^{beta - gamma(n+beta+1)/(n+1)} |u|^{2(n+beta+1)/(n+1)} )^{(n+1)/(n+beta+1)}
double check_ggn_gamma(const TestFunction& u, int n, double beta, double gamma,
                       const QuadratureGrid& grid);

// Gaps of the half-space <-> ball integral identities for psi = Kelvin
// pullback of u: |energy difference| and |weighted-norm difference|, along
// with the half-space reference values for relative comparisons.
struct KelvinGaps {
  double energy_gap = 0.0;
  double norm_gap = 0.0;
  double energy_halfspace = 0.0;
  double norm_halfspace = 0.0;
};

KelvinGaps kelvin_identity_check(const TestFunction& u, const Params& params,
                                 const QuadratureGrid& halfspace_grid,
                                 const QuadratureGrid& ball_grid);

}  // namespace hs
