#pragma once

#include <string>
#include <vector>

#include "hs/domains.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"
#include "hs/test_function.hpp"

namespace hs {

// Which families the minimizer searches.
enum class TrialSpace { radial_profile, parametric, both };

struct MinimizeOptions {
  TrialSpace trial = TrialSpace::both;
  int budget = 10000;  // quotient evaluations, all trials combined
  unsigned long seed = 7;
  int resolution = 128;
  double truncation = kAutoTruncation;  // unbounded domains only
  int knots = 50;                       // radial profile resolution
};

struct MuEstimate {
  std::string domain;  // Domain::describe() of the target
  int n = 1;
  double beta = 1.0;
  double J = 0.0;          // best quotient found
  double est_error = 0.0;  // quadrature error estimate at the witness
  double upper_bound = 0.0;  // J + est_error: a defensible bound on mu
  std::string witness;       // JSON description, replayable
  int evaluations = 0;
  bool converged = false;  // optimizer stopped on its own criterion
  unsigned long seed = 0;
  int resolution = 0;
  double truncation = 0.0;  // grid truncation actually used
};

// Direct minimization of the Rayleigh quotient over positive trial
// functions: projected gradient descent on piecewise-linear radial profiles
// plus Nelder-Mead over parametric families fitted to the domain (cutoff
// closed-form profiles where available, power bumps otherwise).
MuEstimate minimize(const Domain& domain, const Params& params,
                    MinimizeOptions options = {});

// Rebuild the witness function from its JSON description.
TestFunction replay_witness(const std::string& witness_json);

struct Certificate {
  bool success = false;  // upper_bound < mu_star; false means inconclusive,
                         // never a claim that mu(Omega) >= mu_star
  double mu_star = 0.0;
  double margin = 0.0;  // mu_star - upper_bound
  MuEstimate estimate;
};

// Certify mu(Omega) < mu* by exhibiting a witness whose quotient plus its
// quadrature error estimate clears the bar.  beta in {1, 2} (closed-form
// mu* required).
Certificate certify_below_star(const Domain& domain, int n, double beta,
                               MinimizeOptions options = {});

// Quotients of the boundary-concentrating family on the ball: the inverted
// image of u_lambda(y,t) = lambda^{(n-1)/2} u(lambda y, lambda t) for the
// closed-form half-space extremal u.  Decreases toward mu* as lambda grows.
std::vector<double> concentration_sequence(int n, double beta,
                                           const std::vector<double>& lambdas,
                                           int resolution = 256);

// Log-radial ramp family on the punctured plane (n = 1), evaluated in log
// coordinates so huge radii cost nothing: eta = 1 on [-R, R], linear to 0 at
// +-2R in tau = log|x|.  Demonstrates that the punctured-plane constant is 0.
struct DegeneratePoint {
  double R = 0.0;
  double J = 0.0;
  double bound = 0.0;  // a-priori bound, proportional to R^{-(4+beta)/(2+beta)}
};
std::vector<DegeneratePoint> degenerate_sequence_2d(
    double beta, const std::vector<double>& R_list);

// Two-sided check on a punctured ball: the best witness should land between
// the harmonic-mean lower bound and the min upper bound.
struct SandwichReport {
  double lower = 0.0;
  double upper = 0.0;
  bool witness_within = false;
  MuEstimate estimate;
};
SandwichReport sandwich_check(const Domain& punctured_ball_domain, int n,
                              double beta, MinimizeOptions options = {});

}  // namespace hs
