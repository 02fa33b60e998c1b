#include <cmath>

#include "doctest.h"
#include "hs/errors.hpp"
#include "hs/ode.hpp"

using namespace hs;

namespace {

std::vector<double> sample_radii(const OdeSolution& sol, int count) {
  std::vector<double> out;
  double hi = sol.r_max() * 0.999;
  for (int i = 1; i <= count; ++i)
    out.push_back(hi * i / (count + 1.0));
  return out;
}

}  // namespace

// the closed-form cases: K = 2(n+1) at beta = 1 and K = (n+1)(n+3) at
// beta = 2, independent of A
TEST_CASE("shooting recovers the closed-form nonlinearity constants") {
  struct Case {
    int n;
    double beta, K;
  };
  for (Case c : {Case{1, 1.0, 4.0}, Case{2, 1.0, 6.0}, Case{1, 2.0, 8.0},
                 Case{2, 2.0, 15.0}}) {
    OdeSolution sol = solve_psi(c.n, c.beta);
    CHECK(sol.K == doctest::Approx(c.K).epsilon(2e-4));
    CHECK(sol.c0 > 0.0);
    CHECK(sol.residual_norm < 1e-6);
    CHECK(ode_residual(sol, sample_radii(sol, 24)) < 1e-7);
    // boundary data
    CHECK(sol.psi_at(sol.r_max()) ==
          doctest::Approx(std::pow(sol.A, 0.5 * (c.n + 1))).epsilon(1e-6));
    CHECK(std::abs(sol.dpsi_at(1e-9)) < 1e-5 * sol.c0);
  }
}

TEST_CASE("general beta solves and stays A-independent") {
  OdeSolution a = solve_psi(2, 1.5);
  CHECK(a.K == doctest::Approx(10.52100).epsilon(1e-3));  // no closed form
  CHECK(ode_residual(a, sample_radii(a, 24)) < 1e-7);

  OdeOptions opt;
  opt.A = 1.0;
  OdeSolution b = solve_psi(2, 1.5, opt);
  CHECK(b.K == doctest::Approx(a.K).epsilon(1e-6));
}

TEST_CASE("the beta = 1 profile is constant") {
  OdeSolution sol = solve_psi(1, 1.0);
  double c = std::pow(sol.A, 1.0);  // A^{(n+1)/2}, n = 1
  for (double r : sample_radii(sol, 16))
    CHECK(sol.psi_at(r) == doctest::Approx(c).epsilon(1e-6));
}

TEST_CASE("reconstruction matches the closed-form quotient constant") {
  OdeSolution sol = solve_psi(1, 1.0);
  double V = reconstructed_quotient(sol, 192);
  CHECK(V == doctest::Approx(1.84527014864402842).epsilon(1e-4));
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(solve_psi(0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_psi(1, -1.0), DomainError);
  OdeOptions opt;
  opt.A = 0.0;
  CHECK_THROWS_AS(solve_psi(1, 1.0, opt), DomainError);
}
