#include <cmath>

#include "doctest.h"
#include "hs/domains.hpp"
#include "hs/errors.hpp"
#include "hs/special.hpp"
#include "hs/varmin.hpp"

using namespace hs;

TEST_CASE("minimization is deterministic and replayable") {
  Domain ball = Domain::ball(zeros(3), 1.0);
  MinimizeOptions opts;
  opts.budget = 800;
  MuEstimate a = minimize(ball, Params::make(2, 2.0, 1.0), opts);
  MuEstimate b = minimize(ball, Params::make(2, 2.0, 1.0), opts);
  CHECK(a.J == b.J);  // bitwise
  CHECK(a.witness == b.witness);
  CHECK(a.evaluations == b.evaluations);

  TestFunction w1 = replay_witness(a.witness);
  TestFunction w2 = replay_witness(a.witness);
  Point x{0.1, 0.2, 0.1};
  CHECK(w1.value(x) == w2.value(x));
  CHECK(w1.value(x) > 0.0);
}

TEST_CASE("ball witnesses never beat the half-space constant") {
  Domain ball = Domain::ball(zeros(3), 1.0);
  MinimizeOptions opts;
  opts.budget = 3000;
  MuEstimate est = minimize(ball, Params::make(2, 2.0, 1.0), opts);
  double mu = sharp_mu_star(2, 1.0);
  CHECK(est.J >= mu * (1.0 - 1e-4));
  CHECK(est.est_error < 1e-2);
}

TEST_CASE("wide annuli certify a constant below the half-space one") {
  Domain ann = Domain::annulus(zeros(3), 1.0, 8.0);
  Certificate cert = certify_below_star(ann, 2, 1.0);
  CHECK(cert.success);
  CHECK(cert.margin > 0.0);
  CHECK(cert.estimate.upper_bound < cert.mu_star);

  // a thin annulus must stay inconclusive
  Domain thin = Domain::annulus(zeros(3), 1.0, 2.0);
  MinimizeOptions opts;
  opts.budget = 4000;
  Certificate no = certify_below_star(thin, 2, 1.0, opts);
  CHECK_FALSE(no.success);
}

TEST_CASE("punctured-ball witnesses respect the sandwich bounds") {
  Domain pb = Domain::punctured_ball(zeros(3), 1.0);
  for (double b : {1.0, 2.0}) {
    MinimizeOptions opts;
    opts.budget = 3000;
    SandwichReport rep = sandwich_check(pb, 2, b, opts);
    CHECK(rep.lower < rep.upper);
    CHECK(rep.witness_within);
    CHECK(rep.estimate.J <= rep.upper + rep.estimate.est_error + 1e-3 * rep.upper);
  }
}

TEST_CASE("concentration drives the ball quotient toward mu*") {
  std::vector<double> lams{1.0, 4.0, 16.0, 64.0};
  auto js = concentration_sequence(1, 1.0, lams, 192);
  REQUIRE(js.size() == 4);
  double mu = sharp_mu_star(1, 1.0);
  for (size_t i = 1; i < js.size(); ++i) CHECK(js[i] <= js[i - 1] + 1e-6 * mu);
  CHECK(js.back() >= mu * (1.0 - 1e-3));
  CHECK(js.back() <= mu * 1.10);
}

TEST_CASE("the punctured plane degenerates with the documented rate") {
  auto pts = degenerate_sequence_2d(1.0, {10.0, 100.0, 1000.0, 10000.0});
  for (const DegeneratePoint& pt : pts) {
    CHECK(pt.J > 0.0);
    CHECK(pt.J <= pt.bound);
  }
  for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].J < pts[i - 1].J);
  CHECK(pts.back().J < 0.01);
  // J * R^{(4+beta)/(2+beta)} is constant along the family
  double r0 = pts[0].J * std::pow(pts[0].R, 5.0 / 3.0);
  double r3 = pts[3].J * std::pow(pts[3].R, 5.0 / 3.0);
  CHECK(r0 == doctest::Approx(r3).epsilon(1e-10));
}

TEST_CASE("unsupported requests are rejected") {
  CHECK_THROWS_AS(minimize(Domain::cone(3, 1.0, 1.0),
                           Params::make(2, 2.0, 1.0)),
                  DomainError);
  MinimizeOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(minimize(Domain::ball(zeros(3), 1.0),
                           Params::make(2, 2.0, 1.0), tiny),
                  DomainError);
  CHECK_THROWS_AS(replay_witness("{\"type\":\"nope\"}"), DomainError);
  CHECK_THROWS_AS(certify_below_star(Domain::ball(zeros(3), 1.0), 2, 1.5),
                  NoClosedFormError);
  CHECK_THROWS_AS(degenerate_sequence_2d(1.0, {0.5}), DomainError);
}
