#include <cmath>

#include "doctest.h"
#include "hs/corpus.hpp"
#include "hs/domains.hpp"
#include "hs/errors.hpp"
#include "hs/extremals.hpp"
#include "hs/functionals.hpp"
#include "hs/special.hpp"

using namespace hs;

namespace {

QuadratureGrid halfspace_grid(int n, double beta, int res) {
  GridOptions go;
  go.reduction = GridReduction::meridian2d;
  return build_grid(Domain::half_space(n + 1), Params::make(n, 2.0, beta),
                    res, kAutoTruncation, go);
}

}  // namespace

TEST_CASE("extremal quotients reproduce the sharp constants") {
  for (int n : {1, 2}) {
    Domain half = Domain::half_space(n + 1);
    for (double b : {1.0, 2.0}) {
      Params p = Params::make(n, 2.0, b);
      QuadratureGrid g = halfspace_grid(n, b, 256);
      ExtremalParams ep;
      TestFunction u = make_extremal(
          b == 1.0 ? ExtremalFamily::beta1_u : ExtremalFamily::beta2_u, ep, n);
      RayleighReport rep = rayleigh(u, half, p, g);
      CHECK(rep.J ==
            doctest::Approx(sharp_mu_star(n, b)).epsilon(1e-6));
      CHECK(rep.est_error < 1e-4);
    }
  }
}

TEST_CASE("the quotient is invariant under scaling the function") {
  Domain half = Domain::half_space(2);
  Params p = Params::make(1, 2.0, 1.0);
  QuadratureGrid g = halfspace_grid(1, 1.0, 96);
  TestFunction u = make_corpus(1, 3, 1).front();
  double J1 = rayleigh_on_grid(u, half, p, g).J;
  double J3 = rayleigh_on_grid(scalar_multiple(u, 3.0), half, p, g).J;
  CHECK(J1 == doctest::Approx(J3).epsilon(1e-13));
}

TEST_CASE("the quotient is invariant under dilation and translation") {
  for (int n : {1, 2}) {
    Domain half = Domain::half_space(n + 1);
    Params p = Params::make(n, 2.0, 1.0);
    TestFunction u = make_corpus(n, 9, 1).front();
    Point x0 = zeros(n + 1);
    x0[0] = -0.7;
    auto [J, J_scaled] = dilation_check(u, half, p, 2.5, x0);
    CHECK(std::abs(J_scaled / J - 1.0) < 1e-12);

    Domain ball = Domain::ball(zeros(n + 1), 1.0);
    TestFunction w = scale_translate(u, 0.2, zeros(n + 1));  // tiny support
    // recenter inside the ball
    Point c = zeros(n + 1);
    c.back() = -0.5;
    auto [Jb, Jb_scaled] = dilation_check(scale_translate(w, 1.0, c), ball, p,
                                          0.5, zeros(n + 1));
    CHECK(std::abs(Jb_scaled / Jb - 1.0) < 1e-12);
  }
}

TEST_CASE("first-order lemmas hold with positive margin") {
  QuadratureGrid g = halfspace_grid(1, 1.0, 128);
  for (const TestFunction& u : make_corpus(1, 17, 12)) {
    CHECK(check_lemma21(u, 1.0, g) > 0.0);
    CHECK(check_lemma21(u, 2.0, g) > 0.0);
    CHECK(check_lemma22(u, 1.0, g) > 0.0);
  }
  CHECK_THROWS_AS(check_lemma21(make_corpus(1, 17, 1).front(), 0.0, g),
                  DomainError);
}

TEST_CASE("the generic weighted inequality checker") {
  QuadratureGrid g = halfspace_grid(2, 1.0, 128);
  TestFunction u = make_corpus(2, 23, 1).front();

  GnSpec first;
  first.k = 1.0;
  first.l = 0.0;
  first.p = 1.0;
  GgnResult r1 = check_ggn(u, first, g);
  CHECK(r1.lhs > 0.0);
  CHECK(r1.rhs > 0.0);
  CHECK(std::isfinite(r1.ratio));

  first.c_est = 2.0 * r1.ratio;
  GgnResult r2 = check_ggn(u, first, g);
  CHECK(r2.margin > 0.0);

  GnSpec second;
  second.k = 1.0;
  second.l = 0.0;
  second.p = 2.0;
  GgnResult r3 = check_ggn(u, second, g);
  CHECK(std::isfinite(r3.ratio));

  CHECK(check_ggn_gamma(u, 2, 1.0, 0.5, g) > 0.0);
}

TEST_CASE("degenerate input raises instead of dividing by zero") {
  Domain half = Domain::half_space(2);
  Params p = Params::make(1, 2.0, 1.0);
  QuadratureGrid g = halfspace_grid(1, 1.0, 64);
  TestFunction zero = make_lambda_function(
      2, [](std::span<const double>) { return 0.0; },
      [](std::span<const double>, std::span<double> gr) {
        for (auto& v : gr) v = 0.0;
      });
  CHECK_THROWS_AS(rayleigh_on_grid(zero, half, p, g),
                  DegenerateFunctionError);
}
