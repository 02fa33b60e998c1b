#include <cmath>
#include <random>

#include "doctest.h"
#include "hs/errors.hpp"
#include "hs/extremals.hpp"

using namespace hs;

namespace {

// max relative gap between analytic and centered-difference gradients over
// random interior points
double gradient_gap(const TestFunction& u, int dim, unsigned seed,
                    bool positive_t) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  double worst = 0.0;
  for (int it = 0; it < 50; ++it) {
    Point x(dim);
    for (int d = 0; d < dim; ++d) x[d] = U(rng);
    if (positive_t) x[dim - 1] = 0.2 + std::abs(x[dim - 1]);
    if (!positive_t && norm(x) < 0.3) x[0] += 0.5;  // stay off punctures
    Point g(dim);
    double v = u.value_and_gradient(x, g);
    Point fd = fd_gradient(u, x, 1e-6);
    double scale = std::abs(v) + norm(g) + 1e-12;
    for (int d = 0; d < dim; ++d)
      worst = std::max(worst, std::abs(g[d] - fd[d]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("closed-form extremal gradients match finite differences") {
  ExtremalParams ep;
  ep.A = 0.7;
  ep.C = 1.3;
  for (int n : {1, 2}) {
    CHECK(gradient_gap(make_extremal(ExtremalFamily::beta1_u, ep, n), n + 1,
                       11, true) < 1e-8);
    CHECK(gradient_gap(make_extremal(ExtremalFamily::beta2_u, ep, n), n + 1,
                       12, true) < 1e-8);
    CHECK(gradient_gap(make_extremal(ExtremalFamily::beta1_v, ep, n), n + 1,
                       13, true) < 1e-8);
    CHECK(gradient_gap(make_extremal(ExtremalFamily::beta2_v, ep, n), n + 1,
                       14, true) < 1e-8);
  }
  CHECK(gradient_gap(make_extremal(ExtremalFamily::punctured, ep, 2, 1.0), 3,
                     15, false) < 1e-8);
  CHECK(gradient_gap(make_extremal(ExtremalFamily::bliss, ep, 0, 2.0), 1, 16,
                     true) < 1e-8);
}

TEST_CASE("analytic Laplacian matches finite differences") {
  ExtremalParams ep;
  ep.A = 1.2;
  for (int n : {1, 2}) {
    for (ExtremalFamily fam :
         {ExtremalFamily::beta1_u, ExtremalFamily::beta2_u}) {
      TestFunction u = make_extremal(fam, ep, n);
      Point x(n + 1, 0.4);
      x.back() = 0.8;
      double lap = extremal_laplacian(fam, ep, n, x);
      // centered second differences
      double h = 1e-4;
      double fd = 0.0;
      double v0 = u.value(x);
      for (int d = 0; d <= n; ++d) {
        Point xp = x, xm = x;
        xp[d] += h;
        xm[d] -= h;
        fd += (u.value(xp) - 2.0 * v0 + u.value(xm)) / (h * h);
      }
      CHECK(lap == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("Euler-Lagrange residual vanishes after normalization") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int n : {1, 2, 3}) {
    std::vector<Point> pts;
    for (int i = 0; i < 100; ++i) {
      Point x(n + 1);
      for (int d = 0; d < n; ++d) x[d] = U(rng);
      x[n] = 0.15 + 0.5 * (U(rng) + 2.0);
      pts.push_back(std::move(x));
    }
    for (double b : {1.0, 2.0}) {
      ExtremalFamily fam =
          b == 1.0 ? ExtremalFamily::beta1_u : ExtremalFamily::beta2_u;
      ExtremalParams ep = normalize_for_el(fam, n, b, 0.8);
      CHECK(el_residual(fam, ep, n, pts) < 1e-10);
      // an un-normalized C must leave a visible defect
      ExtremalParams bad = ep;
      bad.C *= 2.0;
      CHECK(el_residual(fam, bad, n, pts) > 1e-3);
    }
  }
}

TEST_CASE("family constructors reject bad input") {
  ExtremalParams ep;
  CHECK_THROWS_AS(make_extremal(ExtremalFamily::punctured, ep, 1, 1.0),
                  DomainError);
  ep.A = -1.0;
  CHECK_THROWS_AS(make_extremal(ExtremalFamily::beta1_u, ep, 1), DomainError);
}
