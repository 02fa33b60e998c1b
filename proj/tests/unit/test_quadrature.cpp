#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "hs/domains.hpp"
#include "hs/parallel.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"
#include "hs/special.hpp"

using namespace hs;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {2, 4, 8, 16}) {
    const auto& [x, w] = gauss_legendre(order);
    REQUIRE(x.size() == static_cast<size_t>(order));
    for (int k = 0; k <= 2 * order - 1; ++k) {
      double sum = 0.0;
      for (size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], k);
      double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("panel edge generators") {
  auto u = uniform_edges(1.0, 3.0, 4);
  REQUIRE(u.size() == 5);
  CHECK(u.front() == doctest::Approx(1.0));
  CHECK(u.back() == doctest::Approx(3.0));

  auto g = graded_edges(0.0, 1.0, 10, 1e-6, true);
  CHECK(g.front() == doctest::Approx(0.0));
  CHECK(g.back() == doctest::Approx(1.0));
  // widths shrink toward the singular end
  for (size_t i = 2; i < g.size(); ++i)
    CHECK(g[i] - g[i - 1] >= g[i - 1] - g[i - 2]);
  CHECK(g[1] - g[0] <= 2e-6);

  auto gr = growth_edges(1.0, 100.0, 8);
  CHECK(gr.front() == doctest::Approx(1.0));
  CHECK(gr.back() == doctest::Approx(100.0));
  for (size_t i = 2; i < gr.size(); ++i)
    CHECK(gr[i] - gr[i - 1] >= gr[i - 1] - gr[i - 2]);
}

TEST_CASE("sphere areas") {
  const double pi = 3.14159265358979323846;
  CHECK(sphere_area(2) == doctest::Approx(2.0 * pi));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * pi));
  CHECK(sphere_area(4) == doctest::Approx(2.0 * pi * pi));
}

TEST_CASE("ball grids integrate the volume exactly") {
  const double pi = 3.14159265358979323846;
  for (int n : {1, 2, 3}) {
    Domain ball = Domain::ball(zeros(n + 1), 1.0);
    QuadratureGrid g = build_grid(ball, Params::make(n, 2.0, 1.0), 128);
    double vol = 0.0;
    for (double w : g.weights) vol += w;
    double exact = std::pow(pi, 0.5 * (n + 1)) / gamma_fn(0.5 * (n + 1) + 1);
    CHECK(vol == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("grids are deterministic and coarsen properly") {
  Domain half = Domain::half_space(2);
  Params p = Params::make(1, 2.0, 1.0);
  GridOptions go;
  go.reduction = GridReduction::meridian2d;
  QuadratureGrid a = build_grid(half, p, 96, kAutoTruncation, go);
  QuadratureGrid b = build_grid(half, p, 96, kAutoTruncation, go);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a.weights[i] == b.weights[i]);  // bitwise
    CHECK(a.nodes[2 * i] == b.nodes[2 * i]);
  }
  QuadratureGrid c = coarsened(a);
  CHECK(c.size() < a.size());
  CHECK(c.truncation == doctest::Approx(a.truncation).epsilon(1e-12));

  CHECK(a.truncation > 1.0);
  CHECK(a.tail_bound >= 0.0);
  CHECK(a.tail_bound < 1e-8);
}

TEST_CASE("every node lies inside its domain") {
  Params p = Params::make(2, 2.0, 1.0);
  for (const Domain& d :
       {Domain::annulus(zeros(3), 1.0, 4.0), Domain::punctured_ball(zeros(3), 1.0),
        Domain::exterior_ball(zeros(3), 1.0)}) {
    QuadratureGrid g = build_grid(d, p, 64);
    for (size_t i = 0; i < g.size(); ++i) {
      CHECK(d.contains(g.node(i)));
      CHECK(g.weights[i] > 0.0);
    }
  }
}

TEST_CASE("deterministic sum is worker-count invariant") {
  auto f = [](size_t i) {
    return std::sin(0.001 * static_cast<double>(i)) / (1.0 + i);
  };
  setenv("HS_THREADS", "1", 1);
  double s1 = deterministic_sum(20000, f);
  setenv("HS_THREADS", "4", 1);
  double s4 = deterministic_sum(20000, f);
  setenv("HS_THREADS", "13", 1);
  double s13 = deterministic_sum(20000, f);
  unsetenv("HS_THREADS");
  CHECK(s1 == s4);  // bitwise
  CHECK(s1 == s13);
}
