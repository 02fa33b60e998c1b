#include <cmath>

#include "doctest.h"
#include "hs/corpus.hpp"
#include "hs/errors.hpp"

using namespace hs;

TEST_CASE("corpora are deterministic in the seed") {
  auto a = make_corpus(2, 123, 15);
  auto b = make_corpus(2, 123, 15);
  REQUIRE(a.size() == 15);
  Point x{0.2, -0.1, 1.1};
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].descriptor == b[i].descriptor);
    CHECK(a[i].value(x) == b[i].value(x));  // bitwise
  }
  auto c = make_corpus(2, 124, 15);
  bool any_different = false;
  for (size_t i = 0; i < a.size(); ++i)
    any_different = any_different || a[i].value(x) != c[i].value(x);
  CHECK(any_different);
}

TEST_CASE("corpus functions are admissible half-space test functions") {
  for (int n : {1, 2}) {
    Point origin = zeros(n + 1);
    for (const TestFunction& u : make_corpus(n, 7, 12)) {
      CHECK(u.value(origin) == 0.0);  // vanish at the boundary
      CHECK(std::isfinite(u.support_radius));
      CHECK(u.support_radius < 10.0);
      // nonzero somewhere in the interior
      bool nonzero = false;
      for (double t = 0.2; t < 3.0; t += 0.1) {
        Point x = zeros(n + 1);
        x.back() = t;
        if (u.value(x) != 0.0) nonzero = true;
      }
      CHECK(nonzero);
    }
  }
}

TEST_CASE("corpus gradients are exact") {
  for (const TestFunction& u : make_corpus(1, 99, 6)) {
    Point x{0.1, 0.9};
    Point g(2);
    u.value_and_gradient(x, g);
    Point fd = fd_gradient(u, x, 1e-6);
    CHECK(g[0] == doctest::Approx(fd[0]).epsilon(1e-6).scale(1.0));
    CHECK(g[1] == doctest::Approx(fd[1]).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("invalid corpus parameters") {
  CHECK_THROWS_AS(make_corpus(0, 1, 5), DomainError);
  CHECK_THROWS_AS(make_corpus(1, 1, 0), DomainError);
}
