#include <cmath>

#include "doctest.h"
#include "hs/domains.hpp"
#include "hs/errors.hpp"

using namespace hs;

TEST_CASE("half-space distance is the height") {
  Domain d = Domain::half_space(3);
  CHECK(d.contains(Point{0.0, 0.0, 0.5}));
  CHECK(d.contains(Point{1.0, -2.0, 0.0}));  // closed domain
  CHECK_FALSE(d.contains(Point{0.0, 0.0, -0.1}));
  CHECK(d.distance(Point{3.0, 4.0, 0.7}) == doctest::Approx(0.7));
  CHECK_FALSE(d.bounded());
}

TEST_CASE("ball distance is radius minus offset") {
  Domain d = Domain::ball(Point{1.0, 0.0}, 2.0);
  CHECK(d.distance(Point{1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(d.distance(Point{2.0, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(d.distance(Point{4.0, 0.0}), MembershipError);
  CHECK(d.bounded());
}

TEST_CASE("annulus distance is the nearer sphere") {
  Domain d = Domain::annulus(zeros(2), 1.0, 4.0);
  CHECK(d.distance(Point{1.5, 0.0}) == doctest::Approx(0.5));
  CHECK(d.distance(Point{3.8, 0.0}) == doctest::Approx(0.2));
  CHECK(d.distance(Point{0.0, 2.5}) == doctest::Approx(1.5));
  CHECK_FALSE(d.contains(Point{0.5, 0.0}));
  CHECK_THROWS_AS(Domain::annulus(zeros(2), 3.0, 2.0), DomainError);
}

TEST_CASE("punctured ball counts the puncture as boundary") {
  Domain d = Domain::punctured_ball(zeros(3), 1.0);
  CHECK(d.distance(Point{0.25, 0.0, 0.0}) == doctest::Approx(0.25));
  CHECK(d.distance(Point{0.9, 0.0, 0.0}) == doctest::Approx(0.1));
  // the puncture is a zero-distance boundary point of the closure
  CHECK(d.contains(zeros(3)));
  CHECK(d.distance(zeros(3)) == 0.0);
}

TEST_CASE("exterior ball and punctured space") {
  Domain e = Domain::exterior_ball(zeros(2), 1.0);
  CHECK(e.distance(Point{3.0, 0.0}) == doctest::Approx(2.0));
  CHECK_FALSE(e.contains(Point{0.5, 0.0}));
  CHECK_FALSE(e.bounded());

  Domain p = Domain::punctured_space(2);
  CHECK(p.distance(Point{0.3, 0.4}) == doctest::Approx(0.5));
  CHECK(p.distance(zeros(2)) == 0.0);
}

TEST_CASE("cone distance") {
  // K_{A,h} with aperture 1: the lateral wall is at 45 degrees
  Domain d = Domain::cone(2, 1.0, 2.0);
  CHECK(d.contains(Point{0.0, 1.0}));
  CHECK_FALSE(d.contains(Point{1.5, 1.0}));
  double dist = d.distance(Point{0.0, 1.0});
  CHECK(dist == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("punctured sandwich bounds") {
  auto [lo, hi] = punctured_bounds(3.0, 1.0);
  CHECK(lo == doctest::Approx(0.75));
  CHECK(hi == doctest::Approx(1.0));
  CHECK(lo <= hi);
  auto [z0, z1] = punctured_bounds(0.0, 1.0);
  CHECK(z0 == 0.0);
  CHECK(z1 == 0.0);
}

TEST_CASE("domain parsing round trips") {
  Domain a = parse_domain("annulus(center=0, rin=1, rout=8)", 3);
  CHECK(a.kind == DomainKind::annulus);
  CHECK(a.r_in == doctest::Approx(1.0));
  CHECK(a.r_out == doctest::Approx(8.0));

  Domain b = parse_domain("ball(radius=2)", 2);
  CHECK(b.kind == DomainKind::ball);
  CHECK(b.radius == doctest::Approx(2.0));

  CHECK(parse_domain("halfspace", 4).kind == DomainKind::half_space);
  CHECK(parse_domain("punctured_ball(radius=1)", 3).kind ==
        DomainKind::punctured_ball);
  CHECK(parse_domain("punctured-space", 3).kind == DomainKind::punctured_space);

  CHECK_THROWS_AS(parse_domain("torus(r=1)", 3), DomainError);
  CHECK_THROWS_AS(parse_domain("annulus(rin=1)", 3), DomainError);
  CHECK_THROWS_AS(parse_domain("ball(radius=1", 3), DomainError);
}
