#pragma once

#include "hs/domains.hpp"
#include "hs/test_function.hpp"

namespace hs {

// Inversions tying the half-space to the ball B_{1/2}(-e_{n+1}/2) and the
// ball to its exterior.  The half-space <-> ball map is the reflection with
// respect to the unit sphere centered at -e_{n+1}:
//   T(x) = -e_{n+1} + (x + e_{n+1}) / |x + e_{n+1}|^2,
// an involution.  The ball <-> exterior map inverts through the ball's own
// boundary sphere (center -e_{n+1}/2, radius 1/2).
enum class KelvinDirection {
  halfspace_to_ball,
  ball_to_halfspace,
  ball_to_exterior,
  exterior_to_ball
};

// Image point; throws SingularityError at the inversion center.
Point kelvin_point(KelvinDirection dir, std::span<const double> x);

// The ball used throughout: B_{1/2}(-e_{n+1}/2).
Domain kelvin_ball(int dim);
Domain kelvin_exterior(int dim);

// psi(x) = |x + e|^{-(n-1)} u(T(x)) on the ball, for u on the half-space;
// gradient by chain rule through the inversion.
TestFunction kelvin_pullback(const TestFunction& u);

// The reverse composition: u(y,t) = |(y,t) + e|^{-(n-1)} psi(T(y,t)) on the
// half-space, for psi on the ball.  Applying it to kelvin_pullback(u)
// reproduces u.
TestFunction kelvin_pushforward(const TestFunction& psi);

// psi~(z) = (1/2 / |z + e/2|)^{n-1} psi(T_ext(z)) on the exterior of the
// ball, for psi on the ball.
TestFunction kelvin_exterior_transform(const TestFunction& psi);

}  // namespace hs
