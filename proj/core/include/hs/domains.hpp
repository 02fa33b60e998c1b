#pragma once

#include <string>

#include "hs/geometry.hpp"

namespace hs {

enum class DomainKind {
  half_space,      // {(y, t): t > 0}, boundary t = 0
  ball,            // B_radius(center)
  annulus,         // {r_in < |x - center| < r_out}
  punctured_ball,  // B_radius(center) \ {center}
  exterior_ball,   // complement of the closed ball
  cone,            // K_{A,h} = {(y,t): 0 < t < h, |y| <= A t}
  punctured_space  // R^{n+1} \ {0}
};

// Axisymmetric model domains with exact distance-to-boundary.
struct Domain {
  DomainKind kind = DomainKind::half_space;
  int dim = 2;  // ambient dimension n + 1
  Point center;
  double radius = 0.0;
  double r_in = 0.0, r_out = 0.0;
  double aperture = 0.0, height = 0.0;  // cone parameters A, h

  static Domain half_space(int dim);
  static Domain ball(Point center, double radius);
  static Domain annulus(Point center, double r_in, double r_out);
  static Domain punctured_ball(Point center, double radius);
  static Domain exterior_ball(Point center, double radius);
  static Domain cone(int dim, double aperture, double height);
  static Domain punctured_space(int dim);

  bool bounded() const;
  // membership in the closed domain (punctures count as excluded boundary)
  bool contains(std::span<const double> x) const;
  // Euclidean distance to the topological boundary; throws MembershipError
  // for points outside the closed domain.
  double distance(std::span<const double> x) const;

  std::string describe() const;
};

// Sandwich bounds for a punctured domain: given mu(Omega) and the punctured
// whole-space constant, mu(Omega*) lies in
//   [ mu_O * mu_* / (mu_O + mu_*),  min(mu_O, mu_*) ].
// Returns (0, 0) when either input is 0.
std::pair<double, double> punctured_bounds(double mu_omega,
                                           double mu_star_punctured);

// Parse the CLI syntax, e.g. "annulus(center=0, rin=1, rout=8)",
// "ball(radius=1)", "halfspace".  `dim` is the ambient dimension n+1.
// Centers may be a scalar (origin if 0, otherwise center*e_{n+1}) or a
// colon-separated coordinate list.
Domain parse_domain(const std::string& text, int dim);

}  // namespace hs
