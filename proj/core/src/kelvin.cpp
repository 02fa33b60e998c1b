#include "hs/kelvin.hpp"

#include <cmath>

#include "hs/errors.hpp"

namespace hs {

namespace {

// Inversion through the sphere of radius rho centered at c:
//   T(x) = c + rho^2 (x - c) / |x - c|^2.
Point invert(std::span<const double> x, const Point& c, double rho) {
  Point z(x.size());
  double n2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i] - c[i];
    n2 += z[i] * z[i];
  }
  if (n2 < 1e-280) throw SingularityError("kelvin_point: inversion center");
  double f = rho * rho / n2;
  for (size_t i = 0; i < x.size(); ++i) z[i] = c[i] + f * z[i];
  return z;
}

// psi(x) = (rho / |x - c|)^{n-1} u(T(x)) with the chain-rule gradient.
// The Jacobian of T is rho^2 (I - 2 zhat zhat^T)/|z|^2, which is symmetric,
// so grad (u o T) = J * (grad u)(T).
struct KelvinImpl final : TestFunction::Impl {
  TestFunction u;
  Point c;
  double rho;

  int dim() const override { return u.dim(); }

  double value(std::span<const double> x) const override {
    int n = dim() - 1;
    double r2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      double zi = x[i] - c[i];
      r2 += zi * zi;
    }
    if (r2 < 1e-280) throw SingularityError("kelvin transform: inversion center");
    double w = std::pow(rho * rho / r2, 0.5 * (n - 1));
    return w * u.value(invert(x, c, rho));
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    int n = dim() - 1;
    size_t d = x.size();
    Point z(d);
    double r2 = 0.0;
    for (size_t i = 0; i < d; ++i) {
      z[i] = x[i] - c[i];
      r2 += z[i] * z[i];
    }
    if (r2 < 1e-280) throw SingularityError("kelvin transform: inversion center");
    Point tx(d);
    double f = rho * rho / r2;
    for (size_t i = 0; i < d; ++i) tx[i] = c[i] + f * z[i];

    Point gu(d);
    double uv = u.value_and_gradient(tx, gu);
    double w = std::pow(rho * rho / r2, 0.5 * (n - 1));

    // J^T grad u = f * (grad u - 2 (zhat . grad u) zhat)
    double zg = 0.0;
    for (size_t i = 0; i < d; ++i) zg += z[i] * gu[i];
    zg /= r2;
    for (size_t i = 0; i < d; ++i)
      g[i] = w * f * (gu[i] - 2.0 * zg * z[i]);

    // plus u(T) * grad w,  grad w = -(n-1) w z / |z|^2
    double gw = -(n - 1) * w / r2;
    for (size_t i = 0; i < d; ++i) g[i] += uv * gw * z[i];
    return w * uv;
  }
};

TestFunction make_kelvin(const TestFunction& u, Point c, double rho) {
  auto impl = std::make_shared<KelvinImpl>();
  impl->u = u;
  impl->c = std::move(c);
  impl->rho = rho;
  return TestFunction(impl);
}

Point minus_e(int dim) {
  Point c = zeros(dim);
  c.back() = -1.0;
  return c;
}

Point minus_e_half(int dim) {
  Point c = zeros(dim);
  c.back() = -0.5;
  return c;
}

}  // namespace

Point kelvin_point(KelvinDirection dir, std::span<const double> x) {
  int dim = static_cast<int>(x.size());
  switch (dir) {
    case KelvinDirection::halfspace_to_ball:
    case KelvinDirection::ball_to_halfspace:
      return invert(x, minus_e(dim), 1.0);
    case KelvinDirection::ball_to_exterior:
    case KelvinDirection::exterior_to_ball:
      return invert(x, minus_e_half(dim), 0.5);
  }
  throw DomainError("kelvin_point: bad direction");
}

Domain kelvin_ball(int dim) { return Domain::ball(minus_e_half(dim), 0.5); }

Domain kelvin_exterior(int dim) {
  return Domain::exterior_ball(minus_e_half(dim), 0.5);
}

TestFunction kelvin_pullback(const TestFunction& u) {
  TestFunction f = make_kelvin(u, minus_e(u.dim()), 1.0);
  f.support_radius = 1.0;  // lives in B_{1/2}(-e/2)
  return f;
}

TestFunction kelvin_pushforward(const TestFunction& psi) {
  return make_kelvin(psi, minus_e(psi.dim()), 1.0);
}

TestFunction kelvin_exterior_transform(const TestFunction& psi) {
  return make_kelvin(psi, minus_e_half(psi.dim()), 0.5);
}

}  // namespace hs
