#include "hs/extremals.hpp"

#include <cmath>

#include "hs/errors.hpp"

namespace hs {

namespace {

double beta_of(ExtremalFamily f) {
  switch (f) {
    case ExtremalFamily::beta1_u:
    case ExtremalFamily::beta1_v:
      return 1.0;
    case ExtremalFamily::beta2_u:
    case ExtremalFamily::beta2_v:
      return 2.0;
    default:
      return 0.0;
  }
}

// squared distance in y to y0 (empty y0 = origin), plus components
double y_dist2(std::span<const double> x, const Point& y0) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    double d = x[i] - (i < y0.size() ? y0[i] : 0.0);
    s += d * d;
  }
  return s;
}

struct HalfspaceFamilyImpl final : TestFunction::Impl {
  ExtremalFamily family;
  ExtremalParams p;
  int n;

  int dim() const override { return n + 1; }

  // denominator D and its gradient: D = (A+t)^2 + s^2 for beta = 1,
  // D = A^2 + t^2 + s^2 for beta = 2
  double denom(std::span<const double> x, std::span<double> gD) const {
    double t = x.back();
    double D = y_dist2(x, p.y0);
    if (!gD.empty())
      for (size_t i = 0; i + 1 < x.size(); ++i)
        gD[i] = 2.0 * (x[i] - (i < p.y0.size() ? p.y0[i] : 0.0));
    if (family == ExtremalFamily::beta1_u ||
        family == ExtremalFamily::beta1_v) {
      D += (p.A + t) * (p.A + t);
      if (!gD.empty()) gD.back() = 2.0 * (p.A + t);
    } else {
      D += p.A * p.A + t * t;
      if (!gD.empty()) gD.back() = 2.0 * t;
    }
    return D;
  }

  bool u_side() const {
    return family == ExtremalFamily::beta1_u ||
           family == ExtremalFamily::beta2_u;
  }

  double value(std::span<const double> x) const override {
    double m = 0.5 * (n + 1);
    double D = denom(x, {});
    if (u_side()) return p.C * x.back() * std::pow(D, -m);
    return p.C * std::pow(p.A / D, m);
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    double m = 0.5 * (n + 1);
    Point gD(x.size());
    double D = denom(x, gD);
    if (u_side()) {
      double Dm = std::pow(D, -m);
      double t = x.back();
      double common = -m * p.C * t * Dm / D;
      for (size_t i = 0; i < x.size(); ++i) g[i] = common * gD[i];
      g.back() += p.C * Dm;
      return p.C * t * Dm;
    }
    double v = p.C * std::pow(p.A / D, m);
    double common = -m * v / D;
    for (size_t i = 0; i < x.size(); ++i) g[i] = common * gD[i];
    return v;
  }
};

struct PuncturedImpl final : TestFunction::Impl {
  ExtremalParams p;
  int n;
  double beta;

  int dim() const override { return n + 1; }

  double k() const { return beta * (n - 1) / (n + 1.0); }
  double m() const { return (n + 1.0) / beta; }

  double value(std::span<const double> x) const override {
    double r = norm(x);
    return p.C * std::pow(p.A + std::pow(r, k()), -m());
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    double r = norm(x);
    if (r < 1e-280)
      throw SingularityError("punctured extremal: gradient at the puncture");
    double rk = std::pow(r, k());
    double base = p.A + rk;
    double v = p.C * std::pow(base, -m());
    // du/dr = -m C (A + r^k)^{-m-1} k r^{k-1}
    double dudr = -m() * k() * p.C * std::pow(base, -m() - 1.0) * rk / r;
    for (size_t i = 0; i < x.size(); ++i) g[i] = dudr * x[i] / r;
    return v;
  }
};

struct BlissImpl final : TestFunction::Impl {
  ExtremalParams p;
  double beta;

  int dim() const override { return 1; }

  double value(std::span<const double> x) const override {
    double t = x[0];
    return p.C * t * std::pow(1.0 + p.A * std::pow(t, beta), -1.0 / beta);
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    double t = x[0];
    double base = 1.0 + p.A * std::pow(t, beta);
    // u' = C (1 + A t^beta)^{-1 - 1/beta}
    g[0] = p.C * std::pow(base, -1.0 - 1.0 / beta);
    return p.C * t * std::pow(base, -1.0 / beta);
  }
};

double el_weight_exponent(int n, double beta) {
  return -2.0 + (n - 1.0) * beta / (n + 1.0);
}

double el_power(int n, double beta) { return 1.0 + 2.0 * beta / (n + 1.0); }

}  // namespace

TestFunction make_extremal(ExtremalFamily family, const ExtremalParams& params,
                           int n, double beta) {
  if (!(params.A > 0)) throw DomainError("extremal: A must be > 0");
  if (params.C == 0.0) throw DomainError("extremal: C must be nonzero");
  switch (family) {
    case ExtremalFamily::beta1_u:
    case ExtremalFamily::beta2_u:
    case ExtremalFamily::beta1_v:
    case ExtremalFamily::beta2_v: {
      if (n < 1) throw DomainError("extremal: n must be >= 1");
      auto impl = std::make_shared<HalfspaceFamilyImpl>();
      impl->family = family;
      impl->p = params;
      impl->p.family = family;
      impl->n = n;
      TestFunction f(impl);
      bool u_side = family == ExtremalFamily::beta1_u ||
                    family == ExtremalFamily::beta2_u;
      f.decay_exponent = u_side ? n : n + 1;
      return f;
    }
    case ExtremalFamily::punctured: {
      if (n < 2) throw DomainError("punctured extremal: n must be >= 2");
      if (!(beta > 0) || beta > 2.0 * (n + 1.0) / (n - 1.0))
        throw DomainError("punctured extremal: beta outside (0, 2(n+1)/(n-1)]");
      auto impl = std::make_shared<PuncturedImpl>();
      impl->p = params;
      impl->p.family = family;
      impl->n = n;
      impl->beta = beta;
      TestFunction f(impl);
      f.decay_exponent = n - 1;
      return f;
    }
    case ExtremalFamily::bliss: {
      if (!(beta > 0)) throw DomainError("bliss extremal: beta must be > 0");
      auto impl = std::make_shared<BlissImpl>();
      impl->p = params;
      impl->p.family = family;
      impl->beta = beta;
      TestFunction f(impl);
      f.decay_exponent = 0.0;  // tends to a constant
      return f;
    }
  }
  throw DomainError("make_extremal: unknown family");
}

double extremal_laplacian(ExtremalFamily family, const ExtremalParams& p,
                          int n, std::span<const double> x) {
  double m = 0.5 * (n + 1);
  double t = x.back();
  double s2 = y_dist2(x, p.y0);
  if (family == ExtremalFamily::beta1_u) {
    // Delta u = -2A(n+1) C D^{-m-1},  D = (A+t)^2 + s^2
    double D = (p.A + t) * (p.A + t) + s2;
    return -2.0 * p.A * (n + 1.0) * p.C * std::pow(D, -m - 1.0);
  }
  if (family == ExtremalFamily::beta2_u) {
    // Delta u = -(n+1)(n+3) A^2 C t E^{-m-2},  E = A^2 + t^2 + s^2
    double E = p.A * p.A + t * t + s2;
    return -(n + 1.0) * (n + 3.0) * p.A * p.A * p.C * t *
           std::pow(E, -m - 2.0);
  }
  throw DomainError("extremal_laplacian: only the u-side families");
}

double el_residual(ExtremalFamily family, const ExtremalParams& params, int n,
                   const std::vector<Point>& sample_points) {
  double beta = beta_of(family);
  if (beta == 0.0)
    throw DomainError("el_residual: only beta1_u / beta2_u");
  TestFunction u = make_extremal(family, params, n);
  double worst = 0.0;
  for (const auto& x : sample_points) {
    if (!(x.back() > 1e-8))
      throw DomainError("el_residual: sample point too close to the boundary");
    double lap = extremal_laplacian(family, params, n, x);
    double rhs = std::pow(x.back(), el_weight_exponent(n, beta)) *
                 std::pow(u.value(x), el_power(n, beta));
    double scale = std::max(std::abs(lap), std::abs(rhs));
    if (scale > 0.0) worst = std::max(worst, std::abs(lap + rhs) / scale);
  }
  return worst;
}

ExtremalParams normalize_for_el(ExtremalFamily family, int n, double beta_arg,
                                double A, Point y0) {
  double beta = beta_of(family);
  if (beta == 0.0)
    throw DomainError("normalize_for_el: only beta1_u / beta2_u");
  (void)beta_arg;
  ExtremalParams p;
  p.A = A;
  p.C = 1.0;
  p.y0 = std::move(y0);
  p.family = family;
  // probe point: y = y0, t = A
  Point x = zeros(n + 1);
  for (size_t i = 0; i < p.y0.size(); ++i) x[i] = p.y0[i];
  x.back() = A;
  TestFunction u = make_extremal(family, p, n);
  double lhs = -extremal_laplacian(family, p, n, x);
  double rhs = std::pow(x.back(), el_weight_exponent(n, beta)) *
               std::pow(u.value(x), el_power(n, beta));
  // scaling u -> C u scales the right side by C^{2 beta/(n+1)} relative to
  // the left, so C = (lhs/rhs)^{(n+1)/(2 beta)}
  p.C = std::pow(lhs / rhs, (n + 1.0) / (2.0 * beta));
  return p;
}

}  // namespace hs
