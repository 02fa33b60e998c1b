#include "hs/functionals.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hs/errors.hpp"
#include "hs/kelvin.hpp"
#include "hs/parallel.hpp"
#include "hs/special.hpp"

namespace hs {

namespace {

[[noreturn]] void bad_node(const char* what, size_t i,
                           std::span<const double> x) {
  std::string msg = std::string(what) + " at node " + std::to_string(i) + " (";
  for (size_t j = 0; j < x.size(); ++j)
    msg += (j ? "," : "") + std::to_string(x[j]);
  msg += ")";
  throw EvaluationError(msg);
}

double grad_norm_from(const TestFunction& u, std::span<const double> x,
                      Point& gbuf) {
  gbuf.resize(x.size());
  u.value_and_gradient(x, gbuf);
  return norm(gbuf);
}

}  // namespace

double dirichlet_energy(const TestFunction& u, const QuadratureGrid& grid,
                        double p, double weight_exp) {
  double total = deterministic_sum(grid.size(), [&](size_t i) {
    thread_local Point g;
    auto x = grid.node(i);
    double gn = grad_norm_from(u, x, g);
    double term = grid.weights[i] * std::pow(gn, p);
    if (weight_exp != 0.0) term *= std::pow(x.back(), weight_exp);
    if (std::isnan(term)) bad_node("dirichlet_energy: NaN", i, x);
    return term;
  });
  if (!std::isfinite(total))
    throw IntegrabilityError("dirichlet_energy: sum diverged");
  return total;
}

double weighted_norm(const TestFunction& u, const QuadratureGrid& grid,
                     double a, double q, const Domain& domain) {
  if (!(q > 0)) throw DomainError("weighted_norm: q must be > 0");
  double total = deterministic_sum(grid.size(), [&](size_t i) {
    auto x = grid.node(i);
    double v = std::abs(u.value(x));
    double term =
        v > 0 ? grid.weights[i] * std::pow(domain.distance(x), a) *
                    std::pow(v, q)
              : 0.0;
    if (std::isnan(term)) bad_node("weighted_norm: NaN", i, x);
    return term;
  });
  if (!std::isfinite(total))
    throw IntegrabilityError("weighted_norm: sum diverged");
  return total;
}

QuotientParts rayleigh_on_grid(const TestFunction& u, const Domain& domain,
                               const Params& params,
                               const QuadratureGrid& grid) {
  QuotientParts parts;
  parts.numerator = dirichlet_energy(u, grid, params.p);
  parts.denominator_inner = weighted_norm(u, grid, params.a(), params.q(), domain);
  if (parts.denominator_inner < 1e-300)
    throw DegenerateFunctionError("rayleigh: denominator vanished");
  parts.J = parts.numerator / std::pow(parts.denominator_inner, params.theta());
  return parts;
}

RayleighReport rayleigh(const TestFunction& u, const Domain& domain,
                        const Params& params, const QuadratureGrid& grid) {
  QuotientParts fine = rayleigh_on_grid(u, domain, params, grid);
  QuotientParts coarse = rayleigh_on_grid(u, domain, params, coarsened(grid));
  RayleighReport rep;
  rep.numerator = fine.numerator;
  rep.denominator_inner = fine.denominator_inner;
  rep.J = fine.J;
  rep.est_error = std::abs(fine.J - coarse.J) + grid.tail_bound * fine.J;
  return rep;
}

namespace {

Domain transformed_domain(const Domain& d, double R, const Point& x0) {
  Domain t = d;
  switch (d.kind) {
    case DomainKind::half_space:
      if (x0.back() != 0.0)
        throw DomainError(
            "dilation_check: half-space translations must be tangential");
      return t;
    case DomainKind::punctured_space:
      for (double c : x0)
        if (c != 0.0)
          throw DomainError("dilation_check: punctured space cannot translate");
      return t;
    case DomainKind::cone:
      throw DomainError("dilation_check: cone has no scaled variant here");
    default:
      break;
  }
  t.center.resize(static_cast<size_t>(d.dim), 0.0);
  for (size_t i = 0; i < t.center.size(); ++i)
    t.center[i] = R * (i < d.center.size() ? d.center[i] : 0.0) + x0[i];
  t.radius *= R;
  t.r_in *= R;
  t.r_out *= R;
  return t;
}

}  // namespace

std::pair<double, double> dilation_check(const TestFunction& u,
                                         const Domain& domain,
                                         const Params& params, double R,
                                         Point x0, int resolution) {
  if (!(R > 0)) throw DomainError("dilation_check: R must be > 0");
  x0.resize(static_cast<size_t>(domain.dim), 0.0);
  QuadratureGrid grid = build_grid(domain, params, resolution);
  double J = rayleigh_on_grid(u, domain, params, grid).J;

  QuadratureGrid pushed = grid;
  double jac = std::pow(R, domain.dim);
  for (size_t i = 0; i < pushed.size(); ++i) {
    for (int d = 0; d < pushed.dim; ++d)
      pushed.nodes[i * pushed.dim + d] =
          R * grid.nodes[i * grid.dim + d] + x0[static_cast<size_t>(d)];
    pushed.weights[i] *= jac;
  }
  Domain scaled = transformed_domain(domain, R, x0);
  TestFunction u_scaled = scale_translate(u, R, x0);
  double J_scaled = rayleigh_on_grid(u_scaled, scaled, params, pushed).J;
  return {J, J_scaled};
}

double check_lemma21(const TestFunction& u, double k,
                     const QuadratureGrid& grid) {
  if (k == 0.0) throw DomainError("check_lemma21: k must be nonzero");
  double grad_side = deterministic_sum(grid.size(), [&](size_t i) {
    thread_local Point g;
    auto x = grid.node(i);
    return grid.weights[i] * std::pow(x.back(), k) * grad_norm_from(u, x, g);
  });
  double value_side = deterministic_sum(grid.size(), [&](size_t i) {
    auto x = grid.node(i);
    return grid.weights[i] * std::pow(x.back(), k - 1.0) *
           std::abs(u.value(x));
  });
  return grad_side / std::abs(k) - value_side;
}

double check_lemma22(const TestFunction& u, double k,
                     const QuadratureGrid& grid) {
  double n = grid.params.n;
  double grad_side = deterministic_sum(grid.size(), [&](size_t i) {
    thread_local Point g;
    auto x = grid.node(i);
    return grid.weights[i] * std::pow(x.back(), k) * grad_norm_from(u, x, g);
  });
  double value_side = deterministic_sum(grid.size(), [&](size_t i) {
    auto x = grid.node(i);
    return grid.weights[i] * std::pow(x.back(), (n + 1.0) / n * k) *
           std::pow(std::abs(u.value(x)), (n + 1.0) / n);
  });
  return std::pow(2.0, 1.0 / n) * grad_side -
         std::pow(value_side, n / (n + 1.0));
}

void GnSpec::validate(int n) const {
  if (p < 1.0 || p > n + 1.0)
    throw DomainError("GnSpec: p must lie in [1, n+1]");
  bool branch_minus_n = (k == -n && l == -n - 1);
  if (branch_minus_n) {
    double s_hi = p < n + 1.0 ? (n + 1.0) * p / (n + 1.0 - p)
                              : std::numeric_limits<double>::infinity();
    if (s < p || s > s_hi)
      throw DomainError("GnSpec: s outside [p, (n+1)p/(n+1-p)]");
    return;
  }
  if (k == 0.0) {
    // Maz'ya range; checkable here only with boundary-vanishing corpora
    if (!(l > -1.0 && l <= 0.0))
      throw DomainError("GnSpec: k = 0 requires l in (-1, 0]");
  } else if (k == -static_cast<double>(n)) {
    throw DomainError("GnSpec: k = -n requires l = -n-1");
  } else if (k > -static_cast<double>(n)) {
    if (l < k - 1.0 || l > (n + 1.0) / n * k)
      throw DomainError("GnSpec: l outside [k-1, (n+1)k/n]");
  } else {
    if (l > k - 1.0 || l < (n + 1.0) / n * k)
      throw DomainError("GnSpec: l outside [(n+1)k/n, k-1]");
  }
  if (p == n + 1.0 && l == (n + 1.0) / n * k)
    throw DomainError("GnSpec: l = (n+1)k/n is excluded at p = n+1");
}

GgnResult check_ggn(const TestFunction& u, const GnSpec& spec,
                    const QuadratureGrid& grid) {
  int n = grid.params.n;
  spec.validate(n);
  GgnResult res;
  bool branch_minus_n = (spec.k == -n && spec.l == -n - 1);
  double grad_weight, value_weight, value_power, outer;
  if (branch_minus_n) {
    grad_weight = spec.p - n - 1.0;
    value_weight = -n - 1.0;
    value_power = spec.s;
    outer = spec.p / spec.s;
  } else {
    double e = spec.p * spec.k - (spec.p - 1.0) * spec.l + n + 1.0 - spec.p;
    grad_weight = spec.p * spec.k - (spec.p - 1.0) * spec.l;
    value_weight = spec.l;
    value_power = spec.p * (n + spec.l + 1.0) / e;
    outer = e / (n + spec.l + 1.0);
  }
  double rhs = deterministic_sum(grid.size(), [&](size_t i) {
    thread_local Point g;
    auto x = grid.node(i);
    return grid.weights[i] * std::pow(x.back(), grad_weight) *
           std::pow(grad_norm_from(u, x, g), spec.p);
  });
  double lhs_inner = deterministic_sum(grid.size(), [&](size_t i) {
    auto x = grid.node(i);
    double v = std::abs(u.value(x));
    return v > 0 ? grid.weights[i] * std::pow(x.back(), value_weight) *
                       std::pow(v, value_power)
                 : 0.0;
  });
  if (!std::isfinite(lhs_inner) || !std::isfinite(rhs))
    throw IntegrabilityError("check_ggn: integral diverged");
  res.lhs = std::pow(lhs_inner, outer);
  res.rhs = rhs;
  res.ratio = rhs > 0 ? res.lhs / res.rhs : 0.0;
  res.margin = spec.c_est > 0 ? spec.c_est * res.rhs - res.lhs
                              : std::numeric_limits<double>::quiet_NaN();
  return res;
}

double check_ggn_gamma(const TestFunction& u, int n, double beta, double gamma,
                       const QuadratureGrid& grid) {
  if (beta != 1.0 && beta != 2.0)
    throw NoClosedFormError("check_ggn_gamma: sharp S known only for beta in {1,2}");
  double S = sharp_mu_star(n, beta);
  double lhs_weight = beta - gamma * (n + beta + 1.0) / (n + 1.0);
  double lhs_power = 2.0 * (n + beta + 1.0) / (n + 1.0);
  double energy_side = deterministic_sum(grid.size(), [&](size_t i) {
    thread_local Point g;
    auto x = grid.node(i);
    double gn = grad_norm_from(u, x, g);
    double t = x.back();
    double uv = u.value(x);
    return grid.weights[i] *
           (std::pow(t, 2.0 - gamma) * gn * gn -
            0.25 * gamma * (gamma - 2.0) * std::pow(t, -gamma) * uv * uv);
  });
  double norm_side = deterministic_sum(grid.size(), [&](size_t i) {
    auto x = grid.node(i);
    double v = std::abs(u.value(x));
    return v > 0 ? grid.weights[i] * std::pow(x.back(), lhs_weight) *
                       std::pow(v, lhs_power)
                 : 0.0;
  });
  if (!std::isfinite(energy_side) || !std::isfinite(norm_side))
    throw IntegrabilityError("check_ggn_gamma: integral diverged");
  return energy_side / S - std::pow(norm_side, (n + 1.0) / (n + beta + 1.0));
}

KelvinGaps kelvin_identity_check(const TestFunction& u, const Params& params,
                                 const QuadratureGrid& halfspace_grid,
                                 const QuadratureGrid& ball_grid) {
  const int n = params.n;
  const double beta = params.beta;
  const double a2 = -2.0 + (n - 1.0) * beta / (n + 1.0);
  const double q2 = 2.0 + 2.0 * beta / (n + 1.0);

  TestFunction psi = kelvin_pullback(u);
  Domain hs = Domain::half_space(n + 1);

  KelvinGaps gaps;
  gaps.energy_halfspace = dirichlet_energy(u, halfspace_grid, 2.0);
  double energy_ball = dirichlet_energy(psi, ball_grid, 2.0);
  gaps.energy_gap = std::abs(gaps.energy_halfspace - energy_ball);

  gaps.norm_halfspace = weighted_norm(u, halfspace_grid, a2, q2, hs);
  // ball side carries the weight (1/4 - |x + e/2|^2)^{a2}, not the distance
  Point c = zeros(n + 1);
  c.back() = -0.5;
  double norm_ball = deterministic_sum(ball_grid.size(), [&](size_t i) {
    auto x = ball_grid.node(i);
    double r2 = 0.0;
    for (size_t j = 0; j < x.size(); ++j) {
      double d = x[j] - c[j];
      r2 += d * d;
    }
    double w = 0.25 - r2;
    double v = std::abs(psi.value(x));
    return (v > 0 && w > 0)
               ? ball_grid.weights[i] * std::pow(w, a2) * std::pow(v, q2)
               : 0.0;
  });
  gaps.norm_gap = std::abs(gaps.norm_halfspace - norm_ball);
  return gaps;
}

}  // namespace hs
