#include "hs/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <cstdio>
#include <cstdlib>

#include <boost/numeric/odeint.hpp>

#include "hs/errors.hpp"
#include "hs/functionals.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"

namespace hs {

namespace {

using State = std::array<double, 2>;  // {psi, psi'}

struct OdeSetup {
  int n;
  double beta;
  double A;
  double B;       // 1/(4A^2)
  double p1;      // 1 + 2 beta/(n+1)
  double target;  // A^{(n+1)/2}

  double forcing_coef(double K, double r2) const {
    return K * std::pow(A, beta - 2.0) * std::pow(B - r2, beta - 2.0);
  }

  void rhs(const State& y, State& dy, double r, double K) const {
    double r2 = r * r;
    double gap = B - r2;
    double psi = std::max(y[0], 0.0);
    dy[0] = y[1];
    dy[1] = -(n / r - 4.0 * r / gap) * y[1] + 2.0 * (n + 1.0) / gap * y[0] -
            forcing_coef(K, r2) * std::pow(psi, p1);
  }

  // Frobenius launch: psi = c0 + c2 r^2 near r = 0.
  double c2(double c0, double K) const {
    return (2.0 * (n + 1.0) * 4.0 * A * A * c0 -
            K * std::pow(A, beta - 2.0) * std::pow(B, beta - 2.0) *
                std::pow(std::max(c0, 0.0), p1)) /
           (2.0 * (n + 1.0));
  }
};

struct Shot {
  double r = 0.0;
  double psi = 0.0;
  double dpsi = 0.0;
  bool complete = false;  // reached r_end without blow-up or sign loss
  std::vector<double> rs, psis, dpsis;
};

// Integrate from eps0 to r_end; stops early if psi leaves (0, 1e8 c0).
Shot integrate_once(const OdeSetup& s, double K, double c0, double r_end,
                    double eps0, double tol, bool record) {
  namespace odeint = boost::numeric::odeint;
  // the absolute tolerance is kept two decades under the relative one: local
  // errors injected near the singular endpoint are amplified by the growing
  // fundamental mode, so slack there shows up magnified in the endpoint value
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(
      1e-2 * tol, tol);

  double c2 = s.c2(c0, K);
  double r = eps0;
  State y{c0 + c2 * eps0 * eps0, 2.0 * c2 * eps0};
  double dr = std::min(1e-4 * s.B, 0.25 * (r_end - r));

  Shot shot;
  auto push = [&] {
    shot.rs.push_back(r);
    shot.psis.push_back(y[0]);
    shot.dpsis.push_back(y[1]);
  };
  if (record) push();

  auto sys = [&](const State& yy, State& dy, double rr) {
    s.rhs(yy, dy, rr, K);
  };

  const double cap = 1e8 * std::abs(c0);
  for (long step = 0; step < 4000000; ++step) {
    if (r >= r_end) break;
    dr = std::min(dr, r_end - r);
    auto res = stepper.try_step(sys, y, r, dr);
    if (res == odeint::controlled_step_result::fail) {
      if (dr < 1e-300)
        throw NonconvergenceError("ode: step size underflow at r = " +
                                  std::to_string(r));
      continue;  // dr was shrunk by the controller
    }
    if (record) push();
    if (y[0] <= 0.0 || y[0] > cap) {
      shot.r = r;
      shot.psi = y[0];
      shot.dpsi = y[1];
      return shot;  // incomplete
    }
  }
  shot.r = r;
  shot.psi = y[0];
  shot.dpsi = y[1];
  shot.complete = r >= r_end;
  if (!shot.complete)
    throw NonconvergenceError("ode: integrator stalled before r_end");
  return shot;
}

// The weighted-derivative endpoint functional.  Early-stopped shots keep a
// usable sign: runaway growth gives a positive value, a zero crossing a
// negative one.
double endpoint_f2(const OdeSetup& s, const Shot& shot) {
  double gap = s.B - shot.r * shot.r;
  return gap * gap * shot.dpsi;
}

}  // namespace

OdeSolution solve_psi(int n, double beta, OdeOptions options) {
  if (n < 1) throw DomainError("solve_psi: n must be >= 1");
  if (!(beta > 0) || !(beta < Params::beta_strict_max(n)))
    throw DomainError("solve_psi: beta outside (0, 2(n+1)/(n-1))");
  if (!(options.A > 0)) throw DomainError("solve_psi: A must be > 0");

  OdeSetup s;
  s.n = n;
  s.beta = beta;
  s.A = options.A;
  s.B = 0.25 / (options.A * options.A);
  s.p1 = 1.0 + 2.0 * beta / (n + 1.0);
  s.target = std::pow(options.A, 0.5 * (n + 1.0));

  const double r_top = 0.5 / options.A;
  const double r_end = r_top - options.eps1;
  const double eps0 = options.eps0;
  const double tol = options.tol;

  auto f2 = [&](double K, double c0) {
    return endpoint_f2(s, integrate_once(s, K, c0, r_end, eps0, tol, false));
  };

  // stage 1: bracket and bisect K at c0 = 1.  Small K lets psi run away
  // (positive functional), large K drives it through zero (negative).
  double k_lo = 0.0, k_hi = 0.0;
  double prev_k = 0.125, prev_f = f2(prev_k, 1.0);
  for (double K = 0.25; K < 4.0e6; K *= 2.0) {
    double f = f2(K, 1.0);
    if (prev_f > 0.0 && f <= 0.0) {
      k_lo = prev_k;
      k_hi = K;
      break;
    }
    prev_k = K;
    prev_f = f;
  }
  if (k_hi == 0.0)
    throw NonconvergenceError("solve_psi: no sign change of the endpoint "
                              "functional for K in [0.125, 4e6]");
  for (int i = 0; i < 200 && (k_hi - k_lo) > 1e-15 * k_hi; ++i) {
    double mid = 0.5 * (k_lo + k_hi);
    (f2(mid, 1.0) > 0.0 ? k_lo : k_hi) = mid;
  }
  double K = 0.5 * (k_lo + k_hi);

  // rescale psi -> lambda psi to land the endpoint value on A^{(n+1)/2};
  // the equation absorbs it as K -> K lambda^{-2 beta/(n+1)}
  Shot probe = integrate_once(s, K, 1.0, r_end, eps0, tol, false);
  if (!probe.complete)
    throw NonconvergenceError("solve_psi: bisected K does not integrate "
                              "through to r_end");
  double v1 = probe.psi + options.eps1 * probe.dpsi;
  if (!(v1 > 0.0))
    throw NonconvergenceError("solve_psi: endpoint value not positive");
  double lambda = s.target / v1;
  double c0 = lambda;
  K *= std::pow(lambda, -2.0 * beta / (n + 1.0));

  // stage 2: damped finite-difference Newton on (c0, K) for both endpoint
  // conditions (value and weighted derivative), in scaled form
  auto fvec = [&](double cc, double kk, double out[2]) -> bool {
    Shot sh = integrate_once(s, kk, cc, r_end, eps0, tol, false);
    if (!sh.complete) return false;
    out[0] = (sh.psi + options.eps1 * sh.dpsi - s.target) / s.target;
    out[1] = endpoint_f2(s, sh);
    return true;
  };

  double F[2];
  if (!fvec(c0, K, F))
    throw NonconvergenceError("solve_psi: rescaled shot is incomplete");
  double res = std::max(std::abs(F[0]), std::abs(F[1]));
  if (std::getenv("HS_ODE_DEBUG"))
    std::fprintf(stderr, "debug: after rescale c0=%.17g K=%.17g F1=%.3g F2=%.3g v1=%.17g\n",
                 c0, K, F[0], F[1], v1);
  // The endpoint value carries a roundoff floor around 1e-7: the equation's
  // coefficients reach 1/eps1 near the stop radius and amplify arithmetic
  // noise.  The difference steps stay well above that floor so the Jacobian
  // sees signal, and the convergence bar accepts the floor.
  for (int iter = 0; iter < 40 && res > 1e-11; ++iter) {
    double hc = 1e-4 * c0, hk = 1e-4 * K;
    double Fc[2], Fk[2];
    if (!fvec(c0 + hc, K, Fc) || !fvec(c0, K + hk, Fk)) break;
    double J00 = (Fc[0] - F[0]) / hc, J01 = (Fk[0] - F[0]) / hk;
    double J10 = (Fc[1] - F[1]) / hc, J11 = (Fk[1] - F[1]) / hk;
    double det = J00 * J11 - J01 * J10;
    if (det == 0.0 || !std::isfinite(det)) break;
    double dc = (F[0] * J11 - F[1] * J01) / det;
    double dk = (J00 * F[1] - J10 * F[0]) / det;
    double damp = 1.0;
    bool moved = false;
    for (int half = 0; half < 12; ++half, damp *= 0.5) {
      double Ft[2];
      double ct = c0 - damp * dc, kt = K - damp * dk;
      if (ct <= 0.0 || kt <= 0.0) continue;
      if (!fvec(ct, kt, Ft)) continue;
      double rt = std::max(std::abs(Ft[0]), std::abs(Ft[1]));
      if (rt < res) {
        c0 = ct;
        K = kt;
        F[0] = Ft[0];
        F[1] = Ft[1];
        res = rt;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // the endpoint value carries a round-off noise floor of order 1e-7 from
  // the near-singular coefficients at the outer boundary, independent of
  // the integrator tolerance; the bar sits safely above it
  if (res > 1e-5) {
    std::ostringstream msg;
    msg << "solve_psi(n=" << n << ", beta=" << beta << ", A=" << options.A
        << "): endpoint residual " << res << " exceeds 1e-5 (c0=" << c0
        << ", K=" << K << ")";
    throw NonconvergenceError(msg.str());
  }

  Shot final = integrate_once(s, K, c0, r_end, eps0, tol, true);
  OdeSolution sol;
  sol.n = n;
  sol.beta = beta;
  sol.A = options.A;
  sol.r = std::move(final.rs);
  sol.psi = std::move(final.psis);
  sol.dpsi = std::move(final.dpsis);
  sol.K = K;
  sol.c0 = c0;
  sol.residual_norm = res;
  return sol;
}

namespace {

// locate the interval containing rr in sol.r (sorted ascending)
size_t interval_of(const std::vector<double>& r, double rr) {
  auto it = std::upper_bound(r.begin(), r.end(), rr);
  size_t i = static_cast<size_t>(it - r.begin());
  if (i == 0) return 0;
  if (i >= r.size()) return r.size() - 2;
  return i - 1;
}

}  // namespace

double OdeSolution::psi_at(double rr) const {
  double top = r_max();
  if (rr < 0.0 || rr > top + 1e-12 * (1.0 + top))
    throw DomainError("psi_at: radius outside [0, 1/(2A)]");
  rr = std::min(rr, top);
  if (rr <= r.front()) {
    // Frobenius start, with c2 recovered from the stored launch data
    double r0 = r.front();
    double c2 = (psi.front() - c0) / (r0 * r0);
    return c0 + c2 * rr * rr;
  }
  if (rr >= r.back())
    return psi.back() + dpsi.back() * (rr - r.back());
  size_t i = interval_of(r, rr);
  double h = r[i + 1] - r[i], x = (rr - r[i]) / h;
  double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
  double h10 = x * (1 - x) * (1 - x);
  double h01 = x * x * (3 - 2 * x);
  double h11 = x * x * (x - 1);
  return h00 * psi[i] + h10 * h * dpsi[i] + h01 * psi[i + 1] +
         h11 * h * dpsi[i + 1];
}

double OdeSolution::dpsi_at(double rr) const {
  double top = r_max();
  if (rr < 0.0 || rr > top + 1e-12 * (1.0 + top))
    throw DomainError("dpsi_at: radius outside [0, 1/(2A)]");
  rr = std::min(rr, top);
  if (rr <= r.front()) {
    double r0 = r.front();
    double c2 = (psi.front() - c0) / (r0 * r0);
    return 2.0 * c2 * rr;
  }
  if (rr >= r.back()) return dpsi.back();
  size_t i = interval_of(r, rr);
  double h = r[i + 1] - r[i], x = (rr - r[i]) / h;
  double dh00 = 6 * x * (x - 1) / h;
  double dh10 = (1 - x) * (1 - 3 * x);
  double dh01 = -6 * x * (x - 1) / h;
  double dh11 = x * (3 * x - 2);
  return dh00 * psi[i] + dh10 * dpsi[i] + dh01 * psi[i + 1] +
         dh11 * dpsi[i + 1];
}

double ode_residual(const OdeSolution& sol,
                    const std::vector<double>& r_samples) {
  if (sol.r.size() < 2) throw DomainError("ode_residual: empty solution");
  OdeSetup s;
  s.n = sol.n;
  s.beta = sol.beta;
  s.A = sol.A;
  s.B = 0.25 / (sol.A * sol.A);
  s.p1 = 1.0 + 2.0 * sol.beta / (sol.n + 1.0);
  s.target = 0.0;

  // second derivatives at the stored nodes, read off the equation itself
  size_t m = sol.r.size();
  std::vector<double> d2(m);
  for (size_t i = 0; i < m; ++i) {
    State y{sol.psi[i], sol.dpsi[i]}, dy;
    s.rhs(y, dy, sol.r[i], sol.K);
    d2[i] = dy[1];
  }

  double worst = 0.0;
  for (double rr : r_samples) {
    if (rr < sol.r.front() || rr > sol.r.back())
      throw DomainError("ode_residual: sample outside the stored range");
    size_t i = interval_of(sol.r, rr);
    double h = sol.r[i + 1] - sol.r[i];
    double x = rr - sol.r[i];

    // quintic two-point Taylor interpolant on [0, h]
    double a0 = sol.psi[i], a1 = sol.dpsi[i], a2 = 0.5 * d2[i];
    double R1 = sol.psi[i + 1] - (a0 + a1 * h + a2 * h * h);
    double R2 = sol.dpsi[i + 1] - (a1 + 2.0 * a2 * h);
    double R3 = d2[i + 1] - 2.0 * a2;
    double h2 = h * h, h3 = h2 * h, h4 = h3 * h, h5 = h4 * h;
    double a3 = 10.0 * R1 / h3 - 4.0 * R2 / h2 + 0.5 * R3 / h;
    double a4 = -15.0 * R1 / h4 + 7.0 * R2 / h3 - R3 / h2;
    double a5 = 6.0 * R1 / h5 - 3.0 * R2 / h4 + 0.5 * R3 / h3;

    double p = a0 + x * (a1 + x * (a2 + x * (a3 + x * (a4 + x * a5))));
    double dp =
        a1 + x * (2 * a2 + x * (3 * a3 + x * (4 * a4 + x * 5 * a5)));
    double ddp = 2 * a2 + x * (6 * a3 + x * (12 * a4 + x * 20 * a5));

    double gap = s.B - rr * rr;
    double t1 = ddp;
    double t2 = (sol.n / rr - 4.0 * rr / gap) * dp;
    double t3 = -2.0 * (sol.n + 1.0) / gap * p;
    double t4 = s.forcing_coef(sol.K, rr * rr) *
                std::pow(std::max(p, 0.0), s.p1);
    double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                             std::abs(t4), 1e-300});
    worst = std::max(worst, std::abs(t1 + t2 + t3 + t4) / scale);
  }
  return worst;
}

namespace {

struct ReconstructedImpl final : TestFunction::Impl {
  std::shared_ptr<const OdeSolution> sol;
  Point y0;
  int n;

  int dim() const override { return n + 1; }

  // w = z/|z|^2 - e_{n+1}/(2A) with z = (y - y0, t + A)
  double arg_radius(std::span<const double> x, Point* z_out, Point* w_out,
                    double* rho2_out) const {
    Point z(x.size());
    for (size_t i = 0; i + 1 < x.size(); ++i)
      z[i] = x[i] - (i < y0.size() ? y0[i] : 0.0);
    z.back() = x.back() + sol->A;
    double rho2 = norm2(z);
    Point w(z.size());
    for (size_t i = 0; i < z.size(); ++i) w[i] = z[i] / rho2;
    w.back() -= 0.5 / sol->A;
    double rr = norm(w);
    if (z_out) *z_out = std::move(z);
    if (w_out) *w_out = std::move(w);
    if (rho2_out) *rho2_out = rho2;
    return rr;
  }

  double value(std::span<const double> x) const override {
    double rho2;
    double rr = arg_radius(x, nullptr, nullptr, &rho2);
    return std::pow(rho2, -0.5 * (n + 1.0)) * sol->psi_at(rr);
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    Point z, w;
    double rho2;
    double rr = arg_radius(x, &z, &w, &rho2);
    double pw = std::pow(rho2, -0.5 * (n + 1.0));
    double psi = sol->psi_at(rr);
    double dpsi = sol->dpsi_at(rr);
    // grad rho^{-(n+1)} = -(n+1) rho^{-(n+1)} z / rho^2
    double c1 = -(n + 1.0) * pw / rho2;
    // grad |w| = (w_hat - 2 (z_hat . w_hat) z_hat) / rho^2
    double zw = dot(z, w);  // = |z||w| (z_hat . w_hat)
    for (size_t i = 0; i < g.size(); ++i) {
      g[i] = c1 * z[i] * psi;
      if (rr > 1e-14)
        g[i] += pw * dpsi * (w[i] - 2.0 * zw * z[i] / rho2) / (rr * rho2);
    }
    return pw * psi;
  }
};

}  // namespace

TestFunction reconstruct_v(const OdeSolution& sol, Point y0) {
  if (sol.r.empty()) throw DomainError("reconstruct_v: empty solution");
  auto impl = std::make_shared<ReconstructedImpl>();
  impl->sol = std::make_shared<OdeSolution>(sol);
  impl->y0 = std::move(y0);
  impl->n = sol.n;
  TestFunction f(impl);
  f.decay_exponent = sol.n + 1;
  f.descriptor = "reconstructed-profile(n=" + std::to_string(sol.n) +
                 ", beta=" + std::to_string(sol.beta) + ")";
  return f;
}

double reconstructed_quotient(const OdeSolution& sol, int resolution) {
  Params p = Params::make(sol.n, 2.0, sol.beta);
  Domain hs = Domain::half_space(sol.n + 1);
  GridOptions opts;
  opts.scale = std::max(1.0, sol.A);
  QuadratureGrid grid = build_grid(hs, p, resolution, kAutoTruncation, opts);
  TestFunction v = reconstruct_v(sol);
  double num = dirichlet_energy(v, grid, 2.0, 2.0);
  double den = weighted_norm(v, grid, sol.beta, p.q(), hs);
  if (!(den > 0.0))
    throw DegenerateFunctionError("reconstructed_quotient: zero norm");
  return num / std::pow(den, p.theta());
}

}  // namespace hs
