#include "hs/varmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "json.hpp"

#include "hs/errors.hpp"
#include "hs/extremals.hpp"
#include "hs/functionals.hpp"
#include "hs/kelvin.hpp"
#include "hs/special.hpp"

namespace hs {

namespace {

using json = nlohmann::json;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------
// trial function construction

struct PowerBumpImpl final : TestFunction::Impl {
  Point center;
  double a = 0.0, b = 1.0, gamma = 1.0;

  int dim() const override { return static_cast<int>(center.size()); }

  double shape(double r) const {
    if (r <= a || r >= b) return 0.0;
    double half = 0.5 * (b - a);
    return std::pow((r - a) * (b - r) / (half * half), gamma);
  }

  double value(std::span<const double> x) const override {
    return shape(dist(x, center));
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    double r = dist(x, center);
    std::fill(g.begin(), g.end(), 0.0);
    if (r <= a || r >= b || r < 1e-300) return shape(r);
    double half = 0.5 * (b - a);
    double s = (r - a) * (b - r) / (half * half);
    double v = std::pow(s, gamma);
    double dv = gamma * std::pow(s, gamma - 1.0) * (a + b - 2.0 * r) /
                (half * half);
    for (size_t i = 0; i < g.size(); ++i)
      g[i] = dv * (x[i] - center[i]) / r;
    return v;
  }
};

TestFunction make_power_bump(Point center, double a, double b, double gamma) {
  auto impl = std::make_shared<PowerBumpImpl>();
  impl->center = std::move(center);
  impl->a = a;
  impl->b = b;
  impl->gamma = gamma;
  TestFunction f(impl);
  f.support_radius = b + norm(impl->center);
  return f;
}

// knot layout of the radial-profile trial for a domain
struct ProfileLayout {
  Point center;
  std::vector<double> knots;     // full knot vector, starts at 0
  std::vector<size_t> free_idx;  // indices into values that the optimizer owns
};

ProfileLayout profile_layout(const Domain& d, double hi_unbounded, int m) {
  ProfileLayout L;
  auto quadratic_knots = [&](double hi) {
    for (int j = 0; j < m; ++j) {
      double f = static_cast<double>(j) / (m - 1);
      L.knots.push_back(hi * f * f);
    }
    for (int j = 0; j + 1 < m; ++j) L.free_idx.push_back(j);
  };
  auto uniform_knots = [&](double hi) {
    for (int j = 0; j < m; ++j)
      L.knots.push_back(hi * static_cast<double>(j) / (m - 1));
    for (int j = 0; j + 1 < m; ++j) L.free_idx.push_back(j);
  };
  auto shell_knots = [&](double lo, double hi) {
    // zero up to lo, then free interior values on [lo, hi]
    L.knots.push_back(0.0);
    for (int j = 0; j < m; ++j)
      L.knots.push_back(lo + (hi - lo) * static_cast<double>(j) / (m - 1));
    for (int j = 2; j < m; ++j) L.free_idx.push_back(j);
  };
  switch (d.kind) {
    case DomainKind::ball:
      L.center = d.center;
      uniform_knots(d.radius);
      break;
    case DomainKind::punctured_ball:
      L.center = d.center;
      quadratic_knots(d.radius);
      break;
    case DomainKind::annulus:
      L.center = d.center;
      shell_knots(d.r_in, d.r_out);
      break;
    case DomainKind::exterior_ball:
      L.center = d.center;
      shell_knots(d.radius, hi_unbounded);
      break;
    case DomainKind::punctured_space:
      L.center = zeros(d.dim);
      quadratic_knots(hi_unbounded);
      break;
    default:
      throw DomainError("minimize: no radial profile trial on " +
                        d.describe());
  }
  return L;
}

// Radial grid whose panel edges sit exactly on the profile knots.  With
// misaligned panels the Gauss sums see the profile kinks mid-panel, the
// discrete quotient develops spurious valleys, and the optimizer happily
// descends into them (quotients below the ball constant, error estimates
// of order one).  Aligned panels integrate |f'|^2 r^n exactly and leave
// only the smooth weight factors to the Gauss rule.
QuadratureGrid profile_grid(const Domain& d, const Params& p,
                            const ProfileLayout& L, int order, int subdiv) {
  size_t start =
      (d.kind == DomainKind::annulus || d.kind == DomainKind::exterior_ball)
          ? 1   // the profile is identically zero below the inner radius
          : 0;
  std::vector<double> k(L.knots.begin() + static_cast<long>(start),
                        L.knots.end());
  bool inner_deep = d.kind == DomainKind::punctured_ball ||
                    d.kind == DomainKind::punctured_space;
  bool inner_mild = d.kind == DomainKind::annulus ||
                    d.kind == DomainKind::exterior_ball;
  bool outer_sing = d.kind == DomainKind::ball ||
                    d.kind == DomainKind::punctured_ball ||
                    d.kind == DomainKind::annulus;
  std::vector<double> edges{k.front()};
  for (size_t j = 0; j + 1 < k.size(); ++j) {
    bool first = j == 0, last = j + 2 == k.size();
    std::vector<double> sub;
    if (first && inner_deep)
      sub = graded_edges(k[j], k[j + 1], 12, 1e-10, true);
    else if (first && inner_mild)
      sub = graded_edges(k[j], k[j + 1], 6, 1e-4, true);
    else if (last && outer_sing)
      sub = graded_edges(k[j], k[j + 1], 6, 1e-4, false);
    else
      sub = uniform_edges(k[j], k[j + 1], subdiv);
    edges.insert(edges.end(), sub.begin() + 1, sub.end());
  }
  std::vector<double> rr, rw;
  append_panels(edges, order, rr, rw);

  QuadratureGrid g;
  g.reduction = GridReduction::radial1d;
  g.dim = d.dim;
  g.domain = d;
  g.params = p;
  g.resolution = static_cast<int>(edges.size()) - 1;
  g.options.order = order;
  double area = sphere_area(d.dim);
  g.nodes.reserve(rr.size() * static_cast<size_t>(d.dim));
  g.weights.reserve(rr.size());
  for (size_t i = 0; i < rr.size(); ++i) {
    for (int c = 0; c < d.dim; ++c)
      g.nodes.push_back(L.center[static_cast<size_t>(c)] +
                        (c + 1 == d.dim ? rr[i] : 0.0));
    g.weights.push_back(area * std::pow(rr[i], d.dim - 1) * rw[i]);
  }
  return g;
}

TestFunction profile_function(const ProfileLayout& L,
                              const std::vector<double>& free_vals) {
  RadialProfileData data;
  data.center = L.center;
  data.knots = L.knots;
  data.values.assign(L.knots.size(), 0.0);
  for (size_t i = 0; i < L.free_idx.size(); ++i)
    data.values[L.free_idx[i]] = free_vals[i];
  return make_radial_profile(std::move(data));
}

json profile_json(const ProfileLayout& L, const std::vector<double>& vals) {
  json j;
  j["type"] = "radial-profile";
  j["center"] = L.center;
  j["knots"] = L.knots;
  std::vector<double> values(L.knots.size(), 0.0);
  for (size_t i = 0; i < L.free_idx.size(); ++i)
    values[L.free_idx[i]] = vals[i];
  j["values"] = values;
  return j;
}

// parametric family: theta -> function, with box bounds
struct Family {
  std::vector<double> theta0;
  std::vector<double> lo, hi;
  std::function<TestFunction(const std::vector<double>&)> make;
  std::function<json(const std::vector<double>&)> describe;
};

std::vector<double> clamp_box(const Family& fam, std::vector<double> th) {
  for (size_t i = 0; i < th.size(); ++i)
    th[i] = std::min(std::max(th[i], fam.lo[i]), fam.hi[i]);
  return th;
}

// cutoff closed-form half-space profile (beta in {1,2})
Family halfspace_family(int n, double beta, double T) {
  Family f;
  ExtremalFamily fam =
      beta == 1.0 ? ExtremalFamily::beta1_u : ExtremalFamily::beta2_u;
  f.theta0 = {0.0, 0.25 * T, 0.1 * T};
  f.lo = {-1.5, 1.0, 1.0};
  f.hi = {1.5, 0.6 * T, 0.3 * T};
  f.make = [n, fam](const std::vector<double>& th) {
    ExtremalParams p;
    p.A = std::pow(10.0, th[0]);
    TestFunction base = make_extremal(fam, p, n);
    int dim = n + 1;
    return radial_cutoff(base, zeros(dim), th[1], th[2]);
  };
  f.describe = [n, beta, fam](const std::vector<double>& th) {
    json j;
    j["type"] = "cutoff-extremal";
    j["family"] = fam == ExtremalFamily::beta1_u ? "beta1_u" : "beta2_u";
    j["n"] = n;
    j["beta"] = beta;
    j["A"] = std::pow(10.0, th[0]);
    j["center"] = zeros(n + 1);
    j["r0"] = th[1];
    j["w"] = th[2];
    return j;
  };
  return f;
}

// cutoff punctured-space profile (n >= 2)
Family punctured_family(int n, double beta, Point center, double R_eff) {
  Family f;
  f.theta0 = {-2.0, 0.5, 0.2};
  f.lo = {-6.0, 0.05, 0.05};
  f.hi = {0.5, 0.7, 0.28};
  f.make = [n, beta, center, R_eff](const std::vector<double>& th) {
    ExtremalParams p;
    p.A = std::pow(10.0, th[0]);
    TestFunction base = make_extremal(ExtremalFamily::punctured, p, n, beta);
    return radial_cutoff(base, center, th[1] * R_eff, th[2] * R_eff);
  };
  f.describe = [n, beta, center, R_eff](const std::vector<double>& th) {
    json j;
    j["type"] = "cutoff-extremal";
    j["family"] = "punctured";
    j["n"] = n;
    j["beta"] = beta;
    j["A"] = std::pow(10.0, th[0]);
    j["center"] = center;
    j["r0"] = th[1] * R_eff;
    j["w"] = th[2] * R_eff;
    return j;
  };
  return f;
}

Family power_bump_family(Point center, double lo, double hi) {
  Family f;
  double L = hi - lo;
  f.theta0 = {lo + 0.1 * L, hi - 0.1 * L, 1.5};
  f.lo = {lo, lo + 0.1 * L, 0.6};
  f.hi = {hi - 0.1 * L, hi, 4.0};
  f.make = [center](const std::vector<double>& th) {
    double a = th[0], b = std::max(th[1], th[0] + 1e-8);
    return make_power_bump(center, a, b, th[2]);
  };
  f.describe = [center](const std::vector<double>& th) {
    json j;
    j["type"] = "power-bump";
    j["center"] = center;
    j["a"] = th[0];
    j["b"] = std::max(th[1], th[0] + 1e-8);
    j["gamma"] = th[2];
    return j;
  };
  return f;
}

// ---------------------------------------------------------------------
// optimizers

struct Evaluator {
  const Domain& domain;
  const Params& params;
  const QuadratureGrid& grid;
  int budget;
  int used = 0;

  bool exhausted() const { return used >= budget; }

  double eval(const TestFunction& u) {
    if (exhausted()) return kInf;
    ++used;
    try {
      double J = rayleigh_on_grid(u, domain, params, grid).J;
      return std::isfinite(J) ? J : kInf;
    } catch (const std::exception&) {
      return kInf;
    }
  }
};

struct ProfileResult {
  std::vector<double> x;
  double J = kInf;
  bool converged = false;
};

// Spectral (Barzilai-Borwein) projected gradient on the nonnegative
// orthant, with a nonmonotone backtracking line search.  The quotient is
// scale invariant, so the iterates are free to drift in overall scale; the
// caller normalizes the witness at the end.
ProfileResult projected_gradient(Evaluator& ev, const ProfileLayout& L,
                                 std::vector<double> x) {
  auto f = [&](const std::vector<double>& v) {
    double mx = *std::max_element(v.begin(), v.end());
    if (!(mx > 0.0)) return kInf;
    return ev.eval(profile_function(L, v));
  };

  size_t d = x.size();
  ProfileResult best;
  best.x = x;
  best.J = f(x);
  double J = best.J;

  std::vector<double> g(d), g_prev(d), x_prev(d);
  std::vector<double> recent;  // reference values for the nonmonotone test
  double alpha = 0.0;
  bool have_prev = false;

  while (ev.budget - ev.used > static_cast<int>(d) + 4) {
    // forward-difference gradient at x
    double gn2 = 0.0;
    for (size_t i = 0; i < d; ++i) {
      double h = 1e-6 * (1.0 + std::abs(x[i]));
      std::vector<double> xp = x;
      xp[i] += h;
      double Jp = f(xp);
      g[i] = std::isfinite(Jp) ? (Jp - J) / h : 0.0;
      gn2 += g[i] * g[i];
    }
    if (!(gn2 > 1e-22 * (1.0 + J * J))) {
      best.converged = true;
      break;
    }

    if (have_prev) {
      // BB1 step: (s, s) / (s, y)
      double ss = 0.0, sy = 0.0;
      for (size_t i = 0; i < d; ++i) {
        double s = x[i] - x_prev[i], y = g[i] - g_prev[i];
        ss += s * s;
        sy += s * y;
      }
      alpha = sy > 0.0 ? ss / sy : 10.0 * alpha;
    } else {
      alpha = 0.1 / std::sqrt(gn2);
    }
    double xn = 1.0;
    for (double v : x) xn = std::max(xn, std::abs(v));
    alpha = std::min(std::max(alpha, 1e-12), 1e3 * xn / std::sqrt(gn2));

    recent.push_back(J);
    if (recent.size() > 8) recent.erase(recent.begin());
    double ref = *std::max_element(recent.begin(), recent.end());

    x_prev = x;
    g_prev = g;
    bool accepted = false;
    for (int bt = 0; bt < 20 && !ev.exhausted(); ++bt) {
      std::vector<double> xt(d);
      double decrease = 0.0;  // g . (x - xt), >= 0 after projection
      for (size_t i = 0; i < d; ++i) {
        xt[i] = std::max(0.0, x[i] - alpha * g[i]);
        decrease += g[i] * (x[i] - xt[i]);
      }
      double Jt = f(xt);
      if (Jt <= ref - 1e-4 * decrease && std::isfinite(Jt)) {
        x = std::move(xt);
        J = Jt;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      best.converged = true;
      break;
    }
    have_prev = true;
    if (J < best.J) {
      best.J = J;
      best.x = x;
    }
  }

  // the quotient is invariant under scaling, so report a sup-normalized
  // witness (its J is bitwise what replaying the witness recomputes)
  double mx = *std::max_element(best.x.begin(), best.x.end());
  if (mx > 0.0 && mx != 1.0) {
    for (double& v : best.x) v /= mx;
    double Jn = f(best.x);
    if (std::isfinite(Jn)) best.J = Jn;
  }
  return best;
}

struct NmResult {
  std::vector<double> theta;
  double J = kInf;
  bool converged = false;
};

NmResult nelder_mead(Evaluator& ev, const Family& fam) {
  auto f = [&](const std::vector<double>& th) {
    return ev.eval(fam.make(clamp_box(fam, th)));
  };
  size_t d = fam.theta0.size();
  std::vector<std::vector<double>> S(d + 1, fam.theta0);
  for (size_t i = 0; i < d; ++i)
    S[i + 1][i] += 0.15 * (fam.hi[i] - fam.lo[i]);
  std::vector<double> val(d + 1);
  for (size_t i = 0; i <= d; ++i) val[i] = f(S[i]);

  NmResult out;
  while (!ev.exhausted()) {
    // order the simplex
    std::vector<size_t> idx(d + 1);
    for (size_t i = 0; i <= d; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return val[a] < val[b]; });
    size_t lo = idx[0], hi = idx[d], nh = idx[d - 1];
    double spread = 0.0;
    for (size_t i = 0; i < d; ++i)
      spread = std::max(spread, std::abs(S[lo][i] - S[hi][i]) /
                                    (fam.hi[i] - fam.lo[i]));
    if (spread < 1e-9 || !std::isfinite(val[hi])) {
      out.converged = spread < 1e-9;
      break;
    }
    std::vector<double> cen(d, 0.0);
    for (size_t k = 0; k <= d; ++k)
      if (k != hi)
        for (size_t i = 0; i < d; ++i) cen[i] += S[k][i] / d;

    auto blend = [&](double c) {
      std::vector<double> p(d);
      for (size_t i = 0; i < d; ++i)
        p[i] = cen[i] + c * (cen[i] - S[hi][i]);
      return p;
    };
    auto refl = blend(1.0);
    double fr = f(refl);
    if (fr < val[lo]) {
      auto exp_ = blend(2.0);
      double fe = f(exp_);
      if (fe < fr) {
        S[hi] = exp_;
        val[hi] = fe;
      } else {
        S[hi] = refl;
        val[hi] = fr;
      }
    } else if (fr < val[nh]) {
      S[hi] = refl;
      val[hi] = fr;
    } else {
      auto con = blend(fr < val[hi] ? 0.5 : -0.5);
      double fc = f(con);
      if (fc < std::min(fr, val[hi])) {
        S[hi] = con;
        val[hi] = fc;
      } else {
        for (size_t k = 0; k <= d; ++k) {
          if (k == lo) continue;
          for (size_t i = 0; i < d; ++i)
            S[k][i] = 0.5 * (S[k][i] + S[lo][i]);
          val[k] = f(S[k]);
        }
      }
    }
  }
  size_t bi = 0;
  for (size_t i = 1; i <= d; ++i)
    if (val[i] < val[bi]) bi = i;
  out.theta = clamp_box(fam, S[bi]);
  out.J = val[bi];
  return out;
}

std::vector<double> initial_profile(const ProfileLayout& L) {
  double hi = L.knots.back();
  double lo = L.knots[L.free_idx.front()];
  std::vector<double> x;
  x.reserve(L.free_idx.size());
  bool free_at_zero = L.knots[L.free_idx.front()] == 0.0;
  for (size_t i : L.free_idx) {
    double r = L.knots[i];
    double v = free_at_zero
                   ? std::cos(0.5 * 3.14159265358979323846 * r / hi)
                   : std::sin(3.14159265358979323846 * (r - lo) / (hi - lo));
    x.push_back(std::max(v, 1e-3));
  }
  return x;
}

}  // namespace

MuEstimate minimize(const Domain& domain, const Params& params,
                    MinimizeOptions options) {
  if (domain.kind == DomainKind::cone)
    throw DomainError("minimize: the cone has no radial trial space here");
  if (options.budget < 50)
    throw DomainError("minimize: budget must be at least 50");

  GridOptions gopts;
  gopts.reduction = domain.kind == DomainKind::half_space
                        ? GridReduction::meridian2d
                        : GridReduction::radial1d;
  QuadratureGrid grid = build_grid(domain, params, options.resolution,
                                   options.truncation, gopts);

  double hi_unbounded = grid.truncation;
  if (domain.kind == DomainKind::punctured_space)
    hi_unbounded = std::min(hi_unbounded, 16.0);

  Evaluator ev{domain, params, grid, options.budget};

  double bestJ = kInf;
  json best_witness;
  bool converged = false;
  bool best_is_profile = false;

  bool want_profile = options.trial != TrialSpace::parametric;
  // no radial trial about an interior point of the half-space: its kinks
  // land on spheres that no meridian grid can align panels with
  if (domain.kind == DomainKind::half_space &&
      options.trial == TrialSpace::both)
    want_profile = false;
  bool want_param = options.trial != TrialSpace::radial_profile;

  // the parametric trial spaces available for this domain
  std::vector<Family> families;
  if (want_param) {
    switch (domain.kind) {
      case DomainKind::half_space:
        if (params.beta == 1.0 || params.beta == 2.0)
          families.push_back(
              halfspace_family(params.n, params.beta, grid.truncation));
        break;
      case DomainKind::punctured_ball:
        if (params.n >= 2)
          families.push_back(punctured_family(params.n, params.beta,
                                              domain.center, domain.radius));
        break;
      case DomainKind::punctured_space:
        if (params.n >= 2)
          families.push_back(punctured_family(params.n, params.beta,
                                              zeros(domain.dim),
                                              hi_unbounded));
        break;
      case DomainKind::ball:
        families.push_back(
            power_bump_family(domain.center, 0.0, domain.radius));
        break;
      case DomainKind::annulus:
        families.push_back(
            power_bump_family(domain.center, domain.r_in, domain.r_out));
        break;
      case DomainKind::exterior_ball:
        families.push_back(
            power_bump_family(domain.center, domain.radius, hi_unbounded));
        break;
      default:
        break;
    }
  }

  int profile_budget = options.budget;
  if (want_profile && !families.empty())
    profile_budget = (options.budget * 55) / 100;

  std::optional<ProfileLayout> layout;
  if (want_profile) {
    layout = profile_layout(domain, hi_unbounded, options.knots);
    QuadratureGrid pgrid = profile_grid(domain, params, *layout, 8, 2);
    Evaluator pev{domain, params, pgrid, profile_budget};
    ProfileResult pr = projected_gradient(pev, *layout, initial_profile(*layout));
    ev.used += pev.used;
    if (pr.J < bestJ) {
      bestJ = pr.J;
      best_witness = profile_json(*layout, pr.x);
      converged = pr.converged;
      best_is_profile = true;
    }
  }

  for (const Family& fam : families) {
    Evaluator fev{domain, params, grid, options.budget - ev.used};
    NmResult nm = nelder_mead(fev, fam);
    ev.used += fev.used;
    if (nm.J < bestJ) {
      bestJ = nm.J;
      best_witness = fam.describe(nm.theta);
      converged = nm.converged;
      best_is_profile = false;
    }
  }

  if (!std::isfinite(bestJ))
    throw NonconvergenceError("minimize: no finite quotient found on " +
                              domain.describe());

  MuEstimate est;
  est.domain = domain.describe();
  est.n = params.n;
  est.beta = params.beta;
  est.J = bestJ;
  TestFunction witness = replay_witness(best_witness.dump());
  if (best_is_profile) {
    // recompute with a different Gauss order and panel split; the profile
    // has compact support inside the grid, so there is no tail term
    QuadratureGrid check = profile_grid(domain, params, *layout, 5, 3);
    double J2 = rayleigh_on_grid(witness, domain, params, check).J;
    est.est_error = std::abs(bestJ - J2);
  } else {
    RayleighReport rep = rayleigh(witness, domain, params, grid);
    est.est_error = rep.est_error;
  }
  est.upper_bound = bestJ + est.est_error;
  est.witness = best_witness.dump();
  est.evaluations = ev.used;
  est.converged = converged;
  est.seed = options.seed;
  est.resolution = options.resolution;
  est.truncation = grid.truncation;
  return est;
}

TestFunction replay_witness(const std::string& witness_json) {
  json j = json::parse(witness_json);
  std::string type = j.at("type").get<std::string>();
  if (type == "radial-profile") {
    RadialProfileData data;
    data.center = j.at("center").get<Point>();
    data.knots = j.at("knots").get<std::vector<double>>();
    data.values = j.at("values").get<std::vector<double>>();
    return make_radial_profile(std::move(data));
  }
  if (type == "cutoff-extremal") {
    std::string fam = j.at("family").get<std::string>();
    int n = j.at("n").get<int>();
    double beta = j.at("beta").get<double>();
    ExtremalParams p;
    p.A = j.at("A").get<double>();
    ExtremalFamily family;
    if (fam == "beta1_u")
      family = ExtremalFamily::beta1_u;
    else if (fam == "beta2_u")
      family = ExtremalFamily::beta2_u;
    else if (fam == "punctured")
      family = ExtremalFamily::punctured;
    else
      throw DomainError("replay_witness: unknown family " + fam);
    TestFunction base = make_extremal(family, p, n, beta);
    return radial_cutoff(base, j.at("center").get<Point>(),
                         j.at("r0").get<double>(), j.at("w").get<double>());
  }
  if (type == "power-bump") {
    return make_power_bump(j.at("center").get<Point>(),
                           j.at("a").get<double>(), j.at("b").get<double>(),
                           j.at("gamma").get<double>());
  }
  throw DomainError("replay_witness: unknown witness type " + type);
}

Certificate certify_below_star(const Domain& domain, int n, double beta,
                               MinimizeOptions options) {
  Certificate cert;
  cert.mu_star = sharp_mu_star(n, beta);
  cert.estimate = minimize(domain, Params::make(n, 2.0, beta), options);
  cert.margin = cert.mu_star - cert.estimate.upper_bound;
  cert.success = cert.margin > 0.0;
  return cert;
}

std::vector<double> concentration_sequence(int n, double beta,
                                           const std::vector<double>& lambdas,
                                           int resolution) {
  ExtremalFamily fam;
  if (beta == 1.0)
    fam = ExtremalFamily::beta1_u;
  else if (beta == 2.0)
    fam = ExtremalFamily::beta2_u;
  else
    throw NoClosedFormError(
        "concentration_sequence: closed-form profile needs beta in {1, 2}");
  Params p = Params::make(n, 2.0, beta);
  Domain ball = kelvin_ball(n + 1);
  GridOptions gopts;
  gopts.polar_concentration = true;
  gopts.reduction = GridReduction::meridian2d;
  QuadratureGrid grid = build_grid(ball, p, resolution, kAutoTruncation,
                                   gopts);

  TestFunction u = make_extremal(fam, ExtremalParams{}, n);
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lam : lambdas) {
    if (!(lam > 0)) throw DomainError("concentration_sequence: lambda > 0");
    TestFunction ul = scalar_multiple(
        scale_translate(u, 1.0 / lam, zeros(n + 1)),
        std::pow(lam, 0.5 * (n - 1.0)));
    TestFunction psi = kelvin_pullback(ul);
    out.push_back(rayleigh_on_grid(psi, ball, p, grid).J);
  }
  return out;
}

std::vector<DegeneratePoint> degenerate_sequence_2d(
    double beta, const std::vector<double>& R_list) {
  if (!(beta > 0)) throw DomainError("degenerate_sequence_2d: beta > 0");
  const double pi = 3.14159265358979323846;
  const auto& [gx, gw] = gauss_legendre(8);
  std::vector<DegeneratePoint> out;
  for (double R : R_list) {
    if (!(R > 1)) throw DomainError("degenerate_sequence_2d: R must be > 1");
    // everything lives in tau = log|x|; the ramp eta rises linearly on
    // [-2R, -R], sits at 1 on [-R, R], and falls on [R, 2R]
    double ramp = 0.0;  // int_0^R (tau/R)^{2+beta} dtau, by panels
    int panels = 64;
    for (int k = 0; k < panels; ++k) {
      double a = R * k / panels, b = R * (k + 1) / panels;
      double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (size_t i = 0; i < gx.size(); ++i) {
        double tau = mid + half * gx[i];
        ramp += half * gw[i] * std::pow(tau / R, 2.0 + beta);
      }
    }
    double I1 = 2.0 / R;                 // int eta'^2
    double I2 = 2.0 * R + 2.0 * ramp;    // int eta^{2+beta}
    DegeneratePoint pt;
    pt.R = R;
    pt.J = 2.0 * pi * I1 / std::pow(2.0 * pi * I2, 2.0 / (2.0 + beta));
    pt.bound = std::pow(4.0 * pi, beta / (2.0 + beta)) *
               std::pow(R, -(4.0 + beta) / (2.0 + beta));
    out.push_back(pt);
  }
  return out;
}

SandwichReport sandwich_check(const Domain& punctured_ball_domain, int n,
                              double beta, MinimizeOptions options) {
  if (punctured_ball_domain.kind != DomainKind::punctured_ball)
    throw DomainError("sandwich_check: expects a punctured ball");
  double mu_omega = sharp_mu_star(n, beta);  // the unpunctured ball constant
  double mu_punct = mu_punctured_space(n, beta);
  auto [lower, upper] = punctured_bounds(mu_omega, mu_punct);

  SandwichReport rep;
  rep.lower = lower;
  rep.upper = upper;
  rep.estimate =
      minimize(punctured_ball_domain, Params::make(n, 2.0, beta), options);
  double slack = rep.estimate.est_error + 1e-3 * upper;
  rep.witness_within = rep.estimate.J <= upper + slack &&
                       rep.estimate.J >= lower - slack;
  return rep;
}

}  // namespace hs
