#include "hs/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/extremals.hpp"

namespace hs {

namespace {

// amp * exp(1 - 1/(1 - s^2)) * (1 + sum a_k cos(k pi s)), s = r/rho < 1:
// compactly supported and C-infinity, so every panel quadrature of it
// converges at the Gauss rate
struct SmoothBumpImpl final : TestFunction::Impl {
  Point center;
  double rho = 1.0, amp = 1.0;
  std::vector<double> mod;

  int dim() const override { return static_cast<int>(center.size()); }

  double shape(double s, double* dshape) const {
    if (s >= 1.0) {
      if (dshape) *dshape = 0.0;
      return 0.0;
    }
    double om = 1.0 - s * s;
    double env = std::exp(1.0 - 1.0 / om);
    double m = 1.0, dm = 0.0;
    for (size_t k = 0; k < mod.size(); ++k) {
      double f = (k + 1) * 3.14159265358979323846;
      m += mod[k] * std::cos(f * s);
      dm -= mod[k] * f * std::sin(f * s);
    }
    if (dshape) *dshape = amp * (env * (-2.0 * s / (om * om)) * m + env * dm);
    return amp * env * m;
  }

  double value(std::span<const double> x) const override {
    return shape(dist(x, center) / rho, nullptr);
  }

  double value_and_gradient(std::span<const double> x,
                            std::span<double> g) const override {
    double r = dist(x, center);
    double ds = 0.0;
    double v = shape(r / rho, &ds);
    if (r < 1e-300 || ds == 0.0) {
      std::fill(g.begin(), g.end(), 0.0);
      return v;
    }
    for (size_t i = 0; i < g.size(); ++i)
      g[i] = ds / rho * (x[i] - center[i]) / r;
    return v;
  }
};

TestFunction random_bump(int n, std::mt19937_64& rng, int index) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto impl = std::make_shared<SmoothBumpImpl>();
  double tc = 0.9 + 0.7 * U(rng);  // center height above the boundary
  impl->center = zeros(n + 1);
  impl->center.back() = tc;
  impl->rho = (0.45 + 0.45 * U(rng)) * tc;  // support stays interior
  impl->amp = 0.3 + 1.4 * U(rng);
  int waves = 1 + static_cast<int>(rng() % 2);
  for (int k = 1; k <= waves; ++k)
    impl->mod.push_back((2.0 * U(rng) - 1.0) * 0.25 / k);

  TestFunction f(impl);
  f.support_radius = impl->rho + norm(impl->center);
  std::ostringstream d;
  d << "bump(i=" << index << ", tc=" << tc << ", rho=" << impl->rho << ")";
  f.descriptor = d.str();
  return f;
}

TestFunction cutoff_closed_form(int n, std::mt19937_64& rng, int index) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  ExtremalParams p;
  p.A = 0.5 + 1.5 * U(rng);
  double tc = 1.0 + U(rng);
  double r0 = (0.2 + 0.3 * U(rng)) * tc;
  double w = (0.2 + 0.2 * U(rng)) * tc;  // r0 + w <= 0.9 tc, stays interior
  ExtremalFamily fam =
      (rng() % 2 == 0) ? ExtremalFamily::beta1_u : ExtremalFamily::beta2_u;
  Point center = zeros(n + 1);
  center.back() = tc;
  TestFunction base = make_extremal(fam, p, n);
  TestFunction f = radial_cutoff(base, center, r0, w);
  std::ostringstream d;
  d << "cutoff-"
    << (fam == ExtremalFamily::beta1_u ? "shifted" : "centered")
    << "-profile(i=" << index << ", A=" << p.A << ", tc=" << tc
    << ", r0=" << r0 << ", w=" << w << ")";
  f.descriptor = d.str();
  return f;
}

}  // namespace

std::vector<TestFunction> make_corpus(int n, unsigned long seed, int count) {
  if (n < 1) throw DomainError("make_corpus: n must be >= 1");
  if (count < 1) throw DomainError("make_corpus: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<TestFunction> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i % 3 == 2)
      out.push_back(cutoff_closed_form(n, rng, i));
    else
      out.push_back(random_bump(n, rng, i));
  }
  return out;
}

}  // namespace hs
