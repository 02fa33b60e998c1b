#include "hs/special.hpp"

#include <cmath>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7.  These coefficients are the standard double-precision set
// (Godfrey / Numerical Recipes lineage).
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kG = 7.0;

double lanczos_sum(double z) {
  // z already shifted so the series is evaluated at z, z+1, ...
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i);
  return s;
}

void require_closed_form_beta(double beta) {
  if (beta != 1.0 && beta != 2.0)
    throw NoClosedFormError(
        "sharp half-space constants exist in closed form only for beta in {1,2}");
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: x must be > 0");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  double z = x - 1.0;
  double t = z + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be > 0");
  if (x < 0.5)
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  double z = x - 1.0;
  double t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double sharp_mu_star(int n, double beta) {
  if (n < 1) throw DomainError("sharp_mu_star: n must be >= 1");
  require_closed_form_beta(beta);
  if (beta == 1.0) {
    // 2(n+1) [ pi^{n/2} Gamma(n/2+2) / Gamma(n+4) ]^{1/(n+2)}
    double lg = 0.5 * n * std::log(kPi) + log_gamma(0.5 * n + 2.0) -
                log_gamma(n + 4.0);
    return 2.0 * (n + 1.0) * std::exp(lg / (n + 2.0));
  }
  // (n+1)(n+3) [ (pi^{(n+1)/2}/4) Gamma((n+3)/2) / Gamma(n+3) ]^{2/(n+3)}
  double lg = 0.5 * (n + 1.0) * std::log(kPi) - std::log(4.0) +
              log_gamma(0.5 * (n + 3.0)) - log_gamma(n + 3.0);
  return (n + 1.0) * (n + 3.0) * std::exp(2.0 * lg / (n + 3.0));
}

double sharp_constant_halfspace(int n, double beta) {
  if (n < 1) throw DomainError("sharp_constant_halfspace: n must be >= 1");
  require_closed_form_beta(beta);
  if (beta == 1.0) {
    // (1/(2(n+1))) [ Gamma(n+4) / (pi^{n/2} Gamma(n/2+2)) ]^{1/(n+2)}
    double lg = log_gamma(n + 4.0) - 0.5 * n * std::log(kPi) -
                log_gamma(0.5 * n + 2.0);
    return std::exp(lg / (n + 2.0)) / (2.0 * (n + 1.0));
  }
  // (1/((n+1)(n+3))) [ 4 Gamma(n+3) / (pi^{(n+1)/2} Gamma((n+3)/2)) ]^{2/(n+3)}
  double lg = std::log(4.0) + log_gamma(n + 3.0) -
              0.5 * (n + 1.0) * std::log(kPi) - log_gamma(0.5 * (n + 3.0));
  return std::exp(2.0 * lg / (n + 3.0)) / ((n + 1.0) * (n + 3.0));
}

double mu_punctured_space(int n, double beta) {
  if (n < 1) throw DomainError("mu_punctured_space: n must be >= 1");
  if (beta < 0.0) throw DomainError("mu_punctured_space: beta must be >= 0");
  if (n >= 2 && beta > 2.0 * (n + 1.0) / (n - 1.0))
    throw DomainError("mu_punctured_space: beta above 2(n+1)/(n-1)");
  if (n == 1) return 0.0;  // the inequality degenerates in dimension 2
  if (beta == 0.0) {
    double h = 0.5 * (n - 1.0);
    return h * h;  // Hardy constant
  }
  double m = (n + beta + 1.0) / beta;  // Gamma arguments come in terms of this
  double lg = std::log(2.0) + 0.5 * (n + 1.0) * std::log(kPi) +
              2.0 * log_gamma(m) - std::log(beta) -
              log_gamma(0.5 * (n + 1.0)) - log_gamma(2.0 * m);
  return (n + beta + 1.0) * (n - 1.0) *
         std::pow((n - 1.0) / (n + 1.0), (n + 1.0) / (n + beta + 1.0)) *
         std::exp(beta / (n + beta + 1.0) * lg);
}

double bliss_constant(double beta) {
  if (!(beta > 0.0)) throw DomainError("bliss_constant: beta must be > 0");
  double lg = std::log(beta) + log_gamma((2.0 + 2.0 * beta) / beta) -
              log_gamma(1.0 / beta) - log_gamma((1.0 + 2.0 * beta) / beta);
  return std::pow(1.0 / (1.0 + beta), 1.0 / (1.0 + beta)) *
         std::exp(beta / (1.0 + beta) * lg);
}

double hardy_constant(int n, double p, HardyVariant variant) {
  if (variant == HardyVariant::whole_space) {
    if (!(p > 1.0 && p < n + 1.0))
      throw DomainError("hardy_constant: whole-space needs 1 < p < n+1");
    return std::pow(p / (n + 1.0 - p), p);
  }
  if (!(p > 1.0)) throw DomainError("hardy_constant: half-space needs p > 1");
  return std::pow(p / (p - 1.0), p);
}

Ordering compare_star(double beta, int n) {
  if (n < 2) throw DomainError("compare_star: n must be >= 2");
  require_closed_form_beta(beta);
  return mu_punctured_space(n, beta) < sharp_mu_star(n, beta)
             ? Ordering::below
             : Ordering::above;
}

}  // namespace hs
