// hs: numerical laboratory for sharp weighted Hardy-Sobolev inequalities
// with distance-to-boundary weights.
//
// Subcommands: constants, verify, ode, minimize, certify, sweep,
// kelvin-check.  Every artifact echoes its full configuration; outputs are
// deterministic for a fixed config and seed once --no-timestamp is given.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "common.hpp"
#include "verify.hpp"

#include "hs/corpus.hpp"
#include "hs/domains.hpp"
#include "hs/errors.hpp"
#include "hs/functionals.hpp"
#include "hs/kelvin.hpp"
#include "hs/ode.hpp"
#include "hs/quadrature.hpp"
#include "hs/special.hpp"
#include "hs/varmin.hpp"

namespace {

using nlohmann::json;
using namespace hstool;

void add_output_flags(CLI::App* cmd, OutputOptions& out,
                      const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("-o,--out", out.path, "output file (default: stdout)");
  cmd->add_option("--format", out.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--no-timestamp", out.no_timestamp,
                "omit the timestamp field (byte-identical reruns)");
}


json mu_json(const hs::MuEstimate& e) {
  json j;
  j["domain"] = e.domain;
  j["n"] = e.n;
  j["beta"] = e.beta;
  j["J"] = e.J;
  j["est_error"] = e.est_error;
  j["upper_bound"] = e.upper_bound;
  j["witness"] = json::parse(e.witness);
  j["evaluations"] = e.evaluations;
  j["converged"] = e.converged;
  j["seed"] = e.seed;
  j["resolution"] = e.resolution;
  j["truncation"] = e.truncation;
  return j;
}

// ---------------------------------------------------------------------

int cmd_constants(const std::string& n_spec, const std::string& beta_spec,
                  const OutputOptions& out) {
  std::vector<double> ns = parse_value_list(n_spec);
  std::vector<double> betas = parse_value_list(beta_spec);
  if (ns.empty() || betas.empty())
    throw hs::DomainError("constants: empty n or beta list");

  json config{{"n", n_spec}, {"beta", beta_spec}};
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "n,beta,mu_star,C_star,mu_punctured,C_bliss,hardy_whole,hardy_half\n";
  for (double nd : ns) {
    int n = static_cast<int>(nd);
    if (n < 1 || nd != n) throw hs::DomainError("constants: n must be >= 1");
    for (double b : betas) {
      if (!(b >= 0.0) || b > hs::Params::beta_max(n, 2.0))
        throw hs::DomainError("constants: beta outside [0, beta_max]");
      bool closed = b == 1.0 || b == 2.0;
      double mu = closed ? hs::sharp_mu_star(n, b) : 0.0;
      double cs = closed ? hs::sharp_constant_halfspace(n, b) : 0.0;
      double mp = hs::mu_punctured_space(n, b);
      double cb = b > 0.0 ? hs::bliss_constant(b) : 0.0;
      double hw = n >= 2 ? hs::hardy_constant(n, 2.0,
                                              hs::HardyVariant::whole_space)
                         : 0.0;
      double hh = hs::hardy_constant(n, 2.0, hs::HardyVariant::half_space);
      json row{{"n", n}, {"beta", b}, {"mu_punctured", mp},
               {"C_bliss", cb}, {"hardy_half", hh}};
      if (closed) {
        row["mu_star"] = mu;
        row["C_star"] = cs;
      }
      if (n >= 2) row["hardy_whole"] = hw;
      rows.push_back(row);
      csv << n << "," << b << ",";
      if (closed)
        csv << mu << "," << cs;
      else
        csv << ",";
      csv << "," << mp << "," << cb << ",";
      if (n >= 2) csv << hw;
      csv << "," << hh << "\n";
    }
  }
  if (out.format == "csv") return write_text(out, csv.str());
  if (out.format == "json") {
    json j = report_header("constants", config, out);
    j["rows"] = rows;
    return write_json(out, j);
  }
  return write_text(out, csv.str());  // the table doubles as the text view
}

int cmd_verify(const VerifyConfig& cfg, const OutputOptions& out) {
  std::vector<CheckResult> results = run_verify(cfg);
  if (results.empty())
    throw hs::DomainError("verify: --only matched no checks");
  bool all_pass = true;
  for (const CheckResult& r : results) all_pass = all_pass && r.pass;

  json config;
  config["n"] = cfg.n_values;
  config["beta"] = cfg.beta_values;
  config["resolution"] = cfg.resolution;
  config["corpus_size"] = cfg.corpus_size;
  config["seed"] = cfg.seed;
  config["only"] = cfg.only;
  config["inject_bug"] = cfg.inject_bug;
  json j = report_header("verify", config, out);
  j["checks"] = to_json(results);
  j["all_pass"] = all_pass;

  if (out.format == "text") {
    std::ostringstream os;
    os.precision(4);
    for (const CheckResult& r : results)
      os << (r.pass ? "PASS " : "FAIL ") << r.name << "  value=" << r.value
         << " tol=" << r.tol << "  (" << r.detail << ")\n";
    os << (all_pass ? "all checks passed\n" : "CHECK FAILURES\n");
    int rc = write_text(out, os.str());
    if (rc != kOk) return rc;
  } else {
    int rc = write_json(out, j);
    if (rc != kOk) return rc;
  }
  if (!all_pass && out.path.empty() == false) {
    // the failing report went to a file; still flag it on stderr
    std::cerr << "verify: check failures, see " << out.path << "\n";
  }
  return all_pass ? kOk : kCheckFailure;
}

int cmd_ode(int n, double beta, double A, double tol,
            const OutputOptions& out) {
  hs::OdeOptions opt;
  opt.A = A;
  opt.tol = tol;
  hs::OdeSolution sol = hs::solve_psi(n, beta, opt);

  json config{{"n", n}, {"beta", beta}, {"A", A}, {"tol", tol}};
  json header = report_header("ode", config, out);
  header["c0"] = sol.c0;
  header["K"] = sol.K;
  header["residual_norm"] = sol.residual_norm;

  std::ostringstream os;
  os.precision(17);
  os << "# " << header.dump() << "\n";
  os << "r,psi,dpsi\n";
  for (size_t i = 0; i < sol.r.size(); ++i)
    os << sol.r[i] << "," << sol.psi[i] << "," << sol.dpsi[i] << "\n";
  return write_text(out, os.str());
}

struct MinimizeFlags {
  std::string domain = "ball(radius=1)";
  int n = 1;
  double beta = 1.0;
  double p = 2.0;
  std::string trial = "both";
  hs::MinimizeOptions opts;
};

void add_minimize_flags(CLI::App* cmd, MinimizeFlags& f) {
  cmd->add_option("--domain", f.domain,
                  "e.g. annulus(rin=1,rout=8), ball(radius=1), halfspace");
  cmd->add_option("--n", f.n, "boundary dimension n (ambient n+1)");
  cmd->add_option("--beta", f.beta, "weight exponent beta");
  cmd->add_option("--p", f.p, "gradient exponent (default 2)");
  cmd->add_option("--trial", f.trial, "radial-profile, parametric or both")
      ->check(CLI::IsMember({"radial-profile", "parametric", "both"}));
  cmd->add_option("--budget", f.opts.budget, "quotient evaluation budget");
  cmd->add_option("--seed", f.opts.seed, "rng seed, echoed into the report");
  cmd->add_option("--resolution", f.opts.resolution, "quadrature resolution");
  cmd->add_option("--truncation", f.opts.truncation,
                  "outer radius for unbounded domains (-1: auto)");
  cmd->add_option("--knots", f.opts.knots, "radial profile knot count");
}

hs::MuEstimate run_minimize(const MinimizeFlags& f) {
  hs::MinimizeOptions opts = f.opts;
  if (f.trial == "radial-profile")
    opts.trial = hs::TrialSpace::radial_profile;
  else if (f.trial == "parametric")
    opts.trial = hs::TrialSpace::parametric;
  hs::Domain dom = hs::parse_domain(f.domain, f.n + 1);
  return hs::minimize(dom, hs::Params::make(f.n, f.p, f.beta), opts);
}

json minimize_config(const MinimizeFlags& f) {
  return json{{"domain", f.domain},  {"n", f.n},
              {"beta", f.beta},      {"p", f.p},
              {"trial", f.trial},    {"budget", f.opts.budget},
              {"seed", f.opts.seed}, {"resolution", f.opts.resolution},
              {"truncation", f.opts.truncation}, {"knots", f.opts.knots}};
}

int cmd_minimize(const MinimizeFlags& f, const OutputOptions& out) {
  hs::MuEstimate est = run_minimize(f);
  json j = report_header("minimize", minimize_config(f), out);
  j["estimate"] = mu_json(est);
  return write_json(out, j);
}

int cmd_certify(const MinimizeFlags& f, const std::string& target,
                const OutputOptions& out) {
  if (target != "below-star")
    throw hs::DomainError("certify: only --target below-star is implemented");
  hs::Domain dom = hs::parse_domain(f.domain, f.n + 1);
  hs::MinimizeOptions opts = f.opts;
  if (f.trial == "radial-profile")
    opts.trial = hs::TrialSpace::radial_profile;
  else if (f.trial == "parametric")
    opts.trial = hs::TrialSpace::parametric;
  hs::Certificate cert = hs::certify_below_star(dom, f.n, f.beta, opts);

  json config = minimize_config(f);
  config["target"] = target;
  json j = report_header("certify", config, out);
  j["success"] = cert.success;
  j["mu_star"] = cert.mu_star;
  j["margin"] = cert.margin;
  j["estimate"] = mu_json(cert.estimate);
  int rc = write_json(out, j);
  if (rc != kOk) return rc;
  return cert.success ? kOk : kCheckFailure;
}

int cmd_sweep(const MinimizeFlags& f, const std::string& rout_spec,
              const OutputOptions& out) {
  if (f.domain != "annulus")
    throw hs::DomainError("sweep: only --domain annulus is implemented");
  std::vector<double> routs = parse_value_list(rout_spec);
  if (routs.empty()) throw hs::DomainError("sweep: empty rout list");

  double mu = hs::sharp_mu_star(f.n, f.beta);
  std::ostringstream csv;
  csv.precision(17);
  json rows = json::array();
  csv << "rout,J,est_error,upper_bound,mu_star,margin,certified\n";
  for (double rout : routs) {
    MinimizeFlags g = f;
    std::ostringstream d;
    d << "annulus(rin=1,rout=" << rout << ")";
    g.domain = d.str();
    hs::MuEstimate est = run_minimize(g);
    double margin = mu - est.upper_bound;
    csv << rout << "," << est.J << "," << est.est_error << ","
        << est.upper_bound << "," << mu << "," << margin << ","
        << (margin > 0.0 ? 1 : 0) << "\n";
    json row = mu_json(est);
    row["rout"] = rout;
    row["mu_star"] = mu;
    row["margin"] = margin;
    row["certified"] = margin > 0.0;
    rows.push_back(row);
  }
  if (out.format == "json") {
    json config = minimize_config(f);
    config["rout"] = rout_spec;
    json j = report_header("sweep", config, out);
    j["rows"] = rows;
    return write_json(out, j);
  }
  return write_text(out, csv.str());
}

int cmd_kelvin_check(int n, double beta, int resolution, int count,
                     unsigned long seed, double tol,
                     const OutputOptions& out) {
  hs::Params p = hs::Params::make(n, 2.0, beta);
  hs::Domain half = hs::Domain::half_space(n + 1);
  hs::GridOptions hgo;
  hgo.reduction = hs::GridReduction::meridian2d;
  hs::QuadratureGrid hg =
      hs::build_grid(half, p, resolution, hs::kAutoTruncation, hgo);
  hs::GridOptions bgo;
  bgo.reduction = hs::GridReduction::meridian2d;
  bgo.polar_concentration = true;
  hs::QuadratureGrid bg = hs::build_grid(hs::kelvin_ball(n + 1), p, resolution,
                                         hs::kAutoTruncation, bgo);

  json per_function = json::array();
  double worst = 0.0;
  for (const hs::TestFunction& u : hs::make_corpus(n, seed, count)) {
    hs::KelvinGaps gaps = hs::kelvin_identity_check(u, p, hg, bg);
    double rel_e = gaps.energy_gap / gaps.energy_halfspace;
    double rel_n = gaps.norm_gap / gaps.norm_halfspace;
    worst = std::max({worst, rel_e, rel_n});
    per_function.push_back(json{{"function", u.descriptor},
                                {"energy_rel_gap", rel_e},
                                {"norm_rel_gap", rel_n}});
  }
  json config{{"n", n},         {"beta", beta}, {"resolution", resolution},
              {"count", count}, {"seed", seed}, {"tol", tol}};
  json j = report_header("kelvin-check", config, out);
  j["max_rel_gap"] = worst;
  j["pass"] = worst <= tol;
  j["per_function"] = per_function;
  int rc = write_json(out, j);
  if (rc != kOk) return rc;
  return worst <= tol ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for weighted Hardy-Sobolev "
               "inequalities with distance-to-boundary weights"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key = value config file; subcommand options live in a "
                 "[subcommand] section; flags override config entries");

  // constants
  std::string n_spec = "1..5", beta_spec = "1,2";
  OutputOptions const_out;
  CLI::App* constants = app.add_subcommand(
      "constants", "closed-form sharp constants over an (n, beta) grid");
  constants->add_option("--n", n_spec, "list or range, e.g. 1..5 or 1,3");
  constants->add_option("--beta", beta_spec, "list, e.g. 1,2");
  add_output_flags(constants, const_out, "csv");

  // verify
  VerifyConfig vcfg;
  std::string v_n = "1,2", v_beta = "1,2";
  OutputOptions verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "identity and inequality verification suite");
  verify->add_option("--n", v_n, "boundary dimensions, e.g. 1,2");
  verify->add_option("--beta", v_beta, "weight exponents, e.g. 1,2");
  verify->add_option("--resolution", vcfg.resolution, "grid resolution");
  verify->add_option("--corpus", vcfg.corpus_size, "functions per corpus");
  verify->add_option("--seed", vcfg.seed, "corpus seed");
  verify->add_option("--only", vcfg.only, "substring filter on check names");
  verify->add_flag("--inject-bug", vcfg.inject_bug,
                   "test hook: scale one quadrature weight by 1.01 (the "
                   "suite must then fail)");
  add_output_flags(verify, verify_out, "text");

  // ode
  int ode_n = 2;
  double ode_beta = 1.5, ode_A = 0.5, ode_tol = 1e-11;
  OutputOptions ode_out;
  CLI::App* ode = app.add_subcommand(
      "ode", "shooting solve of the general-beta profile equation");
  ode->add_option("--n", ode_n, "boundary dimension");
  ode->add_option("--beta", ode_beta, "weight exponent");
  ode->add_option("--A", ode_A, "profile parameter A");
  ode->add_option("--tol", ode_tol, "integrator tolerance");
  add_output_flags(ode, ode_out, "csv");

  // minimize
  MinimizeFlags mflags;
  OutputOptions min_out;
  CLI::App* minimize =
      app.add_subcommand("minimize", "direct Rayleigh-quotient minimization");
  add_minimize_flags(minimize, mflags);
  add_output_flags(minimize, min_out, "json");

  // certify
  MinimizeFlags cflags;
  std::string target = "below-star";
  OutputOptions cert_out;
  CLI::App* certify = app.add_subcommand(
      "certify", "certificate that mu(Omega) lies below the half-space mu*");
  add_minimize_flags(certify, cflags);
  certify->add_option("--target", target, "only below-star is implemented");
  add_output_flags(certify, cert_out, "json");

  // sweep
  MinimizeFlags sflags;
  sflags.domain = "annulus";
  sflags.n = 2;
  std::string rout_spec = "2..32:x2";
  OutputOptions sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "annulus outer-radius sweep of the mu upper bound");
  add_minimize_flags(sweep, sflags);
  sweep->add_option("--rout", rout_spec,
                    "list or doubling range, e.g. 2,4,8 or 2..32:x2");
  add_output_flags(sweep, sweep_out, "csv");

  // kelvin-check
  int kc_n = 1, kc_res = 256, kc_count = 10;
  double kc_beta = 1.0, kc_tol = 1e-3;
  unsigned long kc_seed = 42;
  OutputOptions kc_out;
  CLI::App* kc = app.add_subcommand(
      "kelvin-check", "half-space <-> ball integral identity gaps");
  kc->add_option("--n", kc_n, "boundary dimension");
  kc->add_option("--beta", kc_beta, "weight exponent (1 or 2)");
  kc->add_option("--resolution", kc_res, "grid resolution");
  kc->add_option("--count", kc_count, "corpus size");
  kc->add_option("--seed", kc_seed, "corpus seed");
  kc->add_option("--tol", kc_tol, "max relative gap accepted");
  add_output_flags(kc, kc_out, "json");

  // allow `hs <subcommand> --config file`: the root owns --config, the
  // subcommands hand unmatched flags up to it
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*constants) return cmd_constants(n_spec, beta_spec, const_out);
    if (*verify) {
      vcfg.n_values.clear();
      for (double v : parse_value_list(v_n))
        vcfg.n_values.push_back(static_cast<int>(v));
      vcfg.beta_values = parse_value_list(v_beta);
      return cmd_verify(vcfg, verify_out);
    }
    if (*ode) return cmd_ode(ode_n, ode_beta, ode_A, ode_tol, ode_out);
    if (*minimize) return cmd_minimize(mflags, min_out);
    if (*certify) return cmd_certify(cflags, target, cert_out);
    if (*sweep) return cmd_sweep(sflags, rout_spec, sweep_out);
    if (*kc)
      return cmd_kelvin_check(kc_n, kc_beta, kc_res, kc_count, kc_seed,
                              kc_tol, kc_out);
  } catch (const hs::NonconvergenceError& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return kNonconvergence;
  } catch (const hs::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonconvergence;
  }
  return kUsageError;
}
