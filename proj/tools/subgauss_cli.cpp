// Command-line front end: closed-form proxies, bisection certification,
// lemma batteries, and figure-data CSVs.
//
// Exit codes: 0 ok, 1 usage error, 2 domain error, 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subgauss/lemma_battery.hpp"
#include "subgauss/lemma_suite.hpp"
#include "subgauss/proxy_certifier.hpp"
#include "subgauss/truncated_exponential.hpp"
#include "subgauss/truncated_gaussian.hpp"

namespace {

using json = nlohmann::json;
using namespace subgauss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

ExtendedReal parse_endpoint(const std::string& text) {
  if (text == "-inf" || text == "-Inf" || text == "-INF") {
    return ExtendedReal::neg_infinity();
  }
  if (text == "+inf" || text == "inf" || text == "+Inf" || text == "Inf" ||
      text == "+INF") {
    return ExtendedReal::pos_infinity();
  }
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) {
    throw CLI::ValidationError("endpoint", "cannot parse '" + text + "'");
  }
  return ExtendedReal(v);
}

json endpoint_json(const ExtendedReal& e) {
  if (e.is_neg_infinity()) return "-inf";
  if (e.is_pos_infinity()) return "+inf";
  return e.finite_value();
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct GaussianArgs {
  double mu = 0.0;
  double sigma = 1.0;
  std::string a = "-inf";
  std::string b = "+inf";

  TruncatedGaussian build() const {
    return TruncatedGaussian(
        mu, sigma, TruncationInterval(parse_endpoint(a), parse_endpoint(b)));
  }
};

struct ExponentialArgs {
  double lambda = 1.0;
  std::string a = "0";
  std::string b = "+inf";

  TruncatedExponential build() const {
    return TruncatedExponential(
        lambda, TruncationInterval(parse_endpoint(a), parse_endpoint(b)));
  }
};

struct CertifyOptions {
  double tol = 1e-6;
  double theta_max = 0.0;  // 0 = family default
  int grid = 4001;
  bool monte_carlo = false;
};

std::uint64_t sampler_seed() {
  if (const char* env = std::getenv("SUBGAUSS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 12345;
}

// ---------------------------------------------------------------------------
// proxy
// ---------------------------------------------------------------------------

int run_proxy_gaussian(const GaussianArgs& args) {
  const TruncatedGaussian d = args.build();
  const ProxyResult r = d.variance_proxy();
  json out;
  out["family"] = "gaussian";
  out["params"] = {{"mu", args.mu},
                   {"sigma", args.sigma},
                   {"a", endpoint_json(d.interval().lower())},
                   {"b", endpoint_json(d.interval().upper())}};
  out["mean"] = d.mean();
  out["variance"] = r.variance;
  out["variance_proxy"] = r.variance_proxy;
  out["is_strict"] = r.is_strict;
  out["case_tag"] = std::string(to_string(r.case_tag));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_proxy_exponential(const ExponentialArgs& args) {
  const TruncatedExponential d = args.build();
  const ProxyResult r = d.variance_proxy();  // throws for b = +inf
  json out;
  out["family"] = "exponential";
  out["params"] = {{"lambda", args.lambda},
                   {"a", endpoint_json(d.interval().lower())},
                   {"b", endpoint_json(d.interval().upper())}};
  out["mean"] = d.mean();
  out["variance"] = r.variance;
  out["variance_proxy"] = r.variance_proxy;
  out["is_strict"] = r.is_strict;
  out["case_tag"] = std::string(to_string(r.case_tag));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

template <typename Distribution>
json monte_carlo_report(const Distribution& d, double closed_log_mgf_at_1) {
  const std::size_t n = 200000;
  const std::uint64_t seed = sampler_seed();
  const std::vector<double> xs = sample(d, n, seed);
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double emp_mean = sum / n;
  double var_acc = 0.0;
  for (double x : xs) var_acc += (x - emp_mean) * (x - emp_mean);
  const double emp_sd = std::sqrt(var_acc / (n - 1));
  const double mean_z =
      (emp_mean - d.mean()) / (emp_sd / std::sqrt(static_cast<double>(n)));

  double w_sum = 0.0;
  double w_sq = 0.0;
  for (double x : xs) {
    const double w = std::exp(1.0 * (x - d.mean()));
    w_sum += w;
    w_sq += w * w;
  }
  const double w_mean = w_sum / n;
  const double w_sd = std::sqrt(w_sq / n - w_mean * w_mean);
  const double mgf_z = (w_mean - std::exp(closed_log_mgf_at_1)) /
                       (w_sd / std::sqrt(static_cast<double>(n)));
  return json{{"n", n}, {"seed", seed}, {"mean_z", mean_z}, {"mgf_z", mgf_z}};
}

int finish_certify(double closed_form, const ProxyCertificate& cert,
                   const CertifyOptions& opts, json extra) {
  const double abs_diff = std::fabs(cert.s_squared - closed_form);
  json out;
  out["closed_form"] = closed_form;
  out["certified"] = cert.s_squared;
  out["abs_diff"] = abs_diff;
  out["theta_star"] = cert.theta_star;
  out["evaluations"] = cert.evaluations;
  if (!extra.is_null()) out["monte_carlo"] = extra;
  std::cout << out.dump(2) << "\n";
  const bool mc_ok = extra.is_null() || (std::fabs(extra["mean_z"].get<double>()) < 5.0 &&
                                         std::fabs(extra["mgf_z"].get<double>()) < 5.0);
  if (abs_diff <= std::max(1e-4, opts.tol * 10.0) && mc_ok) return kExitOk;
  return kExitVerification;
}

int run_certify_gaussian(const GaussianArgs& args, const CertifyOptions& opts) {
  const TruncatedGaussian d = args.build();
  if (!d.interval().is_bounded()) {
    throw DomainError(
        "certify: the MGF-domination bisection oracle requires a finite "
        "truncation interval (the closed form for infinite endpoints is "
        "sigma^2)");
  }
  const ProxyResult closed = d.variance_proxy();
  GridSpec grid = default_grid(d);
  if (opts.theta_max > 0.0) grid.theta_max = opts.theta_max;
  grid.n_points = opts.grid;
  const double width = d.interval().upper().finite_value() -
                       d.interval().lower().finite_value();
  const double hi =
      std::min(d.sigma() * d.sigma(), 0.25 * width * width) + 1e-9;
  const ProxyCertificate cert = certify_optimal_proxy(
      [&](double t) { return d.log_centered_mgf(t); }, closed.variance, hi,
      opts.tol, grid);
  json mc;
  if (opts.monte_carlo) mc = monte_carlo_report(d, d.log_centered_mgf(1.0));
  return finish_certify(closed.variance_proxy, cert, opts, mc);
}

int run_certify_exponential(const ExponentialArgs& args,
                            const CertifyOptions& opts) {
  const TruncatedExponential d = args.build();
  const ProxyResult closed = d.variance_proxy();  // throws for b = +inf
  GridSpec grid = default_grid(d);
  if (opts.theta_max > 0.0) grid.theta_max = opts.theta_max;
  grid.n_points = opts.grid;
  const double width = d.b() - d.a();
  const ProxyCertificate cert = certify_optimal_proxy(
      [&](double t) { return d.log_centered_mgf(t); }, closed.variance,
      0.25 * width * width + 1e-9, opts.tol, grid);
  json mc;
  if (opts.monte_carlo) mc = monte_carlo_report(d, d.log_centered_mgf(1.0));
  return finish_certify(closed.variance_proxy, cert, opts, mc);
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

std::vector<double> merged_grid(double lo, double hi, int n,
                                std::initializer_list<double> anchors) {
  std::set<double> grid;
  for (int i = 0; i < n; ++i) {
    grid.insert(lo + (hi - lo) * i / (n - 1));
  }
  for (double a : anchors) grid.insert(a);
  return std::vector<double>(grid.begin(), grid.end());
}

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  std::ofstream out(path);
  if (!out) {
    throw CLI::ValidationError("--out", "cannot open '" + path + "' for writing");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << "\n";
  const std::size_t rows = columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << fmt17(columns[c][r]);
    }
    out << "\n";
  }
  if (!out.good()) {
    throw CLI::ValidationError("--out", "write to '" + path + "' failed");
  }
}

TruncatedGaussian standard_gaussian(double alpha, double beta) {
  return TruncatedGaussian(
      0.0, 1.0, TruncationInterval(ExtendedReal(alpha), ExtendedReal(beta)));
}

TruncatedExponential standard_exponential(double alpha, double beta) {
  return TruncatedExponential(
      1.0, TruncationInterval(ExtendedReal(alpha), ExtendedReal(beta)));
}

// Figure 1: variance and proxy of standard Gaussians on (-2, beta), plus the
// four panel densities.
void write_figure1(const std::string& path, int grid_points) {
  const double alpha = -2.0;
  const std::vector<double> betas =
      merged_grid(-1.5, 3.0, grid_points, {-0.5, 0.0, 0.5, 2.0});
  const int rows = static_cast<int>(betas.size());
  std::vector<double> variance, proxy, xs;
  std::vector<std::vector<double>> densities(4);
  const double panel[4] = {-0.5, 0.0, 0.5, 2.0};
  for (int r = 0; r < rows; ++r) {
    const TruncatedGaussian d = standard_gaussian(alpha, betas[r]);
    const ProxyResult pr = d.variance_proxy();
    variance.push_back(pr.variance);
    proxy.push_back(pr.variance_proxy);
    const double x = -2.2 + 4.4 * r / (rows - 1);
    xs.push_back(x);
    for (int k = 0; k < 4; ++k) {
      densities[k].push_back(standard_gaussian(alpha, panel[k]).density(x));
    }
  }
  write_csv(path,
            {"beta", "variance", "proxy", "x", "density_beta_-0.5",
             "density_beta_0", "density_beta_0.5", "density_beta_2"},
            {betas, variance, proxy, xs, densities[0], densities[1],
             densities[2], densities[3]});
}

// Figure 2: f and the three parabolas for (alpha, beta) = (-1, 4).
void write_figure2(const std::string& path, int grid_points) {
  const lemmas::GaussFrame frame(-1.0, 4.0);
  const double s_c2 =
      standard_gaussian(-1.0, 4.0).variance_proxy().variance_proxy;
  const double w_opt = lemmas::gauss_w_c(frame);
  const double w_valid = (1.1 * s_c2 - 1.0) / 2.0;
  const double w_invalid = (0.9 * s_c2 - 1.0) / 2.0;
  const std::vector<double> thetas =
      merged_grid(-3.0, 6.0, grid_points, {0.0, 1.5, 3.0});
  std::vector<double> f, p_opt, p_val, p_inv;
  for (double t : thetas) {
    f.push_back(lemmas::gauss_f(frame, t));
    p_opt.push_back(lemmas::gauss_p(frame, w_opt, t));
    p_val.push_back(lemmas::gauss_p(frame, w_valid, t));
    p_inv.push_back(lemmas::gauss_p(frame, w_invalid, t));
  }
  write_csv(path, {"theta", "f", "p_optimal", "p_valid", "p_invalid"},
            {thetas, f, p_opt, p_val, p_inv});
}

// Figure 3: variance and proxy of standard exponentials on (0.5, beta), plus
// the two panel densities.
void write_figure3(const std::string& path, int grid_points) {
  const double alpha = 0.5;
  const std::vector<double> betas = merged_grid(1.0, 5.0, grid_points, {2.0, 4.0});
  const int rows = static_cast<int>(betas.size());
  std::vector<double> variance, proxy, xs;
  std::vector<std::vector<double>> densities(2);
  const double panel[2] = {2.0, 4.0};
  for (int r = 0; r < rows; ++r) {
    const TruncatedExponential d = standard_exponential(alpha, betas[r]);
    const ProxyResult pr = d.variance_proxy();
    variance.push_back(pr.variance);
    proxy.push_back(pr.variance_proxy);
    const double x = 0.4 + (4.1 - 0.4) * r / (rows - 1);
    xs.push_back(x);
    for (int k = 0; k < 2; ++k) {
      densities[k].push_back(standard_exponential(alpha, panel[k]).density(x));
    }
  }
  write_csv(path,
            {"beta", "variance", "proxy", "x", "density_beta_2",
             "density_beta_4"},
            {betas, variance, proxy, xs, densities[0], densities[1]});
}

// Figure 4: g for (alpha, beta) = (1, 4) at the three s values of the
// illustration.
void write_figure4(const std::string& path, int grid_points) {
  const std::vector<double> thetas = merged_grid(-6.0, 6.0, grid_points, {2.0});
  const double svals[3] = {0.8095, 0.8107, 0.812};
  std::vector<std::vector<double>> g(3);
  for (int k = 0; k < 3; ++k) {
    const lemmas::ExpFrame frame(1.0, 4.0, svals[k]);
    for (double t : thetas) {
      g[k].push_back(lemmas::exp_g(frame, t));
    }
  }
  write_csv(path, {"theta", "g_at_0.8095", "g_at_0.8107", "g_at_0.812"},
            {thetas, g[0], g[1], g[2]});
}

int run_figure(int figure_id, const std::string& out_path, int grid_points) {
  switch (figure_id) {
    case 1:
      write_figure1(out_path, grid_points);
      break;
    case 2:
      write_figure2(out_path, grid_points);
      break;
    case 3:
      write_figure3(out_path, grid_points);
      break;
    case 4:
      write_figure4(out_path, grid_points);
      break;
    default:
      throw CLI::ValidationError("figure", "figure id must be 1..4");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lemmas
// ---------------------------------------------------------------------------

int run_lemmas(const std::string& suite_name, int grid_n) {
  lemmas::LemmaSuiteId suite;
  if (suite_name == "gaussian") {
    suite = lemmas::LemmaSuiteId::Gaussian;
  } else if (suite_name == "exponential") {
    suite = lemmas::LemmaSuiteId::Exponential;
  } else if (suite_name == "appendix") {
    suite = lemmas::LemmaSuiteId::Appendix;
  } else if (suite_name == "all") {
    suite = lemmas::LemmaSuiteId::All;
  } else {
    throw CLI::ValidationError("--suite",
                               "must be gaussian|exponential|appendix|all");
  }
  const std::vector<lemmas::LemmaCheck> checks =
      lemmas::run_lemma_suite(suite, grid_n);
  bool all_pass = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << "  worst-margin=" << fmt17(c.worst_margin) << "  (" << c.detail
              << ")\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "all lemmas pass" : "LEMMA FAILURES PRESENT")
            << " (" << checks.size() << " checks)\n";
  return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal sub-Gaussian variance proxies of truncated Gaussian "
               "and exponential distributions"};
  app.require_subcommand(1);

  GaussianArgs g_proxy, g_cert;
  ExponentialArgs e_proxy, e_cert;
  CertifyOptions cert_opts;

  auto* proxy = app.add_subcommand("proxy", "closed-form optimal variance proxy");
  proxy->require_subcommand(1);
  auto* pg = proxy->add_subcommand("gaussian", "truncated Gaussian");
  pg->add_option("--mu", g_proxy.mu, "mean of the parent normal");
  pg->add_option("--sigma", g_proxy.sigma, "std dev of the parent normal");
  pg->add_option("--a", g_proxy.a, "lower endpoint (number or -inf)");
  pg->add_option("--b", g_proxy.b, "upper endpoint (number or +inf)");
  auto* pe = proxy->add_subcommand("exponential", "truncated exponential");
  pe->add_option("--lambda", e_proxy.lambda, "rate of the parent exponential");
  pe->add_option("--a", e_proxy.a, "lower endpoint (>= 0)");
  pe->add_option("--b", e_proxy.b, "upper endpoint (number or +inf)");

  auto* certify =
      app.add_subcommand("certify", "certify the closed form by bisection");
  certify->require_subcommand(1);
  auto* cg = certify->add_subcommand("gaussian", "truncated Gaussian");
  cg->add_option("--mu", g_cert.mu, "mean of the parent normal");
  cg->add_option("--sigma", g_cert.sigma, "std dev of the parent normal");
  cg->add_option("--a", g_cert.a, "lower endpoint");
  cg->add_option("--b", g_cert.b, "upper endpoint");
  auto* ce = certify->add_subcommand("exponential", "truncated exponential");
  ce->add_option("--lambda", e_cert.lambda, "rate of the parent exponential");
  ce->add_option("--a", e_cert.a, "lower endpoint (>= 0)");
  ce->add_option("--b", e_cert.b, "upper endpoint (must be finite)");
  for (auto* sub : {cg, ce}) {
    sub->add_option("--tol", cert_opts.tol, "bisection tolerance on s^2");
    sub->add_option("--theta-max", cert_opts.theta_max,
                    "override the default grid extent");
    sub->add_option("--grid", cert_opts.grid, "grid points");
    sub->add_flag("--monte-carlo", cert_opts.monte_carlo,
                  "add an inverse-transform sampling sanity check");
  }

  int figure_id = 0;
  std::string out_path;
  int grid_points = 400;
  auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
  figure->add_option("id", figure_id, "figure id (1..4)")->required();
  figure->add_option("--out", out_path, "output CSV path")->required();
  figure->add_option("--grid-points", grid_points, "sweep resolution");

  std::string suite_name = "all";
  int lemma_grid = 200;
  auto* lemmas_cmd = app.add_subcommand("lemmas", "run the lemma batteries");
  lemmas_cmd->add_option("--suite", suite_name,
                         "gaussian|exponential|appendix|all");
  lemmas_cmd->add_option("--grid", lemma_grid, "grid density");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pg->parsed()) return run_proxy_gaussian(g_proxy);
    if (pe->parsed()) return run_proxy_exponential(e_proxy);
    if (cg->parsed()) return run_certify_gaussian(g_cert, cert_opts);
    if (ce->parsed()) return run_certify_exponential(e_cert, cert_opts);
    if (figure->parsed()) return run_figure(figure_id, out_path, grid_points);
    if (lemmas_cmd->parsed()) return run_lemmas(suite_name, lemma_grid);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotSubGaussianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const EvaluationError& e) {
    std::cerr << "error: " << e.what() << " (theta=" << e.theta() << ")\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
