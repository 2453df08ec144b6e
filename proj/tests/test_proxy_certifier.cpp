#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "subgauss/proxy_certifier.hpp"
#include "test_support.hpp"

using namespace subgauss;
using testsup::close_abs;
using testsup::close_rel;

namespace {

TruncatedGaussian gauss(double alpha, double beta) {
  return TruncatedGaussian(
      0.0, 1.0, TruncationInterval(ExtendedReal(alpha), ExtendedReal(beta)));
}

TruncatedExponential expo(double alpha, double beta) {
  return TruncatedExponential(
      1.0, TruncationInterval(ExtendedReal(alpha), ExtendedReal(beta)));
}

std::function<double(double)> cmgf(const TruncatedGaussian& d) {
  return [d](double t) { return d.log_centered_mgf(t); };
}

std::function<double(double)> cmgf(const TruncatedExponential& d) {
  return [d](double t) { return d.log_centered_mgf(t); };
}

}  // namespace

TEST_CASE("GridSpec validation") {
  CHECK_THROWS_AS(GridSpec(-1.0), DomainError);
  CHECK_THROWS_AS(GridSpec(5.0, 50), DomainError);
  const GridSpec g(5.0);
  CHECK(g.n_points == 4001);
  CHECK(g.refinement_rounds == 2);
}

TEST_CASE("check_proxy verdicts") {
  SUBCASE("sigma^2 always dominates a truncated standard normal") {
    const TruncatedGaussian d = gauss(-2.0, 2.0);
    const ProxyCheck r = check_proxy(cmgf(d), 1.0, default_grid(d));
    CHECK(r.holds);
  }
  SUBCASE("exponential illustration values") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const GridSpec grid = default_grid(d);
    const ProxyCheck below = check_proxy(cmgf(d), 0.8095 * 0.8095, grid);
    CHECK_FALSE(below.holds);
    CHECK(close_abs(below.theta_star, 2.0, 0.2));
    CHECK(below.max_residual > 0.0);
    const ProxyCheck above = check_proxy(cmgf(d), 0.812 * 0.812, grid);
    CHECK(above.holds);
  }
  SUBCASE("non-finite log MGF raises an evaluation error carrying theta") {
    const auto bad = [](double t) {
      return t > 3.0 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    };
    CHECK_THROWS_AS(check_proxy(bad, 1.0, GridSpec(5.0, 101, 0)),
                    EvaluationError);
    try {
      check_proxy(bad, 1.0, GridSpec(5.0, 101, 0));
    } catch (const EvaluationError& e) {
      CHECK(e.theta() > 3.0);
    }
  }
}

TEST_CASE("check_proxy is monotone in s^2") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ua(-3.0, 1.0);
  std::uniform_real_distribution<double> uw(0.5, 6.0);
  std::uniform_real_distribution<double> us(0.0, 1.5);
  for (int i = 0; i < 8; ++i) {
    const double a = ua(rng);
    const TruncatedGaussian d = gauss(a, a + uw(rng));
    const GridSpec grid = default_grid(d);
    const double s1 = us(rng);
    const double s2 = s1 + us(rng) + 0.01;
    const bool holds_low = check_proxy(cmgf(d), s1, grid).holds;
    const bool holds_high = check_proxy(cmgf(d), s2, grid).holds;
    if (holds_low) CHECK(holds_high);
  }
}

TEST_CASE("certify_optimal_proxy against the closed forms") {
  SUBCASE("asymmetric Gaussian") {
    const TruncatedGaussian d = gauss(-2.0, 0.5);
    const ProxyResult closed = d.variance_proxy();
    const ProxyCertificate cert = certify_optimal_proxy(
        cmgf(d), closed.variance, std::min(1.0, 0.25 * 2.5 * 2.5) + 1e-9,
        1e-6, default_grid(d));
    CHECK(close_abs(cert.s_squared, closed.variance_proxy, 1e-4));
    CHECK(cert.bracket_hi - cert.bracket_lo <= 1e-6);
    CHECK(cert.max_residual <= kCertificationSlack);
    // Tangency location is recovered as the residual argmax.
    CHECK(close_abs(cert.theta_star, -1.5, 0.05));
  }
  SUBCASE("exponential anchor") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const ProxyResult closed = d.variance_proxy();
    const ProxyCertificate cert =
        certify_optimal_proxy(cmgf(d), closed.variance, 0.25 * 9.0 + 1e-9,
                              1e-6, default_grid(d));
    CHECK(close_abs(cert.s_squared, 0.6571870894737679, 1e-4));
    CHECK(close_abs(cert.theta_star, 2.0, 0.05));
  }
  SUBCASE("symmetric Gaussian collapses to the variance") {
    const TruncatedGaussian d = gauss(-2.0, 2.0);
    const ProxyResult closed = d.variance_proxy();
    const ProxyCertificate cert = certify_optimal_proxy(
        cmgf(d), closed.variance, 1.0 + 1e-9, 1e-6, default_grid(d));
    CHECK(close_abs(cert.s_squared, closed.variance, 1e-5));
    CHECK(cert.bracket_lo == cert.bracket_hi);
  }
  SUBCASE("invalid bracket is rejected") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const double proxy = d.variance_proxy().variance_proxy;
    CHECK_THROWS_AS(certify_optimal_proxy(cmgf(d), 0.5 * proxy, 0.9 * proxy,
                                          1e-6, default_grid(d)),
                    BracketError);
    CHECK_THROWS_AS(certify_optimal_proxy(cmgf(d), 1.0, 0.5, 1e-6,
                                          default_grid(d)),
                    BracketError);
  }
}

TEST_CASE("certificate is stable in the grid density") {
  const TruncatedExponential d = expo(0.5, 3.5);
  const ProxyResult closed = d.variance_proxy();
  const double hi = 0.25 * 9.0 + 1e-9;
  const GridSpec coarse(default_grid(d).theta_max, 2001);
  const GridSpec fine(default_grid(d).theta_max, 4001);
  const double tol = 1e-6;
  const double a = certify_optimal_proxy(cmgf(d), closed.variance, hi, tol,
                                         coarse).s_squared;
  const double b = certify_optimal_proxy(cmgf(d), closed.variance, hi, tol,
                                         fine).s_squared;
  CHECK(close_abs(a, b, 2.0 * tol));
}

TEST_CASE("closed form vs certificate across a parameter grid") {
  // 5x5 exponential sweep; the Gaussian sweep lives in the acceptance suite.
  const double alphas[5] = {0.0, 0.25, 0.5, 1.0, 2.0};
  const double widths[5] = {0.5, 1.0, 2.0, 4.0, 8.0};
  for (double a : alphas) {
    for (double w : widths) {
      const TruncatedExponential d = expo(a, a + w);
      const ProxyResult closed = d.variance_proxy();
      const ProxyCertificate cert = certify_optimal_proxy(
          cmgf(d), closed.variance, 0.25 * w * w + 1e-9, 1e-6,
          default_grid(d));
      CHECK(std::fabs(cert.s_squared - closed.variance_proxy) <=
            std::max(1e-4, 1e-4 * closed.variance_proxy));
    }
  }
}

TEST_CASE("log_cmgf_quadrature oracle") {
  SUBCASE("zero at theta = 0") {
    const TruncatedGaussian d = gauss(-1.0, 4.0);
    const double v = log_cmgf_quadrature(
        [&](double x) { return d.density(x); }, {-1.0, 4.0}, 0.0);
    CHECK(close_abs(v, 0.0, 1e-11));
  }
  SUBCASE("matches the Gaussian closed form") {
    const TruncatedGaussian d = gauss(-1.0, 4.0);
    const double v = log_cmgf_quadrature(
        [&](double x) { return d.density(x); }, {-1.0, 4.0}, 1.3);
    CHECK(close_abs(v, d.log_centered_mgf(1.3), 1e-9));
  }
  SUBCASE("matches the exponential singular-limit branch") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const double v = log_cmgf_quadrature(
        [&](double x) { return d.density(x); }, {1.0, 4.0}, 1.0);
    CHECK(close_abs(v, d.log_centered_mgf(1.0), 1e-9));
  }
  SUBCASE("large theta uses the rescaled integrand") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const double v = log_cmgf_quadrature(
        [&](double x) { return d.density(x); }, {1.0, 4.0}, 30.0);
    CHECK(close_abs(v, d.log_centered_mgf(30.0), 1e-8));
  }
}

TEST_CASE("inverse-transform sampling") {
  SUBCASE("support and determinism") {
    const TruncatedGaussian d = gauss(-2.0, 0.5);
    const auto xs = sample(d, 5000, 99);
    for (double x : xs) {
      CHECK(x > -2.0);
      CHECK(x < 0.5);
    }
    const auto again = sample(d, 5000, 99);
    CHECK(xs == again);
    const auto other = sample(d, 5000, 100);
    CHECK(xs != other);
  }
  SUBCASE("law of large numbers for the mean") {
    const TruncatedGaussian d = gauss(-2.0, 0.5);
    const std::size_t n = 1000000;
    const auto xs = sample(d, n, 7);
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double emp_mean = sum / n;
    double acc = 0.0;
    for (double x : xs) acc += (x - emp_mean) * (x - emp_mean);
    const double sd = std::sqrt(acc / (n - 1));
    CHECK(close_abs(emp_mean, d.mean(), 4.0 * sd / std::sqrt(double(n))));
  }
  SUBCASE("empirical MGF of the exponential at theta = 1") {
    const TruncatedExponential d = expo(1.0, 4.0);
    const std::size_t n = 1000000;
    const auto xs = sample(d, n, 21);
    const double m = d.mean();
    double w_sum = 0.0, w_sq = 0.0;
    for (double x : xs) {
      const double w = std::exp(x - m);
      w_sum += w;
      w_sq += w * w;
    }
    const double w_mean = w_sum / n;
    const double w_sd = std::sqrt(w_sq / n - w_mean * w_mean);
    const double closed = std::exp(d.log_centered_mgf(1.0));
    CHECK(close_abs(w_mean, closed, 3.0 * w_sd / std::sqrt(double(n))));
  }
  SUBCASE("exponential samples respect an unbounded upper endpoint") {
    const TruncatedExponential d = TruncatedExponential(
        1.5, TruncationInterval(ExtendedReal(1.0), ExtendedReal::pos_infinity()));
    for (double x : sample(d, 2000, 3)) {
      CHECK(x > 1.0);
      CHECK(std::isfinite(x));
    }
  }
}
