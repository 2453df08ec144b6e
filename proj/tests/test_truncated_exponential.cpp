#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "subgauss/truncated_exponential.hpp"
#include "test_support.hpp"

using namespace subgauss;
using testsup::close_abs;
using testsup::close_rel;
using testsup::romberg;
using testsup::romberg_open;

namespace {

TruncatedExponential make(double lambda, double a, double b) {
  return TruncatedExponential(
      lambda, TruncationInterval(ExtendedReal(a), ExtendedReal(b)));
}

TruncatedExponential make_unbounded(double lambda, double a) {
  return TruncatedExponential(
      lambda,
      TruncationInterval(ExtendedReal(a), ExtendedReal::pos_infinity()));
}

}  // namespace

TEST_CASE("construction validates parameters") {
  CHECK_THROWS_AS(make(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make(1.0, -0.5, 1.0), DomainError);
  CHECK_THROWS_AS(make(1.0, 2.0, 2.0), DomainError);
  const TruncatedExponential d = make(2.0, 0.5, 3.0);
  CHECK(d.alpha() == doctest::Approx(1.0));
  CHECK(d.beta().finite_value() == doctest::Approx(6.0));
}

TEST_CASE("density support, value, and normalization") {
  const TruncatedExponential d = make(1.0, 1.0, 4.0);
  CHECK(d.density(0.5) == 0.0);
  CHECK(d.density(5.0) == 0.0);
  CHECK(close_rel(d.density(1.0 + 1e-12), 1.052395696491256, 1e-9));
  const double mass =
      romberg_open([&](double t) { return d.density(t); }, 1.0, 4.0);
  CHECK(close_abs(mass, 1.0, 1e-10));
  // Unbounded upper endpoint still normalizes.
  const TruncatedExponential u = make_unbounded(2.0, 0.5);
  const double umass =
      romberg_open([&](double t) { return u.density(t); }, 0.5, 40.0);
  CHECK(close_abs(umass, 1.0, 1e-10));
}

TEST_CASE("mean closed form") {
  CHECK(close_rel(make(1.0, 0.0, std::log(2.0)).mean(), 1.0 - std::log(2.0),
                  1e-13));
  CHECK(close_rel(make(1.0, 1.0, 4.0).mean(), 1.8428129105262321, 1e-13));
  const TruncatedExponential d = make(1.0, 1.0, 4.0);
  const double by_quadrature =
      romberg_open([&](double t) { return t * d.density(t); }, 1.0, 4.0);
  CHECK(close_abs(d.mean(), by_quadrature, 1e-9));
  // Degenerate-interval limit.
  CHECK(close_abs(make(1.0, 2.0, 2.0 + 1e-6).mean(), 2.0, 1e-6));
  // b = +inf limit form.
  CHECK(make_unbounded(4.0, 3.0).mean() == doctest::Approx(3.25));
  // Mean lies strictly inside (a, b).
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.0, 3.0);
  std::uniform_real_distribution<double> uw(0.05, 10.0);
  for (int i = 0; i < 40; ++i) {
    const double a = ua(rng), b = a + uw(rng);
    const double m = make(1.0, a, b).mean();
    CHECK(m > a);
    CHECK(m < b);
  }
}

TEST_CASE("variance closed form") {
  CHECK(close_rel(make(1.0, 1.0, 4.0).variance(), 0.5037309504814621, 1e-13));
  const TruncatedExponential d = make(1.0, 1.0, 4.0);
  const double m = d.mean();
  const double v = romberg_open(
      [&](double t) { return (t - m) * (t - m) * d.density(t); }, 1.0, 4.0);
  CHECK(close_abs(d.variance(), v, 1e-9));
  // Scaling: variance(lambda=2, a, b) = variance(lambda=1, 2a, 2b) / 4.
  CHECK(close_rel(make(2.0, 0.7, 2.9).variance(),
                  make(1.0, 1.4, 5.8).variance() / 4.0, 1e-15));
  // Short-interval expansion L^2/12 (1 - (lambda L)^2 / 20 + ...).
  const double L = 1e-3;
  const double series = L * L / 12.0 * (1.0 - L * L / 20.0);
  CHECK(close_rel(make(1.0, 2.0, 2.0 + L).variance(), series, 1e-9));
  CHECK_THROWS_AS(make_unbounded(1.0, 0.0).variance(), DomainError);
}

TEST_CASE("log_centered_mgf including the theta = lambda branch") {
  const TruncatedExponential d = make(1.0, 1.0, 4.0);
  CHECK(d.log_centered_mgf(0.0) == 0.0);
  const double m = d.mean();
  for (double theta : {1.0, 2.0, -3.0, 0.25}) {
    const double integral = romberg_open(
        [&](double t) { return std::exp(theta * (t - m)) * d.density(t); },
        1.0, 4.0);
    CHECK(close_abs(d.log_centered_mgf(theta), std::log(integral), 1e-9));
  }
  // Removable singularity: smooth through theta = lambda.
  const double left = d.log_centered_mgf(1.0 - 1e-9);
  const double mid = d.log_centered_mgf(1.0);
  const double right = d.log_centered_mgf(1.0 + 1e-9);
  CHECK(close_abs(left, mid, 1e-8));
  CHECK(close_abs(right, mid, 1e-8));
  // Closed singular-limit value: ln[lambda (b-a) e^{-lambda m} / (e^{-a}-e^{-b})].
  const double singular =
      std::log(3.0 * std::exp(-m) / (std::exp(-1.0) - std::exp(-4.0)));
  CHECK(close_abs(mid, singular, 1e-12));
  // b = +inf: finite below lambda, +inf at and above.
  const TruncatedExponential u = make_unbounded(1.0, 0.0);
  CHECK(std::isfinite(u.log_centered_mgf(0.5)));
  CHECK(std::isinf(u.log_centered_mgf(1.0)));
  CHECK(std::isinf(u.log_centered_mgf(2.0)));
}

TEST_CASE("variance_proxy closed form") {
  const ProxyResult r = make(1.0, 1.0, 4.0).variance_proxy();
  CHECK(close_rel(r.variance_proxy, 0.6571870894737679, 1e-13));
  CHECK(close_abs(std::sqrt(r.variance_proxy), 0.8107, 5e-4));
  CHECK_FALSE(r.is_strict);
  CHECK(r.case_tag == CaseTag::ExponentialFinite);
  CHECK(r.variance_proxy > r.variance);
  // Scaling reduction lambda^2 proxy(X) = proxy(standardized).
  CHECK(close_rel(make(2.0, 0.7, 2.9).variance_proxy().variance_proxy,
                  make(1.0, 1.4, 5.8).variance_proxy().variance_proxy / 4.0,
                  1e-15));
  CHECK_THROWS_AS(make_unbounded(1.0, 0.0).variance_proxy(),
                  NotSubGaussianError);
  CHECK_THROWS_WITH_AS(make_unbounded(1.0, 0.0).variance_proxy(),
                       doctest::Contains("not sub-Gaussian"),
                       NotSubGaussianError);
}

TEST_CASE("strictness gap equals the K identity") {
  const TruncatedExponential d = make(1.0, 1.0, 4.0);
  CHECK(close_rel(d.strictness_gap(), 0.15345613899230573, 1e-12));
  // Direct subtraction agrees with the K form.
  const ProxyResult r = d.variance_proxy();
  CHECK(close_rel(d.strictness_gap(), r.variance_proxy - r.variance, 1e-12));
  // Vanishing-width limit: gap ~ (b-a)^4 / 360.
  const double narrow = make(1.0, 2.0, 2.0 + 1e-3).strictness_gap();
  CHECK(narrow > 0.0);
  CHECK(narrow < 1e-9);
  CHECK(close_rel(narrow, 1e-12 / 360.0, 1e-2));
  CHECK_THROWS_AS(make_unbounded(1.0, 1.0).strictness_gap(), DomainError);
  // Strict positivity across a grid: never strictly sub-Gaussian.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ua(0.0, 4.0);
  std::uniform_real_distribution<double> uw(0.05, 12.0);
  for (int i = 0; i < 60; ++i) {
    const double a = ua(rng), b = a + uw(rng);
    CHECK(make(1.0, a, b).strictness_gap() > 0.0);
  }
}

TEST_CASE("domination and tangency at theta = 2") {
  for (auto [a, b] : {std::pair{1.0, 4.0}, {0.0, 2.0}, {0.5, 6.5}, {2.0, 9.0}}) {
    const TruncatedExponential d = make(1.0, a, b);
    const double proxy = d.variance_proxy().variance_proxy;
    for (int i = 0; i <= 800; ++i) {
      const double t = -40.0 + 80.0 * i / 800.0;
      CHECK(d.log_centered_mgf(t) <= 0.5 * proxy * t * t + 1e-9);
    }
    // Tangency: residual vanishes at theta = 2 with zero slope.
    CHECK(close_abs(d.log_centered_mgf(2.0), 2.0 * proxy, 1e-9));
    const double h = 1e-4;
    auto residual = [&](double t) {
      return d.log_centered_mgf(t) - 0.5 * proxy * t * t;
    };
    CHECK(std::fabs((residual(2.0 + h) - residual(2.0 - h)) / (2.0 * h)) <=
          1e-6);
  }
}

TEST_CASE("growth and envelope") {
  // proxy ~ beta/2 for alpha = 0 and large beta.
  const double proxy200 = make(1.0, 0.0, 200.0).variance_proxy().variance_proxy;
  CHECK(proxy200 / 100.0 >= 0.98);
  CHECK(proxy200 / 100.0 <= 1.0);
  // Hoeffding envelope on a grid.
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ua(0.0, 5.0);
  std::uniform_real_distribution<double> uw(0.05, 15.0);
  for (int i = 0; i < 60; ++i) {
    const double a = ua(rng), b = a + uw(rng);
    const double proxy = make(1.0, a, b).variance_proxy().variance_proxy;
    CHECK(proxy <= 0.25 * (b - a) * (b - a) + 1e-12);
  }
  // Large standardized bounds stay finite (log-space normalization).
  const double huge = make(1.0, 500.0, 700.0).variance_proxy().variance_proxy;
  CHECK(std::isfinite(huge));
  CHECK(huge > 0.0);
}
