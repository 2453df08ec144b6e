#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "subgauss/special_functions.hpp"
#include "test_support.hpp"

using namespace subgauss;
using testsup::close_abs;
using testsup::close_rel;
using testsup::romberg;

namespace {
const auto phi = [](double x) { return std_normal_pdf(x); };
}

TEST_CASE("std_normal_pdf values and symmetry") {
  CHECK(std_normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
  // Reference value of the closed form at 2, cross-checked by quadrature of
  // the full Gaussian integral below.
  CHECK(std_normal_pdf(2.0) == doctest::Approx(0.05399096651318806).epsilon(1e-14));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(std_normal_pdf(x) == std_normal_pdf(-x));
  }
  CHECK(close_rel(romberg(phi, -12.0, 12.0), 1.0, 1e-12));
}

TEST_CASE("std_normal_cdf endpoints and quadrature oracle") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  CHECK(std_normal_cdf(ExtendedReal::pos_infinity()) == 1.0);
  CHECK(std_normal_cdf(ExtendedReal::neg_infinity()) == 0.0);
  CHECK(close_rel(std_normal_cdf(2.0), 0.9772498680518208, 1e-14));
  const double by_quadrature = romberg(phi, -14.0, 2.0);
  CHECK(close_rel(std_normal_cdf(2.0), by_quadrature, 1e-13));
  // Tail relative accuracy against a scaled quadrature oracle; the upper
  // tail is reached through the complementary path.
  const double tail = romberg(phi, 10.0, 16.0);
  CHECK(close_rel(std_normal_cdf(-10.0), tail, 1e-10));
  CHECK(close_rel(std_normal_cdf_diff(ExtendedReal(10.0),
                                      ExtendedReal::pos_infinity()),
                  tail, 1e-10));
}

TEST_CASE("std_normal_cdf is nondecreasing and complements to one") {
  double prev = 0.0;
  for (int i = 0; i <= 480; ++i) {
    const double x = -12.0 + 0.05 * i;
    const double value = std_normal_cdf(x);
    CHECK(value >= prev);
    CHECK(close_abs(value + std_normal_cdf(-x), 1.0, 1e-15));
    prev = value;
  }
}

TEST_CASE("std_normal_cdf_diff avoids tail cancellation") {
  CHECK(std_normal_cdf_diff(ExtendedReal::neg_infinity(),
                            ExtendedReal::pos_infinity()) == 1.0);
  CHECK(close_rel(std_normal_cdf_diff(-1.0, 1.0), 0.6826894921370859, 1e-14));
  CHECK(close_rel(std_normal_cdf_diff(-1.0, 1.0), romberg(phi, -1.0, 1.0), 1e-13));
  // Far-tail difference keeps ~full precision (naive Phi(11)-Phi(10) is 0).
  const double diff = std_normal_cdf_diff(10.0, 11.0);
  CHECK(diff > 0.0);
  CHECK(close_rel(diff, 7.619661958203076e-24, 1e-12));
  CHECK(close_rel(diff, romberg(phi, 10.0, 11.0), 1e-10));
  CHECK(close_rel(std_normal_cdf_diff(-11.0, -10.0), diff, 1e-13));
  CHECK_THROWS_AS(std_normal_cdf_diff(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(std_normal_cdf_diff(2.0, -2.0), DomainError);
}

TEST_CASE("std_normal_quantile inverts the CDF") {
  CHECK(std_normal_quantile(0.5) == 0.0);
  CHECK(close_abs(std_normal_quantile(0.9772498680518208), 2.0, 1e-9));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-8, 1.0 - 1e-8);
  for (int i = 0; i < 300; ++i) {
    const double p = u(rng);
    CHECK(close_abs(std_normal_quantile(p), -std_normal_quantile(1.0 - p), 1e-12));
  }
  // Round trip in x.  Above x ~ 5.4 the double representation of p near 1
  // alone costs more than 1e-9 in x (ulp(1)/phi(x)), so the far upper range
  // is held to the p-space contract instead.
  for (int i = 0; i <= 114; ++i) {
    const double x = -6.0 + 0.1 * i;
    CHECK(close_abs(std_normal_quantile(std_normal_cdf(x)), x, 1e-9));
  }
  for (double x : {5.5, 5.8, 6.0}) {
    const double p = std_normal_cdf(x);
    const double back = std_normal_quantile(p);
    CHECK(close_abs(std_normal_cdf(back), p, 1e-12));
    CHECK(close_abs(back, x, 1e-7));
  }
  CHECK_THROWS_AS(std_normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(std_normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(std_normal_quantile(-0.3), DomainError);
}

TEST_CASE("gauss_F_derivatives closed forms") {
  SUBCASE("values at theta = 0") {
    for (double beta : {0.5, 1.0, 2.0, 4.0}) {
      const GaussFDerivatives d = gauss_F_derivatives(beta, 0.0);
      CHECK(close_rel(d.F, 2.0 * std_normal_cdf(beta) - 1.0, 1e-14));
      CHECK(d.F1 == 0.0);
      const double expected_f2 =
          -2.0 * beta / std::sqrt(2.0 * M_PI) * std::exp(-0.5 * beta * beta);
      CHECK(close_rel(d.F2, expected_f2, 1e-14));
      CHECK(d.F2 < 0.0);
    }
  }
  SUBCASE("third-derivative linear relation") {
    // F''' = -P2' F'' - P2 F' with P2 = theta^2 + 1 - beta^2.
    for (double beta : {0.7, 1.7, 3.1}) {
      for (double theta : {-2.0, 0.9, 2.5, 6.0}) {
        const GaussFDerivatives d = gauss_F_derivatives(beta, theta);
        const double p2 = theta * theta + 1.0 - beta * beta;
        const double rhs = -2.0 * theta * d.F2 - p2 * d.F1;
        const double scale = std::max({std::fabs(d.F3), std::fabs(2.0 * theta * d.F2),
                                       std::fabs(p2 * d.F1)});
        CHECK(std::fabs(d.F3 - rhs) <= 1e-12 * scale);
      }
    }
  }
  SUBCASE("F''' equals finite difference of F''") {
    const double h = 1e-4;
    for (double beta : {0.8, 1.7, 2.6}) {
      for (double theta : {-1.0, 0.4, 1.9, 4.0}) {
        const double fd = (gauss_F_derivatives(beta, theta + h).F2 -
                           gauss_F_derivatives(beta, theta - h).F2) /
                          (2.0 * h);
        CHECK(close_abs(gauss_F_derivatives(beta, theta).F3, fd, 1e-6));
      }
    }
  }
}

TEST_CASE("ExtendedReal and TruncationInterval invariants") {
  CHECK_THROWS_AS(ExtendedReal(std::nan("")), DomainError);
  CHECK(ExtendedReal(3.5).is_finite());
  CHECK(ExtendedReal(-INFINITY).is_neg_infinity());
  CHECK(ExtendedReal::pos_infinity().as_double() == INFINITY);
  CHECK_THROWS_AS(ExtendedReal::pos_infinity().finite_value(), DomainError);
  CHECK(ExtendedReal(1.0) < ExtendedReal(2.0));
  CHECK(ExtendedReal::neg_infinity() < ExtendedReal(-1e308));
  CHECK_THROWS_AS(TruncationInterval(ExtendedReal(1.0), ExtendedReal(1.0)),
                  DomainError);
  CHECK_THROWS_AS(TruncationInterval(ExtendedReal::pos_infinity(),
                                     ExtendedReal::pos_infinity()),
                  DomainError);
  CHECK_THROWS_AS(TruncationInterval(ExtendedReal(2.0), ExtendedReal(-2.0)),
                  DomainError);
}
