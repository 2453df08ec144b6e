#ifndef SUBGAUSS_TEST_SUPPORT_HPP
#define SUBGAUSS_TEST_SUPPORT_HPP

// Small test-side numeric toolkit.  The Romberg integrator is deliberately
// independent of the library's Gauss-Kronrod quadrature so it can act as an
// oracle for it.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace testsup {

inline double romberg(const std::function<double(double)>& f, double a,
                      double b, int levels = 22, double rel_tol = 1e-13) {
  constexpr int kMax = 26;
  if (levels > kMax) throw std::invalid_argument("romberg: too many levels");
  std::array<double, kMax> row{};
  std::array<double, kMax> prev{};
  double h = b - a;
  prev[0] = 0.5 * h * (f(a) + f(b));
  long n = 1;
  for (int i = 1; i < levels; ++i) {
    h *= 0.5;
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
      sum += f(a + (2 * k + 1) * h);
    }
    n *= 2;
    row[0] = 0.5 * prev[0] + h * sum;
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      row[j] = row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0);
    }
    if (i > 4 &&
        std::fabs(row[i] - prev[i - 1]) <=
            rel_tol * std::max(1e-300, std::fabs(row[i]))) {
      return row[i];
    }
    prev = row;
  }
  return prev[levels - 1];
}

// Romberg over an open interval: the endpoints are moved one ulp inward so
// densities that are exactly 0 at their support boundary are sampled at
// their one-sided limits.
inline double romberg_open(const std::function<double(double)>& f, double a,
                           double b, int levels = 22, double rel_tol = 1e-13) {
  return romberg(f, std::nextafter(a, b), std::nextafter(b, a), levels,
                 rel_tol);
}

// Centered first derivative, O(h^2).
inline double fd1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Centered second derivative, O(h^2).
inline double fd2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Centered third derivative, O(h^2).
inline double fd3(const std::function<double(double)>& f, double x, double h) {
  return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
         (2.0 * h * h * h);
}

inline bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

inline bool close_abs(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

}  // namespace testsup

#endif  // SUBGAUSS_TEST_SUPPORT_HPP
