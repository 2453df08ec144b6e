#include "subgauss/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "subgauss/errors.hpp"

namespace subgauss {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK QK15).
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
  double lo, hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * fsum;
    }
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = kronrod * h;
  p.error = std::fabs((kronrod - gauss) * h);
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol, double abs_tol,
                           int max_depth) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate: requires finite lo < hi");
  }
  const std::size_t max_panels =
      static_cast<std::size_t>(1) << std::min(max_depth, 14);

  std::priority_queue<Panel> panels;
  panels.push(gk15(f, lo, hi));
  std::size_t evaluations = 15;
  double total = panels.top().value;
  double total_error = panels.top().error;

  while (total_error > std::max(abs_tol, rel_tol * std::fabs(total))) {
    if (panels.size() >= max_panels) {
      throw EvaluationError("integrate: quadrature did not converge",
                            panels.top().lo);
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = gk15(f, worst.lo, mid);
    Panel right = gk15(f, mid, worst.hi);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  return QuadratureResult{total, total_error, evaluations};
}

}  // namespace subgauss
