#ifndef SUBGAUSS_QUADRATURE_HPP
#define SUBGAUSS_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace subgauss {

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t evaluations;
};

/// Adaptive Gauss-Kronrod 7-15 on a finite interval.  Subdivides until the
/// local Kronrod error estimate meets max(abs_tol, rel_tol * |integral|);
/// throws EvaluationError if the depth budget is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol = 1e-12,
                           double abs_tol = 1e-300, int max_depth = 60);

}  // namespace subgauss

#endif  // SUBGAUSS_QUADRATURE_HPP
