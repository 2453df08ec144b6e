#ifndef SUBGAUSS_PROXY_CERTIFIER_HPP
#define SUBGAUSS_PROXY_CERTIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "subgauss/truncated_exponential.hpp"
#include "subgauss/truncated_gaussian.hpp"

namespace subgauss {

/// Residual above this is a domination failure; chosen so grid maximization
/// error cannot flip a verdict near the optimum.
inline constexpr double kCertificationSlack = 1e-9;

/// Symmetric theta-grid [-theta_max, theta_max] with local refinement around
/// the residual maximizer.
struct GridSpec {
  double theta_max;
  int n_points = 4001;
  int refinement_rounds = 2;

  GridSpec(double theta_max, int n_points = 4001, int refinement_rounds = 2);
};

/// Family defaults: all tangency points and the asymptotic regime fall well
/// inside; the residual diverges to -inf beyond.
GridSpec default_grid(const TruncatedGaussian& d);
GridSpec default_grid(const TruncatedExponential& d);

struct ProxyCheck {
  bool holds;
  double theta_star;
  double max_residual;
  std::size_t evaluations;
};

/// Evaluates r(theta) = log_cmgf(theta) - s^2 theta^2 / 2 on the grid and
/// refines around the maximizer; holds iff the refined maximum stays within
/// kCertificationSlack.  Throws EvaluationError (carrying theta) if the
/// callable returns a non-finite value.
ProxyCheck check_proxy(const std::function<double(double)>& log_cmgf,
                       double s_squared, const GridSpec& grid);

struct ProxyCertificate {
  double s_squared;     // certified proxy = upper end of the final bracket
  double theta_star;    // residual argmax at the certified s^2
  double max_residual;  // residual maximum at the certified s^2
  double bracket_lo;
  double bracket_hi;
  std::size_t evaluations;
};

/// Bisection on s^2 between a failing lower seed and a holding upper seed,
/// until the bracket width reaches tol.  If the check already holds at lo
/// (the strict case, where lo = variance is itself the optimum) the
/// degenerate certificate (lo, lo) is returned.  Throws BracketError when
/// the check fails at hi.
ProxyCertificate certify_optimal_proxy(
    const std::function<double(double)>& log_cmgf, double lo, double hi,
    double tol, const GridSpec& grid);

/// Independent oracle for the closed-form centered log-MGFs:
/// ln integral e^{theta (x - m)} f(x) dx over the support, with the mean m
/// itself obtained by quadrature.  The exponential is rescaled by its
/// supremum over the support before integrating, so large theta stays in
/// range.
double log_cmgf_quadrature(const std::function<double(double)>& density,
                           std::pair<double, double> support, double theta);

/// Inverse-transform sampling: u uniform on (F(a), F(b)) mapped through the
/// parent quantile.  Deterministic for a fixed seed across platforms (the
/// uniforms are derived from raw mt19937_64 output, not from
/// std::uniform_real_distribution).
std::vector<double> sample(const TruncatedGaussian& d, std::size_t n,
                           std::uint64_t seed);
std::vector<double> sample(const TruncatedExponential& d, std::size_t n,
                           std::uint64_t seed);

}  // namespace subgauss

#endif  // SUBGAUSS_PROXY_CERTIFIER_HPP
