#include "subgauss/proxy_certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "subgauss/errors.hpp"
#include "subgauss/quadrature.hpp"
#include "subgauss/special_functions.hpp"

namespace subgauss {

GridSpec::GridSpec(double theta_max_in, int n_points_in,
                   int refinement_rounds_in)
    : theta_max(theta_max_in),
      n_points(n_points_in),
      refinement_rounds(refinement_rounds_in) {
  if (!(theta_max > 0.0) || !std::isfinite(theta_max)) {
    throw DomainError("GridSpec: theta_max must be positive and finite");
  }
  if (n_points < 101) {
    throw DomainError("GridSpec: n_points must be at least 101");
  }
  if (refinement_rounds < 0 || refinement_rounds > 16) {
    throw DomainError("GridSpec: refinement_rounds out of range");
  }
}

GridSpec default_grid(const TruncatedGaussian& d) {
  double extent = 12.0;
  if (d.alpha().is_finite()) extent += std::fabs(d.alpha().finite_value());
  if (d.beta().is_finite()) extent += std::fabs(d.beta().finite_value());
  return GridSpec(extent / d.sigma());
}

GridSpec default_grid(const TruncatedExponential& d) {
  if (!d.has_finite_b()) {
    throw DomainError("default_grid: exponential grid requires finite b");
  }
  return GridSpec(d.lambda() * (3.0 * d.beta().finite_value() + 10.0));
}

namespace {

struct GridMax {
  double theta;
  double residual;
  std::size_t evaluations = 0;
};

GridMax scan(const std::function<double(double)>& log_cmgf, double s_squared,
             double lo, double hi, int n) {
  GridMax best{lo, -std::numeric_limits<double>::infinity(), 0};
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double theta = lo + i * step;
    const double value = log_cmgf(theta);
    if (!std::isfinite(value)) {
      throw EvaluationError("check_proxy: non-finite log MGF on grid", theta);
    }
    const double residual = value - 0.5 * s_squared * theta * theta;
    ++best.evaluations;
    if (residual > best.residual) {
      best.residual = residual;
      best.theta = theta;
    }
  }
  return best;
}

}  // namespace

ProxyCheck check_proxy(const std::function<double(double)>& log_cmgf,
                       double s_squared, const GridSpec& grid) {
  if (s_squared < 0.0) {
    throw DomainError("check_proxy: s_squared must be nonnegative");
  }
  const int n = grid.n_points;
  const double step0 = 2.0 * grid.theta_max / (n - 1);
  std::vector<double> residual(n);
  for (int i = 0; i < n; ++i) {
    const double theta = -grid.theta_max + i * step0;
    const double value = log_cmgf(theta);
    if (!std::isfinite(value)) {
      throw EvaluationError("check_proxy: non-finite log MGF on grid", theta);
    }
    residual[i] = value - 0.5 * s_squared * theta * theta;
  }
  std::size_t evaluations = static_cast<std::size_t>(n);

  // Candidate maximizers: every discrete local maximum of the grid (plus the
  // endpoints), best four first.  Near the optimum the violation bump at the
  // tangency point is narrower than the grid step and may be negative at the
  // sampled points while still forming a local hump, so refining only the
  // global argmax would zoom on theta = 0 (residual identically 0 there) and
  // miss the refutation.
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || residual[i] >= residual[i - 1];
    const bool right_ok = i == n - 1 || residual[i] >= residual[i + 1];
    if (left_ok && right_ok) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](int a, int b) { return residual[a] > residual[b]; });
  if (candidates.size() > 4) candidates.resize(4);

  GridMax best{-grid.theta_max, residual[0], 0};
  for (int i = 0; i < n; ++i) {
    if (residual[i] > best.residual) {
      best.residual = residual[i];
      best.theta = -grid.theta_max + i * step0;
    }
  }
  for (int idx : candidates) {
    GridMax local{-grid.theta_max + idx * step0, residual[idx], 0};
    double step = step0;
    for (int round = 0; round < grid.refinement_rounds; ++round) {
      GridMax refined = scan(log_cmgf, s_squared, local.theta - 2.0 * step,
                             local.theta + 2.0 * step, 401);
      evaluations += refined.evaluations;
      if (refined.residual > local.residual) {
        local.theta = refined.theta;
        local.residual = refined.residual;
      }
      step /= 100.0;
    }
    if (local.residual > best.residual) {
      best.theta = local.theta;
      best.residual = local.residual;
    }
  }
  return ProxyCheck{best.residual <= kCertificationSlack, best.theta,
                    best.residual, evaluations};
}

ProxyCertificate certify_optimal_proxy(
    const std::function<double(double)>& log_cmgf, double lo, double hi,
    double tol, const GridSpec& grid) {
  if (!(lo < hi)) {
    throw BracketError("certify_optimal_proxy: requires lo < hi");
  }
  if (!(tol > 0.0)) {
    throw BracketError("certify_optimal_proxy: requires tol > 0");
  }
  ProxyCheck at_lo = check_proxy(log_cmgf, lo, grid);
  std::size_t evaluations = at_lo.evaluations;
  if (at_lo.holds) {
    // The lower seed is already a certified proxy; since it is a lower
    // bound of the optimum by construction, the bracket collapses (the
    // strict case, lo = variance = optimal proxy).
    return ProxyCertificate{lo, at_lo.theta_star, at_lo.max_residual,
                            lo, lo,              evaluations};
  }
  ProxyCheck at_hi = check_proxy(log_cmgf, hi, grid);
  evaluations += at_hi.evaluations;
  if (!at_hi.holds) {
    throw BracketError(
        "certify_optimal_proxy: domination check fails at the upper seed");
  }
  // theta_star reported from the refuted (lower) side: at a holding s^2 the
  // argmax collapses to theta = 0, while the failing side localizes the
  // tangency point.
  double theta_star = at_lo.theta_star;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    ProxyCheck at_mid = check_proxy(log_cmgf, mid, grid);
    evaluations += at_mid.evaluations;
    if (at_mid.holds) {
      hi = mid;
      at_hi = at_mid;
    } else {
      lo = mid;
      theta_star = at_mid.theta_star;
    }
  }
  return ProxyCertificate{hi, theta_star, at_hi.max_residual,
                          lo, hi,         evaluations};
}

double log_cmgf_quadrature(const std::function<double(double)>& density,
                           std::pair<double, double> support, double theta) {
  const double lo = support.first;
  const double hi = support.second;
  const double mass = integrate(density, lo, hi).value;
  const double mean =
      integrate([&](double x) { return x * density(x); }, lo, hi).value / mass;
  // Shift the exponent by its supremum over the support (the exponent is
  // linear in x) so the integrand never overflows.
  const double shift = std::max({theta * (lo - mean), theta * (hi - mean), 0.0});
  const QuadratureResult tilted = integrate(
      [&](double x) { return std::exp(theta * (x - mean) - shift) * density(x); },
      lo, hi);
  return shift + std::log(tilted.value);
}

namespace {

// Uniform on (0,1), derived from raw engine output so sequences are
// identical across standard library implementations.
double canonical_u01(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::vector<double> sample(const TruncatedGaussian& d, std::size_t n,
                           std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const double p_lo = std_normal_cdf(d.alpha());
  const double p_hi = std_normal_cdf(d.beta());
  const double a = d.interval().lower().as_double();
  const double b = d.interval().upper().as_double();
  std::vector<double> out(n);
  for (double& x : out) {
    const double u = canonical_u01(engine);
    const double p = p_lo + u * (p_hi - p_lo);
    x = d.mu() + d.sigma() * std_normal_quantile(p);
    x = std::clamp(x, std::nextafter(a, b), std::nextafter(b, a));
  }
  return out;
}

std::vector<double> sample(const TruncatedExponential& d, std::size_t n,
                           std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const double p_lo = -std::expm1(-d.alpha());
  const double p_hi =
      d.has_finite_b() ? -std::expm1(-d.beta().finite_value()) : 1.0;
  const double a = d.a();
  const double b = d.interval().upper().as_double();
  std::vector<double> out(n);
  for (double& x : out) {
    const double u = canonical_u01(engine);
    const double p = p_lo + u * (p_hi - p_lo);
    x = -std::log1p(-p) / d.lambda();
    x = std::clamp(x, std::nextafter(a, b), std::nextafter(b, a));
  }
  return out;
}

}  // namespace subgauss
