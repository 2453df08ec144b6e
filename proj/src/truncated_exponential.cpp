#include "subgauss/truncated_exponential.hpp"

#include <cmath>
#include <limits>

namespace subgauss {

namespace {

// Standardized variance 1 - (eps / (2 sinh(eps/2)))^2 of an Exp(1)
// truncated to a width-eps interval; series below eps = 0.1 where the
// direct form cancels.
double standardized_variance(double eps) {
  if (eps < 0.1) {
    const double u2 = 0.25 * eps * eps;
    return u2 * (1.0 / 3.0 +
                 u2 * (-1.0 / 15.0 + u2 * (2.0 / 189.0 - u2 / 675.0)));
  }
  const double t = eps / (2.0 * std::sinh(0.5 * eps));
  return 1.0 - t * t;
}

// Standardized proxy u coth u - 1 with u = eps/2; series below eps = 0.1.
double standardized_proxy(double eps) {
  const double u = 0.5 * eps;
  if (eps < 0.1) {
    const double u2 = u * u;
    return u2 * (1.0 / 3.0 +
                 u2 * (-1.0 / 45.0 + u2 * (2.0 / 945.0 - u2 / 4725.0)));
  }
  return u * std::cosh(u) / std::sinh(u) - 1.0;
}

// K(eps) = 2 eps sinh eps - 8 cosh eps + 2 eps^2 + 8
//        = sum_{k>=3} (4k-8) eps^{2k} / (2k)!  (all terms positive).
// The series keeps full relative precision where the hyperbolic form
// cancels to O(eps^6).
double K_fn(double eps) {
  if (eps < 2.0) {
    const double e2 = eps * eps;
    double term = e2 * e2 * e2 / 720.0;  // eps^6 / 6!
    double sum = 0.0;
    for (int k = 3; k < 40; ++k) {
      sum += (4.0 * k - 8.0) * term;
      term *= e2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
      if (term * (4.0 * k - 4.0) < sum * 1e-18) break;
    }
    return sum;
  }
  return 2.0 * eps * std::sinh(eps) - 8.0 * std::cosh(eps) + 2.0 * eps * eps +
         8.0;
}

}  // namespace

TruncatedExponential::TruncatedExponential(double lambda,
                                           TruncationInterval interval)
    : lambda_(lambda),
      interval_(interval),
      alpha_(0.0),
      beta_(ExtendedReal::pos_infinity()) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("TruncatedExponential: lambda must be positive and finite");
  }
  if (!interval_.lower().is_finite() || interval_.lower().finite_value() < 0.0) {
    throw DomainError("TruncatedExponential: requires 0 <= a (finite)");
  }
  alpha_ = lambda_ * interval_.lower().finite_value();
  if (interval_.upper().is_finite()) {
    beta_ = ExtendedReal(lambda_ * interval_.upper().finite_value());
  }
}

double TruncatedExponential::b() const {
  if (!has_finite_b()) {
    throw DomainError("TruncatedExponential: b = +inf");
  }
  return interval_.upper().finite_value();
}

double TruncatedExponential::density(double t) const {
  if (t <= a() || t >= interval_.upper().as_double()) {
    return 0.0;
  }
  // lambda e^{-lambda t} / (e^{-lambda a} - e^{-lambda b}), normalized by
  // e^{-alpha} so only the interval width enters the denominator.
  const double denom =
      has_finite_b() ? -std::expm1(alpha_ - beta_.finite_value()) : 1.0;
  return lambda_ * std::exp(-(lambda_ * t - alpha_)) / denom;
}

double TruncatedExponential::mean() const {
  if (!has_finite_b()) {
    return 1.0 / lambda_ + a();
  }
  const double eps = beta_.finite_value() - alpha_;
  return 1.0 / lambda_ +
         (a() - b() * std::exp(-eps)) / (-std::expm1(-eps));
}

double TruncatedExponential::variance() const {
  if (!has_finite_b()) {
    throw DomainError(
        "TruncatedExponential::variance: b = +inf (proxy pipeline requires a "
        "finite upper endpoint)");
  }
  const double eps = beta_.finite_value() - alpha_;
  return standardized_variance(eps) / (lambda_ * lambda_);
}

double TruncatedExponential::log_centered_mgf(double theta) const {
  if (theta == 0.0) return 0.0;
  const double m = mean();
  if (!has_finite_b()) {
    if (theta >= lambda_) {
      return std::numeric_limits<double>::infinity();
    }
    return theta * (a() - m) + std::log(lambda_ / (lambda_ - theta));
  }
  const double eps = beta_.finite_value() - alpha_;
  const double kappa = (lambda_ - theta) * (b() - a());
  // ln[(1 - e^{-kappa}) / kappa], smooth through kappa = 0.
  double log_q;
  if (kappa > 1e-8) {
    log_q = std::log(-std::expm1(-kappa)) - std::log(kappa);
  } else if (kappa >= -1e-8) {
    log_q = std::log1p(kappa * (-0.5 + kappa / 6.0));
  } else {
    log_q = -kappa + std::log1p(-std::exp(kappa)) - std::log(-kappa);
  }
  return theta * (a() - m) + std::log(eps) + log_q -
         std::log(-std::expm1(-eps));
}

ProxyResult TruncatedExponential::variance_proxy() const {
  if (!has_finite_b()) {
    throw NotSubGaussianError(
        "truncated exponential with b = +inf is not sub-Gaussian");
  }
  const double eps = beta_.finite_value() - alpha_;
  ProxyResult r;
  r.variance = variance();
  r.variance_proxy = standardized_proxy(eps) / (lambda_ * lambda_);
  r.is_strict = false;
  r.case_tag = CaseTag::ExponentialFinite;
  return r;
}

double TruncatedExponential::strictness_gap() const {
  if (!has_finite_b()) {
    throw DomainError("TruncatedExponential::strictness_gap: b = +inf");
  }
  const double eps = beta_.finite_value() - alpha_;
  // e^{alpha+beta} K(eps) / (2 lambda^2 (e^beta - e^alpha)^2), with the
  // exponential prefactor absorbed: the denominator equals 8 sinh^2(eps/2).
  const double sh = std::sinh(0.5 * eps);
  return K_fn(eps) / (8.0 * lambda_ * lambda_ * sh * sh);
}

}  // namespace subgauss
