#ifndef SUBGAUSS_TRUNCATED_EXPONENTIAL_HPP
#define SUBGAUSS_TRUNCATED_EXPONENTIAL_HPP

#include "subgauss/extended_real.hpp"
#include "subgauss/proxy_result.hpp"

namespace subgauss {

/// An Exp(lambda) conditioned on (a, b) with 0 <= a < b <= +inf.
/// Immutable value type; all members are pure.  Exponentials of the
/// standardized bounds are always formed relative to the larger bound, so
/// beta up to several hundred stays finite in double precision.
class TruncatedExponential {
 public:
  TruncatedExponential(double lambda, TruncationInterval interval);

  double lambda() const { return lambda_; }
  const TruncationInterval& interval() const { return interval_; }

  double a() const { return interval_.lower().finite_value(); }
  bool has_finite_b() const { return interval_.upper().is_finite(); }
  /// Upper endpoint; throws DomainError when b = +inf.
  double b() const;

  /// Standardized bounds alpha = lambda a, beta = lambda b.
  double alpha() const { return alpha_; }
  const ExtendedReal& beta() const { return beta_; }

  double density(double t) const;
  /// E[X_T]; for b = +inf this is the limit form 1/lambda + a.
  double mean() const;
  /// Requires b finite (DomainError otherwise).
  double variance() const;

  /// ln E[exp(theta (X_T - E[X_T]))].  The removable singularity at
  /// theta = lambda is evaluated through expm1(kappa)/kappa, which is smooth
  /// across the whole line; +inf is returned for theta >= lambda when
  /// b = +inf (the MGF diverges there).
  double log_centered_mgf(double theta) const;

  /// Closed-form optimal variance proxy; never strict.  Throws
  /// NotSubGaussianError when b = +inf.
  ProxyResult variance_proxy() const;

  /// variance_proxy - variance via the K identity
  ///   gap = e^{alpha+beta} K(beta-alpha) / (2 lambda^2 (e^beta - e^alpha)^2),
  /// K(eps) = 2 eps sinh eps - 8 cosh eps + 2 eps^2 + 8, which is positive by
  /// construction for every finite truncation.  Throws DomainError when
  /// b = +inf.
  double strictness_gap() const;

 private:
  double lambda_;
  TruncationInterval interval_;
  double alpha_;
  ExtendedReal beta_;
};

}  // namespace subgauss

#endif  // SUBGAUSS_TRUNCATED_EXPONENTIAL_HPP
