#ifndef SUBGAUSS_TRUNCATED_GAUSSIAN_HPP
#define SUBGAUSS_TRUNCATED_GAUSSIAN_HPP

#include "subgauss/extended_real.hpp"
#include "subgauss/proxy_result.hpp"

namespace subgauss {

/// A normal N(mu, sigma^2) conditioned on the open interval (a, b).
/// Immutable value type; all members are pure.
class TruncatedGaussian {
 public:
  TruncatedGaussian(double mu, double sigma, TruncationInterval interval);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  const TruncationInterval& interval() const { return interval_; }

  /// Standardized truncation bounds alpha = (a-mu)/sigma, beta = (b-mu)/sigma.
  const ExtendedReal& alpha() const { return alpha_; }
  const ExtendedReal& beta() const { return beta_; }

  /// (alpha + beta) / 2; requires both endpoints finite.
  double theta0() const;

  double density(double x) const;
  double mean() const;
  double variance() const;

  /// ln E[exp(theta (X_T - E[X_T]))], evaluated in log space so far
  /// truncations and large |theta| keep their accuracy.
  double log_centered_mgf(double theta) const;

  /// Closed-form optimal variance proxy with the three-way case split
  /// (asymmetric finite / symmetric finite / any infinite endpoint).
  ProxyResult variance_proxy() const;

  /// variance_proxy - variance, clamped to 0 below 1e-14.
  double strictness_gap() const;

 private:
  double mu_;
  double sigma_;
  TruncationInterval interval_;
  ExtendedReal alpha_;
  ExtendedReal beta_;
};

/// Optimal variance proxy of a *standard* normal truncated to (alpha, beta).
/// The general case reduces to this by proxy(X) = sigma^2 * proxy(Y).
double standard_gaussian_proxy(const ExtendedReal& alpha,
                               const ExtendedReal& beta);

}  // namespace subgauss

#endif  // SUBGAUSS_TRUNCATED_GAUSSIAN_HPP
