#include "subgauss/truncated_gaussian.hpp"

#include <cmath>

#include "subgauss/special_functions.hpp"

namespace subgauss {

namespace {

// phi(+-inf) = 0 and x phi(x) -> 0 conventions for infinite endpoints.
double ext_pdf(const ExtendedReal& x) {
  return x.is_finite() ? std_normal_pdf(x.finite_value()) : 0.0;
}

double ext_xpdf(const ExtendedReal& x) {
  return x.is_finite()
             ? x.finite_value() * std_normal_pdf(x.finite_value())
             : 0.0;
}

ExtendedReal shift(const ExtendedReal& x, double t) {
  if (!x.is_finite()) return x;
  return ExtendedReal(x.finite_value() - t);
}

// Symmetric-case formula 1 - 2 b phi(b) / (Phi(b) - Phi(-b)).
double symmetric_proxy(double half_width) {
  const double mass = std_normal_cdf_diff(-half_width, half_width);
  return 1.0 - 2.0 * (half_width * std_normal_pdf(half_width)) / mass;
}

}  // namespace

double standard_gaussian_proxy(const ExtendedReal& alpha,
                               const ExtendedReal& beta) {
  if (!alpha.is_finite() || !beta.is_finite()) {
    return 1.0;
  }
  const double a = alpha.finite_value();
  const double b = beta.finite_value();
  const double edge_sum = a + b;
  // Below this the asymmetric formula is a 0/0 removable singularity; the
  // symmetric formula at the half-width agrees to O(edge_sum^2).
  if (std::fabs(edge_sum) < 1e-8) {
    return symmetric_proxy(0.5 * (b - a));
  }
  const double mass = std_normal_cdf_diff(a, b);
  return 1.0 -
         2.0 * (std_normal_pdf(a) - std_normal_pdf(b)) / (edge_sum * mass);
}

TruncatedGaussian::TruncatedGaussian(double mu, double sigma,
                                     TruncationInterval interval)
    : mu_(mu),
      sigma_(sigma),
      interval_(interval),
      alpha_(ExtendedReal::neg_infinity()),
      beta_(ExtendedReal::pos_infinity()) {
  if (!std::isfinite(mu)) {
    throw DomainError("TruncatedGaussian: mu must be finite");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("TruncatedGaussian: sigma must be positive and finite");
  }
  if (interval_.lower().is_finite()) {
    alpha_ = ExtendedReal((interval_.lower().finite_value() - mu_) / sigma_);
  }
  if (interval_.upper().is_finite()) {
    beta_ = ExtendedReal((interval_.upper().finite_value() - mu_) / sigma_);
  }
  if (!(alpha_ < beta_)) {
    throw DomainError("TruncatedGaussian: standardized bounds collapsed");
  }
}

double TruncatedGaussian::theta0() const {
  return 0.5 * (alpha_.finite_value() + beta_.finite_value());
}

double TruncatedGaussian::density(double x) const {
  if (x <= interval_.lower().as_double() ||
      x >= interval_.upper().as_double()) {
    return 0.0;
  }
  const double z = (x - mu_) / sigma_;
  const double mass = std_normal_cdf_diff(alpha_, beta_);
  return std_normal_pdf(z) / (sigma_ * mass);
}

double TruncatedGaussian::mean() const {
  const double mass = std_normal_cdf_diff(alpha_, beta_);
  const double c = (ext_pdf(alpha_) - ext_pdf(beta_)) / mass;
  return mu_ + sigma_ * c;
}

double TruncatedGaussian::variance() const {
  const double mass = std_normal_cdf_diff(alpha_, beta_);
  const double c = (ext_pdf(alpha_) - ext_pdf(beta_)) / mass;
  const double edge = (ext_xpdf(beta_) - ext_xpdf(alpha_)) / mass;
  return sigma_ * sigma_ * (1.0 - edge - c * c);
}

double TruncatedGaussian::log_centered_mgf(double theta) const {
  const double t = sigma_ * theta;
  const double log_shifted =
      std::log(std_normal_cdf_diff(shift(alpha_, t), shift(beta_, t)));
  const double log_mass = std::log(std_normal_cdf_diff(alpha_, beta_));
  return theta * (mu_ - mean()) + 0.5 * t * t + log_shifted - log_mass;
}

ProxyResult TruncatedGaussian::variance_proxy() const {
  ProxyResult r;
  r.variance = variance();
  const double s2 = sigma_ * sigma_;
  if (!interval_.is_bounded()) {
    r.variance_proxy = s2;
    r.is_strict =
        interval_.lower().is_neg_infinity() && interval_.upper().is_pos_infinity();
    r.case_tag = CaseTag::SemiInfiniteOrUntruncated;
    return r;
  }
  const double a = alpha_.finite_value();
  const double b = beta_.finite_value();
  // Evaluated in the standardized frame, then rescaled.
  r.variance_proxy = s2 * standard_gaussian_proxy(alpha_, beta_);
  if (a + b == 0.0) {
    r.is_strict = true;
    r.case_tag = CaseTag::SymmetricFinite;
  } else {
    r.is_strict = false;
    r.case_tag = CaseTag::AsymmetricFinite;
  }
  return r;
}

double TruncatedGaussian::strictness_gap() const {
  const ProxyResult r = variance_proxy();
  const double gap = r.variance_proxy - r.variance;
  return gap < 1e-14 ? 0.0 : gap;
}

}  // namespace subgauss
