#ifndef SUBGAUSS_SPECIAL_FUNCTIONS_HPP
#define SUBGAUSS_SPECIAL_FUNCTIONS_HPP

#include "subgauss/extended_real.hpp"

namespace subgauss {

/// Standard normal density phi(x) = exp(-x^2/2) / sqrt(2 pi).
double std_normal_pdf(double x);

/// Standard normal CDF via erfc; full relative accuracy in both tails.
double std_normal_cdf(double x);
double std_normal_cdf(const ExtendedReal& x);

/// Phi(hi) - Phi(lo) without catastrophic cancellation.  When both
/// arguments share a sign the difference is formed between complementary
/// tail values, so far truncations keep their significant digits.
/// Requires lo < hi.
double std_normal_cdf_diff(double lo, double hi);
double std_normal_cdf_diff(const ExtendedReal& lo, const ExtendedReal& hi);

/// Inverse of std_normal_cdf on (0,1).  Wichura's AS241 rational
/// approximation polished with one Newton step against the erfc-based CDF.
/// Throws DomainError for p outside (0,1).
double std_normal_quantile(double p);

/// F_{-beta,beta}(theta) = Phi(beta-theta) - Phi(-beta-theta) together with
/// its first three theta-derivatives, each in closed form.
struct GaussFDerivatives {
  double F;
  double F1;
  double F2;
  double F3;
};

GaussFDerivatives gauss_F_derivatives(double beta, double theta);

}  // namespace subgauss

#endif  // SUBGAUSS_SPECIAL_FUNCTIONS_HPP
