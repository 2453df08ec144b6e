#ifndef SUBGAUSS_LEMMA_SUITE_HPP
#define SUBGAUSS_LEMMA_SUITE_HPP

#include "subgauss/special_functions.hpp"

namespace subgauss::lemmas {

/// A value together with the magnitude of the largest term that formed it.
/// Grid positivity/negativity assertions compare against a relative margin
/// of this scale instead of a raw sign test on doubles.
struct ScaledValue {
  double value;
  double scale;
};

// ---------------------------------------------------------------------------
// Gaussian proof apparatus
// ---------------------------------------------------------------------------

/// Standardized finite truncation frame (alpha, beta) with the constants
/// c = (phi(alpha)-phi(beta)) / (Phi(beta)-Phi(alpha)) and
/// theta0 = (alpha+beta)/2 used throughout the Gaussian proof.
struct GaussFrame {
  double alpha;
  double beta;
  double c;
  double theta0;

  GaussFrame(double alpha, double beta);

  bool symmetric() const;
};

/// f(theta) = ln[ F_{alpha,beta}(theta) / (Phi(beta)-Phi(alpha)) ].
double gauss_f(const GaussFrame& frame, double theta);

/// h = f', h' in closed form; h'' by shifting to the symmetric frame
/// beta~ = (beta-alpha)/2 and applying the F-derivative expression there.
double gauss_h(const GaussFrame& frame, double theta);
double gauss_h_prime(const GaussFrame& frame, double theta);
double gauss_h_second(const GaussFrame& frame, double theta);
ScaledValue gauss_h_second_checked(const GaussFrame& frame, double theta);

/// Critical parabola coefficient: proxy = 2 w_c + 1 in the standardized
/// frame.  Case split between the asymmetric and symmetric formulas.
double gauss_w_c(const GaussFrame& frame);

/// The tangent parabola p_w(theta) = w theta^2 + c theta of the frame.
double gauss_p(const GaussFrame& frame, double w, double theta);

/// Z_beta = F^2 F''' - 3 F F' F'' + 2 (F')^3, the numerator of h'' over F^3
/// in the symmetric frame.  Strictly negative on theta > 0.
double gauss_Z(double beta, double theta);
ScaledValue gauss_Z_checked(double beta, double theta);

/// The degree-five polynomial combination in (F', F'') whose positivity on
/// theta > 0 is the sufficient concavity condition.
double gauss_S(double beta, double theta);
ScaledValue gauss_S_checked(double beta, double theta);

/// Hyperbolic form: S = 2 (phi-scale)^5 S~ with
/// phi-scale = e^{-(theta^2+beta^2)/2} / sqrt(2 pi).
double gauss_S_hyperbolic(double beta, double theta);
/// Same function after the change of variables s = beta * theta.
double gauss_A(double beta, double s);

// ---------------------------------------------------------------------------
// Appendix positivity functions
// ---------------------------------------------------------------------------

enum class AppendixFn { K, P, R, B0 };

/// K(x) = 2x sinh x - 8 cosh x + 2x^2 + 8
/// P(x) = 2e^{3x} - (x^3+6)e^{2x} + (6-x^3)e^x - 2
/// R(x) = 20x sinh x cosh^2 x - 21 cosh^3 x - 18x^2 cosh x + 19x sinh x
///        + 21 cosh x
/// B0(x) = sinh 5x - 5 sinh 3x + 10 sinh x + 4x^3 cosh x - 4x^3 cosh 3x
/// All four vanish at 0 to high order; small arguments are evaluated by
/// their power series so the positivity survives the cancellation, and
/// large arguments are evaluated with the dominant exponential factored out.
double appendix_positivity(AppendixFn fn, double x);
ScaledValue appendix_positivity_checked(AppendixFn fn, double x);

// ---------------------------------------------------------------------------
// Exponential proof apparatus
// ---------------------------------------------------------------------------

struct ExpBounds {
  double s_inf;
  double s_1;
  double s_2;
  double delta;
};

/// Standardized exponential frame (alpha, beta, s) with the derived mean
/// E[Y_T] and the coefficients A, B, C of the quadratic P whose discriminant
/// decides whether G has a second local maximum.
struct ExpFrame {
  double alpha;
  double beta;
  double s;
  double mean;  // E[Y_T] of the standardized truncation
  double A;
  double B;
  double C;

  ExpFrame(double alpha, double beta, double s);

  double discriminant() const;  // B^2 - 4 A C
};

/// g(theta) = E[exp(theta (Y_T - E[Y_T]))] - exp(s^2 theta^2 / 2).
double exp_g(const ExpFrame& frame, double theta);

/// G(theta) = e^alpha - e^beta + smooth singular term; same sign as g.
double exp_G(const ExpFrame& frame, double theta);

/// The bracket h of the factorization
/// G'(theta) = e^{alpha theta + beta} e^{-s^2 theta^2/2 - E theta}
///             h(theta) / (theta-1)^2.
double exp_h(const ExpFrame& frame, double theta);

/// Closed form of h''' by term-wise differentiation; satisfies
/// h'''(theta) = (beta-alpha) e^{(theta-1)(beta-alpha)} P(theta) with
/// P = A theta^2 + B theta + C.
double exp_h_third(const ExpFrame& frame, double theta);

/// s_inf, s_1, s_2 and the discriminant root term delta.  Throws
/// DomainError if the delta radicand is negative (not observed on the
/// tested grids, but the domain is not characterized).
ExpBounds exp_bounds(const ExpFrame& frame);

/// g'''_{alpha,alpha+eps,s_inf}(0) = P(eps) / (e^eps - 1)^3, strictly
/// positive; series evaluation below eps = 1 (the numerator vanishes to
/// seventh order).
double exp_g3_at_zero(double alpha, double epsilon);

}  // namespace subgauss::lemmas

#endif  // SUBGAUSS_LEMMA_SUITE_HPP
