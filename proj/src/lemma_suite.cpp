#include "subgauss/lemma_suite.hpp"

#include <cmath>

#include "subgauss/errors.hpp"
#include "subgauss/truncated_exponential.hpp"

namespace subgauss::lemmas {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gaussian apparatus
// ---------------------------------------------------------------------------

GaussFrame::GaussFrame(double alpha_in, double beta_in)
    : alpha(alpha_in), beta(beta_in) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha < beta)) {
    throw DomainError("GaussFrame: requires finite alpha < beta");
  }
  const double mass = std_normal_cdf_diff(alpha, beta);
  c = (std_normal_pdf(alpha) - std_normal_pdf(beta)) / mass;
  theta0 = 0.5 * (alpha + beta);
}

bool GaussFrame::symmetric() const { return alpha + beta == 0.0; }

double gauss_f(const GaussFrame& frame, double theta) {
  const double shifted =
      std_normal_cdf_diff(frame.alpha - theta, frame.beta - theta);
  const double mass = std_normal_cdf_diff(frame.alpha, frame.beta);
  return std::log(shifted) - std::log(mass);
}

double gauss_h(const GaussFrame& frame, double theta) {
  const double shifted =
      std_normal_cdf_diff(frame.alpha - theta, frame.beta - theta);
  return (std_normal_pdf(frame.alpha - theta) -
          std_normal_pdf(frame.beta - theta)) /
         shifted;
}

double gauss_h_prime(const GaussFrame& frame, double theta) {
  const double a = frame.alpha - theta;
  const double b = frame.beta - theta;
  const double shifted = std_normal_cdf_diff(a, b);
  const double h = (std_normal_pdf(a) - std_normal_pdf(b)) / shifted;
  return (a * std_normal_pdf(a) - b * std_normal_pdf(b)) / shifted - h * h;
}

double gauss_h_second(const GaussFrame& frame, double theta) {
  return gauss_h_second_checked(frame, theta).value;
}

ScaledValue gauss_h_second_checked(const GaussFrame& frame, double theta) {
  // Shift to the symmetric frame: h''_{a,b}(theta) = h''_{-bt,bt}(theta-theta0)
  // with bt = (beta-alpha)/2, then h'' = Z / F^3 from the F-derivatives.
  const double bt = 0.5 * (frame.beta - frame.alpha);
  const double t = theta - frame.theta0;
  const GaussFDerivatives d = gauss_F_derivatives(bt, t);
  const double f3 = d.F * d.F * d.F;
  const double t1 = d.F * d.F * d.F3;
  const double t2 = -3.0 * d.F * d.F1 * d.F2;
  const double t3 = 2.0 * d.F1 * d.F1 * d.F1;
  const double scale =
      (std::fabs(t1) + std::fabs(t2) + std::fabs(t3)) / f3;
  return ScaledValue{(t1 + t2 + t3) / f3, scale};
}

double gauss_w_c(const GaussFrame& frame) {
  if (std::fabs(frame.alpha + frame.beta) < 1e-8) {
    const double bt = 0.5 * (frame.beta - frame.alpha);
    return -bt * std_normal_pdf(bt) / std_normal_cdf_diff(-bt, bt);
  }
  return -frame.c / (2.0 * frame.theta0);
}

double gauss_p(const GaussFrame& frame, double w, double theta) {
  return w * theta * theta + frame.c * theta;
}

double gauss_Z(double beta, double theta) {
  return gauss_Z_checked(beta, theta).value;
}

ScaledValue gauss_Z_checked(double beta, double theta) {
  const GaussFDerivatives d = gauss_F_derivatives(beta, theta);
  const double t1 = d.F * d.F * d.F3;
  const double t2 = -3.0 * d.F * d.F1 * d.F2;
  const double t3 = 2.0 * d.F1 * d.F1 * d.F1;
  return ScaledValue{t1 + t2 + t3,
                     std::fabs(t1) + std::fabs(t2) + std::fabs(t3)};
}

double gauss_S(double beta, double theta) {
  return gauss_S_checked(beta, theta).value;
}

ScaledValue gauss_S_checked(double beta, double theta) {
  const GaussFDerivatives d = gauss_F_derivatives(beta, theta);
  const double f1 = d.F1;
  const double f2 = d.F2;
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double t2 = theta * theta;
  const double t4 = t2 * t2;
  const double terms[6] = {
      9.0 * theta * f2 * f2 * f2 * f2 * f2,
      (42.0 * t2 - 9.0) * f1 * f2 * f2 * f2 * f2,
      -15.0 * (b2 - 79.0 / 15.0 * t2 + 2.0) * theta * f1 * f1 * f2 * f2 * f2,
      (75.0 * t4 - (42.0 * b2 + 36.0) * t2 - b4 + 12.0 * b2 - 3.0) * f1 * f1 *
          f1 * f2 * f2,
      4.0 * (9.0 * t4 - (10.0 * b2 + 4.5) * t2 + b4 + 4.5 * b2 - 1.5) * theta *
          f1 * f1 * f1 * f1 * f2,
      (7.0 * t4 * t2 - (13.0 * b2 + 3.0) * t4 + (5.0 * b4 + 6.0 * b2 - 3.0) * t2 +
       (b2 - 1.0) * (b2 - 1.0) * (b2 - 1.0)) *
          f1 * f1 * f1 * f1 * f1,
  };
  double value = 0.0;
  double scale = 0.0;
  for (double t : terms) {
    value += t;
    scale += std::fabs(t);
  }
  return ScaledValue{value, scale};
}

namespace {

double s_tilde(double beta, double theta) {
  const double b2 = beta * beta;
  const double b3 = b2 * beta;
  const double b4 = b2 * b2;
  const double b6 = b4 * b2;
  const double t2 = theta * theta;
  const double bt = beta * theta;
  return std::sinh(5.0 * bt) +
         (4.0 * b6 + 4.0 * (3.0 * t2 + 6.0) * b4 + 12.0 * b2 - 5.0) *
             std::sinh(3.0 * bt) +
         (-12.0 * b6 + 4.0 * (3.0 * t2 + 18.0) * b4 - 36.0 * b2 + 10.0) *
             std::sinh(bt) -
         4.0 * (3.0 * b2 + t2 + 6.0) * b3 * theta * std::cosh(3.0 * bt) +
         4.0 * (-33.0 * b2 + t2 + 6.0) * b3 * theta * std::cosh(bt);
}

}  // namespace

double gauss_S_hyperbolic(double beta, double theta) {
  // S = 2 (e^{-(theta^2+beta^2)/2} / sqrt(2 pi))^5 * S~.
  const double scale =
      kInvSqrt2Pi * std::exp(-0.5 * (theta * theta + beta * beta));
  const double s5 = scale * scale * scale * scale * scale;
  return 2.0 * s5 * s_tilde(beta, theta);
}

double gauss_A(double beta, double s) { return s_tilde(beta, s / beta); }

// ---------------------------------------------------------------------------
// Appendix positivity functions
// ---------------------------------------------------------------------------

namespace {

// K(x) = sum_{k>=3} (4k-8) x^{2k} / (2k)!  for small x.
ScaledValue K_checked(double x) {
  if (x < 2.0) {
    const double x2 = x * x;
    double term = x2 * x2 * x2 / 720.0;
    double sum = 0.0;
    double largest = term;
    for (int k = 3; k < 40; ++k) {
      const double contrib = (4.0 * k - 8.0) * term;
      sum += contrib;
      largest = std::max(largest, contrib);
      term *= x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
      if (contrib < sum * 1e-18 && k > 4) break;
    }
    return ScaledValue{sum, largest};
  }
  if (x > 300.0) {
    // Units of e^x: sign and relative margin are preserved even where the
    // full value no longer fits in a double.
    const double scaled = (x - 4.0) - (x + 4.0) * std::exp(-2.0 * x) +
                          (2.0 * x * x + 8.0) * std::exp(-x);
    return ScaledValue{scaled, x};
  }
  const double t1 = 2.0 * x * std::sinh(x);
  const double t2 = -8.0 * std::cosh(x);
  const double t3 = 2.0 * x * x + 8.0;
  return ScaledValue{t1 + t2 + t3,
                     std::max({std::fabs(t1), std::fabs(t2), t3})};
}

// P(x) = 2e^{3x} - (x^3+6)e^{2x} + (6-x^3)e^x - 2; the series coefficients
// vanish through x^6.
ScaledValue P_checked(double x) {
  if (x < 1.5) {
    double sum = 0.0;
    double largest = 0.0;
    double xk = 1.0;
    for (int k = 0; k <= 80; ++k) {
      if (k >= 7) {
        const double ck =
            (2.0 * std::pow(3.0, k) - 6.0 * std::pow(2.0, k) + 6.0) /
                factorial(k) -
            (std::pow(2.0, k - 3) + 1.0) / factorial(k - 3);
        const double contrib = ck * xk;
        sum += contrib;
        largest = std::max(largest, std::fabs(contrib));
        if (std::fabs(contrib) < std::fabs(sum) * 1e-18 && k > 10) break;
      }
      xk *= x;
    }
    return ScaledValue{sum, largest};
  }
  if (x > 230.0) {
    // Units of e^{3x}.
    const double scaled = 2.0 - (x * x * x + 6.0) * std::exp(-x) +
                          (6.0 - x * x * x) * std::exp(-2.0 * x) -
                          2.0 * std::exp(-3.0 * x);
    return ScaledValue{scaled, x * x * x * std::exp(-x) + 2.0};
  }
  const double x3 = x * x * x;
  const double t1 = 2.0 * std::exp(3.0 * x);
  const double t2 = -(x3 + 6.0) * std::exp(2.0 * x);
  const double t3 = (6.0 - x3) * std::exp(x);
  return ScaledValue{t1 + t2 + t3 - 2.0,
                     std::max({t1, std::fabs(t2), std::fabs(t3)})};
}

// R rewritten as 24x sinh x + 5x sinh 3x - (21/4) cosh 3x + (21/4) cosh x
// - 18x^2 cosh x; series r_k x^{2k} from k = 3 for small x.
ScaledValue R_checked(double x) {
  if (x < 1.0) {
    double sum = 0.0;
    double largest = 0.0;
    const double x2 = x * x;
    double x2k = x2 * x2 * x2;
    for (int k = 3; k <= 30; ++k) {
      const double rk = 24.0 / factorial(2 * k - 1) +
                        5.0 * std::pow(3.0, 2 * k - 1) / factorial(2 * k - 1) -
                        5.25 * std::pow(3.0, 2 * k) / factorial(2 * k) +
                        5.25 / factorial(2 * k) - 18.0 / factorial(2 * k - 2);
      const double contrib = rk * x2k;
      sum += contrib;
      largest = std::max(largest, std::fabs(contrib));
      if (std::fabs(contrib) < std::fabs(sum) * 1e-18 && k > 5) break;
      x2k *= x2;
    }
    return ScaledValue{sum, largest};
  }
  if (x > 230.0) {
    // Units of e^{3x}.
    const double e2 = std::exp(-2.0 * x);
    const double scaled = 2.5 * x - 2.625 +
                          (12.0 * x + 2.625 - 9.0 * x * x) * e2 +
                          (-12.0 * x + 2.625 - 9.0 * x * x) * e2 * e2 -
                          (2.5 * x + 2.625) * e2 * e2 * e2;
    return ScaledValue{scaled, 2.5 * x + 2.625};
  }
  const double t1 = 24.0 * x * std::sinh(x);
  const double t2 = 5.0 * x * std::sinh(3.0 * x);
  const double t3 = -5.25 * std::cosh(3.0 * x);
  const double t4 = 5.25 * std::cosh(x);
  const double t5 = -18.0 * x * x * std::cosh(x);
  return ScaledValue{
      t1 + t2 + t3 + t4 + t5,
      std::max({t1, t2, std::fabs(t3), t4, std::fabs(t5)})};
}

// B0 = 16 sinh^2 x (sinh^3 x - x^3 cosh x); the bracket has series
// sum_{j>=3} c_j x^{2j+1} with c_3 = 1/15.
ScaledValue B0_checked(double x) {
  if (x > 200.0) {
    // Units of e^{5x}: B0 e^{-5x} = 4 (1-q)^2 [ (1-q)^3/8 - x^3 (q+q^2)/2 ]
    // with q = e^{-2x}.
    const double q = std::exp(-2.0 * x);
    const double one_m = 1.0 - q;
    const double bracket =
        one_m * one_m * one_m / 8.0 - 0.5 * x * x * x * (q + q * q);
    const double front = 4.0 * one_m * one_m;
    return ScaledValue{front * bracket, front * 0.25};
  }
  const double sh = std::sinh(x);
  const double front = 16.0 * sh * sh;
  if (x < 1.0) {
    double sum = 0.0;
    double largest = 0.0;
    double xp = x * x * x * x * x * x * x;  // x^7
    for (int j = 3; j <= 30; ++j) {
      const double cj =
          (std::pow(3.0, 2 * j + 1) - 3.0) / (4.0 * factorial(2 * j + 1)) -
          1.0 / factorial(2 * j - 2);
      const double contrib = cj * xp;
      sum += contrib;
      largest = std::max(largest, std::fabs(contrib));
      if (std::fabs(contrib) < std::fabs(sum) * 1e-18 && j > 5) break;
      xp *= x * x;
    }
    return ScaledValue{front * sum, front * largest};
  }
  const double bracket = sh * sh * sh - x * x * x * std::cosh(x);
  const double scale = std::max(sh * sh * sh, x * x * x * std::cosh(x));
  return ScaledValue{front * bracket, front * scale};
}

}  // namespace

double appendix_positivity(AppendixFn fn, double x) {
  const ScaledValue v = appendix_positivity_checked(fn, x);
  // The large-x branches report in units of the factored exponential;
  // restore it here (+inf once the true value exceeds the double range).
  if (fn == AppendixFn::K && x > 300.0) return v.value * std::exp(x);
  if ((fn == AppendixFn::P || fn == AppendixFn::R) && x > 230.0) {
    return v.value * std::exp(3.0 * x);
  }
  if (fn == AppendixFn::B0 && x > 200.0) return v.value * std::exp(5.0 * x);
  return v.value;
}

ScaledValue appendix_positivity_checked(AppendixFn fn, double x) {
  if (!(x > 0.0)) {
    throw DomainError("appendix_positivity: requires x > 0");
  }
  switch (fn) {
    case AppendixFn::K:
      return K_checked(x);
    case AppendixFn::P:
      return P_checked(x);
    case AppendixFn::R:
      return R_checked(x);
    case AppendixFn::B0:
      return B0_checked(x);
  }
  throw DomainError("appendix_positivity: unknown function name");
}

// ---------------------------------------------------------------------------
// Exponential apparatus
// ---------------------------------------------------------------------------

ExpFrame::ExpFrame(double alpha_in, double beta_in, double s_in)
    : alpha(alpha_in), beta(beta_in), s(s_in) {
  if (!(alpha >= 0.0) || !(beta > alpha) || !std::isfinite(beta)) {
    throw DomainError("ExpFrame: requires 0 <= alpha < beta finite");
  }
  if (!(s > 0.0)) {
    throw DomainError("ExpFrame: requires s > 0");
  }
  const double eps = beta - alpha;
  mean = 1.0 + (alpha - beta * std::exp(-eps)) / (-std::expm1(-eps));
  const double s2 = s * s;
  A = -s2 * eps * eps;
  B = (alpha - beta) * (alpha - beta + 6.0) * s2 + eps * eps * (beta - mean);
  C = 3.0 * (eps - 2.0) * s2 +
      eps * ((eps - 3.0) * mean + alpha * beta - beta * beta + alpha +
             2.0 * beta);
}

double ExpFrame::discriminant() const { return B * B - 4.0 * A * C; }

double exp_G(const ExpFrame& frame, double theta) {
  const double eps = frame.beta - frame.alpha;
  const double s2 = frame.s * frame.s;
  const double u = eps * (theta - 1.0);
  const double edge = std::exp(frame.alpha) - std::exp(frame.beta);
  if (u > 30.0) {
    // expm1(u) would dwarf e^Y; combine the exponents first.
    const double X =
        -0.5 * s2 * theta * theta + (frame.beta - frame.mean) * theta + frame.alpha;
    const double Y =
        -0.5 * s2 * theta * theta + (frame.alpha - frame.mean) * theta + frame.beta;
    return edge + eps * (std::exp(X) - std::exp(Y)) / u;
  }
  const double Y =
      -0.5 * s2 * theta * theta + (frame.alpha - frame.mean) * theta + frame.beta;
  const double em = u == 0.0 ? 1.0 : std::expm1(u) / u;
  return edge + std::exp(Y) * eps * em;
}

double exp_g(const ExpFrame& frame, double theta) {
  TruncatedExponential d(1.0, TruncationInterval(ExtendedReal(frame.alpha),
                                                 ExtendedReal(frame.beta)));
  const double s2 = frame.s * frame.s;
  return std::exp(d.log_centered_mgf(theta)) -
         std::exp(0.5 * s2 * theta * theta);
}

double exp_h(const ExpFrame& frame, double theta) {
  const double eps = frame.beta - frame.alpha;
  const double s2 = frame.s * frame.s;
  const double u = (-s2 * theta * theta + (s2 + frame.beta - frame.mean) * theta +
                    frame.mean - frame.beta - 1.0);
  const double v = s2 * theta * theta -
                   (s2 + frame.alpha - frame.mean) * theta - frame.mean +
                   frame.alpha + 1.0;
  return u * std::exp((theta - 1.0) * eps) + v;
}

double exp_h_third(const ExpFrame& frame, double theta) {
  const double eps = frame.beta - frame.alpha;
  const double s2 = frame.s * frame.s;
  // u(theta) e^{(theta-1) eps} differentiated three times; the quadratic
  // tail of h drops out.
  const double u = (-s2 * theta * theta +
                    (s2 + frame.beta - frame.mean) * theta + frame.mean -
                    frame.beta - 1.0);
  const double u1 = -2.0 * s2 * theta + (s2 + frame.beta - frame.mean);
  const double u2 = -2.0 * s2;
  return (3.0 * eps * u2 + 3.0 * eps * eps * u1 + eps * eps * eps * u) *
         std::exp((theta - 1.0) * eps);
}

ExpBounds exp_bounds(const ExpFrame& frame) {
  const double eps = frame.beta - frame.alpha;
  const double m = frame.beta - frame.mean;
  // Discriminant-root radicand, algebraically equal to the expanded
  // beta-cubic display: eps^2 (m+1) - 3 m^2.
  const double radicand = eps * eps * (m + 1.0) - 3.0 * m * m;
  if (radicand < 0.0) {
    throw DomainError("exp_bounds: negative radicand in delta");
  }
  ExpBounds b;
  b.delta = 2.0 * eps * std::sqrt(radicand);
  const double denom = eps * eps + 12.0;
  b.s_1 = std::sqrt((eps * eps * (m + 2.0) - b.delta) / denom);
  b.s_2 = std::sqrt((eps * eps * (m + 2.0) + b.delta) / denom);
  const double z = std::expm1(eps);
  b.s_inf = std::sqrt(1.0 - eps * eps * (z + 1.0) / (z * z));
  return b;
}

double exp_g3_at_zero(double alpha, double epsilon) {
  (void)alpha;  // the standardized third derivative depends only on epsilon
  if (!(epsilon > 0.0)) {
    throw DomainError("exp_g3_at_zero: requires epsilon > 0");
  }
  const double denom = std::expm1(epsilon);
  return appendix_positivity(AppendixFn::P, epsilon) / (denom * denom * denom);
}

}  // namespace subgauss::lemmas
