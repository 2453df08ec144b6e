#include "subgauss/lemma_battery.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "subgauss/lemma_suite.hpp"
#include "subgauss/truncated_exponential.hpp"

namespace subgauss::lemmas {

namespace {

constexpr double kRelMargin = 1e-12;

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    out[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

LemmaCheck make_check(const std::string& name, bool pass, double worst,
                      const std::string& detail) {
  return LemmaCheck{name, pass, worst, detail};
}

TruncatedExponential standard_exponential(double alpha, double beta) {
  return TruncatedExponential(
      1.0, TruncationInterval(ExtendedReal(alpha), ExtendedReal(beta)));
}

// ---- Gaussian batteries ----------------------------------------------------

LemmaCheck check_gauss_symmetry(int grid_n) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> ua(-4.0, 2.0);
  std::uniform_real_distribution<double> uw(0.3, 8.0);
  std::uniform_real_distribution<double> ut(0.0, 6.0);
  std::uniform_real_distribution<double> upar(-1.5, 1.5);
  double worst = 0.0;
  const int cases = std::max(grid_n / 4, 20);
  for (int i = 0; i < cases; ++i) {
    const double alpha = ua(rng);
    const GaussFrame frame(alpha, alpha + uw(rng));
    const double t = ut(rng);
    double w = upar(rng);
    if (std::fabs(w) < 1e-3) w = 1e-3;
    const double axis = -frame.c / (2.0 * w);
    const double p_diff = gauss_p(frame, w, axis + t) - gauss_p(frame, w, axis - t);
    const double p_ref = std::max(1.0, std::fabs(gauss_p(frame, w, axis + t)));
    const double f_diff =
        gauss_f(frame, frame.theta0 + t) - gauss_f(frame, frame.theta0 - t);
    const double f_ref =
        std::max(1.0, std::fabs(gauss_f(frame, frame.theta0 + t)));
    const double h_sum =
        gauss_h(frame, frame.theta0 + t) + gauss_h(frame, frame.theta0 - t);
    const double h_ref =
        std::max(1.0, std::fabs(gauss_h(frame, frame.theta0 + t)));
    worst = std::max({worst, std::fabs(p_diff) / p_ref,
                      std::fabs(f_diff) / f_ref, std::fabs(h_sum) / h_ref});
  }
  return make_check("gaussian/symmetry(p,f,h)", worst <= 1e-11, worst,
                    "max relative asymmetry " + fmt(worst));
}

LemmaCheck check_gauss_tangency(int /*grid_n*/) {
  const double frames[4][2] = {{-1.0, 4.0}, {-2.0, 0.5}, {0.3, 2.2}, {-3.0, -0.5}};
  double worst = 0.0;
  for (const auto& fr : frames) {
    const GaussFrame frame(fr[0], fr[1]);
    const double wc = gauss_w_c(frame);
    const double t0 = frame.theta0;
    const double checks[5] = {
        gauss_f(frame, 0.0) - gauss_p(frame, wc, 0.0),
        gauss_f(frame, 2.0 * t0) - gauss_p(frame, wc, 2.0 * t0),
        gauss_h(frame, t0) - (2.0 * wc * t0 + frame.c),
        gauss_h(frame, 2.0 * t0) - (4.0 * wc * t0 + frame.c),
        gauss_h(frame, 0.0) - frame.c,
    };
    for (double cv : checks) worst = std::max(worst, std::fabs(cv));
  }
  return make_check("gaussian/tangency(five-identities)", worst <= 1e-10, worst,
                    "max identity residual " + fmt(worst));
}

LemmaCheck check_gauss_concavity(int grid_n) {
  const double gaps[4] = {0.5, 2.0, 4.0, 10.0};
  double worst = -std::numeric_limits<double>::infinity();
  bool pass = true;
  const int n = std::max(grid_n, 50);
  for (double gap : gaps) {
    const double alphas[3] = {-gap / 2.0, 0.3, -1.0 - gap};
    for (double a : alphas) {
      const GaussFrame frame(a, a + gap);
      for (double off : log_spaced(1e-3, 20.0, n)) {
        const ScaledValue above =
            gauss_h_second_checked(frame, frame.theta0 + off);
        const ScaledValue below =
            gauss_h_second_checked(frame, frame.theta0 - off);
        // h'' strictly negative right of theta0, mirrored positive left.
        if (!(above.value < -kRelMargin * above.scale)) pass = false;
        if (!(below.value > kRelMargin * below.scale)) pass = false;
        worst = std::max({worst, above.value / above.scale,
                          -below.value / below.scale});
      }
    }
  }
  return make_check("gaussian/concavity(h-second-sign)", pass, worst,
                    "worst signed h''/scale " + fmt(worst));
}

LemmaCheck check_gauss_symmetric_second(int /*grid_n*/) {
  const double betas[5] = {0.5, 1.0, 2.0, 3.0, 5.0};
  double worst = 0.0;
  for (double b : betas) {
    const GaussFrame frame(-b, b);
    const double wc = gauss_w_c(frame);
    const double h = 0.01;
    // Fourth-order five-point stencil for f''(0).
    const double fd = (-gauss_f(frame, 2.0 * h) + 16.0 * gauss_f(frame, h) -
                       30.0 * gauss_f(frame, 0.0) + 16.0 * gauss_f(frame, -h) -
                       gauss_f(frame, -2.0 * h)) /
                      (12.0 * h * h);
    worst = std::max(worst, std::fabs(fd - 2.0 * wc));
  }
  return make_check("gaussian/symmetric-curvature(f''=2wc)", worst <= 1e-8,
                    worst, "max |fd - 2wc| " + fmt(worst));
}

LemmaCheck check_gauss_Z(int grid_n) {
  const double betas[6] = {0.5, 1.0, 1.7320508075688772, 2.0, 4.0, 5.0};
  bool pass = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (double b : betas) {
    for (double t : log_spaced(0.05, 10.0, std::max(grid_n / 2, 40))) {
      const ScaledValue z = gauss_Z_checked(b, t);
      if (!(z.value < -kRelMargin * z.scale)) pass = false;
      worst = std::max(worst, z.value / z.scale);
    }
  }
  // Leading-order linear behavior near 0.
  const double r1 = gauss_Z(1.0, 1e-4) / 1e-4;
  const double r2 = gauss_Z(1.0, 2e-4) / 2e-4;
  const bool linear_ok = std::fabs(r1 - r2) <= 0.05 * std::fabs(r2);
  return make_check("gaussian/Z-negativity", pass && linear_ok, worst,
                    "worst Z/scale " + fmt(worst));
}

LemmaCheck check_gauss_S(int grid_n) {
  const double betas[5] = {0.5, 1.7320508075688772, 2.0, 3.0, 5.0};
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (double b : betas) {
    for (double t : log_spaced(0.1, 10.0, std::max(grid_n / 2, 40))) {
      const ScaledValue s = gauss_S_checked(b, t);
      if (!(s.value > kRelMargin * s.scale)) pass = false;
      worst = std::min(worst, s.value / s.scale);
    }
  }
  // Hyperbolic-form identity at an interior point.
  const double direct = gauss_S(1.3, 0.8);
  const double hyper = gauss_S_hyperbolic(1.3, 0.8);
  const bool identity_ok = std::fabs(direct - hyper) <= 1e-10 * std::fabs(direct);
  return make_check("gaussian/S-positivity", pass && identity_ok, worst,
                    "worst S/scale " + fmt(worst));
}

// ---- Exponential batteries -------------------------------------------------

LemmaCheck check_exp_bracketing(int /*grid_n*/) {
  const double alphas[6] = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
  const double widths[6] = {0.1, 0.5, 2.0, 5.0, 8.0, 12.0};
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (double a : alphas) {
    for (double w : widths) {
      const double s_c =
          std::sqrt(standard_exponential(a, a + w).variance_proxy().variance_proxy);
      const ExpFrame frame(a, a + w, s_c);
      const ExpBounds bounds = exp_bounds(frame);
      if (!(bounds.s_inf > 0.0) || !(bounds.s_inf < s_c) ||
          !(s_c <= bounds.s_1 * (1.0 + 1e-12)) ||
          !(bounds.s_1 <= bounds.s_2 * (1.0 + 1e-12))) {
        pass = false;
      }
      worst = std::min({worst, s_c - bounds.s_inf, bounds.s_1 - s_c});
    }
  }
  return make_check("exponential/bracketing(sinf<sc<=s1<=s2)", pass, worst,
                    "min bracket slack " + fmt(worst));
}

LemmaCheck check_exp_sinf_identity(int /*grid_n*/) {
  const double alphas[4] = {0.0, 0.5, 1.0, 3.0};
  const double widths[4] = {0.5, 2.0, 5.0, 10.0};
  double worst = 0.0;
  for (double a : alphas) {
    for (double w : widths) {
      const double var = standard_exponential(a, a + w).variance();
      const ExpFrame frame(a, a + w, 1.0);
      const double s_inf = exp_bounds(frame).s_inf;
      worst = std::max(worst, std::fabs(s_inf * s_inf - var) / var);
    }
  }
  return make_check("exponential/sinf-squared-is-variance", worst <= 1e-13,
                    worst, "max relative mismatch " + fmt(worst));
}

LemmaCheck check_exp_delta_root(int /*grid_n*/) {
  const double cases[3][2] = {{1.0, 4.0}, {0.0, 2.0}, {0.5, 6.5}};
  double worst = 0.0;
  for (const auto& cs : cases) {
    const ExpFrame probe(cs[0], cs[1], 1.0);
    const ExpBounds bounds = exp_bounds(probe);
    const ExpFrame at_root(cs[0], cs[1], bounds.s_1);
    const double scale =
        at_root.B * at_root.B + std::fabs(4.0 * at_root.A * at_root.C);
    worst = std::max(worst, std::fabs(at_root.discriminant()) / scale);
  }
  return make_check("exponential/delta-vanishes-at-s1", worst <= 1e-8, worst,
                    "max |Delta(s1)|/scale " + fmt(worst));
}

LemmaCheck check_exp_two_maxima(int grid_n) {
  const double cases[4][2] = {{1.0, 4.0}, {0.5, 2.5}, {0.0, 1.5}, {2.0, 8.0}};
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  const int n = std::max(grid_n, 100);
  for (const auto& cs : cases) {
    const double s_c = std::sqrt(
        standard_exponential(cs[0], cs[1]).variance_proxy().variance_proxy);
    const ExpFrame hi(cs[0], cs[1], s_c * 1.001);
    const ExpFrame lo(cs[0], cs[1], s_c * 0.999);
    // Above the optimum G stays strictly negative away from 0.
    for (int i = 0; i < n; ++i) {
      const double theta = -2.0 + (3.0 * cs[1] + 2.0) * i / (n - 1);
      if (std::fabs(theta) < 0.3) continue;
      const double g_hi = exp_G(hi, theta);
      if (!(g_hi <= -1e-12)) pass = false;
      worst = std::min(worst, -g_hi);
    }
    // Below the optimum a strictly positive second maximum appears near 2.
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (int i = 0; i < n; ++i) {
      const double theta = 0.5 + 3.0 * i / (n - 1);
      const double g_lo = exp_G(lo, theta);
      if (g_lo > best) {
        best = g_lo;
        best_theta = theta;
      }
    }
    if (!(best > 0.0) || best_theta < 1.0 || best_theta > 3.0) pass = false;
  }
  return make_check("exponential/two-local-maxima", pass, worst,
                    "min |G| margin above optimum " + fmt(worst));
}

LemmaCheck check_exp_sign_consistency(int grid_n) {
  const double cases[2][2] = {{1.0, 4.0}, {0.0, 2.5}};
  bool pass = true;
  const int n = std::max(grid_n, 60);
  for (const auto& cs : cases) {
    for (double s : {0.6, 0.9, 1.2}) {
      const ExpFrame frame(cs[0], cs[1], s);
      for (int i = 0; i < n; ++i) {
        const double theta = -5.0 + 10.0 * i / (n - 1);
        const double g = exp_g(frame, theta);
        const double G = exp_G(frame, theta);
        if (std::fabs(theta) < 0.05) continue;  // both vanish at 0
        // g is a difference of exponentials; near its zero crossings the
        // noise floor scales with the subtracted magnitude.
        const double floor = 1e-12 * (1.0 + std::exp(0.5 * s * s * theta * theta));
        if (g * G < 0.0 && std::fabs(g) > floor) pass = false;
      }
    }
  }
  return make_check("exponential/sign(g)=sign(G)", pass, 0.0, "pointwise grid");
}

LemmaCheck check_exp_tangency(int /*grid_n*/) {
  const double cases[3][2] = {{1.0, 4.0}, {0.0, 2.0}, {0.5, 6.5}};
  double worst = 0.0;
  for (const auto& cs : cases) {
    TruncatedExponential d = standard_exponential(cs[0], cs[1]);
    const double proxy = d.variance_proxy().variance_proxy;
    const double residual = d.log_centered_mgf(2.0) - 2.0 * proxy;
    const double h = 1e-4;
    const double slope = (d.log_centered_mgf(2.0 + h) -
                          0.5 * proxy * (2.0 + h) * (2.0 + h) -
                          (d.log_centered_mgf(2.0 - h) -
                           0.5 * proxy * (2.0 - h) * (2.0 - h))) /
                         (2.0 * h);
    worst = std::max({worst, std::fabs(residual), std::fabs(slope) * 1e-3});
    if (std::fabs(residual) > 1e-9 || std::fabs(slope) > 1e-6) {
      return make_check("exponential/tangency-at-2", false,
                        std::fabs(residual), "residual or slope out of band");
    }
  }
  return make_check("exponential/tangency-at-2", true, worst,
                    "max residual " + fmt(worst));
}

LemmaCheck check_exp_g3(int /*grid_n*/) {
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (double eps : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const double g3 = exp_g3_at_zero(0.7, eps);
    if (!(g3 > 0.0)) pass = false;
    worst = std::min(worst, g3);
  }
  // Finite-difference cross-check at (alpha, eps) = (1, 3), s = s_inf.
  const ExpFrame probe(1.0, 4.0, 1.0);
  const double s_inf = exp_bounds(probe).s_inf;
  const ExpFrame frame(1.0, 4.0, s_inf);
  auto third_fd = [&](double h) {
    return (exp_g(frame, 2.0 * h) - 2.0 * exp_g(frame, h) +
            2.0 * exp_g(frame, -h) - exp_g(frame, -2.0 * h)) /
           (2.0 * h * h * h);
  };
  const double h = 0.04;
  const double fd = (4.0 * third_fd(h / 2.0) - third_fd(h)) / 3.0;
  const double closed = exp_g3_at_zero(1.0, 3.0);
  if (std::fabs(fd - closed) > 1e-4) pass = false;
  return make_check("exponential/g3-at-zero-positive", pass, worst,
                    "min g3 " + fmt(worst) + ", fd mismatch " +
                        fmt(std::fabs(fd - closed)));
}

// ---- Appendix batteries ----------------------------------------------------

LemmaCheck check_appendix_fn(AppendixFn fn, const std::string& name,
                             int grid_n) {
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (double x : log_spaced(0.1, 20.0, std::max(grid_n, 100))) {
    const ScaledValue v = appendix_positivity_checked(fn, x);
    if (!(v.value > kRelMargin * v.scale)) pass = false;
    worst = std::min(worst, v.value / v.scale);
  }
  // Vanishing limit at 0+.
  if (!(appendix_positivity(fn, 1e-8) < 1e-20)) pass = false;
  return make_check("appendix/" + name + "-positivity", pass, worst,
                    "min value/scale " + fmt(worst));
}

LemmaCheck check_appendix_K_value(int /*grid_n*/) {
  const double expected = 5.565953598237284658216073;  // K(3)
  const double got = appendix_positivity(AppendixFn::K, 3.0);
  const double rel = std::fabs(got - expected) / expected;
  return make_check("appendix/K(3)-value", rel <= 1e-12, rel,
                    "relative error " + fmt(rel));
}

}  // namespace

std::vector<LemmaCheck> run_lemma_suite(LemmaSuiteId suite, int grid_n) {
  std::vector<LemmaCheck> out;
  const bool gaussian =
      suite == LemmaSuiteId::Gaussian || suite == LemmaSuiteId::All;
  const bool exponential =
      suite == LemmaSuiteId::Exponential || suite == LemmaSuiteId::All;
  const bool appendix =
      suite == LemmaSuiteId::Appendix || suite == LemmaSuiteId::All;

  if (gaussian) {
    out.push_back(check_gauss_symmetry(grid_n));
    out.push_back(check_gauss_tangency(grid_n));
    out.push_back(check_gauss_concavity(grid_n));
    out.push_back(check_gauss_symmetric_second(grid_n));
    out.push_back(check_gauss_Z(grid_n));
    out.push_back(check_gauss_S(grid_n));
  }
  if (exponential) {
    out.push_back(check_exp_bracketing(grid_n));
    out.push_back(check_exp_sinf_identity(grid_n));
    out.push_back(check_exp_delta_root(grid_n));
    out.push_back(check_exp_two_maxima(grid_n));
    out.push_back(check_exp_sign_consistency(grid_n));
    out.push_back(check_exp_tangency(grid_n));
    out.push_back(check_exp_g3(grid_n));
  }
  if (appendix) {
    out.push_back(check_appendix_fn(AppendixFn::K, "K", grid_n));
    out.push_back(check_appendix_fn(AppendixFn::P, "P", grid_n));
    out.push_back(check_appendix_fn(AppendixFn::R, "R", grid_n));
    out.push_back(check_appendix_fn(AppendixFn::B0, "B0", grid_n));
    out.push_back(check_appendix_K_value(grid_n));
  }
  return out;
}

}  // namespace subgauss::lemmas
