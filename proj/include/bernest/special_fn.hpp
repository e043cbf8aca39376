#pragma once

// Special-function kernel: log-gamma, log-beta, the regularized incomplete
// beta function with its inverse, and a standard-normal quantile. Everything
// is evaluated in log space so integer shape parameters up to ~1e9 stay
// finite.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bernest {

/// Convergence failure inside an iterative kernel (continued fraction or root
/// search exhausted its iteration cap). Distinct from std::domain_error so
/// callers can map the two failure kinds to different exit codes.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Beta-distribution shape pair. The estimators in this project always pass
/// integer shapes (m+1, n-m+1), but any positive reals are accepted.
struct BetaParams {
  double a;
  double b;
  BetaParams(double a_in, double b_in) : a(a_in), b(b_in) {
    if (!(a > 0.0) || !(b > 0.0)) {
      throw std::domain_error("BetaParams: shapes must be positive, got a=" +
                              std::to_string(a_in) + " b=" + std::to_string(b_in));
    }
  }
};

namespace detail {

// Stirling-series tail: ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + delta(z).
// Seven terms keep the truncation error below 1e-15 for z >= 8.
inline double stirling_delta(double z) {
  constexpr double c0 = 1.0 / 12.0;
  constexpr double c1 = -1.0 / 360.0;
  constexpr double c2 = 1.0 / 1260.0;
  constexpr double c3 = -1.0 / 1680.0;
  constexpr double c4 = 1.0 / 1188.0;
  constexpr double c5 = -691.0 / 360360.0;
  constexpr double c6 = 1.0 / 156.0;
  const double w = 1.0 / (z * z);
  return (c0 + w * (c1 + w * (c2 + w * (c3 + w * (c4 + w * (c5 + w * c6)))))) / z;
}

inline constexpr double half_log_two_pi = 0.91893853320467274178;

}  // namespace detail

/// ln Gamma(z) for z > 0. Arguments below 8 are lifted with the recurrence
/// Gamma(z+1) = z Gamma(z); larger ones use the Stirling series directly.
inline double ln_gamma(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("ln_gamma: argument must be positive, got " + std::to_string(z));
  }
  double shift = 1.0;
  while (z < 8.0) {
    shift *= z;
    z += 1.0;
  }
  const double base =
      (z - 0.5) * std::log(z) - z + detail::half_log_two_pi + detail::stirling_delta(z);
  return shift == 1.0 ? base : base - std::log(shift);
}

/// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b), rearranged so no
/// intermediate grows past the scale of the result. The naive three-term
/// difference loses digits once the shapes reach the hundreds, which would
/// show up directly in posterior-mean identities.
inline double ln_beta(const BetaParams& p) {
  const double a = std::min(p.a, p.b);
  const double b = std::max(p.a, p.b);
  const double s = a + b;
  if (a >= 8.0) {
    return detail::half_log_two_pi - 0.5 * std::log(s) +
           (a - 0.5) * std::log(a / s) + (b - 0.5) * std::log(b / s) +
           detail::stirling_delta(a) + detail::stirling_delta(b) - detail::stirling_delta(s);
  }
  if (b >= 8.0) {
    // ln Gamma(b) - ln Gamma(a+b), kept at the scale of the answer
    const double tail = -(b - 0.5) * std::log1p(a / b) - a * std::log(s) + a +
                        detail::stirling_delta(b) - detail::stirling_delta(s);
    return ln_gamma(a) + tail;
  }
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(s);
}

namespace detail {

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz forward scheme (Numerical Recipes "betacf"). Wants x below the
// crossover (a+1)/(a+b+2); the caller switches to the symmetric form there.
inline double beta_cont_frac(double a, double b, double x) {
  constexpr int max_iter = 300;
  constexpr double eps = 1e-15;
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const double dm = static_cast<double>(m);
    const double m2 = 2.0 * dm;
    double coef = dm * (b - dm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + coef * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + coef / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    coef = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + coef * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + coef / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < eps) return h;
  }
  throw numerical_error("reg_inc_beta: continued fraction did not converge (a=" +
                        std::to_string(a) + " b=" + std::to_string(b) + " x=" +
                        std::to_string(x) + ")");
}

}  // namespace detail

/// Regularized incomplete beta I_x(a,b): the Beta(a,b) CDF at x. Exactly 0 at
/// x = 0 and 1 at x = 1. The a == 1 / b == 1 shapes use their closed forms
/// through expm1/log1p, which stay accurate when the other shape is in the
/// billions; everything else goes through the continued fraction.
inline double reg_inc_beta(double x, const BetaParams& p) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("reg_inc_beta: x must lie in [0,1], got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = p.a;
  const double b = p.b;
  if (a == 1.0 && b == 1.0) return x;
  if (a == 1.0) return -std::expm1(b * std::log1p(-x));  // 1 - (1-x)^b
  if (b == 1.0) return std::exp(a * std::log(x));        // x^a
  const double ln_front = a * std::log(x) + b * std::log1p(-x) - ln_beta(p);
  double result;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    result = std::exp(ln_front) * detail::beta_cont_frac(a, b, x) / a;
  } else {
    result = 1.0 - std::exp(ln_front) * detail::beta_cont_frac(b, a, 1.0 - x) / b;
  }
  return std::clamp(result, 0.0, 1.0);
}

/// Inverse of reg_inc_beta in x for fixed shapes. Bisection keeps a
/// guaranteed bracket while Newton steps (the beta density is the derivative)
/// polish the root to double resolution -- needed because the root can sit at
/// 1e-9 scales when one shape is huge. Guarantees |I_x(a,b) - t| <= 1e-12 on
/// return.
inline double inv_reg_inc_beta(double t, const BetaParams& p) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("inv_reg_inc_beta: t must lie in [0,1], got " + std::to_string(t));
  }
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  const double a = p.a;
  const double b = p.b;
  const double lb = ln_beta(p);
  constexpr double residual_tol = 1e-12;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double lo = 0.0;
  double hi = 1.0;
  double x = a / (a + b);  // start at the distribution mean
  for (int iter = 0; iter < 300; ++iter) {
    const double fx = reg_inc_beta(x, p) - t;
    if (fx == 0.0) return x;
    (fx > 0.0 ? hi : lo) = x;
    double next;
    const double density = std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lb);
    if (density > 0.0 && std::isfinite(density)) {
      next = x - fx / density;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    } else {
      next = 0.5 * (lo + hi);
    }
    if (next <= lo || next >= hi) break;  // bracket collapsed to adjacent doubles
    if (std::fabs(next - x) <= 2.0 * eps * x && std::fabs(fx) <= residual_tol) return x;
    x = next;
  }
  if (std::fabs(reg_inc_beta(x, p) - t) <= residual_tol) return x;
  throw numerical_error("inv_reg_inc_beta: root search missed its residual target (a=" +
                        std::to_string(a) + " b=" + std::to_string(b) + " t=" +
                        std::to_string(t) + ")");
}

/// Standard-normal quantile: Acklam's rational approximation followed by one
/// Halley correction through erfc, which pushes the ~1e-9 approximation error
/// down to machine noise.
inline double normal_quantile(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("normal_quantile: t must lie strictly in (0,1), got " +
                            std::to_string(t));
  }
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double low = 0.02425;
  double x;
  if (t < low) {
    const double q = std::sqrt(-2.0 * std::log(t));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (t <= 1.0 - low) {
    const double q = t - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-t));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double density = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  if (density > 0.0 && std::isfinite(density)) {
    const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - t;
    const double u = err / density;
    const double refined = x - u / (1.0 + 0.5 * x * u);
    if (std::isfinite(refined)) x = refined;
  }
  return x;
}

}  // namespace bernest
