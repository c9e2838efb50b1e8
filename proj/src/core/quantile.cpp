#include "copula_lab/quantile.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

#include "copula_lab/error.hpp"

namespace copula_lab {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_ccdf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_log_pdf(double x) {
  return -0.5 * x * x - 0.5 * std::log(2.0 * std::numbers::pi);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::domain, "normal_quantile: probability outside [0,1]");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

StudentT::StudentT(double nu) : nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorCode::parameter, "student t: degrees of freedom must be positive");
  }
  log_norm_ = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
              0.5 * std::log(nu * std::numbers::pi);
}

double StudentT::log_pdf(double x) const {
  return log_norm_ - 0.5 * (nu_ + 1.0) * std::log1p(x * x / nu_);
}

double StudentT::lower_tail(double x) const {
  const double x2 = x * x;
  const double z = nu_ / (nu_ + x2);
  const double zc = x2 / (nu_ + x2);
  if (z < 0.5) return 0.5 * boost::math::ibeta(0.5 * nu_, 0.5, z);
  return 0.5 * boost::math::ibetac(0.5, 0.5 * nu_, zc);
}

double StudentT::cdf(double x) const {
  if (std::isnan(x)) return x;
  if (x <= 0.0) return lower_tail(x);
  return 1.0 - lower_tail(-x);
}

double StudentT::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::domain, "t quantile: probability outside [0,1]");
  }
  if (p == 0.5) return 0.0;
  if (p > 0.5) return -quantile(1.0 - p);

  // Solve log F(-e^y) = log p for y. In the tail log F is close to linear in
  // y (F ~ |x|^-nu), so Newton needs only a few steps; a bracket guards it.
  const double target = std::log(p);
  const double z = normal_quantile(p);
  double x0 = z * (1.0 + (z * z + 1.0) / (4.0 * nu_));
  if (!(x0 < 0.0)) x0 = -1e-3;
  double y = std::log(-x0);
  double lo = -std::numeric_limits<double>::infinity();  // g(lo) > 0
  double hi = std::numeric_limits<double>::infinity();   // g(hi) < 0
  for (int it = 0; it < 100; ++it) {
    const double x = -std::exp(y);
    const double f = lower_tail(x);
    const double g = std::log(f) - target;
    if (g > 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    if (g == 0.0) break;
    const double slope = std::exp(log_pdf(x)) * x / f;  // dg/dy < 0
    double next = y - g / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      if (std::isfinite(lo) && std::isfinite(hi)) {
        next = 0.5 * (lo + hi);
      } else {
        next = std::isfinite(lo) ? y + 1.0 : y - 1.0;
      }
    }
    const double step = std::abs(next - y);
    y = next;
    if (step <= 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  return -std::exp(y);
}

}  // namespace copula_lab
