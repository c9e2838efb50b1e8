// Bivariate normal and Student-t distribution functions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "copula_lab/copula.hpp"
#include "copula_lab/quadrature.hpp"
#include "copula_lab/quantile.hpp"

namespace copula_lab {
namespace {

struct HalfRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Negative half of the n-point Gauss-Legendre rule.
HalfRule half_rule(int n) {
  const auto full = gauss_legendre(n);
  HalfRule r;
  for (std::size_t i = 0; i < full.nodes.size() / 2; ++i) {
    r.x.push_back(full.nodes[i]);
    r.w.push_back(full.weights[i]);
  }
  return r;
}

// Genz's BVND: P(X > h, Y > k) for a standard bivariate normal with
// correlation r (Drezner-Wesolowsky with Gauss-Legendre on asin(r)).
double bvn_upper(double h, double k, double r) {
  static const HalfRule rules[3] = {half_rule(6), half_rule(12), half_rule(20)};
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const HalfRule& g = std::abs(r) < 0.3 ? rules[0] : (std::abs(r) < 0.75 ? rules[1] : rules[2]);

  double hk = h * k;
  double bvn = 0.0;
  if (std::abs(r) < 0.925) {
    const double hs = 0.5 * (h * h + k * k);
    const double asr = std::asin(r);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      double sn = std::sin(asr * (g.x[i] + 1.0) / 2.0);
      bvn += g.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
      sn = std::sin(asr * (-g.x[i] + 1.0) / 2.0);
      bvn += g.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
    }
    return bvn * asr / (2.0 * two_pi) + normal_cdf(-h) * normal_cdf(-k);
  }
  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  if (std::abs(r) < 1.0) {
    const double as = (1.0 - r) * (1.0 + r);
    double a = std::sqrt(as);
    const double bs = (h - k) * (h - k);
    const double c = (4.0 - hk) / 8.0;
    const double d = (12.0 - hk) / 16.0;
    bvn = a * std::exp(-(bs / as + hk) / 2.0) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    if (hk > -160.0) {
      const double b = std::sqrt(bs);
      bvn -= std::exp(-hk / 2.0) * std::sqrt(two_pi) * normal_cdf(-b / a) * b *
             (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a /= 2.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      double xs = a * (g.x[i] + 1.0);
      xs *= xs;
      double rs = std::sqrt(1.0 - xs);
      bvn += a * g.w[i] *
             (std::exp(-bs / (2.0 * xs) - hk / (1.0 + rs)) / rs -
              std::exp(-(bs / xs + hk) / 2.0) * (1.0 + c * xs * (1.0 + d * xs)));
      xs = as * (-g.x[i] + 1.0) * (-g.x[i] + 1.0) / 4.0;
      rs = std::sqrt(1.0 - xs);
      bvn += a * g.w[i] * std::exp(-(bs / xs + hk) / 2.0) *
             (std::exp(-hk * xs / (2.0 * (1.0 + rs) * (1.0 + rs))) / rs -
              (1.0 + c * xs * (1.0 + d * xs)));
    }
    bvn = -bvn / two_pi;
  }
  if (r > 0.0) return bvn + normal_cdf(-std::max(h, k));
  return -bvn + std::max(0.0, normal_cdf(-h) - normal_cdf(-k));
}

}  // namespace

double bivariate_normal_cdf(double x, double y, double rho) {
  if (x == -std::numeric_limits<double>::infinity() ||
      y == -std::numeric_limits<double>::infinity()) {
    return 0.0;
  }
  return std::clamp(bvn_upper(-x, -y, rho), 0.0, 1.0);
}

double bivariate_t_cdf(double x, double y, double rho, double nu) {
  // P(X <= x, Y <= y) = int_{-inf}^{x} f_nu(s) T_{nu+1}((y - rho s) / sigma(s)) ds,
  // sigma(s)^2 = (1 - rho^2)(nu + s^2) / (nu + 1).
  const StudentT marginal(nu);
  const StudentT conditional(nu + 1.0);
  const double one_minus = (1.0 - rho) * (1.0 + rho);
  if (one_minus <= 0.0) return marginal.cdf(std::min(x, y));
  auto integrand = [&](double s) {
    const double sigma = std::sqrt(one_minus * (nu + s * s) / (nu + 1.0));
    return std::exp(marginal.log_pdf(s)) * conditional.cdf((y - rho * s) / sigma);
  };
  // Integrate over the tail away from the bulk; for x > 0 use
  // P(X <= x, Y <= y) = T(y) - P(X > x, Y <= y).
  using boost::math::quadrature::gauss_kronrod;
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr unsigned depth = 12;
  double total;
  if (x <= 0.0) {
    total = gauss_kronrod<double, 31>::integrate(integrand, -inf, x, depth, 1e-13);
  } else {
    total = marginal.cdf(y) - gauss_kronrod<double, 31>::integrate(integrand, x, inf, depth, 1e-13);
  }
  return std::clamp(total, 0.0, 1.0);
}

}  // namespace copula_lab
