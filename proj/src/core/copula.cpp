#include "copula_lab/copula.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "copula_lab/error.hpp"
#include "copula_lab/quantile.hpp"

namespace copula_lab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Point = std::array<double, kMaxDimension>;

// Validates coordinates and clips them into [eps, 1 - eps].
bool clip_point(const CopulaModel& model, std::span<const double> point, Point& out) {
  if (static_cast<int>(point.size()) != model.dim()) {
    throw Error(ErrorCode::shape, "point has " + std::to_string(point.size()) +
                                      " coordinates, model dimension is " +
                                      std::to_string(model.dim()));
  }
  bool clamped = false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    const double x = point[i];
    if (!(x > 0.0 && x < 1.0)) {
      throw Error(ErrorCode::domain, "copula coordinates must lie in (0,1)");
    }
    const double c = std::clamp(x, kBoundaryEps, 1.0 - kBoundaryEps);
    clamped = clamped || c != x;
    out[i] = c;
  }
  return clamped;
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

// log(sum_i e^{a_i} - (n - 1)) for a_i >= 0, stable for large and tiny a_i.
double log_sum_exp_minus(const double* a, int n) {
  const double m = *std::max_element(a, a + n);
  if (m < 1.0) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::expm1(a[i]);
    return std::log1p(s);
  }
  double s = -(n - 1) * std::exp(-m);
  for (int i = 0; i < n; ++i) s += std::exp(a[i] - m);
  return m + std::log(s);
}

// log S for Clayton, S = sum_i u_i^{-theta} - (d - 1).
double clayton_log_s(const double* u, int d, double theta) {
  std::array<double, kMaxDimension> a{};
  for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = -theta * std::log(u[i]);
  return log_sum_exp_minus(a.data(), d);
}

// log D for Frank, D = (1 - e^{-theta}) - (1 - e^{-theta u})(1 - e^{-theta v}).
double frank_log_d(double u, double v, double theta) {
  return log_add_exp(-theta * u + std::log(-std::expm1(-theta * v)),
                     -theta + std::log(std::expm1(theta * (1.0 - v))));
}

// L = log(e^x + e^y - 1) for x, y >= 0 (BB2).
double bb2_l(double x, double y) {
  const double xy[2] = {x, y};
  return log_sum_exp_minus(xy, 2);
}

struct Bb2Terms {
  double x, y, l;
};

Bb2Terms bb2_terms(double u, double v, double theta, double delta) {
  const double x = delta * std::expm1(-theta * std::log(u));
  const double y = delta * std::expm1(-theta * std::log(v));
  return {x, y, bb2_l(x, y)};
}

// L = log(e^{a} + e^{b} - e^{theta}) with a = theta/u, b = theta/v (Nelsen 4.19).
double log_expm1(double x) { return x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x)); }

double n419_l(double u, double v, double theta) {
  const double hi = theta / std::min(u, v);
  const double lo_excess = theta * (1.0 - std::max(u, v)) / std::max(u, v);  // min(a,b) - theta
  return hi + std::log1p(std::exp(theta - hi + log_expm1(lo_excess)));
}

double gaussian_log_density_scores(double x, double y, double rho) {
  const double om = (1.0 - rho) * (1.0 + rho);
  return -0.5 * std::log(om) - (rho * rho * (x * x + y * y) - 2.0 * rho * x * y) / (2.0 * om);
}

double t_log_density_scores(const StudentT& t, double x, double y, double rho) {
  const double nu = t.nu();
  const double om = (1.0 - rho) * (1.0 + rho);
  const double q = (x * x + y * y - 2.0 * rho * x * y) / om;
  const double log_joint = std::lgamma(0.5 * (nu + 2.0)) - std::lgamma(0.5 * nu) -
                           std::log(nu * std::numbers::pi) - 0.5 * std::log(om) -
                           0.5 * (nu + 2.0) * std::log1p(q / nu);
  return log_joint - t.log_pdf(x) - t.log_pdf(y);
}

double gaussian_log_density(double u, double v, double rho) {
  return gaussian_log_density_scores(normal_quantile(u), normal_quantile(v), rho);
}

double t_log_density(double u, double v, double rho, double nu) {
  const StudentT t(nu);
  return t_log_density_scores(t, t.quantile(u), t.quantile(v), rho);
}

double gumbel_log_density(double u, double v, double theta) {
  const double x = -std::log(u);
  const double y = -std::log(v);
  const double lx = std::log(x);
  const double ly = std::log(y);
  const double hi = std::max(lx, ly);
  const double log_a = theta * hi + std::log1p(std::exp(theta * (std::min(lx, ly) - hi)));
  const double w = std::exp(log_a / theta);
  return -w + x + y + (theta - 1.0) * (lx + ly) + (1.0 / theta - 2.0) * log_a +
         std::log(w + theta - 1.0);
}

double joe_log_density(double u, double v, double theta) {
  const double lu = std::log1p(-u);
  const double lv = std::log1p(-v);
  const double a = std::exp(theta * lu);
  const double b = std::exp(theta * lv);
  const double s = a + b * (1.0 - a);
  return (1.0 / theta - 2.0) * std::log(s) + (theta - 1.0) * (lu + lv) +
         std::log(theta - 1.0 + s);
}

double amh_log_density(double u, double v, double theta) {
  const double ub = 1.0 - u;
  const double vb = 1.0 - v;
  const double num = 1.0 + theta * ((1.0 + u) * (1.0 + v) - 3.0) + theta * theta * ub * vb;
  const double den = 1.0 - theta * ub * vb;
  return std::log(num) - 3.0 * std::log(den);
}

double clayton_log_density(const double* u, int d, double theta) {
  double out = 0.0;
  double sum_log = 0.0;
  for (int k = 0; k < d; ++k) {
    out += std::log1p(k * theta);
    sum_log += std::log(u[k]);
  }
  return out - (theta + 1.0) * sum_log - (1.0 / theta + d) * clayton_log_s(u, d, theta);
}

double bb2_log_density(double u, double v, double theta, double delta) {
  const auto [x, y, l] = bb2_terms(u, v, theta, delta);
  return -(theta + 1.0) * (std::log(u) + std::log(v)) + x + y - 2.0 * l -
         (1.0 / theta + 2.0) * std::log1p(l / delta) +
         std::log(1.0 + theta + delta * theta + theta * l);
}

double n419_log_density(double u, double v, double theta) {
  const double l = n419_l(u, v, theta);
  return 3.0 * std::log(theta) + theta / u + theta / v - 2.0 * l + std::log1p(2.0 / l) -
         2.0 * std::log(u) - 2.0 * std::log(v) - 2.0 * std::log(l);
}

double log_density_clipped(const CopulaModel& model, const double* p) {
  const double th = model.theta();
  const int d = model.dim();
  switch (model.family()) {
    case Family::independence: return 0.0;
    case Family::gaussian: return gaussian_log_density(p[0], p[1], th);
    case Family::student_t: return t_log_density(p[0], p[1], th, model.nu());
    case Family::fgm: return std::log1p(th * (1.0 - 2.0 * p[0]) * (1.0 - 2.0 * p[1]));
    case Family::frank:
      return std::log(th) + std::log(-std::expm1(-th)) - th * (p[0] + p[1]) -
             2.0 * frank_log_d(p[0], p[1], th);
    case Family::gumbel: return gumbel_log_density(p[0], p[1], th);
    case Family::clayton: return clayton_log_density(p, 2, th);
    case Family::mv_clayton: return clayton_log_density(p, d, th);  // same copula, rescaled generator
    case Family::joe: return joe_log_density(p[0], p[1], th);
    case Family::amh: return amh_log_density(p[0], p[1], th);
    case Family::bb2: return bb2_log_density(p[0], p[1], th, model.delta());
    case Family::nelsen_4_19: return n419_log_density(p[0], p[1], th);
    default: break;
  }
  return archimedean_log_density(generator(model), std::span<const double>(p, static_cast<std::size_t>(d)));
}

}  // namespace

double elliptical_score(const CopulaModel& model, double u) {
  if (model.family() == Family::gaussian) return normal_quantile(u);
  if (model.family() == Family::student_t) return StudentT(model.nu()).quantile(u);
  throw Error(ErrorCode::unsupported, "scores are defined for elliptical families only");
}

double elliptical_log_density_scores(const CopulaModel& model, double x, double y) {
  if (model.family() == Family::gaussian) return gaussian_log_density_scores(x, y, model.theta());
  if (model.family() == Family::student_t) {
    return t_log_density_scores(StudentT(model.nu()), x, y, model.theta());
  }
  throw Error(ErrorCode::unsupported, "scores are defined for elliptical families only");
}

double cdf(const CopulaModel& model, std::span<const double> point) {
  Point p;
  clip_point(model, point, p);
  const double th = model.theta();
  const int d = model.dim();
  const double u = p[0];
  const double v = p[1];
  switch (model.family()) {
    case Family::independence:
      return std::accumulate(p.begin(), p.begin() + d, 1.0, std::multiplies<>());
    case Family::gaussian:
      return bivariate_normal_cdf(normal_quantile(u), normal_quantile(v), th);
    case Family::student_t: {
      const StudentT t(model.nu());
      return bivariate_t_cdf(t.quantile(u), t.quantile(v), th, model.nu());
    }
    case Family::fgm: return u * v * (1.0 + th * (1.0 - u) * (1.0 - v));
    case Family::frank:
      return -std::log1p(std::expm1(-th * u) * std::expm1(-th * v) / std::expm1(-th)) / th;
    case Family::clayton:
    case Family::mv_clayton: return std::exp(-clayton_log_s(p.data(), d, th) / th);
    case Family::joe: {
      const double a = std::exp(th * std::log1p(-u));
      const double b = std::exp(th * std::log1p(-v));
      return -std::expm1(std::log(a + b * (1.0 - a)) / th);
    }
    case Family::amh: return u * v / (1.0 - th * (1.0 - u) * (1.0 - v));
    case Family::bb2: {
      const auto terms = bb2_terms(u, v, th, model.delta());
      return std::exp(-std::log1p(terms.l / model.delta()) / th);
    }
    case Family::nelsen_4_19: return th / n419_l(u, v, th);
    default: break;
  }
  return archimedean_cdf(generator(model), std::span<const double>(p.data(), static_cast<std::size_t>(d)));
}

LogDensity log_pdf(const CopulaModel& model, std::span<const double> point) {
  Point p;
  const bool clamped = clip_point(model, point, p);
  return {log_density_clipped(model, p.data()), clamped};
}

double log_density(const CopulaModel& model, std::span<const double> point) {
  Point p;
  clip_point(model, point, p);
  return log_density_clipped(model, p.data());
}

double conditional_cdf(const CopulaModel& model, double u, double v) {
  if (model.dim() != 2) throw Error(ErrorCode::shape, "conditional cdf needs a bivariate model");
  Point p;
  const double raw[2] = {u, v};
  clip_point(model, raw, p);
  u = p[0];
  v = p[1];
  const double th = model.theta();
  double h = 0.0;
  switch (model.family()) {
    case Family::independence: h = v; break;
    case Family::gaussian: {
      const double x = normal_quantile(u);
      const double y = normal_quantile(v);
      h = normal_cdf((y - th * x) / std::sqrt((1.0 - th) * (1.0 + th)));
      break;
    }
    case Family::student_t: {
      const double nu = model.nu();
      const StudentT t(nu);
      const double x = t.quantile(u);
      const double y = t.quantile(v);
      const double scale = std::sqrt((nu + x * x) * (1.0 - th) * (1.0 + th) / (nu + 1.0));
      h = StudentT(nu + 1.0).cdf((y - th * x) / scale);
      break;
    }
    case Family::fgm: h = v + th * v * (1.0 - v) * (1.0 - 2.0 * u); break;
    case Family::frank:
      h = std::exp(-th * u + std::log(-std::expm1(-th * v)) - frank_log_d(u, v, th));
      break;
    case Family::clayton:
    case Family::mv_clayton:
      h = std::exp(-(th + 1.0) * std::log(u) - (1.0 / th + 1.0) * clayton_log_s(p.data(), 2, th));
      break;
    case Family::bb2: {
      const double delta = model.delta();
      const auto [x, y, l] = bb2_terms(u, v, th, delta);
      h = std::exp(x - l - (th + 1.0) * std::log(u) - (1.0 / th + 1.0) * std::log1p(l / delta));
      break;
    }
    case Family::nelsen_4_19: {
      const double l = n419_l(u, v, th);
      h = std::exp(2.0 * std::log(th) + th / u - l - 2.0 * std::log(u) - 2.0 * std::log(l));
      break;
    }
    default: {
      const auto gen = generator(model);
      const double tu = std::max(gen.psi_inverse(u), std::numeric_limits<double>::min());
      const double tv = gen.psi_inverse(v);
      if (!std::isfinite(tu) || !std::isfinite(tv)) {
        throw Error(ErrorCode::numeric, "generator inverse overflow in conditional cdf");
      }
      h = std::exp(gen.log_abs_derivative(1, tu + tv) - gen.log_abs_derivative(1, tu));
    }
  }
  return std::clamp(h, 0.0, 1.0);
}

ArchimedeanGenerator generator(const CopulaModel& model) {
  if (!is_archimedean(model.family())) {
    throw Error(ErrorCode::unsupported,
                std::string(family_name(model.family())) + " is not an Archimedean family");
  }
  return ArchimedeanGenerator(model.family(), model.theta(), model.delta());
}

ArchimedeanGenerator eta_generator(double theta, double delta, Family family) {
  switch (family) {
    case Family::bb1: return ArchimedeanGenerator::composed(Family::clayton, theta, Family::gumbel, delta);
    case Family::bb2: return ArchimedeanGenerator::composed(Family::clayton, theta, Family::clayton, delta);
    case Family::bb6: return ArchimedeanGenerator::composed(Family::joe, theta, Family::gumbel, delta);
    default: break;
  }
  throw Error(ErrorCode::unsupported, "eta generator is defined for bb1, bb2 and bb6 only");
}

namespace {

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.value(); }

// G(x) = ((1 + x)^r - 1) / x, by its binomial series near x = 0.
template <class T>
T power_ratio(const T& x, double r) {
  if (std::abs(value_of(x)) >= 1e-3) {
    using std::expm1;
    using std::log1p;
    return expm1(r * log1p(x)) / x;
  }
  std::array<double, 14> b{};
  b[0] = r;
  for (std::size_t n = 1; n < b.size(); ++n) b[n] = b[n - 1] * (r - static_cast<double>(n)) / static_cast<double>(n + 1);
  T acc = x * 0.0 + b.back();
  for (std::size_t n = b.size() - 1; n-- > 0;) acc = acc * x + b[n];
  return acc;
}

template <class T>
T composition_value(Family family, double t1, double t2, const T& t) {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  using std::pow;
  const double r = t1 / t2;
  switch (family) {
    case Family::mv_clayton: return expm1(r * log1p(t2 * t)) / t1;
    case Family::mv_gumbel: return pow(t, r);
    // Both are t - log(scale) - log G(x) with x -> 0 as t grows.
    case Family::mv_frank: {
      const double a = std::expm1(-t2);
      return t - std::log(a / std::expm1(-t1)) - log(power_ratio(a * exp(-t), r));
    }
    case Family::mv_joe: return t - log(power_ratio(-exp(-t), r));
    default: break;
  }
  throw Error(ErrorCode::unsupported, "generator composition is defined for mv_ families only");
}

}  // namespace

UnivariateMap generator_composition(Family family, double theta1, double theta2) {
  const std::string msg = check_parameters(family, {theta1, {}, {}}, 2) +
                          check_parameters(family, {theta2, {}, {}}, 2);
  if (!msg.empty()) throw Error(ErrorCode::parameter, msg);
  if (theta1 > theta2) {
    throw Error(ErrorCode::ordering, "generator composition needs theta1 <= theta2");
  }
  (void)composition_value(family, theta1, theta2, 1.0);  // rejects other families
  UnivariateMap map;
  map.name = std::string(family_name(family)) + "(" + std::to_string(theta1) + " <- " +
             std::to_string(theta2) + ")";
  map.value = [=](double t) { return t == 0.0 ? 0.0 : composition_value(family, theta1, theta2, t); };
  map.scaled_taylor = [=](double t, int order) {
    const double h = t > 0.0 ? t : 1.0;
    const Jet y = composition_value(family, theta1, theta2, Jet::variable(t, h, order));
    std::vector<double> out(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = y[k];
    return out;
  };
  return map;
}

double mixture_component(const ArchimedeanGenerator& gen, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw Error(ErrorCode::domain, "u must lie in [0,1]");
  if (u == 0.0) return 0.0;
  return std::exp(-gen.psi_inverse(u));
}

double archimedean_cdf(const ArchimedeanGenerator& gen, std::span<const double> point) {
  double s = 0.0;
  for (double u : point) {
    if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorCode::domain, "coordinates must lie in (0,1]");
    s += gen.psi_inverse(u);
  }
  return std::isfinite(s) ? gen.psi(s) : 0.0;
}

double archimedean_log_density(const ArchimedeanGenerator& gen, std::span<const double> point) {
  const int d = static_cast<int>(point.size());
  double s = 0.0;
  double denom = 0.0;
  for (double u : point) {
    if (!(u > 0.0 && u < 1.0)) throw Error(ErrorCode::domain, "coordinates must lie in (0,1)");
    const double t = std::max(gen.psi_inverse(u), std::numeric_limits<double>::min());
    if (!std::isfinite(t)) throw Error(ErrorCode::numeric, "generator inverse overflow");
    s += t;
    denom += gen.log_abs_derivative(1, t);
  }
  return gen.log_abs_derivative(d, s) - denom;
}

}  // namespace copula_lab
