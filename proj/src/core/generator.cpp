#include "copula_lab/generator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "copula_lab/error.hpp"

namespace copula_lab {
namespace {

using Kind = ArchimedeanGenerator::Kind;

double value_of(double x) { return x; }
double value_of(const Jet& x) { return x.value(); }

Kind kind_for(Family family, double theta) {
  switch (family) {
    case Family::clayton: return Kind::clayton;
    case Family::mv_clayton: return Kind::clayton_scaled;
    case Family::frank:
    case Family::mv_frank: return Kind::frank;
    case Family::gumbel:
    case Family::mv_gumbel: return Kind::gumbel;
    case Family::joe:
    case Family::mv_joe: return Kind::joe;
    case Family::amh: return theta == 1.0 ? Kind::amh_one : Kind::amh;
    case Family::nelsen_4_14: return Kind::nelsen_4_14;
    case Family::nelsen_4_19: return Kind::nelsen_4_19;
    case Family::bb1: return Kind::bb1;
    case Family::bb2: return Kind::bb2;
    case Family::bb6: return Kind::bb6;
    default: break;
  }
  throw Error(ErrorCode::unsupported,
              std::string(family_name(family)) + " is not an Archimedean family");
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

ArchimedeanGenerator::ArchimedeanGenerator(Family family, double theta, double delta)
    : family_(family), kind_(kind_for(family, theta)), theta_(theta), delta_(delta) {
  ParamVector p{theta, std::nullopt, std::nullopt};
  if (family_info(family).needs_delta) p.delta = delta;
  if (auto msg = check_parameters(family, p, 2); !msg.empty()) {
    throw Error(ErrorCode::parameter, msg);
  }
}

ArchimedeanGenerator ArchimedeanGenerator::composed(Family outer, double theta, Family inner,
                                                    double delta) {
  ArchimedeanGenerator g;
  g.kind_ = Kind::composed;
  g.theta_ = theta;
  g.delta_ = delta;
  if (outer == Family::clayton && inner == Family::gumbel) {
    g.family_ = Family::bb1;
  } else if (outer == Family::clayton && inner == Family::clayton) {
    g.family_ = Family::bb2;
  } else if (outer == Family::joe && inner == Family::gumbel) {
    g.family_ = Family::bb6;
  } else {
    throw Error(ErrorCode::unsupported, "composition " + std::string(family_name(outer)) + "/" +
                                            std::string(family_name(inner)) +
                                            " is not a catalogued two-parameter family");
  }
  g.outer_ = outer == Family::clayton ? Kind::clayton : Kind::joe;
  g.inner_ = inner == Family::gumbel ? Kind::gumbel : Kind::clayton;
  if (auto msg = check_parameters(g.family_, ParamVector{theta, delta, std::nullopt}, 2);
      !msg.empty()) {
    throw Error(ErrorCode::parameter, msg);
  }
  return g;
}

std::string ArchimedeanGenerator::describe() const {
  std::string out = std::string(family_name(family_)) + " generator(theta=" + fmt(theta_);
  if (family_info(family_).needs_delta) out += ";delta=" + fmt(delta_);
  out += kind_ == Kind::composed ? ";composed)" : ")";
  return out;
}

template <class T>
T ArchimedeanGenerator::evaluate_simple(Kind kind, double theta, const T& t) {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  using std::pow;
  switch (kind) {
    case Kind::clayton: return pow(1.0 + t, -1.0 / theta);
    case Kind::clayton_scaled: return pow(1.0 + theta * t, -1.0 / theta);
    case Kind::frank: {
      // -(1/theta) log(1 - p e^{-t}),  p = 1 - e^{-theta}
      const double p = -std::expm1(-theta);
      T e = exp(-t);
      if (p * value_of(e) < 0.5) return -log1p(-p * e) / theta;
      // 1 - p e^{-t} = (1 - e^{-t}) + e^{-theta} e^{-t}, both terms >= 0
      return -log(-expm1(-t) + std::exp(-theta) * e) / theta;
    }
    case Kind::gumbel: return exp(-pow(t, 1.0 / theta));
    case Kind::joe: return -expm1(log(-expm1(-t)) / theta);
    case Kind::amh: {
      T e = exp(-t);
      return (1.0 - theta) * e / (1.0 - theta * e);
    }
    case Kind::amh_one: return 1.0 / (1.0 + t);
    case Kind::nelsen_4_14: return pow(1.0 + pow(t, 1.0 / theta), -theta);
    case Kind::nelsen_4_19: return theta / (theta + log1p(t * std::exp(-theta)));
    default: break;
  }
  throw Error(ErrorCode::unsupported, "generator kind requires two parameters");
}

template <class T>
T ArchimedeanGenerator::neg_log_simple(Kind kind, double theta, const T& t) {
  using std::log1p;
  using std::pow;
  if (kind == Kind::gumbel) return pow(t, 1.0 / theta);
  return log1p(t) / theta;  // unscaled Clayton
}

template <class T>
T ArchimedeanGenerator::evaluate(const T& t) const {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  using std::pow;
  switch (kind_) {
    case Kind::bb1: return pow(1.0 + pow(t, 1.0 / delta_), -1.0 / theta_);
    case Kind::bb2: return pow(1.0 + log1p(t) / delta_, -1.0 / theta_);
    case Kind::bb6: return -expm1(log(-expm1(-pow(t, 1.0 / delta_))) / theta_);
    case Kind::composed:
      return evaluate_simple(outer_, theta_, neg_log_simple(inner_, delta_, t));
    default: return evaluate_simple(kind_, theta_, t);
  }
}

double ArchimedeanGenerator::psi(double t) const {
  if (std::isnan(t) || t < 0.0) throw Error(ErrorCode::domain, "generator argument must be >= 0");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  return evaluate(t);
}

Jet ArchimedeanGenerator::psi(const Jet& t) const { return evaluate(t); }

namespace {

// -log(1 - (1-u)^theta), accurate for u near 0 and near 1.
double joe_inner_inverse(double theta, double u) {
  const double ly = theta * std::log1p(-u);
  if (ly < -0.7) return -std::log1p(-std::exp(ly));
  return -std::log(-std::expm1(ly));
}

}  // namespace

double ArchimedeanGenerator::inverse_simple(Kind kind, double theta, double u) {
  switch (kind) {
    case Kind::clayton: return std::expm1(-theta * std::log(u));
    case Kind::clayton_scaled: return std::expm1(-theta * std::log(u)) / theta;
    case Kind::frank: {
      const double em = std::expm1(-theta);
      if (u <= 0.5) return -std::log(std::expm1(-theta * u) / em);
      return -std::log1p(-std::exp(-theta * u) * std::expm1(-theta * (1.0 - u)) / em);
    }
    case Kind::gumbel: return std::pow(-std::log(u), theta);
    case Kind::joe: return joe_inner_inverse(theta, u);
    case Kind::amh: return std::log1p(-theta * (1.0 - u)) - std::log(u);
    case Kind::amh_one: return 1.0 / u - 1.0;
    case Kind::nelsen_4_14: return std::pow(std::expm1(-std::log(u) / theta), theta);
    case Kind::nelsen_4_19: return std::exp(theta) * std::expm1(theta / u - theta);
    default: break;
  }
  throw Error(ErrorCode::unsupported, "generator kind requires two parameters");
}

double ArchimedeanGenerator::psi_inverse(double u) const {
  if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorCode::domain, "generator inverse needs u in (0,1]");
  if (u == 1.0) return 0.0;
  switch (kind_) {
    case Kind::bb1: return std::pow(std::expm1(-theta_ * std::log(u)), delta_);
    case Kind::bb2: return std::expm1(delta_ * std::expm1(-theta_ * std::log(u)));
    case Kind::bb6: return std::pow(joe_inner_inverse(theta_, u), delta_);
    case Kind::composed: {
      // inner^{-1}(exp(-outer^{-1}(u)))
      const double x = inverse_simple(outer_, theta_, u);
      if (inner_ == Kind::gumbel) return std::pow(x, delta_);
      return std::expm1(delta_ * x);
    }
    default: return inverse_simple(kind_, theta_, u);
  }
}

std::vector<double> ArchimedeanGenerator::scaled_taylor(double t, int order) const {
  if (order < 0 || order > Jet::kMaxOrder) {
    throw Error(ErrorCode::numeric, "derivative order out of range");
  }
  if (std::isnan(t) || t < 0.0) throw Error(ErrorCode::domain, "generator argument must be >= 0");
  const double h = t > 0.0 ? t : 1.0;
  const Jet y = evaluate(Jet::variable(t, h, order));
  std::vector<double> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = y[k];
  return out;
}

double ArchimedeanGenerator::derivative(int k, double t) const {
  const auto c = scaled_taylor(t, k);
  const double h = t > 0.0 ? t : 1.0;
  return c.back() * std::exp(std::lgamma(k + 1.0) - k * std::log(h));
}

double ArchimedeanGenerator::log_abs_derivative(int k, double t) const {
  const auto c = scaled_taylor(t, k);
  const double h = t > 0.0 ? t : 1.0;
  return std::log(std::abs(c.back())) + std::lgamma(k + 1.0) - k * std::log(h);
}

namespace {

double central_difference(const std::function<double(double)>& f, int k, double t, double h) {
  // sum_j (-1)^j C(k,j) f(t + (k/2 - j) h) / h^k
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double x = t + (0.5 * k - j) * h;
    sum += ((j % 2 == 0) ? 1.0 : -1.0) * binom * f(x);
    binom = binom * (k - j) / (j + 1);
  }
  return sum / std::pow(h, k);
}

double fd_derivative(const std::function<double(double)>& f, int k, double t) {
  if (k == 0) return f(t);
  // Step balancing the O(h^4) truncation left after Richardson against
  // rounding, kept inside the domain t > 0.
  double h = std::max(1.0, t) * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (k + 4));
  if (t > 0.0) h = std::min(h, 0.9 * 2.0 * t / k);
  const double d1 = central_difference(f, k, t, h);
  const double d2 = central_difference(f, k, t, 0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

double ArchimedeanGenerator::finite_difference_derivative(int k, double t) const {
  return fd_derivative([this](double x) { return psi(x); }, k, t);
}

bool ArchimedeanGenerator::laplace_transform_expected() const {
  if (kind_ == Kind::amh) return theta_ > 0.0;
  return true;
}

double map_derivative(const UnivariateMap& map, int k, double t) {
  if (map.scaled_taylor) {
    const auto c = map.scaled_taylor(t, k);
    const double h = t > 0.0 ? t : 1.0;
    return c.back() * std::exp(std::lgamma(k + 1.0) - k * std::log(h));
  }
  return fd_derivative(map.value, k, t);
}

}  // namespace copula_lab
