#include "copula_lab/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "copula_lab/error.hpp"

namespace copula_lab {
namespace {

constexpr double kInf = 1e300;

constexpr std::array<FamilyInfo, 18> kCatalog{{
    {Family::independence, "independence", "theta ignored", false, false, true, false, {0.0, 0.0, 1.0}},
    {Family::gaussian, "gaussian", "[0,1)", false, false, false, false, {0.05, 0.95, 0.05}},
    {Family::student_t, "student_t", "[0,1), nu>2", false, true, false, false, {0.05, 0.95, 0.05}},
    {Family::fgm, "fgm", "[-1,1]", false, false, false, false, {-1.0, 1.0, 0.1}},
    {Family::frank, "frank", "(0,inf)", false, false, false, true, {0.5, 20.0, 0.5}},
    {Family::gumbel, "gumbel", "[1,inf)", false, false, false, true, {1.05, 10.0, 0.25}},
    {Family::clayton, "clayton", "(0,inf)", false, false, false, true, {0.25, 10.0, 0.25}},
    {Family::joe, "joe", "[1,inf)", false, false, false, true, {1.05, 10.0, 0.25}},
    {Family::amh, "amh", "[-1,1]", false, false, false, true, {-0.95, 0.95, 0.05}},
    {Family::nelsen_4_14, "nelsen_4_14", "[1,inf)", false, false, false, true, {1.05, 10.0, 0.25}},
    {Family::nelsen_4_19, "nelsen_4_19", "(0,inf)", false, false, false, true, {0.25, 10.0, 0.25}},
    {Family::bb1, "bb1", "theta>0, delta>=1", true, false, false, true, {0.25, 6.0, 0.25}},
    {Family::bb2, "bb2", "theta>0, delta>=1", true, false, false, true, {0.25, 6.0, 0.25}},
    {Family::bb6, "bb6", "theta>=1, delta>=1", true, false, false, true, {1.05, 6.0, 0.25}},
    {Family::mv_clayton, "mv_clayton", "(0,inf)", false, false, true, true, {0.25, 10.0, 0.25}},
    {Family::mv_frank, "mv_frank", "(0,inf)", false, false, true, true, {0.5, 20.0, 0.5}},
    {Family::mv_gumbel, "mv_gumbel", "[1,inf)", false, false, true, true, {1.05, 10.0, 0.25}},
    {Family::mv_joe, "mv_joe", "[1,inf)", false, false, true, true, {1.05, 10.0, 0.25}},
}};

struct Interval {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  bool contains(double x) const {
    if (!std::isfinite(x)) return false;
    if (lo_open ? x <= lo : x < lo) return false;
    if (hi_open ? x >= hi : x > hi) return false;
    return true;
  }
};

Interval theta_interval(Family family) {
  switch (family) {
    case Family::independence: return {-kInf, kInf, false, false};
    case Family::gaussian:
    case Family::student_t: return {0.0, 1.0, false, true};
    case Family::fgm:
    case Family::amh: return {-1.0, 1.0, false, false};
    case Family::frank:
    case Family::clayton:
    case Family::nelsen_4_19:
    case Family::bb1:
    case Family::bb2:
    case Family::mv_clayton:
    case Family::mv_frank: return {0.0, kInf, true, false};
    case Family::gumbel:
    case Family::joe:
    case Family::nelsen_4_14:
    case Family::bb6:
    case Family::mv_gumbel:
    case Family::mv_joe: return {1.0, kInf, false, false};
  }
  return {0.0, 0.0, true, true};
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

std::span<const FamilyInfo> family_catalog() { return kCatalog; }

const FamilyInfo& family_info(Family family) {
  return kCatalog[static_cast<std::size_t>(family)];
}

std::string_view family_name(Family family) { return family_info(family).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

bool is_archimedean(Family family) { return family_info(family).archimedean; }

bool is_elliptical(Family family) {
  return family == Family::gaussian || family == Family::student_t;
}

bool is_sign_symmetric_family(Family family) {
  return family == Family::fgm || family == Family::amh;
}

std::string check_parameters(Family family, const ParamVector& params, int dim) {
  const auto& info = family_info(family);
  if (!theta_interval(family).contains(params.theta)) {
    return std::string(info.name) + ": theta=" + format_number(params.theta) +
           " outside " + std::string(info.theta_domain);
  }
  if (info.needs_delta != params.delta.has_value()) {
    return std::string(info.name) +
           (info.needs_delta ? ": delta is required" : ": delta is not a parameter of this family");
  }
  if (info.needs_nu != params.nu.has_value()) {
    return std::string(info.name) +
           (info.needs_nu ? ": nu is required" : ": nu is not a parameter of this family");
  }
  if (params.delta && !(std::isfinite(*params.delta) && *params.delta >= 1.0)) {
    return std::string(info.name) + ": delta=" + format_number(*params.delta) + " outside [1,inf)";
  }
  if (params.nu && !(std::isfinite(*params.nu) && *params.nu > 2.0)) {
    return std::string(info.name) + ": nu=" + format_number(*params.nu) + " outside (2,inf)";
  }
  if (dim < 2 || dim > kMaxDimension || (!info.multivariate && dim != 2)) {
    return std::string(info.name) + ": dimension " + std::to_string(dim) + " not supported";
  }
  return {};
}

CopulaModel::CopulaModel(Family family, ParamVector params, int dim)
    : family_(family), params_(params), dim_(dim) {
  const auto& info = family_info(family);
  if (dim < 2 || dim > kMaxDimension || (!info.multivariate && dim != 2)) {
    throw Error(ErrorCode::shape, check_parameters(family, params, dim));
  }
  if (auto msg = check_parameters(family, params, dim); !msg.empty()) {
    throw Error(ErrorCode::parameter, msg);
  }
}

CopulaModel CopulaModel::independence(int dim) {
  return CopulaModel(Family::independence, {}, dim);
}

CopulaModel CopulaModel::with_theta(double theta) const {
  ParamVector p = params_;
  p.theta = theta;
  return CopulaModel(family_, p, dim_);
}

std::string CopulaModel::param_string() const {
  std::string out = "theta=" + format_number(params_.theta);
  if (params_.delta) out += ";delta=" + format_number(*params_.delta);
  if (params_.nu) out += ";nu=" + format_number(*params_.nu);
  if (family_info(family_).multivariate) out += ";dim=" + std::to_string(dim_);
  return out;
}

std::string CopulaModel::describe() const {
  return std::string(family_name(family_)) + "(" + param_string() + ")";
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step))) {
    throw Error(ErrorCode::config, "grid bounds must be finite");
  }
  if (hi < lo) throw Error(ErrorCode::config, "grid upper bound below lower bound");
  if (hi == lo) return {lo};
  if (!(step > 0.0)) throw Error(ErrorCode::config, "grid step must be positive");
  const auto n = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-9) + 1e-9)) + 1;
  if (n > 1000000) throw Error(ErrorCode::config, "grid has too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

std::vector<double> default_theta_grid(Family family) {
  const auto& g = family_info(family).default_grid;
  return make_grid(g.lo, g.hi, g.step);
}

}  // namespace copula_lab
