#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace copula_lab {

// Coordinates are clipped to [kBoundaryEps, 1 - kBoundaryEps] before any
// density or generator evaluation.
inline constexpr double kBoundaryEps = 1e-12;

// Largest dimension supported by the Archimedean density machinery (the
// density needs the d-th generator derivative).
inline constexpr int kMaxDimension = 24;

enum class Family {
  independence,
  gaussian,
  student_t,
  fgm,
  frank,
  gumbel,
  clayton,
  joe,
  amh,
  nelsen_4_14,
  nelsen_4_19,
  bb1,
  bb2,
  bb6,
  mv_clayton,
  mv_frank,
  mv_gumbel,
  mv_joe,
};

struct GridRange {
  double lo;
  double hi;
  double step;
};

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view theta_domain;
  bool needs_delta;
  bool needs_nu;
  bool multivariate;  // admits dim > 2
  bool archimedean;
  GridRange default_grid;
};

std::span<const FamilyInfo> family_catalog();
const FamilyInfo& family_info(Family family);
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

bool is_archimedean(Family family);
bool is_elliptical(Family family);
// Families whose entropy is monotone in |theta| rather than theta.
bool is_sign_symmetric_family(Family family);

struct ParamVector {
  double theta = 0.0;
  std::optional<double> delta;
  std::optional<double> nu;
};

// A validated (family, parameters, dimension) triple. Construction throws
// Error(parameter) for out-of-domain parameters and Error(shape) for an
// incompatible dimension.
class CopulaModel {
 public:
  CopulaModel(Family family, ParamVector params, int dim = 2);

  static CopulaModel independence(int dim = 2);

  Family family() const noexcept { return family_; }
  const ParamVector& params() const noexcept { return params_; }
  double theta() const noexcept { return params_.theta; }
  double delta() const noexcept { return params_.delta.value_or(0.0); }
  double nu() const noexcept { return params_.nu.value_or(0.0); }
  int dim() const noexcept { return dim_; }

  CopulaModel with_theta(double theta) const;

  // "clayton(theta=2)", "bb1(theta=0.5;delta=1.5)", "mv_gumbel(theta=2;dim=5)"
  std::string describe() const;
  // "theta=2;delta=1.5" (no commas, safe for CSV cells)
  std::string param_string() const;

 private:
  Family family_;
  ParamVector params_;
  int dim_;
};

// Validation without construction; empty string means valid.
std::string check_parameters(Family family, const ParamVector& params, int dim);

// lo, lo+step, ..., up to hi (inclusive, with a 1e-9 relative slack). Values
// are rounded to 12 significant decimals so 0.1 steps print cleanly.
std::vector<double> make_grid(double lo, double hi, double step);
std::vector<double> default_theta_grid(Family family);

}  // namespace copula_lab
