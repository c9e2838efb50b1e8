#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "copula_lab/copula.hpp"
#include "copula_lab/family.hpp"
#include "copula_lab/generator.hpp"

namespace copula_lab {

inline constexpr double kAlgebraicTol = 1e-7;
inline constexpr double kLogTol = 1e-6;
inline constexpr int kDefaultOrder = 6;

// Uniform grid of `resolution` points per axis on [lo, hi]. Pair checks use
// every rectangle when there are at most `pair_budget` of them; otherwise all
// adjacent rectangles plus seeded random ones up to the budget.
struct GridSpec {
  int resolution = 50;
  double lo = 0.01;
  double hi = 0.99;
  std::size_t pair_budget = 200000;
  std::uint64_t seed = 20240611;

  // Throws Error(grid) unless resolution >= 4 and 0 < lo < hi < 1.
  void validate() const;
  std::vector<double> axis() const;
};

struct PropertyReport {
  std::string property;
  std::string model;   // describe() of the model, or of both models for comparisons
  std::string params;  // CSV-safe parameter string
  bool passed = true;
  double worst_violation = 0.0;  // 0 when nothing violated
  double tolerance = 0.0;
  std::vector<double> worst_location;  // empty when worst_violation == 0
  std::size_t pairs_tested = 0;
  std::string detail;
};

enum class Dependence { positive, negative };  // TP2 / supermodular vs RR2 / submodular

// Rectangle test on log psi over the grid: for u1 < u2, v1 < v2,
//   log psi(u2,v2) + log psi(u1,v1) - log psi(u1,v2) - log psi(u2,v1) >= -tol
// (reversed for Dependence::negative). Location is (u1, v1, u2, v2).
PropertyReport check_tp2_kernel(const std::string& name,
                                const std::function<double(double, double)>& log_kernel,
                                const GridSpec& grid, double tol = kLogTol,
                                Dependence dir = Dependence::positive);

// TP2 / RR2 of the copula density, phrased as the lattice inequality on
// incomparable point pairs x, y: log c(x v y) + log c(x ^ y) vs log c(x) + log c(y).
PropertyReport check_tp2(const CopulaModel& model, const GridSpec& grid = {}, double tol = kLogTol,
                         Dependence dir = Dependence::positive);

// Supermodularity (submodularity) of log c by second differences on grid
// rectangles. Uses the same pair set and arithmetic as check_tp2, so verdicts agree.
PropertyReport check_supermodular_logdensity(const CopulaModel& model, const GridSpec& grid = {},
                                             double tol = kLogTol,
                                             Dependence dir = Dependence::positive);

// cdf(lo, p) <= cdf(hi, p) + tol at every grid point (random grid points
// when dim > 2). Error(comparison) when family or dimension differ.
PropertyReport check_pqd_order(const CopulaModel& model_lo, const CopulaModel& model_hi,
                               const GridSpec& grid = {}, double tol = kAlgebraicTol);

// Default t grid for the derivative-sign checks: 61 points log-spaced on [1e-3, 1e3].
std::vector<double> default_t_grid();

// psi(0) = 1 and (-1)^k psi^(k)(t) >= 0 for k = 1..K. The sign test is done
// on the scaled coefficients psi^(k)(t) t^k / k!, so tol is relative to psi(t).
PropertyReport check_completely_monotone(const ArchimedeanGenerator& gen, int max_order = kDefaultOrder,
                                         const std::vector<double>& t_grid = default_t_grid(),
                                         double tol = kAlgebraicTol);

// phi(0) = 0, phi increasing and unbounded along the grid, and
// (-1)^(k-1) phi^(k)(t) >= 0 for k = 1..K (scaled as above, relative to max(1, phi(t))).
PropertyReport check_lstar(const UnivariateMap& comp, int max_order = kDefaultOrder,
                           const std::vector<double>& t_grid = default_t_grid(),
                           double tol = kAlgebraicTol);

// The two inequalities behind the entropy ordering, by Monte Carlo:
//   A = E_1 log c_1 <= B = E_2 log c_1 <= D = E_2 log c_2,
// where "1" is the weaker parameter. Violations are reported in units of the
// combined standard error and pass at <= 3. theta1 > theta2 -> Error(ordering).
// For fgm/amh with both parameters <= 0 the weaker one is theta2.
struct KlChain {
  double a = 0.0, b = 0.0, d = 0.0;
  double se_ab = 0.0, se_bd = 0.0;
};
PropertyReport check_kl_chain(const CopulaModel& base, double theta1, double theta2,
                              std::int64_t samples, std::uint64_t seed, KlChain* chain = nullptr);

// (i) cdf = psi(sum psi^{-1}) within tol on the grid; (ii) the empirical cdf
// of a frailty sample of size `samples` is within 3/sqrt(M) of cdf. The
// reported violation is the larger of the two deviations divided by its
// threshold, so the report passes at <= 1.
PropertyReport check_mixture_identity(const CopulaModel& model, const GridSpec& grid = {},
                                      double tol = 1e-10, std::int64_t samples = 20000,
                                      std::uint64_t seed = 1);

enum class VerifyMode { automatic, tp2, rr2, cm, lstar };

struct ConditionResult {
  std::string condition;  // "a", "b", "c", "d", "multi_b"
  std::string branch;     // "tp2", "rr2" or empty
  bool satisfied = false;
  std::vector<PropertyReport> reports;
  std::string note;
};

struct TheoremReport {
  Family family = Family::independence;
  std::vector<ConditionResult> conditions;

  bool all_passed() const;
  std::vector<PropertyReport> reports() const;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  GridSpec grid;
  double tol = -1.0;  // negative: per-check defaults
  int order = kDefaultOrder;
};

// Runs the condition battery on a theta grid of one family. Consecutive PQD
// checks follow the given order, so an unsorted grid fails them. In automatic
// mode the conditions are the ones the family is listed under; mixed-sign
// fgm/amh grids are split into their positive and negative branches.
// Error(comparison) on mixed families or dimensions.
TheoremReport verify_theorem_conditions(const std::vector<CopulaModel>& models,
                                        const VerifyOptions& options = {});

}  // namespace copula_lab
