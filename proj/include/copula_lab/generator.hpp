#pragma once

#include <functional>
#include <string>
#include <vector>

#include "copula_lab/family.hpp"
#include "copula_lab/jet.hpp"

namespace copula_lab {

// An Archimedean generator psi: [0, inf) -> (0, 1] with psi(0) = 1, together
// with its inverse and derivatives of any order up to Jet::kMaxOrder.
//
// Derivatives come from Taylor-mode evaluation of the closed-form generator,
// so they are exact up to rounding. They are reported in the scaled form
//   c_k = psi^(k)(t) h^k / k!,  h = t (or 1 at t = 0),
// which stays O(psi(t)) even where psi^(k) itself under- or overflows.
class ArchimedeanGenerator {
 public:
  enum class Kind {
    clayton,         // (1 + t)^(-1/theta)
    clayton_scaled,  // (1 + theta t)^(-1/theta)
    frank,
    gumbel,
    joe,
    amh,
    amh_one,  // amh at theta = 1, renormalized to 1 / (1 + t)
    nelsen_4_14,
    nelsen_4_19,
    bb1,
    bb2,
    bb6,
    composed,  // outer(-log inner(t))
  };

  // Generator of an Archimedean family as printed for that family. Throws
  // Error(unsupported) for non-Archimedean families.
  ArchimedeanGenerator(Family family, double theta, double delta = 0.0);

  // eta(s) = outer_theta(-log inner_delta(s)), where outer is the Clayton
  // Laplace transform (1+s)^(-1/theta) or the Joe one, and inner is the
  // Gumbel or (unscaled) Clayton generator.
  static ArchimedeanGenerator composed(Family outer, double theta, Family inner, double delta);

  Family family() const noexcept { return family_; }
  Kind kind() const noexcept { return kind_; }
  double theta() const noexcept { return theta_; }
  double delta() const noexcept { return delta_; }
  std::string describe() const;

  double psi(double t) const;
  Jet psi(const Jet& t) const;
  // Returns +inf where the inverse overflows (bb2, nelsen_4_19 near u = 0).
  double psi_inverse(double u) const;

  std::vector<double> scaled_taylor(double t, int order) const;
  double derivative(int k, double t) const;
  double log_abs_derivative(int k, double t) const;

  // Central-difference k-th derivative with one Richardson step. Used as an
  // independent check of the Taylor-mode derivatives.
  double finite_difference_derivative(int k, double t) const;

  // True when Bernstein's theorem applies on the family's stated range, i.e.
  // the generator is a Laplace transform.
  bool laplace_transform_expected() const;

 private:
  ArchimedeanGenerator() = default;

  template <class T>
  T evaluate(const T& t) const;
  template <class T>
  static T evaluate_simple(Kind kind, double theta, const T& t);
  // -log psi for the inner generators of the composed construction.
  template <class T>
  static T neg_log_simple(Kind kind, double theta, const T& t);
  static double inverse_simple(Kind kind, double theta, double u);

  Family family_ = Family::independence;
  Kind kind_ = Kind::clayton;
  double theta_ = 0.0;
  double delta_ = 0.0;
  Kind outer_ = Kind::clayton;
  Kind inner_ = Kind::gumbel;
};

// A map t -> phi(t) on [0, inf) with optional Taylor-mode derivatives. When
// `scaled_taylor` is empty, derivatives fall back to finite differences.
struct UnivariateMap {
  std::string name;
  std::function<double(double)> value;
  std::function<std::vector<double>(double, int)> scaled_taylor;
};

double map_derivative(const UnivariateMap& map, int k, double t);

}  // namespace copula_lab
