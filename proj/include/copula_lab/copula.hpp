#pragma once

#include <span>

#include "copula_lab/family.hpp"
#include "copula_lab/generator.hpp"

namespace copula_lab {

struct LogDensity {
  double value;
  bool clamped;  // some coordinate was clipped to [kBoundaryEps, 1 - kBoundaryEps]
};

// C(point). Coordinates must lie in (0,1); throws Error(domain) otherwise and
// Error(shape) when point.size() != model.dim().
double cdf(const CopulaModel& model, std::span<const double> point);

// log c(point), the log of the mixed d-th partial derivative of the cdf.
LogDensity log_pdf(const CopulaModel& model, std::span<const double> point);

// Same value without the clamp flag; the hot path of the estimators.
double log_density(const CopulaModel& model, std::span<const double> point);

// h(v | u) = dC(u, v)/du for bivariate models; increasing in v.
double conditional_cdf(const CopulaModel& model, double u, double v);

ArchimedeanGenerator generator(const CopulaModel& model);
ArchimedeanGenerator eta_generator(double theta, double delta, Family family);

// psi_{theta1}^{-1} o psi_{theta2} for the multivariate families, in the
// closed forms printed for them. Throws Error(ordering) when theta1 > theta2.
UnivariateMap generator_composition(Family family, double theta1, double theta2);

// G(u) = exp(-psi^{-1}(u)), the mixing cdf of the frailty representation.
double mixture_component(const ArchimedeanGenerator& gen, double u);

// psi(sum_i psi^{-1}(u_i)); the defining Archimedean construction.
double archimedean_cdf(const ArchimedeanGenerator& gen, std::span<const double> point);

// log c from generator derivatives:
//   log|psi^(d)(s)| - sum_i log|psi'(t_i)|,  t_i = psi^{-1}(u_i), s = sum t_i.
double archimedean_log_density(const ArchimedeanGenerator& gen, std::span<const double> point);

// Elliptical models: marginal score x = F^{-1}(u) (normal or t quantile) and
// log c expressed in scores, so callers on a tensor grid transform each axis once.
double elliptical_score(const CopulaModel& model, double u);
double elliptical_log_density_scores(const CopulaModel& model, double x, double y);

double bivariate_normal_cdf(double x, double y, double rho);
double bivariate_t_cdf(double x, double y, double rho, double nu);

}  // namespace copula_lab
