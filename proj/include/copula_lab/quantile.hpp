#pragma once

namespace copula_lab {

double normal_cdf(double x);
// Upper tail 1 - Phi(x), accurate for large x.
double normal_ccdf(double x);
double normal_log_pdf(double x);
// Wichura's AS 241 rational approximation, relative accuracy about 1e-16.
double normal_quantile(double p);

// Student t with real degrees of freedom nu > 0. The cdf goes through the
// regularized incomplete beta function; the quantile is a bracketed Newton
// iteration on that cdf, converged to 1e-12 relative in x.
class StudentT {
 public:
  explicit StudentT(double nu);

  double nu() const noexcept { return nu_; }
  double cdf(double x) const;
  double log_pdf(double x) const;
  double quantile(double p) const;

 private:
  // P(T <= x) for x <= 0.
  double lower_tail(double x) const;

  double nu_;
  double log_norm_;
};

}  // namespace copula_lab
