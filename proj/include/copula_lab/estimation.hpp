#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copula_lab/family.hpp"
#include "copula_lab/sampling.hpp"

namespace copula_lab {

// Monte Carlo mean with its standard error (sample sd / sqrt(M)).
struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Summary over repetitions; lo95/hi95 are the empirical 2.5/97.5 percentiles.
struct EntropyEstimate {
  double point_value = 0.0;  // first repetition
  std::vector<double> rep_values;
  double mean = 0.0;
  double lo95 = 0.0;
  double hi95 = 0.0;
};

EntropyEstimate summarize_repetitions(std::vector<double> rep_values);

// Linear-interpolation percentile (q in [0,1]) of unsorted data.
double percentile(std::vector<double> values, double q);

// H = -(1/M) sum log c(row), in nats. Throws Error(shape) on dimension mismatch.
double empirical_entropy(const CopulaModel& model, const SampleMatrix& sample);
MonteCarloEstimate entropy_estimate(const CopulaModel& model, const SampleMatrix& sample);

// MI = -H, exactly.
double mutual_information(const CopulaModel& model, const SampleMatrix& sample);
MonteCarloEstimate mutual_information_estimate(const CopulaModel& model, const SampleMatrix& sample);

// (1/M) sum [log c_p(row) - log c_q(row)] over a sample drawn from p.
// Throws Error(comparison) when families or dimensions differ.
double kl_divergence(const CopulaModel& p, const CopulaModel& q, const SampleMatrix& sample_from_p);
MonteCarloEstimate kl_estimate(const CopulaModel& p, const CopulaModel& q, const SampleMatrix& sample_from_p);

struct QuadratureResult {
  double value = 0.0;
  int nodes = 0;        // per axis at convergence
  double change = 0.0;  // |last - previous|
  const char* method = "direct";
};

// -int c log c over [1e-6, 1 - 1e-6]^2 by tensor Gauss-Legendre in logit
// coordinates, doubling from 256 nodes per axis until the change is < 1e-4.
// When that fails (density concentrated on a ridge) the same integral is
// taken in conditional coordinates (u, h(v|u)). Bivariate only;
// Error(unsupported) otherwise, Error(numeric) when neither rule converges.
QuadratureResult entropy_quadrature_detail(const CopulaModel& model);
double entropy_quadrature(const CopulaModel& model);

// int c_p log(c_p / c_q) by the same rule.
double kl_quadrature(const CopulaModel& p, const CopulaModel& q);

// 12 int C - 3 by tensor Gauss-Legendre, doubling from 32 nodes until the
// change is < 1e-10 (or 1024 nodes). Bivariate only.
double spearman_analytic(const CopulaModel& model);

// Pearson correlation of average ranks of columns i and j (0-based).
double spearman_sample(const SampleMatrix& sample, std::size_t col_i, std::size_t col_j);
double spearman_ranks(std::span<const double> x, std::span<const double> y);

// Kendall's tau-b by merge-sort concordance counting, O(M log M).
double kendall_sample(const SampleMatrix& sample, std::size_t col_i, std::size_t col_j);
double kendall_tau(std::span<const double> x, std::span<const double> y);

}  // namespace copula_lab
