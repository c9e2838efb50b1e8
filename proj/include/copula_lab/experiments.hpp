#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copula_lab/estimation.hpp"
#include "copula_lab/family.hpp"
#include "copula_lab/verification.hpp"

namespace copula_lab {

// Worker count: COPULA_LAB_THREADS when set to a positive integer, otherwise
// std::thread::hardware_concurrency().
int worker_count();

// Runs fn(0..n-1) on up to `threads` workers (0 = worker_count()). Each index
// runs exactly once; the first exception is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

// independent (default): every (theta, r) cell has its own stream.
// common: repetition r reuses one seed for every theta (common random numbers).
enum class SeedMode { common, independent };

struct ExperimentConfig {
  Family family = Family::clayton;
  std::vector<double> theta_grid;
  std::optional<double> delta;
  std::optional<double> nu;
  int dim = 2;
  std::int64_t samples = 1000;
  int reps = 50;
  std::uint64_t seed = 1;
  SeedMode seed_mode = SeedMode::independent;
  int threads = 0;

  // Error(config) unless the grid is non-empty, strictly increasing and in
  // the family domain, samples >= 10 and reps >= 1.
  void validate() const;
  CopulaModel model(double theta) const;
};

// Seed of the sample for grid index i, repetition r.
std::uint64_t cell_seed(const ExperimentConfig& cfg, std::size_t theta_index, std::size_t rep);

// Fraction of consecutive grid pairs whose values move with the parameter.
// For fgm/amh the parameter is |theta|; pairs with equal |theta| are skipped.
// Returns nullopt when no pair is comparable.
std::optional<double> monotone_fraction(Family family, const std::vector<double>& theta,
                                        const std::vector<double>& values);
// Spearman correlation between theta (|theta| for fgm/amh) and values; 1 for a single point.
double parameter_rank_correlation(Family family, const std::vector<double>& theta,
                                  const std::vector<double>& values);

struct MonotonicityReport {
  std::vector<double> theta;
  std::vector<EntropyEstimate> neg_entropy;  // per theta, over repetitions
  double monotone_fraction = 1.0;
  bool fraction_defined = true;  // false for single-point grids (fraction reported as 1)
  double rank_correlation = 1.0;
  std::int64_t samples = 0;
  int reps = 0;
};

// For each theta and repetition: sample, then -empirical_entropy (= mean log c).
MonotonicityReport run_entropy_curve(const ExperimentConfig& cfg);

struct SweepReport {
  std::vector<std::int64_t> sample_sizes;
  std::vector<double> mean_monotone_fraction;
  std::vector<std::vector<double>> rep_fractions;  // [size][rep]
  int reps = 0;
};

// For each size: R repetitions of the grid experiment with one sample per
// theta, the monotone fraction of each repetition, averaged over repetitions.
// Sizes must be strictly increasing within [10, 1e7].
SweepReport run_size_sweep(const ExperimentConfig& cfg, const std::vector<std::int64_t>& sizes);

struct VerifyRun {
  TheoremReport theorem;
  bool passed = false;
};
VerifyRun run_verify(const std::vector<CopulaModel>& models, const VerifyOptions& options);

struct PairRank {
  std::size_t col_i = 0;  // 1-based
  std::size_t col_j = 0;
  double abs_spearman = 0.0;
  std::size_t rank = 0;  // 1 = strongest
  std::optional<double> mi_estimate;
  std::optional<double> fitted_theta;
};

struct RankOptions {
  std::size_t top_k = 10;  // 0 = all pairs
  std::optional<Family> mi_family;  // fit this family per pair and estimate MI
  std::int64_t mi_samples = 20000;
  std::uint64_t seed = 1;
  int threads = 0;
};

// A parsed numeric table. Throws Error(parse) with row/column on bad cells.
struct Table {
  std::vector<std::string> header;  // empty when the file has none
  Matrix data;
};
Table parse_csv_table(const std::string& text);
Table read_csv_table(const std::string& path);

// Ranks all column pairs by |Spearman rho|; ties keep (i, j) order.
// Needs >= 20 rows and >= 2 columns; constant columns -> Error(degenerate_data).
std::vector<PairRank> rank_pairs(const Matrix& data, const RankOptions& options);

// theta of `family` whose analytic Spearman rho equals target, by bisection
// over the family domain (clamped to the attainable range).
double fit_theta_to_spearman(Family family, double target);

// "a,b,c" or "lo:hi:step" (inclusive). Error(config) on malformed input.
std::vector<double> parse_grid_spec(std::string_view spec);

// CSV rendering (LF line endings, shortest round-trip decimals).
std::string format_number(double x);
std::string curve_csv(const MonotonicityReport& report);
std::string sweep_csv(const SweepReport& report);
std::string verify_csv(const TheoremReport& report);
std::string rank_csv(const std::vector<PairRank>& ranks);
std::string sample_csv(const Matrix& sample);

// Writes text to path, Error(io) on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace copula_lab
