#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "copula_lab/family.hpp"
#include "copula_lab/generator.hpp"

namespace copula_lab {

// Row-major M x d matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
  std::vector<double> column(std::size_t j) const;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Points of a copula sample; every entry lies in [kBoundaryEps, 1 - kBoundaryEps].
using SampleMatrix = Matrix;

// splitmix64 finalizer and the derived-seed rule for parallel streams.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Uniform on the open interval (0,1) with 53 random bits.
inline double open_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

enum class FrailtyLaw { gamma, gamma_scaled, positive_stable, logarithmic_series, sibuya, geometric };

const char* frailty_law_name(FrailtyLaw law);

// A positive random variable alpha whose Laplace transform E[exp(-t alpha)]
// is the generator psi of the model.
class FrailtySampler {
 public:
  // Throws Error(unsupported) for families without a catalogued law.
  explicit FrailtySampler(const CopulaModel& model);

  FrailtyLaw law() const noexcept { return law_; }
  double draw(std::mt19937_64& rng) const;

 private:
  FrailtyLaw law_;
  double theta_;
  double aux_ = 0.0;  // Gamma(1 - 1/theta) for the Sibuya law
};

// True when the family at this parameter has a frailty law.
bool has_frailty_law(const CopulaModel& model);

// Default sampler: conditional inversion for d = 2, frailty construction for
// the multivariate Archimedean families, elliptical construction for
// gaussian / student_t. Throws Error(count) when count < 1.
SampleMatrix sample(const CopulaModel& model, std::int64_t count, std::uint64_t seed);

// Marshall-Olkin construction u_i = psi(E_i / alpha).
SampleMatrix sample_frailty(const CopulaModel& model, std::int64_t count, std::uint64_t seed);

// v with h(v | u) = w for bivariate models (the conditional-inversion step).
double conditional_inverse(const CopulaModel& model, double u, double w);

// Column-wise average ranks divided by M + 1.
SampleMatrix pseudo_observations(const Matrix& data);

// Average (mid) ranks, 1-based.
std::vector<double> average_ranks(std::span<const double> x);

}  // namespace copula_lab
