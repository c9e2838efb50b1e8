#include "copula_lab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "copula_lab/copula.hpp"
#include "copula_lab/error.hpp"
#include "copula_lab/quantile.hpp"

namespace copula_lab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) throw Error(ErrorCode::shape, "matrix size mismatch");
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream));
}

namespace {

constexpr double kLo = kBoundaryEps;
constexpr double kHi = 1.0 - kBoundaryEps;

double clip(double x) { return std::clamp(x, kLo, kHi); }

void check_count(std::int64_t count) {
  if (count < 1) throw Error(ErrorCode::count, "sample count must be >= 1");
}

double std_normal(std::mt19937_64& rng) { return normal_quantile(open_uniform(rng)); }

double gamma_draw(std::mt19937_64& rng, double shape) {
  std::gamma_distribution<double> g(shape, 1.0);
  return g(rng);
}

// Positive stable with Laplace transform exp(-t^a), 0 < a <= 1 (Kanter's
// representation, as used by Chambers-Mallows-Stuck).
double positive_stable(std::mt19937_64& rng, double a) {
  if (a >= 1.0) return 1.0;
  const double v = std::numbers::pi * open_uniform(rng);
  const double w = -std::log(open_uniform(rng));
  const double log_s = std::log(std::sin(a * v)) - std::log(std::sin(v)) / a +
                       (1.0 - a) / a * (std::log(std::sin((1.0 - a) * v)) - std::log(w));
  return std::exp(log_s);
}

// Logarithmic series P(k) = p^k / (-k log(1-p)), p = 1 - exp(-theta)
// (Kemp's LK algorithm; h = log(1 - p) = -theta).
double log_series(std::mt19937_64& rng, double theta) {
  const double p = -std::expm1(-theta);
  const double u2 = open_uniform(rng);
  if (u2 > p) return 1.0;
  const double q = -std::expm1(-theta * open_uniform(rng));
  if (u2 < q * q) return std::floor(1.0 + std::log(u2) / std::log(q));
  return u2 > q ? 1.0 : 2.0;
}

// Sibuya(a), P(k) = (-1)^{k+1} binom(a, k), by Hofert's inversion.
double sibuya(std::mt19937_64& rng, double a, double gamma_1_a) {
  const double u = open_uniform(rng);
  if (u <= a) return 1.0;
  const double ginv = std::pow((1.0 - u) * gamma_1_a, -1.0 / a);
  const double fl = std::floor(ginv);
  if (ginv > 1.0 / std::numeric_limits<double>::epsilon()) return fl;
  const double log_beta = std::lgamma(fl) + std::lgamma(1.0 - a) - std::lgamma(fl + 1.0 - a);
  if (1.0 - u < std::exp(-std::log(fl) - log_beta)) return std::ceil(ginv);
  return fl;
}

}  // namespace

const char* frailty_law_name(FrailtyLaw law) {
  switch (law) {
    case FrailtyLaw::gamma: return "gamma";
    case FrailtyLaw::gamma_scaled: return "gamma_scaled";
    case FrailtyLaw::positive_stable: return "positive_stable";
    case FrailtyLaw::logarithmic_series: return "logarithmic_series";
    case FrailtyLaw::sibuya: return "sibuya";
    case FrailtyLaw::geometric: return "geometric";
  }
  return "?";
}

bool has_frailty_law(const CopulaModel& model) {
  switch (model.family()) {
    case Family::clayton:
    case Family::mv_clayton:
    case Family::frank:
    case Family::mv_frank:
    case Family::gumbel:
    case Family::mv_gumbel:
    case Family::joe:
    case Family::mv_joe: return true;
    case Family::amh: return model.theta() >= 0.0;
    default: return false;
  }
}

FrailtySampler::FrailtySampler(const CopulaModel& model) : theta_(model.theta()) {
  if (!has_frailty_law(model)) {
    throw Error(ErrorCode::unsupported,
                "no frailty law for " + model.describe() + " (generator is not a Laplace transform)");
  }
  switch (model.family()) {
    case Family::clayton: law_ = FrailtyLaw::gamma; break;
    case Family::mv_clayton: law_ = FrailtyLaw::gamma_scaled; break;
    case Family::frank:
    case Family::mv_frank: law_ = FrailtyLaw::logarithmic_series; break;
    case Family::gumbel:
    case Family::mv_gumbel: law_ = FrailtyLaw::positive_stable; break;
    case Family::joe:
    case Family::mv_joe:
      law_ = FrailtyLaw::sibuya;
      aux_ = theta_ > 1.0 ? std::tgamma(1.0 - 1.0 / theta_) : 0.0;
      break;
    default: law_ = FrailtyLaw::geometric; break;
  }
}

double FrailtySampler::draw(std::mt19937_64& rng) const {
  switch (law_) {
    case FrailtyLaw::gamma: return gamma_draw(rng, 1.0 / theta_);
    case FrailtyLaw::gamma_scaled: return theta_ * gamma_draw(rng, 1.0 / theta_);
    case FrailtyLaw::positive_stable: return positive_stable(rng, 1.0 / theta_);
    case FrailtyLaw::logarithmic_series: return log_series(rng, theta_);
    case FrailtyLaw::sibuya: return theta_ > 1.0 ? sibuya(rng, 1.0 / theta_, aux_) : 1.0;
    case FrailtyLaw::geometric: {
      // P(k) = (1 - theta) theta^{k-1}, k >= 1; Exp(1) at theta = 1.
      const double e = -std::log(open_uniform(rng));
      if (theta_ >= 1.0) return e;
      if (theta_ <= 0.0) return 1.0;
      return 1.0 + std::floor(e / -std::log(theta_));
    }
  }
  return 1.0;
}

SampleMatrix sample_frailty(const CopulaModel& model, std::int64_t count, std::uint64_t seed) {
  check_count(count);
  const FrailtySampler frailty(model);
  const ArchimedeanGenerator gen = generator(model);
  const auto d = static_cast<std::size_t>(model.dim());
  SampleMatrix out(static_cast<std::size_t>(count), d);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    const double alpha = frailty.draw(rng);
    for (std::size_t j = 0; j < d; ++j) {
      const double e = -std::log(open_uniform(rng));
      out(i, j) = clip(gen.psi(e / alpha));
    }
  }
  return out;
}

namespace {

// Solves log|psi'(t_u + t)| - log|psi'(t_u)| = log w for y = log t by Newton
// with a bisection safeguard; returns v = psi(t).
double archimedean_inverse(const ArchimedeanGenerator& gen, double u, double w) {
  const double tu = std::max(gen.psi_inverse(u), std::numeric_limits<double>::min());
  const double base = gen.log_abs_derivative(1, tu);
  const double log_w = std::log(w);
  auto residual = [&](double y, double* slope) {
    const double t = std::exp(y);
    const double s = tu + t;
    const auto c = gen.scaled_taylor(s, 2);  // c1 = psi' s, c2 = psi'' s^2 / 2
    const double g = std::log(std::abs(c[1])) - std::log(s) - base - log_w;
    *slope = t * 2.0 * c[2] / (c[1] * s);
    return g;
  };
  double lo = -700.0;
  double hi = 700.0;
  double y = std::log(std::max(gen.psi_inverse(w), 1e-300));
  y = std::clamp(y, lo + 1.0, hi - 1.0);
  for (int iter = 0; iter < 200; ++iter) {
    double slope = 0.0;
    const double g = residual(y, &slope);
    if (!std::isfinite(g)) {
      hi = y;  // derivative underflow: t is far beyond the root
      y = 0.5 * (lo + hi);
      continue;
    }
    if (g > 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    if (std::abs(g) < 1e-14) break;
    // Flat stretches (t << t_u) give huge Newton steps; cap them.
    double next = y - std::clamp(g / slope, -20.0, 20.0);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - y) < 1e-13 * std::max(1.0, std::abs(y)) || hi - lo < 1e-13;
    y = next;
    if (done) break;
  }
  return gen.psi(std::exp(y));
}

// Bisection in logit(v) on the analytic conditional cdf.
double bisection_inverse(const CopulaModel& model, double u, double w) {
  double lo = std::log(kLo / kHi);
  double hi = -lo;
  for (int iter = 0; iter < 200 && hi - lo > 1e-11; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double v = 1.0 / (1.0 + std::exp(-mid));
    if (conditional_cdf(model, u, v) < w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 / (1.0 + std::exp(-0.5 * (lo + hi)));
}

}  // namespace

double conditional_inverse(const CopulaModel& model, double u, double w) {
  if (model.dim() != 2) throw Error(ErrorCode::shape, "conditional inversion needs d = 2");
  if (!(u > 0.0 && u < 1.0 && w > 0.0 && w < 1.0)) {
    throw Error(ErrorCode::domain, "conditional inversion needs u, w in (0,1)");
  }
  u = clip(u);
  const double th = model.theta();
  switch (model.family()) {
    case Family::independence: return w;
    case Family::fgm: {
      const double a = th * (1.0 - 2.0 * u);
      if (std::abs(a) < 1e-12) return w;
      const double b = 1.0 + a;
      return 2.0 * w / (b + std::sqrt(b * b - 4.0 * a * w));
    }
    case Family::clayton:
    case Family::mv_clayton: {
      // v^{-theta} - 1 = (w^{-theta/(1+theta)} - 1) u^{-theta}
      const double a = std::expm1(-th / (1.0 + th) * std::log(w));
      return std::exp(-std::log1p(a * std::exp(-th * std::log(u))) / th);
    }
    case Family::frank: {
      // e^{-theta v} = (e^{-theta u}(1-w) + w e^{-theta}) / (e^{-theta u}(1-w) + w)
      const double a = -th * u + std::log1p(-w);
      const double lw = std::log(w);
      const double top = std::max(a, lw - th) + std::log1p(std::exp(-std::abs(a - lw + th)));
      const double bot = std::max(a, lw) + std::log1p(std::exp(-std::abs(a - lw)));
      return (bot - top) / th;
    }
    case Family::gaussian: {
      const double x = normal_quantile(u);
      const double z = normal_quantile(w);
      return normal_cdf(th * x + std::sqrt((1.0 - th) * (1.0 + th)) * z);
    }
    case Family::student_t: {
      const double nu = model.nu();
      const StudentT t(nu);
      const double x = t.quantile(u);
      const double z = StudentT(nu + 1.0).quantile(w);
      const double scale = std::sqrt((nu + x * x) * (1.0 - th) * (1.0 + th) / (nu + 1.0));
      return t.cdf(th * x + scale * z);
    }
    case Family::bb2:
    case Family::nelsen_4_19: return bisection_inverse(model, u, w);
    default: break;
  }
  return archimedean_inverse(generator(model), u, w);
}

SampleMatrix sample(const CopulaModel& model, std::int64_t count, std::uint64_t seed) {
  check_count(count);
  const auto d = static_cast<std::size_t>(model.dim());
  SampleMatrix out(static_cast<std::size_t>(count), d);
  std::mt19937_64 rng(seed);
  const double th = model.theta();
  switch (model.family()) {
    case Family::independence:
      for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < d; ++j) out(i, j) = clip(open_uniform(rng));
      }
      return out;
    case Family::gaussian: {
      const double s = std::sqrt((1.0 - th) * (1.0 + th));
      for (std::size_t i = 0; i < out.rows(); ++i) {
        const double z1 = std_normal(rng);
        const double z2 = std_normal(rng);
        out(i, 0) = clip(normal_cdf(z1));
        out(i, 1) = clip(normal_cdf(th * z1 + s * z2));
      }
      return out;
    }
    case Family::student_t: {
      const double nu = model.nu();
      const StudentT t(nu);
      const double s = std::sqrt((1.0 - th) * (1.0 + th));
      for (std::size_t i = 0; i < out.rows(); ++i) {
        const double z1 = std_normal(rng);
        const double z2 = std_normal(rng);
        const double chi2 = 2.0 * gamma_draw(rng, 0.5 * nu);
        const double k = std::sqrt(nu / chi2);
        out(i, 0) = clip(t.cdf(k * z1));
        out(i, 1) = clip(t.cdf(k * (th * z1 + s * z2)));
      }
      return out;
    }
    default: break;
  }
  if (d > 2) return sample_frailty(model, count, seed);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    const double u = open_uniform(rng);
    const double w = open_uniform(rng);
    out(i, 0) = clip(u);
    out(i, 1) = clip(conditional_inverse(model, u, w));
  }
  return out;
}

std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

SampleMatrix pseudo_observations(const Matrix& data) {
  if (data.rows() < 2) throw Error(ErrorCode::count, "pseudo-observations need at least 2 rows");
  SampleMatrix out(data.rows(), data.cols());
  const double scale = 1.0 / static_cast<double>(data.rows() + 1);
  for (std::size_t j = 0; j < data.cols(); ++j) {
    const auto col = data.column(j);
    for (double x : col) {
      if (!std::isfinite(x)) throw Error(ErrorCode::degenerate_data, "non-finite value in column " + std::to_string(j + 1));
    }
    const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
    if (*mn == *mx) {
      throw Error(ErrorCode::degenerate_data, "column " + std::to_string(j + 1) + " is constant");
    }
    const auto ranks = average_ranks(col);
    for (std::size_t i = 0; i < data.rows(); ++i) out(i, j) = ranks[i] * scale;
  }
  return out;
}

}  // namespace copula_lab
