#include "copula_lab/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "copula_lab/copula.hpp"
#include "copula_lab/error.hpp"
#include "copula_lab/quadrature.hpp"
#include "copula_lab/sampling.hpp"

namespace copula_lab {

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::count, "percentile of an empty set");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

EntropyEstimate summarize_repetitions(std::vector<double> rep_values) {
  if (rep_values.empty()) throw Error(ErrorCode::count, "no repetitions to summarize");
  EntropyEstimate e;
  e.point_value = rep_values.front();
  e.mean = std::accumulate(rep_values.begin(), rep_values.end(), 0.0) /
           static_cast<double>(rep_values.size());
  e.lo95 = percentile(rep_values, 0.025);
  e.hi95 = percentile(rep_values, 0.975);
  e.rep_values = std::move(rep_values);
  return e;
}

namespace {

void check_sample(const CopulaModel& model, const SampleMatrix& sample) {
  if (static_cast<int>(sample.cols()) != model.dim()) {
    throw Error(ErrorCode::shape, "sample has " + std::to_string(sample.cols()) +
                                      " columns, model dimension is " + std::to_string(model.dim()));
  }
  if (sample.rows() == 0) throw Error(ErrorCode::count, "empty sample");
}

void check_comparable(const CopulaModel& p, const CopulaModel& q) {
  if (p.family() != q.family() || p.dim() != q.dim()) {
    throw Error(ErrorCode::comparison, "models differ in family or dimension: " + p.describe() +
                                           " vs " + q.describe());
  }
}

// Mean and standard error of f(row) via Welford's update.
template <class F>
MonteCarloEstimate mean_of(const SampleMatrix& sample, F&& f) {
  double mean = 0.0;
  double m2 = 0.0;
  const std::size_t n = sample.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f(sample.row(i));
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace

MonteCarloEstimate mutual_information_estimate(const CopulaModel& model, const SampleMatrix& sample) {
  check_sample(model, sample);
  if (model.family() == Family::independence) return {0.0, 0.0, sample.rows()};
  return mean_of(sample, [&](std::span<const double> row) { return log_density(model, row); });
}

MonteCarloEstimate entropy_estimate(const CopulaModel& model, const SampleMatrix& sample) {
  auto e = mutual_information_estimate(model, sample);
  e.value = -e.value;
  return e;
}

double empirical_entropy(const CopulaModel& model, const SampleMatrix& sample) {
  return entropy_estimate(model, sample).value;
}

double mutual_information(const CopulaModel& model, const SampleMatrix& sample) {
  return -empirical_entropy(model, sample);
}

MonteCarloEstimate kl_estimate(const CopulaModel& p, const CopulaModel& q, const SampleMatrix& sample) {
  check_comparable(p, q);
  check_sample(p, sample);
  if (p.params().theta == q.params().theta && p.params().delta == q.params().delta &&
      p.params().nu == q.params().nu) {
    return {0.0, 0.0, sample.rows()};
  }
  return mean_of(sample, [&](std::span<const double> row) {
    return log_density(p, row) - log_density(q, row);
  });
}

double kl_divergence(const CopulaModel& p, const CopulaModel& q, const SampleMatrix& sample) {
  return kl_estimate(p, q, sample).value;
}

namespace {

constexpr double kQuadEps = 1e-6;

struct LogitNodes {
  std::vector<double> u;
  std::vector<double> w;  // Gauss-Legendre weight times du/dx
};

// n Gauss-Legendre nodes on [logit eps, logit(1 - eps)], mapped to u.
LogitNodes logit_nodes(int n) {
  const double a = std::log(kQuadEps / (1.0 - kQuadEps));
  const auto rule = gauss_legendre(n, a, -a);
  LogitNodes out;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 1.0 / (1.0 + std::exp(-rule.nodes[i]));
    out.u.push_back(u);
    out.w.push_back(rule.weights[i] * u * (1.0 - u));
  }
  return out;
}

// log c on the tensor grid of `nodes`; elliptical scores are computed once per axis.
class GridLogDensity {
 public:
  GridLogDensity(const CopulaModel& model, const LogitNodes& nodes) : model_(model), nodes_(nodes) {
    if (is_elliptical(model.family())) {
      for (double u : nodes.u) scores_.push_back(elliptical_score(model, u));
    }
  }
  double operator()(std::size_t i, std::size_t j) const {
    if (!scores_.empty()) return elliptical_log_density_scores(model_, scores_[i], scores_[j]);
    const double pt[2] = {nodes_.u[i], nodes_.u[j]};
    return log_density(model_, pt);
  }

 private:
  const CopulaModel& model_;
  const LogitNodes& nodes_;
  std::vector<double> scores_;
};

template <class F>
double tensor_sum(const LogitNodes& nodes, F&& f) {
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.u.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nodes.u.size(); ++j) row += nodes.w[j] * f(i, j);
    total += nodes.w[i] * row;
  }
  return total;
}

// Doubles the node count from 256 until successive values differ by < 1e-4.
template <class Rule>
QuadratureResult converge(Rule&& rule, int max_nodes) {
  QuadratureResult r;
  r.nodes = 256;
  r.value = rule(r.nodes);
  while (r.nodes < max_nodes) {
    const int next = 2 * r.nodes;
    const double value = rule(next);
    r.change = std::abs(value - r.value);
    r.value = value;
    r.nodes = next;
    if (r.change < 1e-4) return r;
  }
  r.change = std::numeric_limits<double>::infinity();
  return r;
}

void require_bivariate(const CopulaModel& model, const char* what) {
  if (model.dim() != 2) {
    throw Error(ErrorCode::unsupported, std::string(what) + " is bivariate only (Monte Carlo in higher dimension)");
  }
}

// -int c log c in (u, v): no dependence on the sampler, so it is an
// independent check of the Monte Carlo estimator.
double entropy_direct(const CopulaModel& model, int n) {
  const auto nodes = logit_nodes(n);
  const GridLogDensity lc(model, nodes);
  return tensor_sum(nodes, [&](std::size_t i, std::size_t j) {
    const double l = lc(i, j);
    return -std::exp(l) * l;
  });
}

// Same integral in conditional coordinates (u, w = h(v | u)), where it reads
// -int log c(u, h^{-1}(w | u)) du dw. The integrand no longer carries c, which
// matters when the density is concentrated on a thin ridge.
double entropy_conditional(const CopulaModel& model, int n) {
  const auto nodes = logit_nodes(n);
  return tensor_sum(nodes, [&](std::size_t i, std::size_t j) {
    const double u = nodes.u[i];
    const double pt[2] = {u, conditional_inverse(model, u, nodes.u[j])};
    return -log_density(model, pt);
  });
}

}  // namespace

QuadratureResult entropy_quadrature_detail(const CopulaModel& model) {
  require_bivariate(model, "entropy quadrature");
  if (model.family() == Family::independence) return {0.0, 256, 0.0, "direct"};
  auto r = converge([&](int n) { return entropy_direct(model, n); }, 2048);
  if (std::isfinite(r.change) && std::isfinite(r.value)) return r;
  r = converge([&](int n) { return entropy_conditional(model, n); }, 1024);
  r.method = "conditional";
  if (!std::isfinite(r.change) || !std::isfinite(r.value)) {
    throw Error(ErrorCode::numeric, "entropy quadrature did not converge for " + model.describe());
  }
  return r;
}

double entropy_quadrature(const CopulaModel& model) { return entropy_quadrature_detail(model).value; }

double kl_quadrature(const CopulaModel& p, const CopulaModel& q) {
  check_comparable(p, q);
  require_bivariate(p, "KL quadrature");
  const auto r = converge(
      [&](int n) {
        const auto nodes = logit_nodes(n);
        const GridLogDensity lp(p, nodes), lq(q, nodes);
        return tensor_sum(nodes, [&](std::size_t i, std::size_t j) {
          const double a = lp(i, j);
          return std::exp(a) * (a - lq(i, j));
        });
      },
      2048);
  if (!std::isfinite(r.change)) throw Error(ErrorCode::numeric, "KL quadrature did not converge");
  return r.value;
}

double spearman_analytic(const CopulaModel& model) {
  require_bivariate(model, "analytic Spearman rho");
  if (model.family() == Family::independence) return 0.0;
  auto integral = [&](int n) {
    const auto rule = gauss_legendre(n, 0.0, 1.0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        const double pt[2] = {rule.nodes[static_cast<std::size_t>(i)], rule.nodes[static_cast<std::size_t>(j)]};
        row += rule.weights[static_cast<std::size_t>(j)] * cdf(model, pt);
      }
      total += rule.weights[static_cast<std::size_t>(i)] * row;
    }
    return total;
  };
  int n = 32;
  double prev = integral(n);
  while (n < 1024) {
    n *= 2;
    const double next = integral(n);
    const bool done = std::abs(next - prev) < 1e-10;
    prev = next;
    if (done) break;
  }
  return std::clamp(12.0 * prev - 3.0, -1.0, 1.0);
}

double spearman_ranks(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::shape, "columns differ in length");
  if (x.size() < 3) throw Error(ErrorCode::count, "Spearman rho needs at least 3 rows");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double a = rx[i] - mean;
    const double b = ry[i] - mean;
    sxy += a * b;
    sxx += a * a;
    syy += b * b;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::degenerate_data, "constant column");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman_sample(const SampleMatrix& sample, std::size_t col_i, std::size_t col_j) {
  if (col_i >= sample.cols() || col_j >= sample.cols()) throw Error(ErrorCode::shape, "column index out of range");
  return spearman_ranks(sample.column(col_i), sample.column(col_j));
}

namespace {

// Counts inversions of v while merge-sorting it.
std::uint64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += mid - i;
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

// Number of tied pairs among consecutive equal runs of a sorted sequence.
template <class Eq>
std::uint64_t tied_pairs(std::size_t n, Eq&& eq) {
  std::uint64_t total = 0;
  std::uint64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (eq(i - 1, i)) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total + run * (run - 1) / 2;
}

}  // namespace

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::shape, "columns differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorCode::count, "Kendall tau needs at least 2 rows");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });
  const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t n1 = tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[idx[a]] == x[idx[b]]; });
  const std::uint64_t n3 = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[idx[a]] == x[idx[b]] && y[idx[a]] == y[idx[b]];
  });
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  std::vector<double> buf(n);
  const std::uint64_t swaps = merge_count(ys, buf, 0, n);
  const std::uint64_t n2 = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });
  if (n1 == n0 || n2 == n0) throw Error(ErrorCode::degenerate_data, "constant column");
  const double concordant_minus_discordant =
      static_cast<double>(n0) - static_cast<double>(n1) - static_cast<double>(n2) +
      static_cast<double>(n3) - 2.0 * static_cast<double>(swaps);
  const double denom = std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2));
  return std::clamp(concordant_minus_discordant / denom, -1.0, 1.0);
}

double kendall_sample(const SampleMatrix& sample, std::size_t col_i, std::size_t col_j) {
  if (col_i >= sample.cols() || col_j >= sample.cols()) throw Error(ErrorCode::shape, "column index out of range");
  return kendall_tau(sample.column(col_i), sample.column(col_j));
}

}  // namespace copula_lab
