#include "copula_lab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "copula_lab/copula.hpp"
#include "copula_lab/error.hpp"
#include "copula_lab/sampling.hpp"

namespace copula_lab {

int worker_count() {
  if (const char* env = std::getenv("COPULA_LAB_THREADS")) {
    int n = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, n);
    if (res.ec == std::errc{} && res.ptr == end && n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(threads > 0 ? threads : worker_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i = next++; i < n && !stop; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

void ExperimentConfig::validate() const {
  if (theta_grid.empty()) throw Error(ErrorCode::config, "theta grid is empty");
  for (std::size_t i = 1; i < theta_grid.size(); ++i) {
    if (!(theta_grid[i] > theta_grid[i - 1])) throw Error(ErrorCode::config, "theta grid must be strictly increasing");
  }
  for (double t : theta_grid) {
    const auto msg = check_parameters(family, {t, delta, nu}, dim);
    if (!msg.empty()) throw Error(ErrorCode::config, msg);
  }
  if (samples < 10) throw Error(ErrorCode::config, "samples must be at least 10");
  if (reps < 1) throw Error(ErrorCode::config, "reps must be at least 1");
}

CopulaModel ExperimentConfig::model(double theta) const { return CopulaModel(family, {theta, delta, nu}, dim); }

std::uint64_t cell_seed(const ExperimentConfig& cfg, std::size_t theta_index, std::size_t rep) {
  const std::uint64_t s = derive_seed(cfg.seed, rep);
  return cfg.seed_mode == SeedMode::common ? s : derive_seed(s, theta_index + 1);
}

namespace {

double parameter_key(Family family, double theta) {
  return is_sign_symmetric_family(family) ? std::abs(theta) : theta;
}

double rank_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = (static_cast<double>(x.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

std::optional<double> monotone_fraction(Family family, const std::vector<double>& theta,
                                        const std::vector<double>& values) {
  if (theta.size() != values.size()) throw Error(ErrorCode::shape, "theta and values differ in length");
  std::size_t pairs = 0, up = 0;
  for (std::size_t i = 1; i < theta.size(); ++i) {
    const double dk = parameter_key(family, theta[i]) - parameter_key(family, theta[i - 1]);
    if (dk == 0.0) continue;
    ++pairs;
    const double dv = values[i] - values[i - 1];
    if ((dk > 0.0 && dv > 0.0) || (dk < 0.0 && dv < 0.0)) ++up;
  }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(up) / static_cast<double>(pairs);
}

double parameter_rank_correlation(Family family, const std::vector<double>& theta,
                                  const std::vector<double>& values) {
  if (theta.size() != values.size()) throw Error(ErrorCode::shape, "theta and values differ in length");
  if (theta.size() < 2) return 1.0;
  std::vector<double> key(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) key[i] = parameter_key(family, theta[i]);
  return rank_correlation(key, values);
}

MonotonicityReport run_entropy_curve(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t nt = cfg.theta_grid.size();
  const auto nr = static_cast<std::size_t>(cfg.reps);
  std::vector<CopulaModel> models;
  for (double t : cfg.theta_grid) models.push_back(cfg.model(t));
  std::vector<double> cells(nt * nr);
  parallel_for(
      nt * nr,
      [&](std::size_t k) {
        const std::size_t i = k / nr, r = k % nr;
        const auto s = sample(models[i], cfg.samples, cell_seed(cfg, i, r));
        cells[k] = mutual_information(models[i], s);
      },
      cfg.threads);

  MonotonicityReport out;
  out.theta = cfg.theta_grid;
  out.samples = cfg.samples;
  out.reps = cfg.reps;
  std::vector<double> means;
  for (std::size_t i = 0; i < nt; ++i) {
    out.neg_entropy.push_back(summarize_repetitions(
        std::vector<double>(cells.begin() + static_cast<std::ptrdiff_t>(i * nr),
                            cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * nr))));
    means.push_back(out.neg_entropy.back().mean);
  }
  const auto frac = monotone_fraction(cfg.family, out.theta, means);
  out.fraction_defined = frac.has_value();
  out.monotone_fraction = frac.value_or(1.0);
  out.rank_correlation = parameter_rank_correlation(cfg.family, out.theta, means);
  return out;
}

SweepReport run_size_sweep(const ExperimentConfig& cfg, const std::vector<std::int64_t>& sizes) {
  cfg.validate();
  if (sizes.empty()) throw Error(ErrorCode::config, "no sample sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 10 || sizes[i] > 10000000) throw Error(ErrorCode::config, "sample sizes must lie in [10, 1e7]");
    if (i && sizes[i] <= sizes[i - 1]) throw Error(ErrorCode::config, "sample sizes must be strictly increasing");
  }
  const std::size_t ns = sizes.size(), nt = cfg.theta_grid.size();
  const auto nr = static_cast<std::size_t>(cfg.reps);
  std::vector<CopulaModel> models;
  for (double t : cfg.theta_grid) models.push_back(cfg.model(t));
  std::vector<double> cells(ns * nr * nt);
  parallel_for(
      cells.size(),
      [&](std::size_t k) {
        const std::size_t s = k / (nr * nt), r = (k / nt) % nr, i = k % nt;
        ExperimentConfig c = cfg;
        c.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(sizes[s]));
        const auto smp = sample(models[i], sizes[s], cell_seed(c, i, r));
        cells[k] = mutual_information(models[i], smp);
      },
      cfg.threads);

  SweepReport out;
  out.sample_sizes = sizes;
  out.reps = cfg.reps;
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<double> fr;
    for (std::size_t r = 0; r < nr; ++r) {
      const auto first = cells.begin() + static_cast<std::ptrdiff_t>((s * nr + r) * nt);
      const std::vector<double> vals(first, first + static_cast<std::ptrdiff_t>(nt));
      fr.push_back(monotone_fraction(cfg.family, cfg.theta_grid, vals).value_or(1.0));
    }
    out.mean_monotone_fraction.push_back(std::accumulate(fr.begin(), fr.end(), 0.0) / static_cast<double>(nr));
    out.rep_fractions.push_back(std::move(fr));
  }
  return out;
}

VerifyRun run_verify(const std::vector<CopulaModel>& models, const VerifyOptions& options) {
  VerifyRun out;
  out.theorem = verify_theorem_conditions(models, options);
  out.passed = out.theorem.all_passed();
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

Table parse_csv_table(const std::string& text) {
  Table t;
  std::vector<double> values;
  std::size_t cols = 0, rows = 0, line_no = 0;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (cols == 0) {
      cols = fields.size();
      double x;
      if (!std::all_of(fields.begin(), fields.end(), [&](auto f) { return parse_double(f, x); })) {
        for (auto f : fields) t.header.emplace_back(f);
        continue;
      }
    }
    if (fields.size() != cols) {
      throw Error(ErrorCode::parse, "row " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                        " columns, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double x;
      if (!parse_double(fields[c], x)) {
        throw Error(ErrorCode::parse, "row " + std::to_string(line_no) + " column " + std::to_string(c + 1) +
                                          ": not a finite number: '" + std::string(fields[c]) + "'");
      }
      values.push_back(x);
    }
    ++rows;
  }
  t.data = Matrix(rows, cols, std::move(values));
  return t;
}

Table read_csv_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "error reading " + path);
  return parse_csv_table(ss.str());
}

double fit_theta_to_spearman(Family family, double target) {
  double lo, hi;
  switch (family) {
    case Family::gaussian: lo = 0.0; hi = 0.999999; break;
    case Family::fgm:
    case Family::amh: lo = -1.0; hi = 1.0; break;
    case Family::frank: lo = 1e-6; hi = 150.0; break;
    case Family::clayton:
    case Family::nelsen_4_19: lo = 1e-6; hi = 100.0; break;
    case Family::gumbel:
    case Family::joe:
    case Family::nelsen_4_14: lo = 1.0; hi = 100.0; break;
    default:
      throw Error(ErrorCode::unsupported, std::string("cannot fit ") + std::string(family_name(family)) +
                                              " by Spearman rho (needs a one-parameter bivariate family)");
  }
  auto rho = [&](double th) { return spearman_analytic(CopulaModel(family, {th, {}, {}})); };
  if (target <= rho(lo)) return lo;
  if (target >= rho(hi)) return hi;
  for (int it = 0; it < 60 && hi - lo > 1e-10 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (rho(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<PairRank> rank_pairs(const Matrix& data, const RankOptions& options) {
  if (data.cols() < 2) throw Error(ErrorCode::shape, "ranking needs at least 2 columns");
  if (data.rows() < 20) throw Error(ErrorCode::count, "ranking needs at least 20 rows");
  const auto pseudo = pseudo_observations(data);
  std::vector<std::vector<double>> cols;
  for (std::size_t j = 0; j < pseudo.cols(); ++j) cols.push_back(pseudo.column(j));
  std::vector<PairRank> out;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      out.push_back({i + 1, j + 1, std::abs(spearman_ranks(cols[i], cols[j])), 0, {}, {}});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.abs_spearman > b.abs_spearman; });
  if (options.top_k > 0 && out.size() > options.top_k) out.resize(options.top_k);
  for (std::size_t r = 0; r < out.size(); ++r) out[r].rank = r + 1;
  if (options.mi_family) {
    if (options.mi_samples < 10) throw Error(ErrorCode::config, "MI samples must be at least 10");
    parallel_for(
        out.size(),
        [&](std::size_t k) {
          auto& p = out[k];
          p.fitted_theta = fit_theta_to_spearman(*options.mi_family, p.abs_spearman);
          const CopulaModel m(*options.mi_family, {*p.fitted_theta, {}, {}});
          const auto s = sample(m, options.mi_samples, derive_seed(options.seed, p.col_i * 1000003u + p.col_j));
          p.mi_estimate = mutual_information(m, s);
        },
        options.threads);
  }
  return out;
}

std::vector<double> parse_grid_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw Error(ErrorCode::config, "empty grid specification");
  auto number = [&](std::string_view f) {
    double x;
    if (!parse_double(trim(f), x)) throw Error(ErrorCode::config, "bad number '" + std::string(f) + "' in grid '" + std::string(spec) + "'");
    return x;
  };
  if (spec.find(':') != std::string_view::npos) {
    const auto a = spec.find(':');
    const auto b = spec.find(':', a + 1);
    if (b == std::string_view::npos || spec.find(':', b + 1) != std::string_view::npos) {
      throw Error(ErrorCode::config, "range grid must be lo:hi:step, got '" + std::string(spec) + "'");
    }
    return make_grid(number(spec.substr(0, a)), number(spec.substr(a + 1, b - a - 1)), number(spec.substr(b + 1)));
  }
  std::vector<double> out;
  for (auto f : split_fields(spec)) out.push_back(number(f));
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string curve_csv(const MonotonicityReport& report) {
  std::string out = "theta,mean_neg_entropy,p025,p975,reps,samples\n";
  for (std::size_t i = 0; i < report.theta.size(); ++i) {
    const auto& e = report.neg_entropy[i];
    out += format_number(report.theta[i]) + ',' + format_number(e.mean) + ',' + format_number(e.lo95) + ',' +
           format_number(e.hi95) + ',' + std::to_string(report.reps) + ',' + std::to_string(report.samples) + '\n';
  }
  return out;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = "sample_size,mean_monotone_fraction,reps\n";
  for (std::size_t i = 0; i < report.sample_sizes.size(); ++i) {
    out += std::to_string(report.sample_sizes[i]) + ',' + format_number(report.mean_monotone_fraction[i]) + ',' +
           std::to_string(report.reps) + '\n';
  }
  return out;
}

std::string verify_csv(const TheoremReport& report) {
  std::string out = "property,family,params,passed,worst_violation,location\n";
  for (const auto& c : report.conditions) {
    for (const auto& r : c.reports) {
      std::string loc;
      for (std::size_t i = 0; i < r.worst_location.size(); ++i) {
        loc += (i ? " " : "") + format_number(r.worst_location[i]);
      }
      std::string prefix = c.condition + (c.branch.empty() ? "" : "_" + c.branch);
      if (!prefix.empty()) prefix += '/';
      out += prefix + r.property + ',' +
             std::string(family_name(report.family)) + ',' + r.params + ',' + (r.passed ? "true" : "false") + ',' +
             format_number(r.worst_violation) + ',' + loc + '\n';
    }
  }
  return out;
}

std::string rank_csv(const std::vector<PairRank>& ranks) {
  const bool mi = !ranks.empty() && ranks.front().mi_estimate.has_value();
  std::string out = mi ? "col_i,col_j,abs_spearman,rank,mi_estimate\n" : "col_i,col_j,abs_spearman,rank\n";
  for (const auto& p : ranks) {
    out += std::to_string(p.col_i) + ',' + std::to_string(p.col_j) + ',' + format_number(p.abs_spearman) + ',' +
           std::to_string(p.rank);
    if (mi) out += ',' + format_number(p.mi_estimate.value_or(0.0));
    out += '\n';
  }
  return out;
}

std::string sample_csv(const Matrix& sample) {
  std::string out;
  for (std::size_t j = 0; j < sample.cols(); ++j) out += (j ? ",u" : "u") + std::to_string(j + 1);
  out += '\n';
  for (std::size_t i = 0; i < sample.rows(); ++i) {
    for (std::size_t j = 0; j < sample.cols(); ++j) out += (j ? "," : "") + format_number(sample(i, j));
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::io, "error writing " + path);
}

}  // namespace copula_lab
