#include "copula_lab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "copula_lab/error.hpp"
#include "copula_lab/sampling.hpp"

namespace copula_lab {

namespace {

struct Rect {
  int i, k, j, l;  // u_i < u_k, v_j < v_l
};

// All rectangles if they fit the budget; otherwise the adjacent ones (which
// tile every other rectangle) followed by seeded random ones.
std::vector<Rect> grid_rectangles(int n, const GridSpec& grid) {
  const std::size_t per_axis = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<Rect> out;
  if (per_axis * per_axis <= grid.pair_budget) {
    out.reserve(per_axis * per_axis);
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        for (int j = 0; j < n; ++j)
          for (int l = j + 1; l < n; ++l) out.push_back({i, k, j, l});
    return out;
  }
  out.reserve(grid.pair_budget);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) out.push_back({i, i + 1, j, j + 1});
  std::mt19937_64 rng(grid.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  auto ordered_pair = [&] {
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  while (out.size() < grid.pair_budget) {
    const auto [i, k] = ordered_pair();
    const auto [j, l] = ordered_pair();
    out.push_back({i, k, j, l});
  }
  return out;
}

// log c on the tensor grid, row index = u.
std::vector<double> log_density_grid(const std::function<double(double, double)>& f,
                                     const std::vector<double>& axis) {
  const std::size_t n = axis.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = f(axis[i], axis[j]);
      if (std::isnan(v)) {
        std::ostringstream os;
        os << "log density is NaN at (" << axis[i] << ", " << axis[j] << ")";
        throw Error(ErrorCode::numeric, os.str());
      }
      out[i * n + j] = v;
    }
  }
  return out;
}

std::function<double(double, double)> model_log_kernel(const CopulaModel& model) {
  if (model.dim() != 2) throw Error(ErrorCode::unsupported, "pair checks need a bivariate model");
  return [model](double u, double v) {
    const double pt[2] = {u, v};
    return log_density(model, pt);
  };
}

enum class PairForm { lattice, rectangle };

PropertyReport pair_check(const std::string& name, const std::function<double(double, double)>& f,
                          const GridSpec& grid, double tol, Dependence dir, PairForm form) {
  grid.validate();
  const auto axis = grid.axis();
  const int n = grid.resolution;
  const auto L = log_density_grid(f, axis);
  auto at = [&](int a, int b) { return L[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]; };

  PropertyReport r;
  r.property = name;
  r.tolerance = tol;
  const double sign = dir == Dependence::positive ? -1.0 : 1.0;
  const auto rects = grid_rectangles(n, grid);
  const Rect* worst = nullptr;
  for (const auto& q : rects) {
    double diff;
    if (form == PairForm::lattice) {
      // x = (u_i, v_l) and y = (u_k, v_j) are incomparable.
      const int xu = q.i, xv = q.l, yu = q.k, yv = q.j;
      const int ju = std::max(xu, yu), jv = std::max(xv, yv);
      const int mu = std::min(xu, yu), mv = std::min(xv, yv);
      diff = (at(ju, jv) + at(mu, mv)) - (at(xu, xv) + at(yu, yv));
    } else {
      diff = (at(q.k, q.l) + at(q.i, q.j)) - (at(q.i, q.l) + at(q.k, q.j));
    }
    double v = sign * diff;
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();  // inf - inf on the grid
    if (v > r.worst_violation) {
      r.worst_violation = v;
      worst = &q;
    }
  }
  r.pairs_tested = rects.size();
  r.passed = r.worst_violation <= tol;
  if (worst) {
    r.worst_location = {axis[static_cast<std::size_t>(worst->i)], axis[static_cast<std::size_t>(worst->j)],
                        axis[static_cast<std::size_t>(worst->k)], axis[static_cast<std::size_t>(worst->l)]};
  }
  return r;
}

void tag_model(PropertyReport& r, const CopulaModel& m) {
  r.model = m.describe();
  r.params = m.param_string();
}

double relative_violation(double value, double sign, double scale) {
  const double v = -sign * value / scale;
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

// Grid points for cdf comparisons: the full tensor grid in 2-d, seeded lattice
// points in higher dimensions.
std::vector<std::vector<double>> cdf_points(const GridSpec& grid, int dim, std::size_t cap) {
  const auto axis = grid.axis();
  std::vector<std::vector<double>> out;
  if (dim == 2) {
    for (double u : axis)
      for (double v : axis) out.push_back({u, v});
    return out;
  }
  std::mt19937_64 rng(grid.seed);
  std::uniform_int_distribution<std::size_t> pick(0, axis.size() - 1);
  for (std::size_t s = 0; s < cap; ++s) {
    std::vector<double> p(static_cast<std::size_t>(dim));
    for (auto& x : p) x = axis[pick(rng)];
    out.push_back(std::move(p));
  }
  return out;
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments moments(const std::vector<double>& x) {
  Moments m;
  const double n = static_cast<double>(x.size());
  m.mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - m.mean) * (v - m.mean);
  m.var = x.size() > 1 ? ss / (n - 1.0) : 0.0;
  return m;
}

std::vector<double> log_densities(const CopulaModel& model, const SampleMatrix& s) {
  std::vector<double> out(s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r) out[r] = log_density(model, s.row(r));
  return out;
}

double se_units(double excess, double se) {
  if (se > 0.0) return excess / se;
  return excess > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 4) throw Error(ErrorCode::grid, "grid resolution must be at least 4");
  if (!(lo > 0.0 && lo < hi && hi < 1.0)) throw Error(ErrorCode::grid, "grid bounds must satisfy 0 < lo < hi < 1");
  if (pair_budget == 0) throw Error(ErrorCode::grid, "pair budget must be positive");
}

std::vector<double> GridSpec::axis() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (resolution - 1);
  return out;
}

PropertyReport check_tp2_kernel(const std::string& name, const std::function<double(double, double)>& log_kernel,
                                const GridSpec& grid, double tol, Dependence dir) {
  auto r = pair_check(dir == Dependence::positive ? "tp2" : "rr2", log_kernel, grid, tol, dir, PairForm::lattice);
  r.model = name;
  return r;
}

PropertyReport check_tp2(const CopulaModel& model, const GridSpec& grid, double tol, Dependence dir) {
  auto r = pair_check(dir == Dependence::positive ? "tp2" : "rr2", model_log_kernel(model), grid, tol, dir,
                      PairForm::lattice);
  tag_model(r, model);
  return r;
}

PropertyReport check_supermodular_logdensity(const CopulaModel& model, const GridSpec& grid, double tol,
                                             Dependence dir) {
  auto r = pair_check(dir == Dependence::positive ? "supermodular_log_density" : "submodular_log_density",
                      model_log_kernel(model), grid, tol, dir, PairForm::rectangle);
  tag_model(r, model);
  return r;
}

PropertyReport check_pqd_order(const CopulaModel& model_lo, const CopulaModel& model_hi, const GridSpec& grid,
                               double tol) {
  if (model_lo.family() != model_hi.family() || model_lo.dim() != model_hi.dim()) {
    throw Error(ErrorCode::comparison, "PQD comparison needs one family and dimension: " + model_lo.describe() +
                                           " vs " + model_hi.describe());
  }
  grid.validate();
  PropertyReport r;
  r.property = "pqd_order";
  r.model = model_lo.describe() + " <= " + model_hi.describe();
  r.params = model_lo.param_string() + " <= " + model_hi.param_string();
  r.tolerance = tol;
  const auto points = cdf_points(grid, model_lo.dim(), std::min<std::size_t>(grid.pair_budget, 4096));
  for (const auto& p : points) {
    const double v = cdf(model_lo, p) - cdf(model_hi, p);
    if (v > r.worst_violation) {
      r.worst_violation = v;
      r.worst_location = p;
    }
  }
  r.pairs_tested = points.size();
  r.passed = r.worst_violation <= tol;
  return r;
}

std::vector<double> default_t_grid() {
  std::vector<double> out;
  for (int i = 0; i <= 60; ++i) out.push_back(std::pow(10.0, -3.0 + 0.1 * i));
  return out;
}

PropertyReport check_completely_monotone(const ArchimedeanGenerator& gen, int max_order,
                                         const std::vector<double>& t_grid, double tol) {
  if (max_order < 2) throw Error(ErrorCode::parameter, "complete monotonicity needs order K >= 2");
  if (max_order > Jet::kMaxOrder) throw Error(ErrorCode::parameter, "derivative order too large");
  PropertyReport r;
  r.property = "completely_monotone";
  r.model = gen.describe();
  r.tolerance = tol;
  auto record = [&](double v, std::vector<double> loc) {
    if (v > r.worst_violation) {
      r.worst_violation = v;
      r.worst_location = std::move(loc);
    }
  };
  record(std::abs(gen.psi(0.0) - 1.0), {0.0, 0.0});
  std::size_t underflow = 0;
  for (double t : t_grid) {
    if (!(t > 0.0)) continue;
    const auto c = gen.scaled_taylor(t, max_order);
    for (double x : c) {
      if (!std::isfinite(x)) {
        std::ostringstream os;
        os << "generator derivative overflow for " << gen.describe() << " at t=" << t;
        throw Error(ErrorCode::numeric, os.str());
      }
    }
    if (c[0] <= 0.0) {
      ++underflow;
      continue;
    }
    for (int k = 1; k <= max_order; ++k) {
      const double sign = (k % 2) ? -1.0 : 1.0;
      record(relative_violation(c[static_cast<std::size_t>(k)], sign, c[0]), {t, static_cast<double>(k)});
      ++r.pairs_tested;
    }
  }
  if (underflow) r.detail = std::to_string(underflow) + " grid points skipped (psi underflow)";
  r.passed = r.worst_violation <= tol;
  return r;
}

PropertyReport check_lstar(const UnivariateMap& comp, int max_order, const std::vector<double>& t_grid,
                           double tol) {
  if (max_order < 2) throw Error(ErrorCode::parameter, "L* check needs order K >= 2");
  if (max_order > Jet::kMaxOrder) throw Error(ErrorCode::parameter, "derivative order too large");
  PropertyReport r;
  r.property = "lstar";
  r.model = comp.name;
  r.tolerance = tol;
  auto record = [&](double v, std::vector<double> loc) {
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    if (v > r.worst_violation) {
      r.worst_violation = v;
      r.worst_location = std::move(loc);
    }
  };
  record(std::abs(comp.value(0.0)), {0.0, 0.0});
  std::vector<double> grid;
  for (double t : t_grid)
    if (t > 0.0) grid.push_back(t);
  std::sort(grid.begin(), grid.end());
  double prev = comp.value(0.0);
  for (double t : grid) {
    const double cur = comp.value(t);
    record((prev - cur) / std::max(1.0, std::abs(cur)), {t, 0.0});
    prev = cur;
  }
  if (!grid.empty()) {
    // phi(inf) = inf: the map keeps growing far beyond the grid.
    const double far = comp.value(grid.back() * 1e6);
    if (!(far > prev)) record(std::numeric_limits<double>::infinity(), {grid.back() * 1e6, 0.0});
  }
  for (double t : grid) {
    std::vector<double> c;
    if (comp.scaled_taylor) {
      c = comp.scaled_taylor(t, max_order);
    } else {
      c.push_back(comp.value(t));
      for (int k = 1; k <= max_order; ++k)
        c.push_back(map_derivative(comp, k, t) * std::exp(k * std::log(t) - std::lgamma(k + 1.0)));
    }
    for (double x : c) {
      if (!std::isfinite(x)) {
        std::ostringstream os;
        os << "derivative overflow for " << comp.name << " at t=" << t;
        throw Error(ErrorCode::numeric, os.str());
      }
    }
    const double scale = std::max(1.0, std::abs(c[0]));
    for (int k = 1; k <= max_order; ++k) {
      const double sign = (k % 2) ? 1.0 : -1.0;
      record(relative_violation(c[static_cast<std::size_t>(k)], sign, scale), {t, static_cast<double>(k)});
      ++r.pairs_tested;
    }
  }
  r.passed = r.worst_violation <= tol;
  return r;
}

PropertyReport check_kl_chain(const CopulaModel& base, double theta1, double theta2, std::int64_t samples,
                              std::uint64_t seed, KlChain* chain) {
  if (theta1 > theta2) throw Error(ErrorCode::ordering, "KL chain needs theta1 <= theta2");
  if (samples < 2) throw Error(ErrorCode::count, "KL chain needs at least 2 samples");
  double weak = theta1, strong = theta2;
  if (is_sign_symmetric_family(base.family())) {
    if (theta1 < 0.0 && theta2 > 0.0) {
      throw Error(ErrorCode::comparison, "parameters on both sides of 0 are not ordered in |theta|");
    }
    if (theta2 <= 0.0) std::swap(weak, strong);
  }
  const CopulaModel m1 = base.with_theta(weak);
  const CopulaModel m2 = base.with_theta(strong);
  const auto s1 = sample(m1, samples, derive_seed(seed, 1));
  const auto s2 = sample(m2, samples, derive_seed(seed, 2));
  const auto a = log_densities(m1, s1);
  const auto b = log_densities(m1, s2);
  auto d = log_densities(m2, s2);
  const auto ma = moments(a), mb = moments(b), md = moments(d);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  const auto mdiff = moments(d);
  const double n = static_cast<double>(samples);

  KlChain k;
  k.a = ma.mean;
  k.b = mb.mean;
  k.d = md.mean;
  k.se_ab = std::sqrt(ma.var / n + mb.var / n);
  k.se_bd = std::sqrt(mdiff.var / n);
  if (chain) *chain = k;

  PropertyReport r;
  r.property = "kl_chain";
  r.model = m1.describe() + " <= " + m2.describe();
  r.params = m1.param_string() + " <= " + m2.param_string();
  r.tolerance = 3.0;
  r.pairs_tested = static_cast<std::size_t>(samples);
  const double v1 = se_units(k.a - k.b, k.se_ab);
  const double v2 = se_units(k.b - k.d, k.se_bd);
  r.worst_violation = std::max({0.0, v1, v2});
  if (r.worst_violation > 0.0) r.worst_location = {weak, strong};
  std::ostringstream os;
  os.precision(8);
  os << "A=" << k.a << " B=" << k.b << " D=" << k.d << " se_AB=" << k.se_ab << " se_BD=" << k.se_bd;
  r.detail = os.str();
  r.passed = r.worst_violation <= r.tolerance;
  return r;
}

PropertyReport check_mixture_identity(const CopulaModel& model, const GridSpec& grid, double tol,
                                      std::int64_t samples, std::uint64_t seed) {
  if (!has_frailty_law(model)) {
    throw Error(ErrorCode::unsupported, "no frailty law for " + model.describe());
  }
  if (samples < 1) throw Error(ErrorCode::count, "mixture check needs samples >= 1");
  grid.validate();
  PropertyReport r;
  r.property = "mixture_identity";
  tag_model(r, model);
  r.tolerance = 1.0;
  const int d = model.dim();
  const auto gen = generator(model);

  double alg = 0.0;
  std::vector<double> alg_at;
  const auto points = cdf_points(grid, d, std::min<std::size_t>(grid.pair_budget, 4096));
  for (const auto& p : points) {
    const double v = std::abs(cdf(model, p) - archimedean_cdf(gen, p));
    if (v > alg) {
      alg = v;
      alg_at = p;
    }
  }

  const auto s = sample_frailty(model, samples, seed);
  const double m = static_cast<double>(samples);
  double sto = 0.0;
  std::vector<double> sto_at;
  const auto axis = grid.axis();
  const std::size_t n = axis.size();
  if (d == 2) {
    // counts[a][b] = #{u <= axis[a], v <= axis[b]} via a histogram and prefix sums.
    std::vector<double> h((n + 1) * (n + 1), 0.0);
    for (std::size_t i = 0; i < s.rows(); ++i) {
      const auto a = static_cast<std::size_t>(std::lower_bound(axis.begin(), axis.end(), s(i, 0)) - axis.begin());
      const auto b = static_cast<std::size_t>(std::lower_bound(axis.begin(), axis.end(), s(i, 1)) - axis.begin());
      h[a * (n + 1) + b] += 1.0;
    }
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; b <= n; ++b) {
        double acc = h[a * (n + 1) + b];
        if (a) acc += h[(a - 1) * (n + 1) + b];
        if (b) acc += h[a * (n + 1) + b - 1];
        if (a && b) acc -= h[(a - 1) * (n + 1) + b - 1];
        h[a * (n + 1) + b] = acc;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const double pt[2] = {axis[a], axis[b]};
        const double v = std::abs(h[a * (n + 1) + b] / m - cdf(model, pt));
        if (v > sto) {
          sto = v;
          sto_at = {axis[a], axis[b]};
        }
      }
  } else {
    for (const auto& p : cdf_points(grid, d, 400)) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < s.rows(); ++i) {
        bool inside = true;
        for (int j = 0; j < d && inside; ++j) inside = s(i, static_cast<std::size_t>(j)) <= p[static_cast<std::size_t>(j)];
        count += inside;
      }
      const double v = std::abs(static_cast<double>(count) / m - cdf(model, p));
      if (v > sto) {
        sto = v;
        sto_at = p;
      }
    }
  }
  const double sto_tol = 3.0 / std::sqrt(m);
  const double v_alg = alg / tol, v_sto = sto / sto_tol;
  r.worst_violation = std::max(v_alg, v_sto);
  if (r.worst_violation > 0.0) r.worst_location = v_alg >= v_sto ? alg_at : sto_at;
  r.pairs_tested = points.size();
  std::ostringstream os;
  os.precision(6);
  os << "algebraic max |C - psi(sum psi^-1)|=" << alg << " (tol " << tol << "); frailty max |F_M - C|=" << sto
     << " (tol " << sto_tol << ", law " << frailty_law_name(FrailtySampler(model).law()) << ")";
  r.detail = os.str();
  r.passed = r.worst_violation <= 1.0;
  return r;
}

bool TheoremReport::all_passed() const {
  if (conditions.empty()) return false;
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.satisfied; });
}

std::vector<PropertyReport> TheoremReport::reports() const {
  std::vector<PropertyReport> out;
  for (const auto& c : conditions) out.insert(out.end(), c.reports.begin(), c.reports.end());
  return out;
}

namespace {

bool is_multivariate_family(Family f) {
  return f == Family::mv_clayton || f == Family::mv_frank || f == Family::mv_gumbel || f == Family::mv_joe;
}

bool is_two_parameter(Family f) { return f == Family::bb1 || f == Family::bb2 || f == Family::bb6; }

class Battery {
 public:
  Battery(const std::vector<CopulaModel>& models, const VerifyOptions& opt) : models_(models), opt_(opt) {}

  double tol(double fallback) const { return opt_.tol >= 0.0 ? opt_.tol : fallback; }

  // Consecutive PQD over the chosen indices, in the given order. Cached, since
  // several conditions share it.
  void add_pqd(ConditionResult& c, const std::vector<std::size_t>& idx) {
    for (std::size_t n = 0; n + 1 < idx.size(); ++n) {
      const auto key = std::pair{idx[n], idx[n + 1]};
      auto it = pqd_.find(key);
      if (it == pqd_.end()) {
        it = pqd_.emplace(key, check_pqd_order(models_[key.first], models_[key.second], opt_.grid,
                                               tol(kAlgebraicTol)))
                 .first;
      }
      c.reports.push_back(it->second);
    }
  }

  ConditionResult condition_a(const std::vector<std::size_t>& idx, Dependence dir) {
    ConditionResult c{"a", dir == Dependence::positive ? "tp2" : "rr2", false, {}, {}};
    for (auto i : idx) c.reports.push_back(check_tp2(models_[i], opt_.grid, tol(kLogTol), dir));
    add_pqd(c, idx);
    return c;
  }

  ConditionResult condition_cm(const std::vector<std::size_t>& idx, const char* name) {
    ConditionResult c{name, "", false, {}, {}};
    for (auto i : idx) {
      auto r = check_completely_monotone(generator(models_[i]), opt_.order, default_t_grid(), tol(kAlgebraicTol));
      r.params = models_[i].param_string();
      c.reports.push_back(std::move(r));
    }
    if (models_.front().dim() == 2) add_pqd(c, idx);
    return c;
  }

  ConditionResult condition_multi_b(const std::vector<std::size_t>& idx) {
    auto c = condition_cm(idx, "multi_b");
    const Family f = models_.front().family();
    for (std::size_t n = 0; n + 1 < idx.size(); ++n) {
      const auto& lo = models_[idx[n]];
      const auto& hi = models_[idx[n + 1]];
      PropertyReport r;
      try {
        r = check_lstar(generator_composition(f, lo.theta(), hi.theta()), opt_.order, default_t_grid(),
                        tol(kAlgebraicTol));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ordering) throw;
        r.property = "lstar";
        r.model = lo.describe() + " <= " + hi.describe();
        r.passed = false;
        r.worst_violation = lo.theta() - hi.theta();
        r.worst_location = {lo.theta(), hi.theta()};
        r.detail = e.what();
      }
      r.params = lo.param_string() + " <= " + hi.param_string();
      c.reports.push_back(std::move(r));
    }
    return c;
  }

  ConditionResult condition_d(const std::vector<std::size_t>& idx) {
    ConditionResult c{"d", "", true, {}, "elliptical family; consecutive PQD reported as supporting evidence"};
    add_pqd(c, idx);
    return c;
  }

 private:
  const std::vector<CopulaModel>& models_;
  const VerifyOptions& opt_;
  std::map<std::pair<std::size_t, std::size_t>, PropertyReport> pqd_;
};

}  // namespace

TheoremReport verify_theorem_conditions(const std::vector<CopulaModel>& models, const VerifyOptions& options) {
  if (models.empty()) throw Error(ErrorCode::config, "verify needs at least one model");
  const auto& first = models.front();
  for (const auto& m : models) {
    if (m.family() != first.family() || m.dim() != first.dim() || m.params().delta != first.params().delta ||
        m.params().nu != first.params().nu) {
      throw Error(ErrorCode::comparison, "verify needs one family with fixed delta, nu and dimension");
    }
  }
  options.grid.validate();
  const Family f = first.family();
  TheoremReport out;
  out.family = f;
  Battery battery(models, options);

  std::vector<std::size_t> all(models.size()), pos, neg;
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (auto i : all) {
    if (models[i].theta() >= 0.0) pos.push_back(i);
    if (models[i].theta() <= 0.0) neg.push_back(i);
  }
  const bool bivariate = first.dim() == 2;
  auto need_bivariate = [&](const char* what) {
    if (!bivariate) throw Error(ErrorCode::unsupported, std::string(what) + " checks need a bivariate model");
  };
  auto need_generator = [&](const char* what) {
    if (!is_archimedean(f)) throw Error(ErrorCode::unsupported, std::string(what) + " checks need an Archimedean family");
  };

  switch (options.mode) {
    case VerifyMode::tp2:
      need_bivariate("TP2");
      out.conditions.push_back(battery.condition_a(all, Dependence::positive));
      break;
    case VerifyMode::rr2:
      need_bivariate("RR2");
      out.conditions.push_back(battery.condition_a(all, Dependence::negative));
      break;
    case VerifyMode::cm:
      need_generator("complete monotonicity");
      out.conditions.push_back(battery.condition_cm(all, is_two_parameter(f) ? "c" : "b"));
      break;
    case VerifyMode::lstar:
      if (!is_multivariate_family(f)) throw Error(ErrorCode::unsupported, "L* checks need an mv_* family");
      out.conditions.push_back(battery.condition_multi_b(all));
      break;
    case VerifyMode::automatic:
      switch (f) {
        case Family::independence:
          if (bivariate) out.conditions.push_back(battery.condition_a(all, Dependence::positive));
          else out.conditions.push_back({"a", "tp2", true, {}, "product density; trivially TP2"});
          break;
        case Family::gaussian:
          out.conditions.push_back(battery.condition_a(all, Dependence::positive));
          out.conditions.push_back(battery.condition_d(all));
          break;
        case Family::student_t:
          out.conditions.push_back(battery.condition_d(all));
          break;
        case Family::fgm:
          if (!pos.empty()) out.conditions.push_back(battery.condition_a(pos, Dependence::positive));
          if (!neg.empty()) out.conditions.push_back(battery.condition_a(neg, Dependence::negative));
          break;
        case Family::amh:
          if (!neg.empty()) out.conditions.push_back(battery.condition_a(neg, Dependence::negative));
          if (!pos.empty()) out.conditions.push_back(battery.condition_cm(pos, "b"));
          break;
        case Family::frank:
        case Family::gumbel:
        case Family::clayton:
          out.conditions.push_back(battery.condition_a(all, Dependence::positive));
          out.conditions.push_back(battery.condition_cm(all, "b"));
          break;
        case Family::joe:
        case Family::nelsen_4_14:
        case Family::nelsen_4_19:
          out.conditions.push_back(battery.condition_cm(all, "b"));
          break;
        case Family::bb1:
        case Family::bb2:
        case Family::bb6:
          out.conditions.push_back(battery.condition_cm(all, "c"));
          break;
        case Family::mv_clayton:
        case Family::mv_frank:
        case Family::mv_gumbel:
        case Family::mv_joe:
          out.conditions.push_back(battery.condition_multi_b(all));
          break;
      }
      break;
  }
  for (auto& c : out.conditions) {
    if (!c.reports.empty()) {
      c.satisfied = std::all_of(c.reports.begin(), c.reports.end(), [](const auto& r) { return r.passed; });
    }
  }
  return out;
}

}  // namespace copula_lab
