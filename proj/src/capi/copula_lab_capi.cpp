#include "copula_lab.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "copula_lab/copula.hpp"
#include "copula_lab/error.hpp"
#include "copula_lab/estimation.hpp"
#include "copula_lab/experiments.hpp"
#include "copula_lab/family.hpp"
#include "copula_lab/sampling.hpp"
#include "copula_lab/verification.hpp"

namespace cl = copula_lab;

struct cl_model {
  cl::CopulaModel model;
  std::string desc;
};

struct cl_matrix {
  cl::Matrix m;
};

struct cl_reports {
  cl::TheoremReport theorem;
  std::vector<std::string> conditions;  // parallel to reports
  std::vector<cl::PropertyReport> reports;
};

struct cl_curve {
  cl::MonotonicityReport report;
};

struct cl_sweep {
  cl::SweepReport report;
};

struct cl_ranking {
  std::vector<cl::PairRank> ranks;
};

namespace {

thread_local std::string last_error;

struct NullArgument {};

template <class F>
cl_status guard(F&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return CL_OK;
  } catch (const cl::Error& e) {
    last_error = e.what();
    return static_cast<cl_status>(static_cast<int>(e.code()));
  } catch (const NullArgument&) {
    last_error = "null argument";
    return CL_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CL_ERR_INTERNAL;
  }
}

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

cl::Family family_of(const char* name) {
  require(name);
  const auto f = cl::parse_family(name);
  if (!f) throw cl::Error(cl::ErrorCode::parameter, std::string("unknown family '") + name + "'");
  return *f;
}

std::optional<double> opt(const double* p) { return p ? std::optional<double>(*p) : std::nullopt; }

// The string contract shared by every *_csv function.
cl_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (!needed) {
    last_error = "null argument";
    return CL_ERR_NULL_ARGUMENT;
  }
  *needed = text.size() + 1;
  if (cap < *needed || !buf) {
    if (cap == 0 && !buf) return CL_OK;
    last_error = "buffer too small";
    return CL_ERR_SHAPE;
  }
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return CL_OK;
}

cl::GridSpec grid_of(const cl_grid* g) {
  cl::GridSpec out;
  if (g) {
    out.resolution = g->resolution;
    out.lo = g->lo;
    out.hi = g->hi;
    out.pair_budget = g->pair_budget;
    out.seed = g->seed;
  }
  return out;
}

cl_reports* single(const cl::CopulaModel& model, cl::PropertyReport r) {
  auto* out = new cl_reports;
  out->theorem.family = model.family();
  out->theorem.conditions.push_back({"", "", r.passed, {r}, ""});
  out->conditions.emplace_back();
  out->reports.push_back(std::move(r));
  return out;
}

cl::ExperimentConfig experiment_of(const cl_experiment* c) {
  require(c, c->family);
  if (c->n_thetas && !c->thetas) throw NullArgument{};
  cl::ExperimentConfig cfg;
  cfg.family = family_of(c->family);
  cfg.theta_grid.assign(c->thetas, c->thetas + c->n_thetas);
  cfg.delta = opt(c->delta);
  cfg.nu = opt(c->nu);
  cfg.dim = c->dim;
  cfg.samples = c->samples;
  cfg.reps = c->reps;
  cfg.seed = c->seed;
  cfg.seed_mode = c->seed_mode == CL_SEED_COMMON ? cl::SeedMode::common : cl::SeedMode::independent;
  cfg.threads = c->threads;
  return cfg;
}

cl::RankOptions rank_options_of(const cl_rank_options* o) {
  cl::RankOptions out;
  if (!o) return out;
  out.top_k = o->top_k;
  if (o->mi_family) out.mi_family = family_of(o->mi_family);
  out.mi_samples = o->mi_samples;
  out.seed = o->seed;
  out.threads = o->threads;
  return out;
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "0.1.0"; }

const char* cl_last_error(void) { return last_error.c_str(); }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_ERR_NULL_ARGUMENT: return "null argument";
    case CL_ERR_INTERNAL: return "internal error";
    default: break;
  }
  const int s = static_cast<int>(status);
  if (s >= 1 && s <= static_cast<int>(cl::ErrorCode::parse)) return cl::to_string(static_cast<cl::ErrorCode>(s));
  return "unknown";
}

size_t cl_family_count(void) { return cl::family_catalog().size(); }

cl_status cl_family_at(size_t index, cl_family_info* out) {
  return guard([&] {
    require(out);
    const auto cat = cl::family_catalog();
    if (index >= cat.size()) throw cl::Error(cl::ErrorCode::count, "family index out of range");
    // catalog names are string literals, so data() is NUL-terminated
    const auto& f = cat[index];
    out->name = f.name.data();
    out->theta_domain = f.theta_domain.data();
    out->needs_delta = f.needs_delta;
    out->needs_nu = f.needs_nu;
    out->multivariate = f.multivariate;
    out->archimedean = f.archimedean;
    out->grid_lo = f.default_grid.lo;
    out->grid_hi = f.default_grid.hi;
    out->grid_step = f.default_grid.step;
  });
}

cl_status cl_parse_grid(const char* spec, double* values, size_t cap, size_t* count) {
  return guard([&] {
    require(spec, count);
    const auto g = cl::parse_grid_spec(spec);
    *count = g.size();
    if (cap && !values) throw NullArgument{};
    for (size_t i = 0; i < g.size() && i < cap; ++i) values[i] = g[i];
  });
}

cl_status cl_model_create(const char* family, double theta, const double* delta, const double* nu, int dim,
                          cl_model** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    cl::CopulaModel m(family_of(family), {theta, opt(delta), opt(nu)}, dim);
    auto desc = m.describe();
    *out = new cl_model{std::move(m), std::move(desc)};
  });
}

void cl_model_free(cl_model* model) { delete model; }

const char* cl_model_describe(const cl_model* model) { return model ? model->desc.c_str() : ""; }

int cl_model_dim(const cl_model* model) { return model ? model->model.dim() : 0; }

cl_status cl_cdf(const cl_model* model, const double* point, size_t n, double* out) {
  return guard([&] {
    require(model, point, out);
    *out = cl::cdf(model->model, {point, n});
  });
}

cl_status cl_log_pdf(const cl_model* model, const double* point, size_t n, double* out, int* clamped) {
  return guard([&] {
    require(model, point, out);
    const auto r = cl::log_pdf(model->model, {point, n});
    *out = r.value;
    if (clamped) *clamped = r.clamped;
  });
}

cl_status cl_conditional_cdf(const cl_model* model, double u, double v, double* out) {
  return guard([&] {
    require(model, out);
    *out = cl::conditional_cdf(model->model, u, v);
  });
}

cl_status cl_generator_derivative(const cl_model* model, int k, double t, double* out) {
  return guard([&] {
    require(model, out);
    const auto g = cl::generator(model->model);
    *out = k == 0 ? g.psi(t) : g.derivative(k, t);
  });
}

cl_status cl_generator_inverse(const cl_model* model, double u, double* out) {
  return guard([&] {
    require(model, out);
    *out = cl::generator(model->model).psi_inverse(u);
  });
}

cl_status cl_generator_composition(const char* family, double theta1, double theta2, double t, double* out) {
  return guard([&] {
    require(out);
    *out = cl::generator_composition(family_of(family), theta1, theta2).value(t);
  });
}

cl_status cl_matrix_create(size_t rows, size_t cols, const double* row_major, cl_matrix** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    if (rows * cols != 0 && !row_major) throw NullArgument{};
    std::vector<double> v(row_major, row_major + rows * cols);
    *out = new cl_matrix{cl::Matrix(rows, cols, std::move(v))};
  });
}

void cl_matrix_free(cl_matrix* m) { delete m; }
size_t cl_matrix_rows(const cl_matrix* m) { return m ? m->m.rows() : 0; }
size_t cl_matrix_cols(const cl_matrix* m) { return m ? m->m.cols() : 0; }
const double* cl_matrix_data(const cl_matrix* m) { return m ? m->m.values().data() : nullptr; }

cl_status cl_sample(const cl_model* model, int64_t count, uint64_t seed, cl_matrix** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    *out = new cl_matrix{cl::sample(model->model, count, seed)};
  });
}

cl_status cl_sample_frailty(const cl_model* model, int64_t count, uint64_t seed, cl_matrix** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    *out = new cl_matrix{cl::sample_frailty(model->model, count, seed)};
  });
}

cl_status cl_pseudo_observations(const cl_matrix* data, cl_matrix** out) {
  return guard([&] {
    require(data, out);
    *out = nullptr;
    *out = new cl_matrix{cl::pseudo_observations(data->m)};
  });
}

cl_status cl_matrix_csv(const cl_matrix* m, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const auto st = guard([&] {
    require(m);
    text = cl::sample_csv(m->m);
  });
  return st == CL_OK ? copy_out(text, buf, cap, needed) : st;
}

cl_status cl_empirical_entropy(const cl_model* model, const cl_matrix* sample, double* value, double* std_error) {
  return guard([&] {
    require(model, sample, value);
    const auto e = cl::entropy_estimate(model->model, sample->m);
    *value = e.value;
    if (std_error) *std_error = e.std_error;
  });
}

cl_status cl_mutual_information(const cl_model* model, const cl_matrix* sample, double* value, double* std_error) {
  return guard([&] {
    require(model, sample, value);
    const auto e = cl::mutual_information_estimate(model->model, sample->m);
    *value = e.value;
    if (std_error) *std_error = e.std_error;
  });
}

cl_status cl_kl_divergence(const cl_model* p, const cl_model* q, const cl_matrix* sample_from_p, double* value,
                           double* std_error) {
  return guard([&] {
    require(p, q, sample_from_p, value);
    const auto e = cl::kl_estimate(p->model, q->model, sample_from_p->m);
    *value = e.value;
    if (std_error) *std_error = e.std_error;
  });
}

cl_status cl_entropy_quadrature(const cl_model* model, double* out) {
  return guard([&] {
    require(model, out);
    *out = cl::entropy_quadrature(model->model);
  });
}

cl_status cl_spearman_analytic(const cl_model* model, double* out) {
  return guard([&] {
    require(model, out);
    *out = cl::spearman_analytic(model->model);
  });
}

cl_status cl_spearman_sample(const cl_matrix* sample, size_t col_i, size_t col_j, double* out) {
  return guard([&] {
    require(sample, out);
    *out = cl::spearman_sample(sample->m, col_i, col_j);
  });
}

cl_status cl_kendall_sample(const cl_matrix* sample, size_t col_i, size_t col_j, double* out) {
  return guard([&] {
    require(sample, out);
    *out = cl::kendall_sample(sample->m, col_i, col_j);
  });
}

void cl_grid_default(cl_grid* grid) {
  if (!grid) return;
  const cl::GridSpec g;
  *grid = {g.resolution, g.lo, g.hi, g.pair_budget, g.seed};
}

void cl_reports_free(cl_reports* reports) { delete reports; }
size_t cl_reports_size(const cl_reports* reports) { return reports ? reports->reports.size() : 0; }

cl_status cl_reports_at(const cl_reports* reports, size_t index, cl_property_report* out) {
  return guard([&] {
    require(reports, out);
    if (index >= reports->reports.size()) throw cl::Error(cl::ErrorCode::count, "report index out of range");
    const auto& r = reports->reports[index];
    out->condition = reports->conditions[index].c_str();
    out->property = r.property.c_str();
    out->model = r.model.c_str();
    out->params = r.params.c_str();
    out->passed = r.passed;
    out->worst_violation = r.worst_violation;
    out->tolerance = r.tolerance;
    out->worst_location = r.worst_location.empty() ? nullptr : r.worst_location.data();
    out->location_size = r.worst_location.size();
    out->pairs_tested = r.pairs_tested;
    out->detail = r.detail.c_str();
  });
}

int cl_reports_all_passed(const cl_reports* reports) { return reports && reports->theorem.all_passed(); }

cl_status cl_reports_csv(const cl_reports* reports, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const auto st = guard([&] {
    require(reports);
    text = cl::verify_csv(reports->theorem);
  });
  return st == CL_OK ? copy_out(text, buf, cap, needed) : st;
}

cl_status cl_check_tp2(const cl_model* model, const cl_grid* grid, double tol, int negative, cl_reports** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    const auto dir = negative ? cl::Dependence::negative : cl::Dependence::positive;
    *out = single(model->model, cl::check_tp2(model->model, grid_of(grid), tol < 0 ? cl::kLogTol : tol, dir));
  });
}

cl_status cl_check_supermodular(const cl_model* model, const cl_grid* grid, double tol, int negative,
                                cl_reports** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    const auto dir = negative ? cl::Dependence::negative : cl::Dependence::positive;
    *out = single(model->model,
                  cl::check_supermodular_logdensity(model->model, grid_of(grid), tol < 0 ? cl::kLogTol : tol, dir));
  });
}

cl_status cl_check_pqd(const cl_model* lo, const cl_model* hi, const cl_grid* grid, double tol, cl_reports** out) {
  return guard([&] {
    require(lo, hi, out);
    *out = nullptr;
    *out = single(lo->model,
                  cl::check_pqd_order(lo->model, hi->model, grid_of(grid), tol < 0 ? cl::kAlgebraicTol : tol));
  });
}

cl_status cl_check_completely_monotone(const cl_model* model, int order, double tol, cl_reports** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    const auto gen = cl::generator(model->model);
    *out = single(model->model, cl::check_completely_monotone(gen, order, cl::default_t_grid(),
                                                              tol < 0 ? cl::kAlgebraicTol : tol));
  });
}

cl_status cl_check_lstar(const char* family, double theta1, double theta2, int order, double tol,
                         cl_reports** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    const auto f = family_of(family);
    const auto comp = cl::generator_composition(f, theta1, theta2);
    const cl::CopulaModel m(f, {theta1, std::nullopt, std::nullopt}, 2);
    *out = single(m, cl::check_lstar(comp, order, cl::default_t_grid(), tol < 0 ? cl::kAlgebraicTol : tol));
  });
}

cl_status cl_check_kl_chain(const cl_model* base, double theta1, double theta2, int64_t samples, uint64_t seed,
                            cl_reports** out) {
  return guard([&] {
    require(base, out);
    *out = nullptr;
    *out = single(base->model, cl::check_kl_chain(base->model, theta1, theta2, samples, seed));
  });
}

cl_status cl_check_mixture_identity(const cl_model* model, const cl_grid* grid, double tol, int64_t samples,
                                    uint64_t seed, cl_reports** out) {
  return guard([&] {
    require(model, out);
    *out = nullptr;
    *out = single(model->model,
                  cl::check_mixture_identity(model->model, grid_of(grid), tol < 0 ? 1e-10 : tol, samples, seed));
  });
}

void cl_verify_options_default(cl_verify_options* options) {
  if (!options) return;
  options->mode = CL_VERIFY_AUTO;
  cl_grid_default(&options->grid);
  options->tol = -1.0;
  options->order = cl::kDefaultOrder;
}

cl_status cl_verify(const char* family, const double* thetas, size_t n, const double* delta, const double* nu,
                    int dim, const cl_verify_options* options, cl_reports** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    if (n && !thetas) throw NullArgument{};
    if (n == 0) throw cl::Error(cl::ErrorCode::config, "empty theta grid");
    const auto f = family_of(family);
    std::vector<cl::CopulaModel> models;
    for (size_t i = 0; i < n; ++i) models.emplace_back(f, cl::ParamVector{thetas[i], opt(delta), opt(nu)}, dim);
    cl::VerifyOptions vo;
    if (options) {
      switch (options->mode) {
        case CL_VERIFY_AUTO: vo.mode = cl::VerifyMode::automatic; break;
        case CL_VERIFY_TP2: vo.mode = cl::VerifyMode::tp2; break;
        case CL_VERIFY_RR2: vo.mode = cl::VerifyMode::rr2; break;
        case CL_VERIFY_CM: vo.mode = cl::VerifyMode::cm; break;
        case CL_VERIFY_LSTAR: vo.mode = cl::VerifyMode::lstar; break;
        default: throw cl::Error(cl::ErrorCode::config, "unknown verify mode");
      }
      vo.grid = grid_of(&options->grid);
      vo.tol = options->tol;
      vo.order = options->order;
    }
    auto res = new cl_reports;
    try {
      res->theorem = cl::verify_theorem_conditions(models, vo);
    } catch (...) {
      delete res;
      throw;
    }
    for (const auto& c : res->theorem.conditions) {
      const std::string tag = c.condition + (c.branch.empty() ? "" : "_" + c.branch);
      for (const auto& r : c.reports) {
        res->conditions.push_back(tag);
        res->reports.push_back(r);
      }
    }
    *out = res;
  });
}

void cl_experiment_default(cl_experiment* config) {
  if (!config) return;
  const cl::ExperimentConfig d;
  *config = {nullptr, nullptr, 0, nullptr, nullptr, d.dim, d.samples, d.reps, d.seed, CL_SEED_INDEPENDENT, 0};
}

cl_status cl_entropy_curve(const cl_experiment* config, cl_curve** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    *out = new cl_curve{cl::run_entropy_curve(experiment_of(config))};
  });
}

void cl_curve_free(cl_curve* curve) { delete curve; }
size_t cl_curve_size(const cl_curve* curve) { return curve ? curve->report.theta.size() : 0; }

cl_status cl_curve_at(const cl_curve* curve, size_t index, cl_curve_point* out) {
  return guard([&] {
    require(curve, out);
    if (index >= curve->report.theta.size()) throw cl::Error(cl::ErrorCode::count, "curve index out of range");
    const auto& e = curve->report.neg_entropy[index];
    *out = {curve->report.theta[index], e.mean, e.lo95, e.hi95};
  });
}

cl_status cl_curve_summary(const cl_curve* curve, double* monotone_fraction, int* fraction_defined,
                           double* rank_correlation) {
  return guard([&] {
    require(curve);
    if (monotone_fraction) *monotone_fraction = curve->report.monotone_fraction;
    if (fraction_defined) *fraction_defined = curve->report.fraction_defined;
    if (rank_correlation) *rank_correlation = curve->report.rank_correlation;
  });
}

cl_status cl_curve_csv(const cl_curve* curve, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const auto st = guard([&] {
    require(curve);
    text = cl::curve_csv(curve->report);
  });
  return st == CL_OK ? copy_out(text, buf, cap, needed) : st;
}

cl_status cl_size_sweep(const cl_experiment* config, const int64_t* sizes, size_t n, cl_sweep** out) {
  return guard([&] {
    require(out);
    *out = nullptr;
    if (n && !sizes) throw NullArgument{};
    *out = new cl_sweep{cl::run_size_sweep(experiment_of(config), std::vector<std::int64_t>(sizes, sizes + n))};
  });
}

void cl_sweep_free(cl_sweep* sweep) { delete sweep; }
size_t cl_sweep_size(const cl_sweep* sweep) { return sweep ? sweep->report.sample_sizes.size() : 0; }

cl_status cl_sweep_at(const cl_sweep* sweep, size_t index, int64_t* sample_size, double* mean_fraction) {
  return guard([&] {
    require(sweep);
    if (index >= sweep->report.sample_sizes.size()) throw cl::Error(cl::ErrorCode::count, "sweep index out of range");
    if (sample_size) *sample_size = sweep->report.sample_sizes[index];
    if (mean_fraction) *mean_fraction = sweep->report.mean_monotone_fraction[index];
  });
}

cl_status cl_sweep_csv(const cl_sweep* sweep, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const auto st = guard([&] {
    require(sweep);
    text = cl::sweep_csv(sweep->report);
  });
  return st == CL_OK ? copy_out(text, buf, cap, needed) : st;
}

void cl_rank_options_default(cl_rank_options* options) {
  if (!options) return;
  const cl::RankOptions d;
  *options = {d.top_k, nullptr, d.mi_samples, d.seed, 0};
}

cl_status cl_rank_pairs_csv_file(const char* path, const cl_rank_options* options, cl_ranking** out) {
  return guard([&] {
    require(path, out);
    *out = nullptr;
    const auto opts = rank_options_of(options);
    const auto table = cl::read_csv_table(path);
    *out = new cl_ranking{cl::rank_pairs(table.data, opts)};
  });
}

cl_status cl_rank_pairs(const cl_matrix* data, const cl_rank_options* options, cl_ranking** out) {
  return guard([&] {
    require(data, out);
    *out = nullptr;
    *out = new cl_ranking{cl::rank_pairs(data->m, rank_options_of(options))};
  });
}

void cl_ranking_free(cl_ranking* ranking) { delete ranking; }
size_t cl_ranking_size(const cl_ranking* ranking) { return ranking ? ranking->ranks.size() : 0; }

cl_status cl_ranking_at(const cl_ranking* ranking, size_t index, cl_pair_rank* out) {
  return guard([&] {
    require(ranking, out);
    if (index >= ranking->ranks.size()) throw cl::Error(cl::ErrorCode::count, "ranking index out of range");
    const auto& p = ranking->ranks[index];
    *out = {p.col_i, p.col_j, p.abs_spearman, p.rank, p.mi_estimate.has_value(), p.mi_estimate.value_or(0.0),
            p.fitted_theta.value_or(0.0)};
  });
}

cl_status cl_ranking_csv(const cl_ranking* ranking, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const auto st = guard([&] {
    require(ranking);
    text = cl::rank_csv(ranking->ranks);
  });
  return st == CL_OK ? copy_out(text, buf, cap, needed) : st;
}

}  // extern "C"
