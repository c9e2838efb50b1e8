// Exercises the shared library through copula_lab.h only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "copula_lab.h"

namespace {

template <class T>
std::string csv(const T* obj, cl_status (*fn)(const T*, char*, size_t, size_t*)) {
  size_t need = 0;
  REQUIRE(fn(obj, nullptr, 0, &need) == CL_OK);
  std::string s(need, '\0');
  REQUIRE(fn(obj, s.data(), s.size(), &need) == CL_OK);
  s.resize(need - 1);
  return s;
}

}  // namespace

TEST_CASE("status names, version and family catalog") {
  CHECK(std::string(cl_version()) == "0.1.0");
  CHECK(std::string(cl_status_name(CL_OK)) == "ok");
  CHECK(std::string(cl_status_name(CL_ERR_PARAMETER)) == "parameter error");
  CHECK(std::string(cl_status_name(CL_ERR_NULL_ARGUMENT)) == "null argument");
  CHECK(cl_family_count() == 18);
  cl_family_info f;
  REQUIRE(cl_family_at(6, &f) == CL_OK);
  CHECK(std::string(f.name) == "clayton");
  CHECK(f.archimedean == 1);
  CHECK(f.grid_lo == 0.25);
  CHECK(cl_family_at(99, &f) == CL_ERR_COUNT);
  CHECK(cl_family_at(0, nullptr) == CL_ERR_NULL_ARGUMENT);
}

TEST_CASE("grid parsing") {
  size_t n = 0;
  REQUIRE(cl_parse_grid("0.5:2:0.5", nullptr, 0, &n) == CL_OK);
  CHECK(n == 4);
  std::vector<double> v(2);
  REQUIRE(cl_parse_grid("0.5:2:0.5", v.data(), v.size(), &n) == CL_OK);
  CHECK(v[1] == 1.0);
  CHECK(cl_parse_grid("1:2", nullptr, 0, &n) == CL_ERR_CONFIG);
  CHECK(std::strlen(cl_last_error()) > 0);
}

TEST_CASE("models, errors and evaluation") {
  cl_model* m = nullptr;
  CHECK(cl_model_create("nope", 1.0, nullptr, nullptr, 2, &m) == CL_ERR_PARAMETER);
  CHECK(m == nullptr);
  CHECK(std::string(cl_last_error()).find("nope") != std::string::npos);
  CHECK(cl_model_create("clayton", -1.0, nullptr, nullptr, 2, &m) == CL_ERR_PARAMETER);
  CHECK(cl_model_create("clayton", 2.0, nullptr, nullptr, 2, nullptr) == CL_ERR_NULL_ARGUMENT);
  REQUIRE(cl_model_create("clayton", 2.0, nullptr, nullptr, 2, &m) == CL_OK);
  CHECK(std::string(cl_model_describe(m)) == "clayton(theta=2)");
  CHECK(cl_model_dim(m) == 2);

  const double p[2] = {0.3, 0.6};
  double c = 0.0;
  REQUIRE(cl_cdf(m, p, 2, &c) == CL_OK);
  CHECK(c == doctest::Approx(std::pow(std::pow(0.3, -2) + std::pow(0.6, -2) - 1, -0.5)));
  CHECK(cl_cdf(m, p, 3, &c) == CL_ERR_SHAPE);
  double lp = 0.0;
  int clamped = -1;
  REQUIRE(cl_log_pdf(m, p, 2, &lp, &clamped) == CL_OK);
  CHECK(clamped == 0);
  double h = 0.0;
  REQUIRE(cl_conditional_cdf(m, 0.3, 0.6, &h) == CL_OK);
  CHECK(h > 0.0);
  CHECK(h < 1.0);
  double psi = 0.0, inv = 0.0;
  REQUIRE(cl_generator_derivative(m, 0, 1.0, &psi) == CL_OK);
  CHECK(psi == doctest::Approx(std::pow(2.0, -0.5)));  // psi(t) = (1 + t)^(-1/theta)
  REQUIRE(cl_generator_inverse(m, psi, &inv) == CL_OK);
  CHECK(inv == doctest::Approx(1.0));
  double comp = 0.0;
  REQUIRE(cl_generator_composition("mv_gumbel", 2.0, 3.0, 0.5, &comp) == CL_OK);
  CHECK(comp == doctest::Approx(std::pow(0.5, 2.0 / 3.0)));
  CHECK(cl_generator_composition("mv_gumbel", 3.0, 2.0, 0.5, &comp) == CL_ERR_ORDERING);
  cl_model_free(m);
  cl_model_free(nullptr);
}

TEST_CASE("sampling and estimation") {
  cl_model* m = nullptr;
  REQUIRE(cl_model_create("gaussian", 0.5, nullptr, nullptr, 2, &m) == CL_OK);
  cl_matrix* s = nullptr;
  REQUIRE(cl_sample(m, 20000, 3, &s) == CL_OK);
  CHECK(cl_matrix_rows(s) == 20000);
  CHECK(cl_matrix_cols(s) == 2);
  double mi = 0.0, se = 0.0;
  REQUIRE(cl_mutual_information(m, s, &mi, &se) == CL_OK);
  CHECK(std::abs(mi + 0.5 * std::log(0.75)) < 4 * se);
  double hq = 0.0;
  REQUIRE(cl_entropy_quadrature(m, &hq) == CL_OK);
  CHECK(hq == doctest::Approx(0.5 * std::log(0.75)).epsilon(1e-3));
  double h = 0.0;
  REQUIRE(cl_empirical_entropy(m, s, &h, nullptr) == CL_OK);
  CHECK(h == doctest::Approx(-mi));
  double rs = 0.0, ra = 0.0, tau = 0.0;
  REQUIRE(cl_spearman_sample(s, 0, 1, &rs) == CL_OK);
  REQUIRE(cl_spearman_analytic(m, &ra) == CL_OK);
  CHECK(std::abs(rs - ra) < 0.02);
  REQUIRE(cl_kendall_sample(s, 0, 1, &tau) == CL_OK);
  CHECK(tau == doctest::Approx(2 / std::numbers::pi * std::asin(0.5)).epsilon(0.05));

  cl_model* q = nullptr;
  REQUIRE(cl_model_create("gaussian", 0.2, nullptr, nullptr, 2, &q) == CL_OK);
  double kl = 0.0;
  REQUIRE(cl_kl_divergence(m, q, s, &kl, &se) == CL_OK);
  CHECK(kl > 0.0);

  const std::string text = csv(s, cl_matrix_csv);
  CHECK(text.rfind("u1,u2\n", 0) == 0);
  char small[4];
  size_t need = 0;
  CHECK(cl_matrix_csv(s, small, sizeof small, &need) == CL_ERR_SHAPE);
  CHECK(need == text.size() + 1);

  cl_matrix* pseudo = nullptr;
  REQUIRE(cl_pseudo_observations(s, &pseudo) == CL_OK);
  CHECK(cl_matrix_data(pseudo)[0] > 0.0);
  cl_matrix_free(pseudo);

  cl_model* mv = nullptr;
  REQUIRE(cl_model_create("mv_clayton", 1.0, nullptr, nullptr, 4, &mv) == CL_OK);
  cl_matrix* fr = nullptr;
  REQUIRE(cl_sample_frailty(mv, 100, 1, &fr) == CL_OK);
  CHECK(cl_matrix_rows(fr) == 100);
  CHECK(cl_matrix_cols(fr) == 4);
  cl_matrix_free(fr);
  cl_model_free(mv);
  cl_model* bb = nullptr;
  const double delta = 1.5;
  REQUIRE(cl_model_create("bb1", 1.0, &delta, nullptr, 2, &bb) == CL_OK);
  CHECK(cl_sample_frailty(bb, 100, 1, &fr) == CL_ERR_UNSUPPORTED);
  cl_model_free(bb);

  const double raw[6] = {1, 2, 3, 4, 5, 6};
  cl_matrix* r = nullptr;
  REQUIRE(cl_matrix_create(3, 2, raw, &r) == CL_OK);
  CHECK(cl_matrix_data(r)[5] == 6.0);
  cl_matrix_free(r);
  cl_matrix_free(s);
  cl_model_free(q);
  cl_model_free(m);
}

TEST_CASE("verification through the C API") {
  cl_model* a = nullptr;
  cl_model* b = nullptr;
  REQUIRE(cl_model_create("clayton", 1.0, nullptr, nullptr, 2, &a) == CL_OK);
  REQUIRE(cl_model_create("clayton", 2.0, nullptr, nullptr, 2, &b) == CL_OK);
  cl_grid g;
  cl_grid_default(&g);
  CHECK(g.resolution == 50);
  g.resolution = 20;

  cl_reports* r = nullptr;
  REQUIRE(cl_check_tp2(a, &g, -1, 0, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_property_report pr;
  REQUIRE(cl_reports_at(r, 0, &pr) == CL_OK);
  CHECK(std::string(pr.property) == "tp2");
  CHECK(std::string(pr.condition).empty());
  CHECK(csv(r, cl_reports_csv).find("\ntp2,clayton,theta=1,true,") != std::string::npos);
  cl_reports_free(r);

  REQUIRE(cl_check_supermodular(a, nullptr, -1, 0, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_reports_free(r);

  REQUIRE(cl_check_pqd(b, a, &g, -1, &r) == CL_OK);
  CHECK_FALSE(cl_reports_all_passed(r));
  REQUIRE(cl_reports_at(r, 0, &pr) == CL_OK);
  CHECK(pr.location_size == 2);
  cl_reports_free(r);

  REQUIRE(cl_check_completely_monotone(a, 6, -1, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_reports_free(r);
  REQUIRE(cl_check_lstar("mv_clayton", 1.0, 2.0, 6, -1, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_reports_free(r);
  REQUIRE(cl_check_kl_chain(a, 1.0, 2.0, 5000, 1, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_reports_free(r);
  REQUIRE(cl_check_mixture_identity(a, &g, -1, 5000, 1, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  cl_reports_free(r);
  CHECK(cl_check_kl_chain(a, 2.0, 1.0, 5000, 1, &r) == CL_ERR_ORDERING);

  cl_verify_options vo;
  cl_verify_options_default(&vo);
  vo.grid.resolution = 20;
  const double thetas[3] = {0.5, 1, 2};
  REQUIRE(cl_verify("clayton", thetas, 3, nullptr, nullptr, 2, &vo, &r) == CL_OK);
  CHECK(cl_reports_all_passed(r));
  CHECK(cl_reports_size(r) > 3);
  REQUIRE(cl_reports_at(r, 0, &pr) == CL_OK);
  CHECK(std::string(pr.condition) == "a_tp2");
  CHECK(cl_reports_at(r, 1000, &pr) == CL_ERR_COUNT);
  cl_reports_free(r);
  const double rev[2] = {2, 1};
  REQUIRE(cl_verify("clayton", rev, 2, nullptr, nullptr, 2, &vo, &r) == CL_OK);
  CHECK_FALSE(cl_reports_all_passed(r));
  cl_reports_free(r);
  CHECK(cl_verify("clayton", nullptr, 0, nullptr, nullptr, 2, &vo, &r) == CL_ERR_CONFIG);

  cl_model_free(a);
  cl_model_free(b);
}

TEST_CASE("experiments through the C API") {
  const double thetas[4] = {1, 2, 3, 4};
  cl_experiment e;
  cl_experiment_default(&e);
  CHECK(e.seed_mode == CL_SEED_INDEPENDENT);
  CHECK(e.reps == 50);
  e.family = "clayton";
  e.thetas = thetas;
  e.n_thetas = 4;
  e.samples = 400;
  e.reps = 3;
  e.threads = 1;
  cl_curve* c = nullptr;
  REQUIRE(cl_entropy_curve(&e, &c) == CL_OK);
  CHECK(cl_curve_size(c) == 4);
  cl_curve_point pt;
  REQUIRE(cl_curve_at(c, 3, &pt) == CL_OK);
  CHECK(pt.theta == 4.0);
  CHECK(pt.p025 <= pt.mean_neg_entropy);
  double frac = 0, rho = 0;
  int defined = 0;
  REQUIRE(cl_curve_summary(c, &frac, &defined, &rho) == CL_OK);
  CHECK(defined == 1);
  CHECK(frac == 1.0);
  const std::string one = csv(c, cl_curve_csv);
  cl_curve_free(c);
  e.threads = 4;
  REQUIRE(cl_entropy_curve(&e, &c) == CL_OK);
  CHECK(csv(c, cl_curve_csv) == one);
  cl_curve_free(c);

  const int64_t sizes[2] = {100, 200};
  cl_sweep* s = nullptr;
  REQUIRE(cl_size_sweep(&e, sizes, 2, &s) == CL_OK);
  CHECK(cl_sweep_size(s) == 2);
  int64_t size = 0;
  double mf = -1;
  REQUIRE(cl_sweep_at(s, 1, &size, &mf) == CL_OK);
  CHECK(size == 200);
  CHECK(mf >= 0.0);
  CHECK(csv(s, cl_sweep_csv).rfind("sample_size,", 0) == 0);
  cl_sweep_free(s);

  e.family = "bogus";
  CHECK(cl_entropy_curve(&e, &c) == CL_ERR_PARAMETER);
  e.family = "clayton";
  e.samples = 5;
  CHECK(cl_entropy_curve(&e, &c) == CL_ERR_CONFIG);
}

TEST_CASE("pair ranking through the C API") {
  cl_model* m = nullptr;
  REQUIRE(cl_model_create("gaussian", 0.7, nullptr, nullptr, 2, &m) == CL_OK);
  cl_matrix* s = nullptr;
  REQUIRE(cl_sample(m, 500, 9, &s) == CL_OK);
  cl_rank_options o;
  cl_rank_options_default(&o);
  CHECK(o.top_k == 10);
  o.mi_family = "gaussian";
  o.mi_samples = 2000;
  cl_ranking* r = nullptr;
  REQUIRE(cl_rank_pairs(s, &o, &r) == CL_OK);
  REQUIRE(cl_ranking_size(r) == 1);
  cl_pair_rank p;
  REQUIRE(cl_ranking_at(r, 0, &p) == CL_OK);
  CHECK(p.col_i == 1);
  CHECK(p.col_j == 2);
  CHECK(p.has_mi == 1);
  CHECK(p.fitted_theta == doctest::Approx(0.7).epsilon(0.1));
  CHECK(csv(r, cl_ranking_csv).rfind("col_i,col_j,abs_spearman,rank,mi_estimate\n1,2,", 0) == 0);
  cl_ranking_free(r);
  CHECK(cl_rank_pairs_csv_file("/nonexistent/x.csv", &o, &r) == CL_ERR_IO);
  cl_matrix_free(s);
  cl_model_free(m);
}
