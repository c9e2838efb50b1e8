#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "copula_lab/error.hpp"
#include "copula_lab/experiments.hpp"
#include "copula_lab/sampling.hpp"

using namespace copula_lab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

ExperimentConfig small_config(Family f, std::vector<double> grid, int reps = 4, std::int64_t m = 300) {
  ExperimentConfig c;
  c.family = f;
  c.theta_grid = std::move(grid);
  c.samples = m;
  c.reps = reps;
  c.seed = 17;
  return c;
}

}  // namespace

TEST_CASE("grid specifications") {
  CHECK(parse_grid_spec("1,2,3") == std::vector<double>{1, 2, 3});
  CHECK(parse_grid_spec(" -1, -0.5 ") == std::vector<double>{-1, -0.5});
  CHECK(parse_grid_spec("0.5:2:0.5") == std::vector<double>{0.5, 1, 1.5, 2});
  CHECK(parse_grid_spec("0.1:0.3:0.1").size() == 3);
  CHECK(code_of([] { parse_grid_spec(""); }) == ErrorCode::config);
  CHECK(code_of([] { parse_grid_spec("1:2"); }) == ErrorCode::config);
  CHECK(code_of([] { parse_grid_spec("1:2:0.5:1"); }) == ErrorCode::config);
  CHECK(code_of([] { parse_grid_spec("1,x"); }) == ErrorCode::config);
  CHECK(code_of([] { parse_grid_spec("1,,2"); }) == ErrorCode::config);
}

TEST_CASE("monotone fraction and rank correlation") {
  const std::vector<double> th{1, 2, 3, 4, 5};
  CHECK(*monotone_fraction(Family::clayton, th, {0.1, 0.2, 0.3, 0.4, 0.5}) == 1.0);
  CHECK(*monotone_fraction(Family::clayton, th, {0.1, 0.3, 0.2, 0.4, 0.5}) == doctest::Approx(0.75));
  CHECK(*monotone_fraction(Family::clayton, th, {0.5, 0.4, 0.3, 0.2, 0.1}) == 0.0);
  // ties count as not increasing
  CHECK(*monotone_fraction(Family::clayton, th, {0.1, 0.1, 0.3, 0.4, 0.5}) == doctest::Approx(0.75));
  CHECK(!monotone_fraction(Family::clayton, {2.0}, {0.3}).has_value());
  CHECK(parameter_rank_correlation(Family::clayton, th, {0.1, 0.2, 0.3, 0.4, 0.5}) == doctest::Approx(1.0));
  CHECK(parameter_rank_correlation(Family::clayton, th, {0.5, 0.4, 0.3, 0.2, 0.1}) == doctest::Approx(-1.0));
  CHECK(parameter_rank_correlation(Family::clayton, {2.0}, {0.3}) == 1.0);

  // fgm/amh: ordered by |theta|; the pair (-0.5, 0.5) has equal |theta| and is skipped
  const std::vector<double> sym{-1, -0.5, 0, 0.5, 1};
  const std::vector<double> vals{0.4, 0.1, 0.0, 0.1, 0.4};
  CHECK(*monotone_fraction(Family::fgm, sym, vals) == 1.0);
  CHECK(parameter_rank_correlation(Family::fgm, sym, vals) == doctest::Approx(1.0));
  CHECK_FALSE(monotone_fraction(Family::fgm, {-0.5, 0.5}, {0.1, 0.2}).has_value());
  CHECK(*monotone_fraction(Family::clayton, {0.5, 1}, {0.1, 0.2}) == 1.0);
  CHECK_THROWS_AS(monotone_fraction(Family::clayton, th, {1, 2}), Error);
}

TEST_CASE("experiment configuration validation") {
  auto c = small_config(Family::clayton, {1, 2, 3});
  CHECK_NOTHROW(c.validate());
  c.theta_grid = {2, 1};
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  c.theta_grid = {1, 1};
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  c.theta_grid = {};
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  c.theta_grid = {-1, 1};
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  c.theta_grid = {1, 2};
  c.samples = 9;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  c.samples = 10;
  c.reps = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::config);
  auto b = small_config(Family::bb1, {1, 2});
  CHECK(code_of([&] { b.validate(); }) == ErrorCode::config);  // delta missing
  b.delta = 1.5;
  CHECK_NOTHROW(b.validate());
}

TEST_CASE("seed policy") {
  auto c = small_config(Family::clayton, {1, 2, 3});
  CHECK(c.seed_mode == SeedMode::independent);
  CHECK(cell_seed(c, 0, 0) != cell_seed(c, 1, 0));
  CHECK(cell_seed(c, 0, 0) != cell_seed(c, 0, 1));
  c.seed_mode = SeedMode::common;
  CHECK(cell_seed(c, 0, 3) == cell_seed(c, 2, 3));
  CHECK(cell_seed(c, 0, 0) != cell_seed(c, 0, 1));
}

TEST_CASE("entropy curve is deterministic across worker counts") {
  auto c = small_config(Family::frank, {1, 3, 5, 7}, 5);
  c.threads = 1;
  const auto a = curve_csv(run_entropy_curve(c));
  c.threads = 3;
  const auto b = curve_csv(run_entropy_curve(c));
  c.threads = 8;
  const auto d = curve_csv(run_entropy_curve(c));
  CHECK(a == b);
  CHECK(a == d);
  c.seed = 18;
  CHECK(curve_csv(run_entropy_curve(c)) != a);
}

TEST_CASE("entropy curve report") {
  auto c = small_config(Family::clayton, {0.5, 2, 6}, 6, 2000);
  const auto r = run_entropy_curve(c);
  REQUIRE(r.neg_entropy.size() == 3);
  CHECK(r.reps == 6);
  CHECK(r.samples == 2000);
  CHECK(r.fraction_defined);
  CHECK(r.monotone_fraction == 1.0);
  CHECK(r.rank_correlation == doctest::Approx(1.0));
  for (const auto& e : r.neg_entropy) {
    CHECK(e.rep_values.size() == 6);
    CHECK(e.lo95 <= e.mean);
    CHECK(e.mean <= e.hi95);
  }
  const auto csv = curve_csv(r);
  CHECK(csv.rfind("theta,mean_neg_entropy,p025,p975,reps,samples\n", 0) == 0);
  CHECK(csv.find("\n0.5,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  // single-point grid: fraction undefined, reported as 1
  auto s = small_config(Family::fgm, {0.0}, 2);
  const auto one = run_entropy_curve(s);
  CHECK_FALSE(one.fraction_defined);
  CHECK(one.monotone_fraction == 1.0);
  CHECK(one.neg_entropy[0].mean == 0.0);
}

TEST_CASE("gaussian curve means follow the closed form") {
  auto c = small_config(Family::gaussian, {0.2, 0.5, 0.8}, 4, 20000);
  const auto r = run_entropy_curve(c);
  for (std::size_t i = 0; i < 3; ++i) {
    const double th = r.theta[i];
    const double exact = -0.5 * std::log1p(-th * th);
    // 4 reps of 20000: the mean's se is below 0.002 at theta 0.8
    CHECK(std::abs(r.neg_entropy[i].mean - exact) < 0.006);
  }
}

TEST_CASE("size sweep") {
  auto c = small_config(Family::clayton, {1, 3, 5}, 1);
  const auto one = run_size_sweep(c, {200});
  REQUIRE(one.mean_monotone_fraction.size() == 1);
  REQUIRE(one.rep_fractions[0].size() == 1);
  CHECK(one.mean_monotone_fraction[0] == one.rep_fractions[0][0]);
  CHECK(code_of([&] { run_size_sweep(c, {200, 100}); }) == ErrorCode::config);
  CHECK(code_of([&] { run_size_sweep(c, {5}); }) == ErrorCode::config);
  CHECK(code_of([&] { run_size_sweep(c, {}); }) == ErrorCode::config);
  c.reps = 3;
  c.threads = 1;
  const auto a = sweep_csv(run_size_sweep(c, {100, 400}));
  c.threads = 4;
  CHECK(sweep_csv(run_size_sweep(c, {100, 400})) == a);
  CHECK(a.rfind("sample_size,mean_monotone_fraction,reps\n100,", 0) == 0);
}

TEST_CASE("csv table parsing") {
  const auto t = parse_csv_table("a,b\n1,2\n3, 4\r\n\n5,6\n");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  CHECK(t.data.rows() == 3);
  CHECK(t.data(1, 1) == 4.0);
  const auto h = parse_csv_table("1,2\n3,4");
  CHECK(h.header.empty());
  CHECK(h.data.rows() == 2);
  try {
    parse_csv_table("x,y\n1,2\n3,abc\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(std::string(e.what()).find("row 3 column 2") != std::string::npos);
  }
  CHECK(code_of([] { parse_csv_table("1,2\n3\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_csv_table("1,2\n3,nan\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { read_csv_table("/nonexistent/dir/file.csv"); }) == ErrorCode::io);
}

TEST_CASE("pair ranking") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> z;
  Matrix d(200, 3);
  for (std::size_t i = 0; i < 200; ++i) {
    d(i, 0) = z(rng);
    d(i, 1) = d(i, 0);
    d(i, 2) = z(rng);
  }
  const auto r = rank_pairs(d, {});
  REQUIRE(r.size() == 3);
  CHECK(r[0].col_i == 1);
  CHECK(r[0].col_j == 2);
  CHECK(r[0].abs_spearman == doctest::Approx(1.0));
  CHECK(r[0].rank == 1);
  CHECK(r[2].rank == 3);
  RankOptions top;
  top.top_k = 1;
  CHECK(rank_pairs(d, top).size() == 1);

  Matrix constant(30, 2);
  for (std::size_t i = 0; i < 30; ++i) constant(i, 0) = static_cast<double>(i);
  CHECK(code_of([&] { rank_pairs(constant, {}); }) == ErrorCode::degenerate_data);
  CHECK(code_of([&] { rank_pairs(Matrix(19, 2), {}); }) == ErrorCode::count);
  CHECK(code_of([&] { rank_pairs(Matrix(30, 1), {}); }) == ErrorCode::shape);
}

TEST_CASE("independent columns have small rank correlation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u;
  Matrix d(5000, 4);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < 4; ++j) d(i, j) = u(rng);
  for (const auto& p : rank_pairs(d, {})) CHECK(p.abs_spearman < 0.05);
}

TEST_CASE("ranking by |rho| matches ranking by fitted MI") {
  // three independent gaussian-copula blocks with theta 0.3, 0.6, 0.9
  Matrix d(4000, 6);
  const double th[] = {0.3, 0.6, 0.9};
  for (int b = 0; b < 3; ++b) {
    const auto s = sample(CopulaModel(Family::gaussian, {th[b], {}, {}}), 4000, 100 + b);
    for (std::size_t i = 0; i < 4000; ++i) {
      d(i, 2 * b) = s(i, 0);
      d(i, 2 * b + 1) = s(i, 1);
    }
  }
  RankOptions o;
  o.top_k = 3;
  o.mi_family = Family::gaussian;
  o.mi_samples = 20000;
  const auto r = rank_pairs(d, o);
  REQUIRE(r.size() == 3);
  CHECK(r[0].col_i == 5);
  CHECK(r[1].col_i == 3);
  CHECK(r[2].col_i == 1);
  CHECK(*r[0].mi_estimate > *r[1].mi_estimate);
  CHECK(*r[1].mi_estimate > *r[2].mi_estimate);
  CHECK(*r[0].fitted_theta == doctest::Approx(0.9).epsilon(0.02));
  const auto csv = rank_csv(r);
  CHECK(csv.rfind("col_i,col_j,abs_spearman,rank,mi_estimate\n5,6,", 0) == 0);
}

TEST_CASE("spearman fit inverts the analytic rho") {
  // gaussian: rho_S = (6/pi) asin(theta/2)
  CHECK(fit_theta_to_spearman(Family::gaussian, 0.5) == doctest::Approx(2 * std::sin(std::numbers::pi * 0.5 / 6)).epsilon(1e-7));
  CHECK(fit_theta_to_spearman(Family::fgm, 0.2) == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(code_of([] { fit_theta_to_spearman(Family::bb1, 0.3); }) == ErrorCode::unsupported);
}

TEST_CASE("number formatting and csv schemas") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(std::stod(format_number(0.1 + 0.2)) == 0.1 + 0.2);
  Matrix m(2, 2, {0.25, 0.5, 0.75, 0.125});
  CHECK(sample_csv(m) == "u1,u2\n0.25,0.5\n0.75,0.125\n");
  TheoremReport t;
  t.family = Family::clayton;
  PropertyReport p;
  p.property = "tp2";
  p.params = "theta=2";
  t.conditions.push_back({"a", "tp2", true, {p}, ""});
  CHECK(verify_csv(t) == "property,family,params,passed,worst_violation,location\na_tp2/tp2,clayton,theta=2,true,0,\n");
  t.conditions[0].condition = "";
  t.conditions[0].branch = "";
  CHECK(verify_csv(t) == "property,family,params,passed,worst_violation,location\ntp2,clayton,theta=2,true,0,\n");
}

TEST_CASE("write_text_file reports io errors") {
  CHECK(code_of([] { write_text_file("/nonexistent/dir/x.csv", "a"); }) == ErrorCode::io);
}
