// copula-lab: command-line front end over the C API in copula_lab.h.
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copula_lab.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(cl_status st) {
  switch (st) {
    case CL_ERR_IO: return kIo;
    case CL_ERR_NUMERIC: return kCheckFailed;
    case CL_ERR_INTERNAL: return kCheckFailed;
    default: return kUsage;
  }
}

void check(cl_status st) {
  if (st != CL_OK) throw Failure{exit_code_for(st), std::string(cl_status_name(st)) + ": " + cl_last_error()};
}

// Handle owner for the C API objects.
template <class T, void (*Free)(T*)>
struct Owned {
  T* p = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { Free(p); }
};

template <class T, cl_status (*Csv)(const T*, char*, size_t, size_t*)>
std::string csv_of(const T* obj) {
  size_t need = 0;
  check(Csv(obj, nullptr, 0, &need));
  std::string buf(need, '\0');
  check(Csv(obj, buf.data(), buf.size(), &need));
  buf.resize(need - 1);
  return buf;
}

struct Options {
  std::string family;
  std::string theta;
  std::optional<double> delta;
  std::optional<double> nu;
  int dim = 2;
  std::string samples;
  int reps = 50;
  std::uint64_t seed = 1;
  std::string out;
  int grid_res = 50;
  double tol = -1.0;
  int order = 6;
  std::string mode = "auto";
  std::string seed_mode = "independent";
  std::size_t top_k = 10;
  std::string mi_family;
  std::int64_t mi_samples = 20000;
  std::string input;
  bool frailty = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{kIo, "io: cannot open " + o.out + " for writing"};
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f) throw Failure{kIo, "io: error writing " + o.out};
}

std::vector<double> parse_grid(const std::string& spec) {
  size_t n = 0;
  check(cl_parse_grid(spec.c_str(), nullptr, 0, &n));
  std::vector<double> v(n);
  check(cl_parse_grid(spec.c_str(), v.data(), v.size(), &n));
  return v;
}

cl_family_info family_info(const std::string& name) {
  for (size_t i = 0; i < cl_family_count(); ++i) {
    cl_family_info info;
    check(cl_family_at(i, &info));
    if (name == info.name) return info;
  }
  throw Failure{kUsage, "unknown family '" + name + "' (see `copula-lab families`)"};
}

std::vector<double> theta_grid(const Options& o) {
  if (!o.theta.empty()) return parse_grid(o.theta);
  const auto info = family_info(o.family);
  char spec[96];
  std::snprintf(spec, sizeof spec, "%.15g:%.15g:%.15g", info.grid_lo, info.grid_hi, info.grid_step);
  return parse_grid(spec);
}

std::vector<std::int64_t> sample_sizes(const std::string& spec, const char* fallback) {
  std::vector<std::int64_t> out;
  for (double x : parse_grid(spec.empty() ? fallback : spec)) {
    if (!(x >= 1.0) || x > 1e12 || std::floor(x) != x) {
      throw Failure{kUsage, "config: sample sizes must be positive integers"};
    }
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

const double* opt_ptr(const std::optional<double>& x) { return x ? &*x : nullptr; }

void require_family(const Options& o) {
  if (o.family.empty()) throw Failure{kUsage, "config: --family is required"};
  family_info(o.family);
}

cl_experiment experiment(const Options& o, const std::vector<double>& thetas) {
  cl_experiment e;
  cl_experiment_default(&e);
  e.family = o.family.c_str();
  e.thetas = thetas.data();
  e.n_thetas = thetas.size();
  e.delta = opt_ptr(o.delta);
  e.nu = opt_ptr(o.nu);
  e.dim = o.dim;
  e.reps = o.reps;
  e.seed = o.seed;
  e.seed_mode = o.seed_mode == "common" ? CL_SEED_COMMON : CL_SEED_INDEPENDENT;
  return e;
}

int run_families(const Options& o) {
  std::string text = "name,theta_domain,needs_delta,needs_nu,multivariate,archimedean,grid_lo,grid_hi,grid_step\n";
  for (size_t i = 0; i < cl_family_count(); ++i) {
    cl_family_info f;
    check(cl_family_at(i, &f));
    char nums[128];
    std::snprintf(nums, sizeof nums, "%g,%g,%g", f.grid_lo, f.grid_hi, f.grid_step);
    text += std::string(f.name) + ",\"" + f.theta_domain + "\"," + std::to_string(f.needs_delta) + ',' +
            std::to_string(f.needs_nu) + ',' + std::to_string(f.multivariate) + ',' + std::to_string(f.archimedean) +
            ',' + nums + '\n';
  }
  emit(o, text);
  return kOk;
}

int run_sample(const Options& o) {
  require_family(o);
  const auto thetas = theta_grid(o);
  if (thetas.size() != 1) throw Failure{kUsage, "config: sample takes a single --theta"};
  const auto sizes = sample_sizes(o.samples, "1000");
  if (sizes.size() != 1) throw Failure{kUsage, "config: sample takes a single --samples"};
  Owned<cl_model, cl_model_free> model;
  check(cl_model_create(o.family.c_str(), thetas[0], opt_ptr(o.delta), opt_ptr(o.nu), o.dim, &model.p));
  Owned<cl_matrix, cl_matrix_free> m;
  check(o.frailty ? cl_sample_frailty(model.p, sizes[0], o.seed, &m.p) : cl_sample(model.p, sizes[0], o.seed, &m.p));
  emit(o, csv_of<cl_matrix, cl_matrix_csv>(m.p));
  return kOk;
}

int run_curve(const Options& o) {
  require_family(o);
  const auto thetas = theta_grid(o);
  const auto sizes = sample_sizes(o.samples, "1000");
  if (sizes.size() != 1) throw Failure{kUsage, "config: curve takes a single --samples"};
  auto cfg = experiment(o, thetas);
  cfg.samples = sizes[0];
  Owned<cl_curve, cl_curve_free> curve;
  check(cl_entropy_curve(&cfg, &curve.p));
  emit(o, csv_of<cl_curve, cl_curve_csv>(curve.p));
  double frac = 0.0, rho = 0.0;
  int defined = 0;
  check(cl_curve_summary(curve.p, &frac, &defined, &rho));
  std::fprintf(stderr, "monotone_fraction=%.6g%s rank_correlation=%.6g\n", frac, defined ? "" : " (undefined)",
               rho);
  return kOk;
}

int run_sweep(const Options& o) {
  require_family(o);
  const auto thetas = theta_grid(o);
  const auto sizes = sample_sizes(o.samples, "500,1000,2000,5000,10000");
  auto cfg = experiment(o, thetas);
  Owned<cl_sweep, cl_sweep_free> sweep;
  check(cl_size_sweep(&cfg, sizes.data(), sizes.size(), &sweep.p));
  emit(o, csv_of<cl_sweep, cl_sweep_csv>(sweep.p));
  return kOk;
}

int run_verify(const Options& o) {
  require_family(o);
  const auto thetas = theta_grid(o);
  cl_verify_options vo;
  cl_verify_options_default(&vo);
  if (o.mode == "auto") vo.mode = CL_VERIFY_AUTO;
  else if (o.mode == "tp2") vo.mode = CL_VERIFY_TP2;
  else if (o.mode == "rr2") vo.mode = CL_VERIFY_RR2;
  else if (o.mode == "cm") vo.mode = CL_VERIFY_CM;
  else if (o.mode == "lstar") vo.mode = CL_VERIFY_LSTAR;
  else throw Failure{kUsage, "config: unknown --mode '" + o.mode + "'"};
  vo.grid.resolution = o.grid_res;
  vo.tol = o.tol;
  vo.order = o.order;
  Owned<cl_reports, cl_reports_free> reports;
  check(cl_verify(o.family.c_str(), thetas.data(), thetas.size(), opt_ptr(o.delta), opt_ptr(o.nu), o.dim, &vo,
                  &reports.p));
  emit(o, csv_of<cl_reports, cl_reports_csv>(reports.p));
  const bool ok = cl_reports_all_passed(reports.p);
  for (size_t i = 0; i < cl_reports_size(reports.p); ++i) {
    cl_property_report r;
    check(cl_reports_at(reports.p, i, &r));
    if (r.passed) continue;
    std::fprintf(stderr, "FAILED %s%s%s %s: violation %.6g > %.3g", r.condition, *r.condition ? "/" : "",
                 r.property, r.model, r.worst_violation, r.tolerance);
    if (r.location_size) {
      std::fprintf(stderr, " at (");
      for (size_t k = 0; k < r.location_size; ++k) std::fprintf(stderr, "%s%.6g", k ? ", " : "", r.worst_location[k]);
      std::fprintf(stderr, ")");
    }
    std::fprintf(stderr, "%s%s\n", *r.detail ? "; " : "", r.detail);
  }
  return ok ? kOk : kCheckFailed;
}

int run_rank(const Options& o) {
  if (o.input.empty()) throw Failure{kUsage, "config: rank needs an input CSV"};
  cl_rank_options ro;
  cl_rank_options_default(&ro);
  ro.top_k = o.top_k;
  ro.mi_family = o.mi_family.empty() ? nullptr : o.mi_family.c_str();
  ro.mi_samples = o.mi_samples;
  ro.seed = o.seed;
  Owned<cl_ranking, cl_ranking_free> ranking;
  check(cl_rank_pairs_csv_file(o.input.c_str(), &ro, &ranking.p));
  emit(o, csv_of<cl_ranking, cl_ranking_csv>(ranking.p));
  return kOk;
}

// "--theta -1,-0.5" would otherwise read "-1,-0.5" as a flag cluster.
std::vector<std::string> join_negative_values(int argc, char** argv) {
  static const char* const kValued[] = {"--theta", "--delta", "--nu", "--tol", "--seed"};
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool valued = false;
    for (const char* v : kValued) valued = valued || a == v;
    if (valued && i + 1 < argc && argv[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(argv[i + 1][1])) || argv[i + 1][1] == '.')) {
      a += '=';
      a += argv[++i];
    }
    args.push_back(std::move(a));
  }
  return args;
}

// key = value lines become leading "--key=value" tokens; later command-line
// flags win because every option keeps its last value.
std::vector<std::string> config_tokens(const std::vector<std::string>& args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "io: cannot read config file " + path};
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Failure{kUsage, "config: " + path + ":" + std::to_string(lineno) + ": expected key = value"};
    }
    std::string key = trim(line.substr(0, eq));
    for (auto& c : key) c = c == '_' ? '-' : c;
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw Failure{kUsage, "config: " + path + ":" + std::to_string(lineno) + ": bad key"};
    }
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"copula-lab: copula entropy experiments"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;

  app.add_option("--config", config_path, "file of `key = value` lines mirroring the flags");
  app.add_option("--family", o.family, "copula family (see `families`)");
  app.add_option("--theta", o.theta, "comma list or lo:hi:step; default: the family grid");
  app.add_option("--delta", o.delta, "second parameter of bb1/bb2/bb6");
  app.add_option("--nu", o.nu, "degrees of freedom of student_t");
  app.add_option("--dim", o.dim, "dimension")->check(CLI::Range(2, 24));
  app.add_option("--samples", o.samples, "sample size M (a list for sweep)");
  app.add_option("--reps", o.reps, "repetitions R")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--out", o.out, "output CSV path (default: stdout)");
  app.add_option("--grid-res", o.grid_res, "verification grid resolution");
  app.add_option("--tol", o.tol, "tolerance override");
  app.add_option("--order", o.order, "derivative order K")->check(CLI::Range(1, 30));
  app.add_option("--mode", o.mode, "auto, tp2, rr2, cm or lstar")
      ->check(CLI::IsMember({"auto", "tp2", "rr2", "cm", "lstar"}));
  app.add_option("--seed-mode", o.seed_mode, "independent (default) or common")
      ->check(CLI::IsMember({"independent", "common"}));
  app.add_option("--top-k", o.top_k, "pairs to report (0: all)");
  app.add_option("--mi-family", o.mi_family, "family fitted per pair for the MI cross-check");
  app.add_option("--mi-samples", o.mi_samples, "Monte Carlo size of the MI cross-check");
  app.add_option("--input", o.input, "input CSV for rank");
  app.add_flag("--frailty", o.frailty, "sample through the frailty construction");

  auto* families = app.add_subcommand("families", "list the family catalog");
  auto* sample = app.add_subcommand("sample", "draw a sample");
  auto* curve = app.add_subcommand("curve", "negative entropy curve over a theta grid");
  auto* sweep = app.add_subcommand("sweep", "monotone fraction against sample size");
  auto* verify = app.add_subcommand("verify", "theorem-condition battery (exit 1 on failure)");
  auto* rank = app.add_subcommand("rank", "rank column pairs of a CSV by |Spearman rho|");
  rank->add_option("input", o.input, "input CSV");
  for (auto* s : {families, sample, curve, sweep, verify, rank}) s->fallthrough();

  try {
    auto args = join_negative_values(argc, argv);
    auto tokens = config_tokens(args);
    tokens.insert(tokens.end(), args.begin(), args.end());
    std::reverse(tokens.begin(), tokens.end());  // CLI11 consumes a reversed vector
    app.parse(tokens);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const Failure& f) {
    std::fprintf(stderr, "copula-lab: %s\n", f.message.c_str());
    return f.code;
  }

  try {
    if (*families) return run_families(o);
    if (*sample) return run_sample(o);
    if (*curve) return run_curve(o);
    if (*sweep) return run_sweep(o);
    if (*verify) return run_verify(o);
    if (*rank) return run_rank(o);
  } catch (const Failure& f) {
    std::fprintf(stderr, "copula-lab: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "copula-lab: %s\n", e.what());
    return kCheckFailed;
  }
  return kUsage;
}
