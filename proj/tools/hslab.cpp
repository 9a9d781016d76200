// Command-line laboratory for weighted quotient-inequality experiments:
// exact identity suites, inequality ratio checks, scaling sharpness sweeps,
// and best-constant searches.
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "hslab/constsearch.hpp"
#include "hslab/inequalities.hpp"
#include "hslab/norms.hpp"
#include "hslab/opalg.hpp"
#include "hslab/runconfig.hpp"
#include "hslab/sharpness.hpp"

namespace {

using nlohmann::json;
using namespace hslab;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << text << "\n";
}

// ---------------------------------------------------------------- identity

int run_identity(int k_max, int n_max, int trials, unsigned long seed,
                 bool inject_fault, json& report) {
  if (k_max < 1 || k_max > 8 || n_max < 1 || n_max > 4 || trials < 1) {
    std::cerr << "identity: need 1 <= k-max <= 8, 1 <= n-max <= 4, trials >= 1\n";
    return kExitUsage;
  }

  report["seed"] = seed;
  int checked = 0;
  json failures = json::array();
  RationalSampler sampler(seed);

  // Subset-sum identity and shift-invariance of the alternating power sum.
  for (int k = 1; k <= k_max; ++k) {
    for (int t = 0; t < trials; ++t) {
      std::vector<Rational> a;
      for (int i = 0; i < k; ++i) a.push_back(sampler.next());
      const Rational s1 = sampler.next();
      const Rational s2 = sampler.next();
      Rational residual = opalg::combinatorial_residual(a, s1);
      Rational shift = opalg::phi_k(a, s1) - opalg::phi_k(a, s2);
      if (inject_fault && checked == 0) residual += 1;
      ++checked;
      if (residual != 0 || shift != 0)
        failures.push_back({{"suite", "subset-sum"}, {"k", k}, {"trial", t}});
    }
  }

  // Operator decomposition, exhaustive over direction tuples.
  for (int n = 2; n <= n_max; ++n) {
    const int tuple_k_max = std::min(k_max, 4);
    std::vector<int> tuple;
    std::function<void(int)> enumerate = [&](int k_left) {
      if (!tuple.empty()) {
        auto [lhs, rhs] = opalg::expand_operator_identity(tuple, n);
        ++checked;
        if (!(lhs == rhs))
          failures.push_back({{"suite", "operator-decomposition"},
                              {"n", n},
                              {"tuple", tuple}});
      }
      if (k_left == 0) return;
      for (int j = 1; j <= n; ++j) {
        tuple.push_back(j);
        enumerate(k_left - 1);
        tuple.pop_back();
      }
    };
    enumerate(tuple_k_max);
  }

  // Vertical quotient recursion on monomials.
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= m - 1; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int j = 1; j <= 3; ++j)
          for (int N = 0; N <= 6; ++N) {
            ++checked;
            if (opalg::monomial_recursion_check(N, m, k, l, j) != 0)
              failures.push_back({{"suite", "vertical-recursion"},
                                  {"N", N},
                                  {"m", m},
                                  {"k", k},
                                  {"l", l},
                                  {"j", j}});
          }

  report["checked"] = checked;
  report["failures"] = failures;
  report["ok"] = failures.empty();
  return failures.empty() ? kExitOk : kExitMathFail;
}

// ------------------------------------------------------------------- check

config::RunConfig default_check_config() {
  config::RunConfig cfg;
  auto add = [&](inequalities::CaseId id, const std::string& domain, int n, int m, int k,
                 const std::string& p, const std::string& q, const std::string& alpha,
                 const std::string& beta, const std::string& r,
                 std::map<std::string, double> trial_params) {
    config::CaseConfig cc;
    cc.inequality_case.id = id;
    cc.inequality_case.n = n;
    cc.inequality_case.m = m;
    cc.inequality_case.k = k;
    cc.inequality_case.p = parse_rational(p);
    cc.inequality_case.q = parse_rational(q);
    cc.inequality_case.alpha = parse_rational(alpha);
    cc.inequality_case.beta = parse_rational(beta);
    cc.inequality_case.r = parse_rational(r);
    cc.inequality_case.domain = config::domain_from_string(domain, n);
    cc.trial.family = "poly-bump";
    cc.trial.params = std::move(trial_params);
    cfg.cases.push_back(cc);
  };

  add(inequalities::CaseId::OneD, "half-line", 1, 2, 1, "2", "2", "0", "0", "0",
      {{"a", 1}, {"b", 2}, {"M", 6}});
  add(inequalities::CaseId::MainQuotient, "strip", 2, 2, 1, "2", "2", "0", "0", "1",
      {{"a", 0.1}, {"b", 0.45}, {"M", 6}});
  add(inequalities::CaseId::HalfSpace, "half-space", 2, 2, 1, "2", "2", "1/2", "1/2",
      "0", {{"a", 0.2}, {"b", 0.8}, {"M", 6}});
  add(inequalities::CaseId::Interp, "half-space", 2, 2, 1, "2", "2", "0", "0", "0",
      {{"a", 0.2}, {"b", 0.8}, {"M", 6}});
  add(inequalities::CaseId::FirstOrder, "interval01", 1, 1, 0, "2", "2", "0", "0", "0",
      {{"a", 0.1}, {"b", 0.45}, {"M", 6}});
  return cfg;
}

int run_check(const config::RunConfig& cfg, json& report, std::string& csv) {
  const auto& cases = cfg.cases;
  json rows = json::array();
  int status = kExitOk;

  auto evaluate = [&](const config::CaseConfig& cc) -> json {
    const auto& c = cc.inequality_case;
    json row;
    row["id"] = inequalities::to_string(c.id);
    row["params"] = {{"n", c.n},       {"m", c.m},
                     {"k", c.k},       {"p", rational_to_string(c.p)},
                     {"q", rational_to_string(c.q)}, {"alpha", rational_to_string(c.alpha)},
                     {"beta", rational_to_string(c.beta)}, {"r", rational_to_string(c.r)}};
    const auto verdict = inequalities::validate_params(c);
    row["valid"] = verdict.valid;
    row["violated"] = verdict.violated;
    row["boundary"] = verdict.boundary;

    const auto trial = config::build_trial(cc.trial, c.n);
    const auto ratio = inequalities::ratio_report(c, trial, cfg.quadrature.tol);
    row["lhs"] = ratio.lhs.value;
    row["rhs"] = ratio.rhs.value;
    row["ratio"] = ratio.ratio;
    row["degenerate"] = ratio.degenerate;
    row["converged"] = ratio.lhs.converged && ratio.rhs.converged;
    row["binding"] = verdict.valid;
    return row;
  };

  const int workers = std::max(1, cfg.workers);
  for (std::size_t begin = 0; begin < cases.size(); begin += workers) {
    std::vector<std::future<json>> batch;
    const std::size_t end = std::min(cases.size(), begin + workers);
    for (std::size_t i = begin; i < end; ++i)
      batch.push_back(std::async(std::launch::async, evaluate, cases[i]));
    for (auto& f : batch) rows.push_back(f.get());
  }

  std::ostringstream csv_out;
  csv_out << "case,valid,lhs,rhs,ratio,converged\n";
  for (const auto& row : rows) {
    if (row["valid"].get<bool>()) {
      if (row["degenerate"].get<bool>() || !std::isfinite(row["ratio"].get<double>()))
        status = std::max(status, kExitMathFail);
      else if (!row["converged"].get<bool>())
        status = std::max(status, kExitNumerical);
    }
    csv_out << row["id"].get<std::string>() << ',' << row["valid"] << ','
            << row["lhs"] << ',' << row["rhs"] << ',' << row["ratio"] << ','
            << row["converged"] << '\n';
  }
  report["cases"] = rows;
  report["ok"] = status == kExitOk;
  csv = csv_out.str();
  return status;
}

// --------------------------------------------------------------- sharpness

json experiment_to_json(const sharpness::ScalingExperiment& exp) {
  json item;
  item["setting"] = exp.setting == sharpness::ScalingSetting::Interior ? "interior"
                                                                       : "boundary";
  item["lambda"] = exp.lambda_grid;
  item["lhs"] = exp.lhs;
  item["rhs"] = exp.rhs;
  item["ratio"] = exp.ratio;
  item["predicted_lhs_exponent"] = exp.predicted_lhs_exponent;
  item["predicted_rhs_exponent"] = exp.predicted_rhs_exponent;
  item["fitted_lhs_slope"] = exp.lhs_fit.slope;
  item["fitted_rhs_slope"] = exp.rhs_fit.slope;
  item["fitted_ratio_slope"] = exp.ratio_fit.slope;
  item["blow_up"] = exp.blow_up;
  return item;
}

int run_sharpness(const config::RunConfig& cfg, json& report, std::string& csv) {
  if (cfg.lambda_grid.size() < 4) {
    std::cerr << "sharpness: lambda grid needs at least 4 values\n";
    return kExitUsage;
  }
  int status = kExitOk;
  std::ostringstream csv_out;
  csv_out << "experiment,lambda,lhs,rhs,ratio\n";
  json sweeps = json::array();

  struct SweepSpec {
    std::string name;
    sharpness::ScalingSetting setting;
    int n;
    Rational q, r;
    bool expect_blow_up;
  };
  // Strip sweeps straddle the weight-exponent boundary r* = 1 (at n=2,
  // m=2, k=1, p=q=2); interior sweeps straddle the exponent-balance
  // boundary q* = 6 (at n=3, m=2, k=1, p=2).
  const std::vector<SweepSpec> specs = {
      {"strip-violating", sharpness::ScalingSetting::Boundary, 2, Rational(2),
       Rational(1, 2), true},
      {"strip-valid", sharpness::ScalingSetting::Boundary, 2, Rational(2), Rational(2),
       false},
      {"interior-violating", sharpness::ScalingSetting::Interior, 3, Rational(9),
       Rational(8), true},
      {"interior-valid", sharpness::ScalingSetting::Interior, 3, Rational(4),
       Rational(5), false},
  };

  for (const auto& spec : specs) {
    inequalities::InequalityCase c;
    c.id = inequalities::CaseId::MainQuotient;
    c.n = spec.n;
    c.m = 2;
    c.k = 1;
    c.p = 2;
    c.q = spec.q;
    c.r = spec.r;
    c.domain = spec.setting == sharpness::ScalingSetting::Boundary
                   ? norms::Domain::strip(spec.n)
                   : norms::Domain::half_space(spec.n);

    funcspace::TrialFunction1D vertical =
        spec.setting == sharpness::ScalingSetting::Boundary
            ? funcspace::make_poly_bump(0.05, 0.25, 4)
            : funcspace::make_poly_bump(0.3, 0.5, 4);
    std::vector<funcspace::TrialFunction1D> transverse(
        spec.n - 1, funcspace::make_poly_bump(-0.1, 0.1, 4));
    const auto u = funcspace::tensorize(vertical, transverse, spec.n);

    auto exp = sharpness::scaling_sweep(c, u, spec.setting, cfg.lambda_grid,
                                        cfg.quadrature.tol);
    json item = experiment_to_json(exp);
    item["name"] = spec.name;
    item["expected_blow_up"] = spec.expect_blow_up;
    const auto verdict = inequalities::validate_params(c);
    item["hypotheses_valid"] = verdict.valid;
    if (exp.blow_up != spec.expect_blow_up || verdict.valid != !spec.expect_blow_up)
      status = std::max(status, kExitMathFail);
    sweeps.push_back(item);

    for (std::size_t i = 0; i < exp.lambda_grid.size(); ++i)
      csv_out << spec.name << ',' << exp.lambda_grid[i] << ',' << exp.lhs[i] << ','
              << exp.rhs[i] << ',' << exp.ratio[i] << '\n';
  }
  report["sweeps"] = sweeps;

  // Critical-weight failure of the first-order quotient inequality. The
  // grid stays at the two anchor exponents: between them the truncated
  // integrals converge too slowly for the decade-increment rule to settle.
  const auto critical = sharpness::critical_failure_demo(2, {0.5, 1.0});
  json critical_rows = json::array();
  for (const auto& row : critical.rows) {
    const bool expect_divergent = 2 * row.alpha_log <= 1;
    const auto verdict = row.numerator.verdict;
    json item;
    item["alpha_log"] = row.alpha_log;
    item["numerator_verdict"] = quadrature::to_string(verdict);
    item["denominator_verdict"] = quadrature::to_string(row.denominator_verdict);
    item["ratios"] = row.ratios;
    item["expected_divergent"] = expect_divergent;
    critical_rows.push_back(item);
    // A truly divergent numerator must classify unbounded; a convergent one
    // must not (slow settling is acceptable for the log-speed tails).
    const bool divergent = verdict == quadrature::GrowthVerdict::Unbounded;
    if (divergent != expect_divergent ||
        row.denominator_verdict != quadrature::GrowthVerdict::Bounded)
      status = std::max(status, kExitMathFail);
  }
  report["critical"] = critical_rows;

  // The canceling effect behind the second-order quotient inequality.
  const auto cancel = sharpness::canceling_demo(2, 0.5);
  json cancel_report;
  cancel_report["quotient_gradient"] = quadrature::to_string(cancel.quotient_gradient.verdict);
  cancel_report["gradient_over_d"] = quadrature::to_string(cancel.gradient_over_d.verdict);
  cancel_report["quotient_squared"] = quadrature::to_string(cancel.quotient_squared.verdict);
  cancel_report["second_order_ratio"] = cancel.second_order_ratio;
  cancel_report["second_order_ratio_half_cut"] = cancel.second_order_ratio_half;
  report["canceling"] = cancel_report;
  if (cancel.quotient_gradient.verdict != quadrature::GrowthVerdict::Bounded ||
      cancel.gradient_over_d.verdict != quadrature::GrowthVerdict::Unbounded ||
      cancel.quotient_squared.verdict != quadrature::GrowthVerdict::Unbounded)
    status = std::max(status, kExitMathFail);

  report["ok"] = status == kExitOk;
  csv = csv_out.str();
  return status;
}

// ---------------------------------------------------------------- estimate

int run_estimate(const config::RunConfig& cfg, json& report) {
  if (cfg.search.budget < 1) {
    std::cerr << "estimate: budget must be >= 1\n";
    return kExitUsage;
  }
  inequalities::InequalityCase c;
  c.id = inequalities::CaseId::OneD;
  c.domain = norms::Domain::half_line();
  c.n = 1;
  c.m = 2;
  c.k = 1;
  c.p = 2;
  c.alpha = 0;
  if (!cfg.cases.empty()) {
    c = cfg.cases.front().inequality_case;
    if (c.id != inequalities::CaseId::OneD || !inequalities::validate_params(c).valid) {
      std::cerr << "estimate: first configured case must be a valid OneD case\n";
      return kExitUsage;
    }
  }

  constsearch::SearchSpace space;
  space.names = {"support_start", "support_width", "smoothness"};
  space.lo = cfg.search.lo;
  space.hi = cfg.search.hi;
  space.start = cfg.search.start;
  space.budget = cfg.search.budget;
  space.seed = cfg.search.seed;
  space.initial_step = cfg.search.initial_step;

  const auto fn = constsearch::oned_ratio_evaluator(c, cfg.quadrature.tol);
  const auto result = constsearch::maximize_ratio(fn, space, 1e-4);
  const Rational bound = inequalities::hardy_upper_bound(c.m, c.k, c.p, c.alpha);

  report["best_params"] = result.best_params;
  report["best_ratio"] = result.best_ratio;
  report["stagnated"] = result.stagnated;
  report["evaluations"] = result.trace.size();
  report["analytic_upper_bound"] = rational_to_string(bound);
  json trace = json::array();
  for (const auto& entry : result.trace)
    trace.push_back({{"params", entry.params},
                     {"ratio", entry.ratio},
                     {"best", entry.best_so_far}});
  report["trace"] = trace;

  const double bound_d = bound.convert_to<double>();
  report["ok"] = result.best_ratio <= bound_d + 1e-6;
  return result.best_ratio <= bound_d + 1e-6 ? kExitOk : kExitMathFail;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) grid.push_back(std::stod(item));
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted quotient-inequality laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path, format, out_path, lambda_text;
  unsigned long seed_flag = 0;
  bool seed_set = false, tol_set = false;
  double tol_flag = 0;
  int workers_flag = 0;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--seed", seed_flag, "seed override")->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("--tol", tol_flag, "quadrature tolerance override")
      ->each([&](const std::string&) { tol_set = true; });
  app.add_option("--workers", workers_flag, "max concurrent case evaluations");
  app.add_option("--lambda-grid", lambda_text, "comma-separated scaling factors");

  auto* cmd_identity = app.add_subcommand("identity", "exact identity suites");
  int k_max = 4, n_max = 4, trials = 10;
  bool inject_fault = false;
  cmd_identity->add_option("--k-max", k_max, "max subset size");
  cmd_identity->add_option("--n-max", n_max, "max dimension");
  cmd_identity->add_option("--trials", trials, "random tuples per k");
  cmd_identity->add_flag("--inject-fault", inject_fault)->group("");  // test hook

  auto* cmd_check = app.add_subcommand("check", "inequality ratio checks");
  auto* cmd_sharpness = app.add_subcommand("sharpness", "scaling and failure demos");
  auto* cmd_estimate = app.add_subcommand("estimate", "best-constant search");
  auto* cmd_all = app.add_subcommand("all", "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    config::RunConfig cfg = default_check_config();
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) {
        std::cerr << "cannot read config file " << config_path << "\n";
        return kExitUsage;
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      cfg = config::parse_config(buffer.str());
    }
    if (seed_set) {
      cfg.seed = seed_flag;
      cfg.search.seed = seed_flag;
    }
    if (tol_set) cfg.quadrature.tol = tol_flag;
    if (workers_flag > 0) cfg.workers = workers_flag;
    if (!format.empty()) cfg.format = format;
    if (!out_path.empty()) cfg.out = out_path;
    if (!lambda_text.empty()) cfg.lambda_grid = parse_lambda_grid(lambda_text);

    int status = kExitOk;
    json report;
    std::string csv;

    if (cmd_identity->parsed() || cmd_all->parsed()) {
      json part;
      status = std::max(status, run_identity(k_max, n_max, trials, cfg.seed,
                                             inject_fault, part));
      report["identity"] = part;
      if (status == kExitUsage) return status;
    }
    if (cmd_check->parsed() || cmd_all->parsed()) {
      json part;
      std::string part_csv;
      status = std::max(status, run_check(cfg, part, part_csv));
      report["check"] = part;
      csv += part_csv;
    }
    if (cmd_sharpness->parsed() || cmd_all->parsed()) {
      json part;
      std::string part_csv;
      const int s = run_sharpness(cfg, part, part_csv);
      if (s == kExitUsage) return s;
      status = std::max(status, s);
      report["sharpness"] = part;
      csv += part_csv;
    }
    if (cmd_estimate->parsed() || cmd_all->parsed()) {
      json part;
      const int s = run_estimate(cfg, part);
      if (s == kExitUsage) return s;
      status = std::max(status, s);
      report["estimate"] = part;
    }

    emit(cfg.format == "csv" ? csv : report.dump(2), cfg.out);
    return status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
