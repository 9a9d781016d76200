#include "hslab/sharpness.hpp"

#include <cmath>
#include <stdexcept>

#include "hslab/norms.hpp"

namespace hslab::sharpness {

namespace {

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace

SlopeFit fit_loglog_slope(const std::vector<double>& lambdas,
                          const std::vector<double>& values) {
  if (lambdas.size() != values.size())
    throw std::invalid_argument("fit_loglog_slope: length mismatch");
  if (lambdas.size() < 4)
    throw std::invalid_argument("fit_loglog_slope: need at least 4 points");

  const std::size_t n = lambdas.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambdas[i] > 0) || !(values[i] > 0))
      throw std::invalid_argument("fit_loglog_slope: data must be positive");
    xs[i] = std::log(lambdas[i]);
    ys[i] = std::log(values[i]);
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  SlopeFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < n; ++i)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - fit.slope * xs[i] - fit.intercept));
  return fit;
}

std::pair<double, double> predicted_exponents(const inequalities::InequalityCase& c,
                                              ScalingSetting setting) {
  if (c.id != inequalities::CaseId::MainQuotient)
    throw std::invalid_argument("predicted_exponents: only the main quotient case scales");
  const double n = c.n;
  const double p = to_double(c.p);
  const double q = to_double(c.q);
  const double r = to_double(c.r);
  if (setting == ScalingSetting::Interior) return {c.k - n / q, c.m - n / p};
  return {-r / q + c.m - n / q, c.m - 1 + (1 - n) / p};
}

ScalingExperiment scaling_sweep(const inequalities::InequalityCase& c,
                                const funcspace::TrialFunctionND& u,
                                ScalingSetting setting,
                                const std::vector<double>& lambda_grid, double rel_tol,
                                std::vector<double> center, double slope_margin) {
  if (lambda_grid.size() < 4)
    throw std::invalid_argument("scaling_sweep: need at least 4 lambda values");
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > 1))
      throw std::invalid_argument("scaling_sweep: lambdas must exceed 1");
    if (i > 0 && lambda_grid[i] <= lambda_grid[i - 1])
      throw std::invalid_argument("scaling_sweep: lambdas must increase strictly");
  }

  ScalingExperiment exp;
  exp.inequality_case = c;
  exp.setting = setting;
  exp.lambda_grid = lambda_grid;
  std::tie(exp.predicted_lhs_exponent, exp.predicted_rhs_exponent) =
      predicted_exponents(c, setting);

  if (setting == ScalingSetting::Interior && center.empty()) {
    for (int d = 0; d < u.dimension(); ++d) {
      auto [lo, hi] = u.support(d);
      center.push_back(0.5 * (lo + hi));
    }
  }

  for (double lambda : lambda_grid) {
    const funcspace::TrialFunctionND scaled =
        setting == ScalingSetting::Boundary ? funcspace::scale(u, lambda)
                                            : funcspace::scale_about(u, center, lambda);
    auto report = inequalities::ratio_report(c, scaled, rel_tol);
    if (report.degenerate)
      throw std::invalid_argument("scaling_sweep: degenerate trial function");
    exp.lhs.push_back(report.lhs.value);
    exp.rhs.push_back(report.rhs.value);
    exp.ratio.push_back(report.ratio);
  }

  exp.lhs_fit = fit_loglog_slope(lambda_grid, exp.lhs);
  exp.rhs_fit = fit_loglog_slope(lambda_grid, exp.rhs);
  exp.ratio_fit = fit_loglog_slope(lambda_grid, exp.ratio);
  exp.blow_up = exp.ratio_fit.slope > slope_margin;
  return exp;
}

CriticalFailureReport critical_failure_demo(double p,
                                            const std::vector<double>& alpha_log_grid,
                                            double epsilon_cut) {
  if (p < 1) throw std::invalid_argument("critical_failure_demo: p must be >= 1");
  CriticalFailureReport report;
  report.p = p;
  report.epsilon_cut = epsilon_cut;

  for (double alpha_log : alpha_log_grid) {
    CriticalFailureReport::Row row;
    row.alpha_log = alpha_log;
    const auto w = funcspace::make_log_quotient(alpha_log, epsilon_cut);
    const double hi = w.support_hi();

    // Numerator: int d^{p-1} |w/d|^p = int r^{-1} |w|^p.
    auto numerator = [&](double r) {
      return std::pow(r, p - 1) * std::pow(std::abs(w.value(r)) / r, p);
    };
    row.numerator = quadrature::divergence_probe(numerator, hi);

    // Denominator: both seminorm integrands of ||w||_{W^{1,p}(d^{p-1})}.
    auto den0 = [&](double r) { return std::pow(r, p - 1) * std::pow(std::abs(w.value(r)), p); };
    auto den1 = [&](double r) {
      return std::pow(r, p - 1) * std::pow(std::abs(w.derivative(1, r)), p);
    };
    auto combined = [&](double r) { return den0(r) + den1(r); };
    auto den_probe = quadrature::divergence_probe(combined, hi);
    row.denominator_verdict = den_probe.verdict;

    auto probe0 = quadrature::divergence_probe(den0, hi);
    auto probe1 = quadrature::divergence_probe(den1, hi);
    row.denominator_value = std::pow(probe0.values.back(), 1 / p) +
                            std::pow(probe1.values.back(), 1 / p);
    for (double value : row.numerator.values)
      row.ratios.push_back(std::pow(value, 1 / p) / row.denominator_value);

    report.rows.push_back(std::move(row));
  }
  return report;
}

CancelingReport canceling_demo(double p, double alpha_log, double epsilon_cut,
                               double norm_tol) {
  if (p < 1) throw std::invalid_argument("canceling_demo: p must be >= 1");
  CancelingReport report;
  report.p = p;
  report.alpha_log = alpha_log;
  report.epsilon_cut = epsilon_cut;

  const auto u = funcspace::make_log_family(alpha_log, epsilon_cut);
  const auto w = funcspace::make_log_quotient(alpha_log, epsilon_cut);  // u/d exactly
  const double hi = u.support_hi();

  auto weighted = [p](double r, double magnitude) {
    return std::pow(r, p - 1) * std::pow(magnitude, p);
  };
  report.quotient_gradient = quadrature::divergence_probe(
      [&](double r) { return weighted(r, std::abs(w.derivative(1, r))); }, hi);
  report.gradient_over_d = quadrature::divergence_probe(
      [&](double r) { return weighted(r, std::abs(u.derivative(1, r)) / r); }, hi);
  report.quotient_squared = quadrature::divergence_probe(
      [&](double r) { return weighted(r, std::abs(u.value(r)) / (r * r)); }, hi);

  auto second_ratio = [&](double cut) {
    const auto trial = funcspace::TrialFunctionND({funcspace::make_log_family(alpha_log, cut)});
    inequalities::InequalityCase c;
    c.id = inequalities::CaseId::SecondOrder;
    c.domain = norms::Domain::interval01();
    c.n = 1;
    c.m = 2;
    c.k = 1;
    c.p = Rational(p);
    return inequalities::ratio_report(c, trial, norm_tol).ratio;
  };
  report.second_order_ratio = second_ratio(epsilon_cut);
  report.second_order_ratio_half = second_ratio(epsilon_cut / 2);
  return report;
}

}  // namespace hslab::sharpness
