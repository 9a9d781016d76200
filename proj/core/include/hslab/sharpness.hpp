#pragma once

#include <utility>
#include <vector>

#include "hslab/funcspace.hpp"
#include "hslab/inequalities.hpp"
#include "hslab/quadrature.hpp"

namespace hslab::sharpness {

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double max_residual = 0;  // worst |log value - fit| over the grid
};

/// Unweighted least squares on (log lambda, log value); needs >= 4 points.
SlopeFit fit_loglog_slope(const std::vector<double>& lambdas,
                          const std::vector<double>& values);

/// How the trial family is scaled:
///   Interior  u(c + lambda(x - c)) around a fixed interior point; the
///             distance weight is asymptotically constant on the support.
///   Boundary  u(lambda x); the support slides toward the boundary face.
enum class ScalingSetting { Interior, Boundary };

/// Exact growth exponents of both sides of the scaled inequality, as
/// (lhs_exponent, rhs_exponent):
///   Interior  (k - n/q,            m - n/p)
///   Boundary  (-r/q + m - n/q,     m - 1 + (1-n)/p)
/// The right side is the dominant (order-m) term of the norm sum.
std::pair<double, double> predicted_exponents(const inequalities::InequalityCase& c,
                                              ScalingSetting setting);

struct ScalingExperiment {
  inequalities::InequalityCase inequality_case;
  ScalingSetting setting = ScalingSetting::Boundary;
  std::vector<double> lambda_grid;
  std::vector<double> lhs, rhs, ratio;
  double predicted_lhs_exponent = 0;
  double predicted_rhs_exponent = 0;
  SlopeFit lhs_fit, rhs_fit, ratio_fit;
  bool blow_up = false;  // fitted ratio slope significantly positive
};

/// Evaluates both sides of the case for u scaled by each lambda and fits
/// log-log slopes. For Interior, center gives the fixed point (defaults to
/// the support box midpoint). blow_up is set when the fitted ratio slope
/// exceeds slope_margin.
ScalingExperiment scaling_sweep(const inequalities::InequalityCase& c,
                                const funcspace::TrialFunctionND& u,
                                ScalingSetting setting,
                                const std::vector<double>& lambda_grid, double rel_tol,
                                std::vector<double> center = {},
                                double slope_margin = 0.02);

/// One row per trial log-decay exponent: the truncated numerator integrals
/// of the first-order quotient inequality at its critical weight, with the
/// trial w = log^{-alpha_log}(1/r) (cut off). The numerator integrand is
/// r^{-1} log^{-p alpha_log}(1/r): divergent exactly when p*alpha_log <= 1,
/// while the W^{1,p} denominator stays bounded.
struct CriticalFailureReport {
  double p = 2;
  double epsilon_cut = 1e-3;
  struct Row {
    double alpha_log = 0;
    quadrature::DivergenceProbe numerator;
    quadrature::GrowthVerdict denominator_verdict = quadrature::GrowthVerdict::Slow;
    double denominator_value = 0;  // truncated at the smallest epsilon
    std::vector<double> ratios;    // per-epsilon lhs/rhs
  };
  std::vector<Row> rows;
};

CriticalFailureReport critical_failure_demo(double p,
                                            const std::vector<double>& alpha_log_grid,
                                            double epsilon_cut = 1e-3);

/// For u = r log^{-alpha_log}(1/r) (cut off) at the critical weight d^{p-1}:
/// the gradient of the quotient u/d integrates, while the two pointwise
/// majorants |grad u|/d and u/d^2 do not — the cancellation that makes the
/// second-order quotient inequality possible.
struct CancelingReport {
  double p = 2;
  double alpha_log = 0.5;
  double epsilon_cut = 1e-3;
  quadrature::DivergenceProbe quotient_gradient;  // |(u/d)'|,   expected bounded
  quadrature::DivergenceProbe gradient_over_d;    // |u'|/d,     expected unbounded
  quadrature::DivergenceProbe quotient_squared;   // |u|/d^2,    expected unbounded
  double second_order_ratio = 0;       // ||u/d||_{W^{1,p}} / ||u||_{W^{2,p}}, weight d^{p-1}
  double second_order_ratio_half = 0;  // same with epsilon_cut halved
};

CancelingReport canceling_demo(double p, double alpha_log, double epsilon_cut = 1e-3,
                               double norm_tol = 1e-3);

}  // namespace hslab::sharpness
