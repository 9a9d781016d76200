#include "doctest.h"
#include "hslab/sharpness.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hslab;
using namespace hslab::sharpness;

namespace {

inequalities::InequalityCase strip_case(Rational r) {
  inequalities::InequalityCase c;
  c.id = inequalities::CaseId::MainQuotient;
  c.domain = norms::Domain::strip(2);
  c.n = 2;
  c.m = 2;
  c.k = 1;
  c.p = 2;
  c.q = 2;
  c.alpha = Rational(1, 2);
  c.beta = Rational(1, 2);
  c.r = std::move(r);
  return c;
}

funcspace::TrialFunctionND strip_trial() {
  return funcspace::tensorize(funcspace::make_poly_bump(0.05, 0.25, 4),
                              {funcspace::make_poly_bump(-0.1, 0.1, 4)}, 2);
}

}  // namespace

TEST_CASE("log-log fit recovers exact power laws") {
  const std::vector<double> lambdas = {2, 4, 8, 16, 32};
  for (double s : {-1.5, 0.0, 0.75}) {
    std::vector<double> values;
    for (double l : lambdas) values.push_back(3.7 * std::pow(l, s));
    const auto fit = fit_loglog_slope(lambdas, values);
    CHECK(fit.slope == doctest::Approx(s).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.7)).epsilon(1e-10));
    CHECK(fit.max_residual < 1e-12);
  }
  CHECK_THROWS_AS(fit_loglog_slope({2, 4, 8}, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(fit_loglog_slope(lambdas, {1, 1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("predicted growth exponents for reference parameter points") {
  SUBCASE("boundary scaling on the strip") {
    auto c = strip_case(1);
    auto [lhs, rhs] = predicted_exponents(c, ScalingSetting::Boundary);
    CHECK(lhs == doctest::Approx(0.5));   // -1/2 + 2 - 1
    CHECK(rhs == doctest::Approx(0.5));   // 1 - 1/2
    c.r = 0;
    auto [lhs0, rhs0] = predicted_exponents(c, ScalingSetting::Boundary);
    CHECK(lhs0 == doctest::Approx(1.0));
    CHECK(rhs0 == doctest::Approx(0.5));  // ratio would grow like lambda^{1/2}
  }
  SUBCASE("interior scaling is always sub-critical") {
    auto c = strip_case(1);
    c.n = 3;
    c.domain = norms::Domain::strip(3);
    c.q = 4;
    c.r = 5;
    auto [lhs, rhs] = predicted_exponents(c, ScalingSetting::Interior);
    CHECK(lhs == doctest::Approx(0.25));  // 1 - 3/4
    CHECK(rhs == doctest::Approx(0.5));   // 2 - 3/2
  }
  SUBCASE("only the quotient case has a scaling prediction") {
    auto c = strip_case(1);
    c.id = inequalities::CaseId::FirstOrder;
    CHECK_THROWS_AS(predicted_exponents(c, ScalingSetting::Boundary),
                    std::invalid_argument);
  }
}

TEST_CASE("boundary scaling sweep matches the predicted slopes") {
  const std::vector<double> lambdas = {2, 4, 8, 16};
  const auto u = strip_trial();

  SUBCASE("valid weight: ratio stays level") {
    const auto exp = scaling_sweep(strip_case(1), u, ScalingSetting::Boundary, lambdas,
                                   1e-6);
    CHECK(exp.lhs_fit.slope ==
          doctest::Approx(exp.predicted_lhs_exponent).epsilon(0.05));
    CHECK(exp.rhs_fit.slope ==
          doctest::Approx(exp.predicted_rhs_exponent).epsilon(0.05));
    CHECK(std::abs(exp.ratio_fit.slope) < 0.02);
    CHECK(!exp.blow_up);
  }
  SUBCASE("sub-critical weight: ratio blows up at the predicted rate") {
    const auto exp = scaling_sweep(strip_case(0), u, ScalingSetting::Boundary, lambdas,
                                   1e-6);
    CHECK(exp.ratio_fit.slope == doctest::Approx(0.5).epsilon(0.05));
    CHECK(exp.blow_up);
  }
  SUBCASE("lambda grid validation") {
    CHECK_THROWS_AS(scaling_sweep(strip_case(1), u, ScalingSetting::Boundary, {2, 4, 8},
                                  1e-4),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaling_sweep(strip_case(1), u, ScalingSetting::Boundary,
                                  {2, 4, 4, 8}, 1e-4),
                    std::invalid_argument);
  }
}

TEST_CASE("interior scaling sweep: ratio decays away from the boundary") {
  const std::vector<double> lambdas = {2, 4, 8, 16};
  const auto exp = scaling_sweep(strip_case(1), strip_trial(), ScalingSetting::Interior,
                                 lambdas, 1e-6);
  // Interior prediction: lhs ~ lambda^0, rhs ~ lambda^1, ratio shrinks.
  CHECK(exp.predicted_lhs_exponent == doctest::Approx(0.0));
  CHECK(exp.predicted_rhs_exponent == doctest::Approx(1.0));
  CHECK(exp.ratio_fit.slope < 0);
  CHECK(!exp.blow_up);
}

TEST_CASE("critical-weight failure: truncations diverge only below the threshold") {
  const auto report = critical_failure_demo(2, {0.5, 1.0});
  REQUIRE(report.rows.size() == 2);

  const auto& divergent = report.rows[0];
  CHECK(divergent.numerator.verdict == quadrature::GrowthVerdict::Unbounded);
  CHECK(divergent.denominator_verdict == quadrature::GrowthVerdict::Bounded);
  REQUIRE(divergent.ratios.size() == divergent.numerator.epsilons.size());
  for (std::size_t i = 1; i < divergent.ratios.size(); ++i)
    CHECK(divergent.ratios[i] > divergent.ratios[i - 1]);
  CHECK(divergent.ratios.back() > 1.5 * divergent.ratios.front());

  const auto& convergent = report.rows[1];  // p * alpha_log = 2 > 1
  CHECK(convergent.numerator.verdict != quadrature::GrowthVerdict::Unbounded);
  CHECK(convergent.denominator_verdict == quadrature::GrowthVerdict::Bounded);

  CHECK_THROWS_AS(critical_failure_demo(0.5, {0.5}), std::invalid_argument);
}

TEST_CASE("canceling effect at the critical weight") {
  const auto report = canceling_demo(2, 0.5);
  CHECK(report.quotient_gradient.verdict == quadrature::GrowthVerdict::Bounded);
  CHECK(report.gradient_over_d.verdict == quadrature::GrowthVerdict::Unbounded);
  CHECK(report.quotient_squared.verdict == quadrature::GrowthVerdict::Unbounded);
  CHECK(report.second_order_ratio > 0);
  // Halving the cutoff leaves the second-order ratio stable: the quotient
  // norm does not chase the divergence of its pointwise majorants.
  CHECK(report.second_order_ratio_half ==
        doctest::Approx(report.second_order_ratio).epsilon(0.05));
}
