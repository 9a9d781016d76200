#include "doctest.h"
#include "hslab/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hslab;
using namespace hslab::norms;
using funcspace::TrialFunction1D;
using funcspace::TrialFunctionND;

namespace {

// f(r) = r on [0, 1] with exact derivatives, for closed-form norm checks.
TrialFunction1D linear_ramp() {
  return TrialFunction1D({"custom", {}}, 0, 1, 3, [](int order, double r) {
    if (order == 0) return r;
    if (order == 1) return 1.0;
    return 0.0;
  });
}

TrialFunction1D scaled_copy(const TrialFunction1D& f, double c) {
  auto inner = f;
  return TrialFunction1D(f.descriptor(), f.support_lo(), f.support_hi(), f.max_order(),
                         [inner, c](int order, double r) {
                           return c * inner.derivative(order, r);
                         });
}

TrialFunction1D sum_of(const TrialFunction1D& f, const TrialFunction1D& g) {
  auto a = f;
  auto b = g;
  return TrialFunction1D({"custom", {}}, std::min(f.support_lo(), g.support_lo()),
                         std::max(f.support_hi(), g.support_hi()),
                         std::min(f.max_order(), g.max_order()),
                         [a, b](int order, double r) {
                           return a.derivative(order, r) + b.derivative(order, r);
                         });
}

}  // namespace

TEST_CASE("unweighted norm of the linear ramp has a closed form") {
  const TrialFunctionND u({linear_ramp()});
  WeightedNormSpec spec{1, 0, {0, 1}, Domain::half_line()};
  const auto norm = sobolev_norm(u, spec, 1e-9);
  CHECK(norm.converged);
  CHECK(norm.value == doctest::Approx(1.5).epsilon(1e-8));  // 1/2 + 1

  const TrialFunctionND zero({TrialFunction1D(
      {"custom", {}}, 0, 1, 3, [](int, double) { return 0.0; })});
  CHECK(sobolev_norm(zero, spec, 1e-6).value == 0);
}

TEST_CASE("norms are absolutely homogeneous") {
  const auto f = funcspace::make_poly_bump(0.5, 2, 5);
  const TrialFunctionND u({f});
  const TrialFunctionND cu({scaled_copy(f, -3.5)});
  WeightedNormSpec spec{2, 1, {0, 1, 2}, Domain::half_line()};
  const double base = sobolev_norm(u, spec, 1e-8).value;
  CHECK(sobolev_norm(cu, spec, 1e-8).value ==
        doctest::Approx(3.5 * base).epsilon(1e-10));
}

TEST_CASE("triangle inequality on bump pairs") {
  const auto f = funcspace::make_poly_bump(0.5, 2, 5);
  const auto g = funcspace::make_poly_bump(1, 3, 5);
  WeightedNormSpec spec{2, 0.5, {0, 1}, Domain::half_line()};
  const double nf = sobolev_norm(TrialFunctionND({f}), spec, 1e-8).value;
  const double ng = sobolev_norm(TrialFunctionND({g}), spec, 1e-8).value;
  const double nsum = sobolev_norm(TrialFunctionND({sum_of(f, g)}), spec, 1e-8).value;
  CHECK(nsum <= nf + ng + 1e-9);
}

TEST_CASE("order-0 quotient norm equals the norm of the divided function") {
  const auto f = funcspace::make_poly_bump(0.5, 2, 5);
  const TrialFunctionND u({f});
  QuotientSpec qs{1, 0, 2, 0.5, Domain::half_line()};
  const double via_quotient = quotient_norm(u, qs, 1e-8).value;

  auto inner = f;
  const TrialFunctionND divided({TrialFunction1D(
      {"custom", {}}, f.support_lo(), f.support_hi(), 0,
      [inner](int, double r) { return inner.value(r) / r; })});
  WeightedNormSpec spec{2, 0.5, {0}, Domain::half_line()};
  CHECK(via_quotient ==
        doctest::Approx(sobolev_norm(divided, spec, 1e-8).value).epsilon(1e-8));
}

TEST_CASE("quotient by the vertical coordinate cancels a linear factor") {
  // u = g(x1) * x2 on a box: u / x2 = g(x1), so the order-0 quotient norm
  // factorizes into a 1D norm of g times the weight mass in x2.
  const auto g = funcspace::make_poly_bump(-0.3, 0.3, 5);
  const auto u = funcspace::tensorize(linear_ramp(), {g}, 2);
  QuotientSpec qs{1, 0, 2, 1, Domain::half_space(2)};
  const double norm = quotient_norm(u, qs, 1e-8).value;

  const double g_mass =
      quadrature::integrate_1d([&](double x) { return g.value(x) * g.value(x); },
                               -0.3, 0.3, 1e-10, false)
          .value;
  const double weight_mass = 0.5;  // int_0^1 x dx
  CHECK(norm == doctest::Approx(std::sqrt(g_mass * weight_mass)).epsilon(1e-7));
}

TEST_CASE("quotient seminorms match an analytically divided oracle") {
  // f / x^c expanded in the test with its own exact derivatives.
  const auto f = funcspace::make_poly_bump(0.5, 2, 6);
  const int c = 2;
  auto inner = f;
  auto quotient_eval = [inner, c](int order, double r) {
    double binom = 1, sum = 0;
    for (int i = 0; i <= order; ++i) {
      double ff = 1;
      for (int t = 0; t < order - i; ++t) ff *= -c - t;
      sum += binom * inner.derivative(i, r) * ff * std::pow(r, -c - order + i);
      binom = binom * (order - i) / (i + 1);
    }
    return sum;
  };
  const TrialFunctionND u({f});
  const TrialFunctionND divided({TrialFunction1D(
      {"custom", {}}, f.support_lo(), f.support_hi(), f.max_order(), quotient_eval)});

  for (int j : {0, 1, 2}) {
    const double via_quotient =
        weighted_seminorm(u, Domain::half_line(), j, 2, 1.5, c, 1e-9).value;
    const double via_oracle =
        weighted_seminorm(divided, Domain::half_line(), j, 2, 1.5, 0, 1e-9).value;
    CHECK(via_quotient == doctest::Approx(via_oracle).epsilon(1e-9));
  }
}

TEST_CASE("vertical quotient derivative matches a finite difference") {
  // v = u / x2 for u = bump(x1) * ramp(x2)^2-style factor; compare the
  // analytic first vertical derivative table against finite differences of
  // pointwise quotients.
  const auto f = funcspace::make_poly_bump(0.1, 0.45, 6);
  const auto g = funcspace::make_poly_bump(-0.3, 0.3, 6);
  const auto u = funcspace::tensorize(f, {g}, 2);

  auto quotient = [&](double x1, double x2) { return u.value({x1, x2}) / x2; };
  const double x1 = 0.1, x2 = 0.3, h = 1e-5;
  const double fd =
      (-quotient(x1, x2 + 2 * h) + 8 * quotient(x1, x2 + h) -
       8 * quotient(x1, x2 - h) + quotient(x1, x2 - 2 * h)) /
      (12 * h);
  const double analytic =
      g.value(x1) * (f.derivative(1, x2) / x2 - f.value(x2) / (x2 * x2));
  CHECK(analytic == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("refinement stability for weighted bump norms") {
  const auto u = funcspace::TrialFunctionND({funcspace::make_poly_bump(0.5, 2, 6)});
  WeightedNormSpec spec{2, 1, {0, 1, 2}, Domain::half_line()};
  const auto norm = sobolev_norm(u, spec, 1e-6);
  CHECK(norm.converged);
  CHECK(norm.error_estimate < 1e-5 * norm.value + 1e-12);
}

TEST_CASE("support validation per domain") {
  const TrialFunctionND wide({funcspace::make_poly_bump(0.1, 0.8, 5)});
  CHECK_THROWS_AS(check_support(Domain::interval01(), wide), std::invalid_argument);
  CHECK_NOTHROW(check_support(Domain::half_line(), wide));

  const TrialFunctionND narrow({funcspace::make_poly_bump(0.1, 0.45, 5)});
  CHECK_NOTHROW(check_support(Domain::interval01(), narrow));

  const auto u2 = funcspace::tensorize(funcspace::make_poly_bump(0.1, 0.45, 5),
                                       {funcspace::make_poly_bump(-1, 1, 5)}, 2);
  CHECK_NOTHROW(check_support(Domain::strip(2), u2));
  CHECK_THROWS_AS(check_support(Domain::interval01(), u2), std::invalid_argument);
  CHECK_THROWS_AS(check_support(Domain::half_space(1), wide), std::invalid_argument);
}
