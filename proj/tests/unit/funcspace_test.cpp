#include "doctest.h"
#include "hslab/funcspace.hpp"
#include "hslab/multiindex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hslab;
using namespace hslab::funcspace;

namespace {

// Fourth-order central difference of an order-(j-1) derivative.
double finite_difference(const TrialFunction1D& f, int order, double r, double h) {
  auto g = [&](double x) { return f.derivative(order - 1, x); };
  return (-g(r + 2 * h) + 8 * g(r + h) - 8 * g(r - h) + g(r - 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("polynomial bump values and support") {
  const auto f = make_poly_bump(1, 2, 3);
  CHECK(f.value(1.5) == doctest::Approx(std::pow(0.5, 6)).epsilon(1e-14));
  CHECK(f.value(1.25) == doctest::Approx(std::pow(0.25, 3) * std::pow(0.75, 3)));
  CHECK(f.value(0.9) == 0);
  CHECK(f.value(2.1) == 0);
  CHECK(f.derivative(2, 0.5) == 0);
  CHECK(f.max_order() == 2);
  CHECK(f.support_lo() == 1);
  CHECK(f.support_hi() == 2);
  CHECK_THROWS_AS(f.derivative(3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_poly_bump(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_poly_bump(1, 2, 1), std::invalid_argument);
}

TEST_CASE("polynomial bump derivatives match finite differences") {
  const auto f = make_poly_bump(0.5, 2.5, 6);
  for (int order = 1; order <= 5; ++order) {
    for (double r : {0.7, 1.1, 1.5, 2.0, 2.3}) {
      const double fd = finite_difference(f, order, r, 1e-4);
      const double analytic = f.derivative(order, r);
      CHECK(analytic == doctest::Approx(fd).epsilon(1e-6).scale(std::abs(analytic) + 1));
    }
  }
}

TEST_CASE("polynomial bump vanishes smoothly at the support edges") {
  const auto f = make_poly_bump(1, 2, 4);
  for (int order = 0; order <= 3; ++order) {
    // Order-j derivative decays like distance^(M-j) at an edge of order M.
    const double bound = 100 * std::pow(1e-6, 4 - order);
    CHECK(std::abs(f.derivative(order, 1 + 1e-6)) < bound);
    CHECK(std::abs(f.derivative(order, 2 - 1e-6)) < bound);
    CHECK(f.derivative(order, 0.99) == 0);
    CHECK(f.derivative(order, 2.01) == 0);
  }
}

TEST_CASE("log profiles: direct formula inside the flat region") {
  const double alpha = 0.5, cut = 1e-3;
  const auto u = make_log_family(alpha, cut);
  const auto w = make_log_quotient(alpha, cut);
  for (double r : {1e-8, 1e-6, 1e-4, 5e-4}) {
    const double log_inv = std::log(1 / r);
    CHECK(u.value(r) == doctest::Approx(r * std::pow(log_inv, -alpha)).epsilon(1e-13));
    CHECK(w.value(r) == doctest::Approx(std::pow(log_inv, -alpha)).epsilon(1e-13));
    CHECK(u.value(r) == doctest::Approx(r * w.value(r)).epsilon(1e-13));
  }
  CHECK(u.value(3e-3) == 0);  // past the cutoff band
  CHECK(u.support_hi() == doctest::Approx(2 * cut));
  CHECK_THROWS_AS(make_log_family(0, cut), std::invalid_argument);
  CHECK_THROWS_AS(make_log_family(0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(u.derivative(0, 0.0), std::domain_error);
}

TEST_CASE("log profile derivatives match finite differences, including the blend") {
  for (double alpha : {0.5, 1.0}) {
    const auto u = make_log_family(alpha, 1e-3);
    for (int order = 1; order <= 3; ++order) {
      for (double r : {2e-4, 9e-4, 1.2e-3, 1.5e-3, 1.9e-3}) {
        const double fd = finite_difference(u, order, r, r * 1e-3);
        const double analytic = u.derivative(order, r);
        CHECK(analytic ==
              doctest::Approx(fd).epsilon(1e-5).scale(std::abs(analytic) + 1e-6));
      }
    }
  }
}

TEST_CASE("cutoff blend is continuous at both band edges") {
  const auto u = make_log_quotient(0.5, 1e-3);
  for (int order = 0; order <= 3; ++order) {
    CHECK(u.derivative(order, 1e-3 * (1 - 1e-9)) ==
          doctest::Approx(u.derivative(order, 1e-3 * (1 + 1e-9)))
              .epsilon(1e-5)
              .scale(std::abs(u.derivative(order, 1e-3)) + 1e-9));
    // The blend is C^3, so orders 0..2 decay toward the outer edge; the
    // order-3 derivative only reaches 0 exactly at (and past) the edge.
    if (order <= 2) CHECK(std::abs(u.derivative(order, 2e-3 * (1 - 1e-9))) < 1e-6);
    CHECK(u.derivative(order, 2e-3) == 0);
  }
}

TEST_CASE("scaling a 1D profile") {
  const auto f = make_poly_bump(1, 2, 4);
  const auto g = scale_1d(f, 2.0);
  CHECK(g.support_lo() == doctest::Approx(0.5));
  CHECK(g.support_hi() == doctest::Approx(1.0));
  CHECK(g.value(0.75) == doctest::Approx(f.value(1.5)));
  CHECK(g.derivative(2, 0.75) == doctest::Approx(4 * f.derivative(2, 1.5)));

  const auto h = scale_1d_about(f, 1.5, 4.0);
  CHECK(h.value(1.5) == doctest::Approx(f.value(1.5)));
  CHECK(h.support_lo() == doctest::Approx(1.375));
  CHECK(h.support_hi() == doctest::Approx(1.625));
  CHECK(h.derivative(1, 1.6) == doctest::Approx(4 * f.derivative(1, 1.9)));
  CHECK_THROWS_AS(scale_1d(f, 0.0), std::invalid_argument);
}

TEST_CASE("tensor products: partials factorize") {
  const auto u = tensorize(make_poly_bump(0.1, 0.4, 5),
                           {make_poly_bump(-0.3, 0.3, 5)}, 2);
  CHECK(u.dimension() == 2);
  const std::vector<double> x = {0.1, 0.2};
  CHECK(u.value(x) ==
        doctest::Approx(u.factor(0).value(0.1) * u.factor(1).value(0.2)));
  CHECK(u.partial({1, 2}, x) == doctest::Approx(u.factor(0).derivative(1, 0.1) *
                                                u.factor(1).derivative(2, 0.2)));
  CHECK(u.partial({0, 0}, {5.0, 0.2}) == 0);
  CHECK_THROWS_AS(u.partial({1}, x), std::invalid_argument);
  CHECK_THROWS_AS(tensorize(make_poly_bump(0.1, 0.4, 5), {}, 2), std::invalid_argument);
}

TEST_CASE("tensor scaling shrinks supports correctly") {
  const auto u = tensorize(make_poly_bump(0.1, 0.4, 5),
                           {make_poly_bump(-0.3, 0.3, 5)}, 2);
  const auto v = funcspace::scale(u, 4.0);
  CHECK(v.support(1).first == doctest::Approx(0.025));
  CHECK(v.support(1).second == doctest::Approx(0.1));
  CHECK(v.value({0.05, 0.05}) == doctest::Approx(u.value({0.2, 0.2})));
  CHECK_THROWS_AS(funcspace::scale(u, 1.0), std::invalid_argument);

  const auto w = funcspace::scale_about(u, {0.0, 0.25}, 2.0);
  CHECK(w.value({0.0, 0.25}) == doctest::Approx(u.value({0.0, 0.25})));
  CHECK(w.support(1).first == doctest::Approx(0.175));
}

TEST_CASE("derivative self-check is tight for analytic families") {
  const auto u = tensorize(make_poly_bump(0.2, 0.8, 6),
                           {make_poly_bump(-0.4, 0.4, 6)}, 2);
  const std::vector<std::vector<double>> points = {
      {0.1, 0.4}, {-0.2, 0.5}, {0.3, 0.7}, {0.0, 0.3}};
  for (int order = 1; order <= 3; ++order)
    CHECK(derivative_self_check(u, order, points) < 1e-7);
  CHECK_THROWS_AS(derivative_self_check(u, 9, points), std::invalid_argument);
  const std::vector<std::vector<double>> outside = {{2.0, 0.4}};
  CHECK_THROWS_AS(derivative_self_check(u, 1, outside), std::invalid_argument);
}

TEST_CASE("multi-index enumeration") {
  const auto list = compositions(3, 2);
  CHECK(list.size() == 6);  // C(4,2)
  double total = 0;
  for (const auto& beta : list) total += multinomial_multiplicity(2, beta);
  CHECK(total == doctest::Approx(9));  // n^j ordered derivative tuples

  CHECK(multinomial_multiplicity(4, {2, 2}) == doctest::Approx(6));
  CHECK(multinomial_multiplicity(3, {3}) == doctest::Approx(1));
  CHECK(compositions(1, 5) == std::vector<std::vector<int>>{{5}});
}
