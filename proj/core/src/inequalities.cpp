#include "hslab/inequalities.hpp"

#include <cmath>
#include <stdexcept>

#include "hslab/quadrature.hpp"

namespace hslab::inequalities {

namespace {

double to_double(const Rational& x) { return x.convert_to<double>(); }

double falling_d(double start, int count) {
  double result = 1.0;
  for (int i = 0; i < count; ++i) result *= start - i;
  return result;
}

double binom_d(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result *= static_cast<double>(n - k + i) / i;
  return result;
}

}  // namespace

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::FirstOrder: return "FirstOrder";
    case CaseId::SecondOrder: return "SecondOrder";
    case CaseId::MainQuotient: return "MainQuotient";
    case CaseId::HalfSpace: return "HalfSpace";
    case CaseId::OneD: return "OneD";
    case CaseId::Interp: return "Interp";
  }
  throw std::invalid_argument("unknown case id");
}

CaseId case_id_from_string(const std::string& name) {
  if (name == "FirstOrder") return CaseId::FirstOrder;
  if (name == "SecondOrder") return CaseId::SecondOrder;
  if (name == "MainQuotient") return CaseId::MainQuotient;
  if (name == "HalfSpace") return CaseId::HalfSpace;
  if (name == "OneD") return CaseId::OneD;
  if (name == "Interp") return CaseId::Interp;
  throw std::invalid_argument("unknown case id '" + name + "'");
}

Verdict validate_params(const InequalityCase& c) {
  Verdict v;
  auto fail = [&](const std::string& name) {
    v.valid = false;
    v.violated.push_back(name);
  };
  auto check_ge = [&](const Rational& lhs, const Rational& rhs, const std::string& name) {
    if (lhs < rhs)
      fail(name);
    else if (lhs == rhs)
      v.boundary.push_back(name);
  };

  const Rational n = c.n;
  const bool needs_mk = c.id == CaseId::MainQuotient || c.id == CaseId::HalfSpace ||
                        c.id == CaseId::OneD || c.id == CaseId::Interp;
  if (needs_mk) {
    if (c.m < 2) fail("m-range");
    if (c.k < 1 || c.k > c.m - 1) fail("k-range");
  }
  if (c.p < 1) fail("p-range");

  switch (c.id) {
    case CaseId::FirstOrder:
      if (c.alpha == c.p - 1) fail("critical-alpha");
      break;
    case CaseId::SecondOrder:
      break;
    case CaseId::MainQuotient: {
      if (c.q < c.p) fail("pq-order");
      // 1/q >= (n - p(m-k)) / (n p)
      check_ge(Rational(1) / c.q, (n - c.p * (c.m - c.k)) / (n * c.p), "pq");
      // r >= (q(n-1) - p(n-q)) / p
      check_ge(c.r, (c.q * (n - 1) - c.p * (n - c.q)) / c.p, "r");
      break;
    }
    case CaseId::HalfSpace: {
      if (c.q < c.p) fail("pq-order");
      if (Rational(1) / c.p - Rational(1) / c.q != (c.beta - c.alpha) / n) fail("balance");
      if (!(c.alpha < Rational(c.k) + (c.p - 1) / c.p)) fail("alpha-upper");
      if (c.beta < c.alpha || c.beta > c.alpha + (c.m - c.k)) fail("beta-range");
      break;
    }
    case CaseId::OneD:
      if (!(c.alpha < Rational(c.k) + (c.p - 1) / c.p)) fail("alpha-upper");
      break;
    case CaseId::Interp: {
      if (c.q < c.p) fail("pq-order");
      if (Rational(1) / c.p - Rational(1) / c.q != (c.beta - c.alpha) / n) fail("balance");
      if (c.beta < c.alpha || c.beta > c.alpha + 1) fail("beta-range");
      break;
    }
  }
  return v;
}

RatioReport ratio_report(const InequalityCase& c, const funcspace::TrialFunctionND& u,
                         double rel_tol) {
  RatioReport report;
  report.inequality_case = c;
  report.trial = u.vertical().descriptor();

  const double p = to_double(c.p);
  const double q = to_double(c.q);
  const double alpha = to_double(c.alpha);
  const double beta = to_double(c.beta);
  const double r = to_double(c.r);

  switch (c.id) {
    case CaseId::FirstOrder: {
      norms::QuotientSpec lhs{1, 0, p, alpha, c.domain};
      norms::WeightedNormSpec rhs{p, alpha, {0, 1}, c.domain};
      report.lhs = norms::quotient_norm(u, lhs, rel_tol);
      report.rhs = norms::sobolev_norm(u, rhs, rel_tol);
      break;
    }
    case CaseId::SecondOrder: {
      norms::QuotientSpec lhs{1, 1, p, p - 1, c.domain};
      norms::WeightedNormSpec rhs{p, p - 1, {0, 1, 2}, c.domain};
      report.lhs = norms::quotient_norm(u, lhs, rel_tol);
      report.rhs = norms::sobolev_norm(u, rhs, rel_tol);
      break;
    }
    case CaseId::MainQuotient: {
      norms::QuotientSpec lhs{c.m - c.k, c.k, q, r, c.domain};
      norms::WeightedNormSpec rhs{p, p - 1, {}, c.domain};
      for (int j = 0; j <= c.m; ++j) rhs.orders.push_back(j);
      report.lhs = norms::quotient_norm(u, lhs, rel_tol);
      report.rhs = norms::sobolev_norm(u, rhs, rel_tol);
      break;
    }
    case CaseId::HalfSpace:
    case CaseId::OneD: {
      const double lhs_weight = (c.id == CaseId::OneD) ? alpha * p : beta * q;
      const double lhs_p = (c.id == CaseId::OneD) ? p : q;
      report.lhs =
          norms::weighted_seminorm(u, c.domain, c.k, lhs_p, lhs_weight, c.m - c.k, rel_tol);
      report.rhs = norms::weighted_seminorm(u, c.domain, c.m, p, alpha * p, 0, rel_tol);
      break;
    }
    case CaseId::Interp: {
      report.lhs =
          norms::weighted_seminorm(u, c.domain, c.k, q, beta * q, c.m - c.k, rel_tol);
      report.rhs = norms::two_term_interp_bound(u, c.domain, c.k, c.m - c.k, p, alpha,
                                                rel_tol);
      break;
    }
  }

  if (report.rhs.value > 0)
    report.ratio = report.lhs.value / report.rhs.value;
  else
    report.degenerate = true;
  return report;
}

double taylor_representation_check(const funcspace::TrialFunction1D& f, int m, int k,
                                   const std::vector<double>& r_points, double rel_tol) {
  if (m < 2 || k < 1 || k > m - 1)
    throw std::invalid_argument("taylor_representation_check: need m >= 2, 1 <= k <= m-1");
  if (f.max_order() < m)
    throw std::invalid_argument("taylor_representation_check: trial lacks order-m derivatives");

  double factorial_mk1 = 1;
  for (int i = 2; i <= m - k - 1; ++i) factorial_mk1 *= i;

  double worst = 0;
  for (double r : r_points) {
    if (!(r > 0)) throw std::invalid_argument("taylor_representation_check: radii must be positive");

    // Left side: Leibniz expansion of d^k/dr^k (f r^{-(m-k)}).
    double lhs = 0;
    for (int i = 0; i <= k; ++i)
      lhs += binom_d(k, i) * f.derivative(i, r) * falling_d(-(m - k), k - i) *
             std::pow(r, -(m - k) - k + i);

    double rhs = 0;
    const double lo = std::max(f.support_lo(), 0.0);
    const double hi = std::min(r, f.support_hi());
    if (hi > lo) {
      auto integrand = [&](double s) {
        return f.derivative(m, s) * std::pow(1 - s / r, m - k - 1) *
               std::pow(s / r, k - 1) * (s / (r * r));
      };
      auto integral = quadrature::integrate_1d(integrand, lo, hi, rel_tol, false, 9, 16);
      rhs = integral.value / factorial_mk1;
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

Rational hardy_upper_bound(int m, int k, const Rational& p, const Rational& alpha) {
  if (m < 2 || k < 1 || k > m - 1)
    throw std::invalid_argument("hardy_upper_bound: need m >= 2, 1 <= k <= m-1");
  if (p < 1) throw std::invalid_argument("hardy_upper_bound: p-range (p >= 1)");
  if (!(alpha < Rational(k) + (p - 1) / p))
    throw std::invalid_argument("hardy_upper_bound: alpha-upper (alpha < k + (p-1)/p)");
  const Rational sigma = (Rational(k + 1) - alpha) * p;
  return p / (Rational(factorial(static_cast<unsigned>(m - k - 1))) * (sigma - 1));
}

std::vector<LadderStep> interpolation_ladder(int n, int m, int k, const Rational& p,
                                             const Rational& q, const Rational& alpha,
                                             const Rational& beta) {
  if (m < 2 || k < 1 || k > m - 1)
    throw std::invalid_argument("interpolation_ladder: need m >= 2, 1 <= k <= m-1");
  InequalityCase c;
  c.id = CaseId::HalfSpace;
  c.n = n;
  c.m = m;
  c.k = k;
  c.p = p;
  c.q = q;
  c.alpha = alpha;
  c.beta = beta;
  const Verdict verdict = validate_params(c);
  if (!verdict.valid) {
    std::string names;
    for (const auto& name : verdict.violated) names += (names.empty() ? "" : ", ") + name;
    throw std::invalid_argument("interpolation_ladder: hypotheses violated: " + names);
  }

  const int steps = m - k;
  std::vector<LadderStep> ladder;
  for (int i = 0; i <= steps; ++i) {
    LadderStep step;
    step.alpha_i = (Rational(steps - i) * beta + Rational(i) * alpha) / steps;
    const Rational inv_p = (Rational(i) / p + Rational(steps - i) / q) / steps;
    step.p_i = 1 / inv_p;
    ladder.push_back(step);
  }

  const Rational decrement = (beta - alpha) / steps;
  if (decrement > 1)
    throw std::logic_error("interpolation_ladder: weight decrement exceeds 1");
  for (int i = 0; i < steps; ++i) {
    if (ladder[i + 1].p_i < 1 || ladder[i + 1].p_i > ladder[i].p_i)
      throw std::logic_error("interpolation_ladder: exponent monotonicity violated");
    if (Rational(1) / ladder[i + 1].p_i - Rational(1) / ladder[i].p_i !=
        (ladder[i].alpha_i - ladder[i + 1].alpha_i) / n)
      throw std::logic_error("interpolation_ladder: balance relation violated");
    if (ladder[i].alpha_i - ladder[i + 1].alpha_i != decrement)
      throw std::logic_error("interpolation_ladder: weight decrement not constant");
  }
  if (ladder.front().alpha_i != beta || ladder.back().alpha_i != alpha ||
      ladder.front().p_i != q || ladder.back().p_i != p)
    throw std::logic_error("interpolation_ladder: endpoints do not match");
  return ladder;
}

}  // namespace hslab::inequalities
