#include "hslab/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hslab/multiindex.hpp"

namespace hslab {

std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> result;
  std::vector<int> current(n, 0);
  // lexicographic recursion, iterative via explicit stack on the first index
  std::function<void(int, int)> rec = [&](int dim, int remaining) {
    if (dim == n - 1) {
      current[dim] = remaining;
      result.push_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[dim] = v;
      rec(dim + 1, remaining - v);
    }
  };
  if (n >= 1) rec(0, total);
  return result;
}

double multinomial_multiplicity(int total, const std::vector<int>& beta) {
  double result = 1.0;
  int used = 0;
  for (int b : beta) {
    for (int i = 1; i <= b; ++i) result *= static_cast<double>(++used) / i;
  }
  (void)total;
  return result;
}

}  // namespace hslab

namespace hslab::funcspace {

namespace {

double falling(double start, int count) {
  double result = 1.0;
  for (int i = 0; i < count; ++i) result *= start - i;
  return result;
}

double binom(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result *= static_cast<double>(n - k + i) / i;
  return result;
}

// Degree-7 smoothstep: s(0)=0, s(1)=1, with three vanishing derivatives at
// both ends, so the blended cutoff is C^3.
double smoothstep7(int order, double t) {
  static constexpr double c4 = 35, c5 = -84, c6 = 70, c7 = -20;
  auto mono = [&](double c, int deg) {
    if (order > deg) return 0.0;
    return c * falling(deg, order) * std::pow(t, deg - order);
  };
  return mono(c4, 4) + mono(c5, 5) + mono(c6, 6) + mono(c7, 7);
}

// One term c * r^e * log^{-beta}(1/r) of a log-profile derivative.
struct LogTerm {
  double coeff;
  int exponent;
  double beta;
};

std::vector<LogTerm> differentiate(const std::vector<LogTerm>& terms) {
  std::vector<LogTerm> next;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (t.exponent != 0)
      next.push_back({t.coeff * t.exponent, t.exponent - 1, t.beta});
    next.push_back({t.coeff * t.beta, t.exponent - 1, t.beta + 1});
  }
  return next;
}

double eval_terms(const std::vector<LogTerm>& terms, double r) {
  const double log_inv = std::log(1.0 / r);
  double sum = 0;
  for (const auto& t : terms)
    sum += t.coeff * std::pow(r, t.exponent) * std::pow(log_inv, -t.beta);
  return sum;
}

TrialFunction1D make_log_profile(const std::string& family, int leading_exponent,
                                 double alpha_log, double epsilon_cut) {
  if (alpha_log <= 0 || alpha_log > 1)
    throw std::invalid_argument(family + ": alpha_log must lie in (0, 1]");
  if (epsilon_cut <= 0 || epsilon_cut >= std::exp(-1.0))
    throw std::invalid_argument(family + ": epsilon_cut must lie in (0, 1/e)");

  const int max_order = 3;  // cutoff blend is C^3
  std::vector<std::vector<LogTerm>> base(max_order + 1);
  base[0] = {{1.0, leading_exponent, alpha_log}};
  for (int o = 1; o <= max_order; ++o) base[o] = differentiate(base[o - 1]);

  const double ec = epsilon_cut;
  auto eval = [base, ec, max_order](int order, double r) -> double {
    if (r <= 0) throw std::domain_error("log profile: r must be positive");
    if (r >= 2 * ec) return 0.0;
    if (r <= ec) return eval_terms(base[order], r);
    // Leibniz against the cutoff on the blend band.
    const double t = (r - ec) / ec;
    double sum = 0;
    for (int i = 0; i <= order; ++i) {
      const double cut_deriv =
          (order - i == 0) ? 1.0 - smoothstep7(0, t)
                           : -smoothstep7(order - i, t) / std::pow(ec, order - i);
      sum += binom(order, i) * eval_terms(base[i], r) * cut_deriv;
    }
    return sum;
  };

  FamilyDescriptor desc{family, {{"alpha_log", alpha_log}, {"epsilon_cut", epsilon_cut}}};
  return TrialFunction1D(std::move(desc), 0.0, 2 * epsilon_cut, max_order, eval);
}

}  // namespace

TrialFunction1D::TrialFunction1D(FamilyDescriptor descriptor, double support_lo,
                                 double support_hi, int max_order,
                                 std::function<double(int, double)> eval)
    : descriptor_(std::move(descriptor)),
      support_lo_(support_lo),
      support_hi_(support_hi),
      max_order_(max_order),
      eval_(std::move(eval)) {}

double TrialFunction1D::derivative(int order, double r) const {
  if (!eval_) throw std::logic_error("TrialFunction1D: empty");
  if (order < 0 || order > max_order_)
    throw std::invalid_argument("TrialFunction1D: derivative order out of range");
  return eval_(order, r);
}

TrialFunction1D make_poly_bump(double a, double b, int M) {
  if (b <= a) throw std::invalid_argument("make_poly_bump: need b > a");
  if (M < 2) throw std::invalid_argument("make_poly_bump: need M >= 2");

  auto eval = [a, b, M](int order, double r) -> double {
    if (r <= a || r >= b) return 0.0;
    double sum = 0;
    for (int i = 0; i <= order; ++i) {
      if (i > M || order - i > M) continue;
      sum += binom(order, i) * falling(M, i) * std::pow(r - a, M - i) *
             (((order - i) % 2 == 0) ? 1.0 : -1.0) * falling(M, order - i) *
             std::pow(b - r, M - (order - i));
    }
    return sum;
  };

  FamilyDescriptor desc{"poly-bump",
                        {{"a", a}, {"b", b}, {"M", static_cast<double>(M)}}};
  return TrialFunction1D(std::move(desc), a, b, std::min(M - 1, kMaxOrderCap), eval);
}

TrialFunction1D make_log_family(double alpha_log, double epsilon_cut) {
  return make_log_profile("log-family", 1, alpha_log, epsilon_cut);
}

TrialFunction1D make_log_quotient(double alpha_log, double epsilon_cut) {
  return make_log_profile("log-quotient", 0, alpha_log, epsilon_cut);
}

TrialFunction1D scale_1d(const TrialFunction1D& f, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("scale_1d: lambda must be positive");
  auto inner = f;
  auto eval = [inner, lambda](int order, double r) {
    return std::pow(lambda, order) * inner.derivative(order, lambda * r);
  };
  FamilyDescriptor desc = f.descriptor();
  desc.params["scale_lambda"] = lambda * (desc.params.count("scale_lambda")
                                              ? desc.params["scale_lambda"]
                                              : 1.0);
  return TrialFunction1D(std::move(desc), f.support_lo() / lambda,
                         f.support_hi() / lambda, f.max_order(), eval);
}

TrialFunction1D scale_1d_about(const TrialFunction1D& f, double center, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("scale_1d_about: lambda must be positive");
  auto inner = f;
  auto eval = [inner, center, lambda](int order, double r) {
    return std::pow(lambda, order) * inner.derivative(order, center + lambda * (r - center));
  };
  FamilyDescriptor desc = f.descriptor();
  desc.params["scale_lambda"] = lambda;
  desc.params["scale_center"] = center;
  return TrialFunction1D(std::move(desc),
                         center + (f.support_lo() - center) / lambda,
                         center + (f.support_hi() - center) / lambda, f.max_order(), eval);
}

TrialFunctionND::TrialFunctionND(std::vector<TrialFunction1D> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > 3)
    throw std::invalid_argument("TrialFunctionND: dimension must be 1..3");
  max_order_ = kMaxOrderCap;
  for (const auto& f : factors_) max_order_ = std::min(max_order_, f.max_order());
}

double TrialFunctionND::value(const std::vector<double>& x) const {
  return partial(std::vector<int>(factors_.size(), 0), x);
}

double TrialFunctionND::partial(const std::vector<int>& beta,
                                const std::vector<double>& x) const {
  if (beta.size() != factors_.size() || x.size() != factors_.size())
    throw std::invalid_argument("TrialFunctionND: dimension mismatch");
  double product = 1.0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    product *= factors_[i].derivative(beta[i], x[i]);
    if (product == 0.0) return 0.0;
  }
  return product;
}

std::pair<double, double> TrialFunctionND::support(int dim) const {
  const auto& f = factors_.at(dim);
  return {f.support_lo(), f.support_hi()};
}

TrialFunctionND tensorize(const TrialFunction1D& vertical,
                          const std::vector<TrialFunction1D>& transverse, int n) {
  if (static_cast<int>(transverse.size()) != n - 1)
    throw std::invalid_argument("tensorize: need n-1 transverse factors");
  std::vector<TrialFunction1D> factors = transverse;
  factors.push_back(vertical);
  return TrialFunctionND(std::move(factors));
}

TrialFunctionND scale(const TrialFunctionND& u, double lambda) {
  if (lambda <= 1) throw std::invalid_argument("scale: lambda must exceed 1");
  std::vector<TrialFunction1D> factors;
  for (int d = 0; d < u.dimension(); ++d) factors.push_back(scale_1d(u.factor(d), lambda));
  return TrialFunctionND(std::move(factors));
}

TrialFunctionND scale_about(const TrialFunctionND& u, const std::vector<double>& center,
                            double lambda) {
  if (lambda <= 1) throw std::invalid_argument("scale_about: lambda must exceed 1");
  if (static_cast<int>(center.size()) != u.dimension())
    throw std::invalid_argument("scale_about: center dimension mismatch");
  std::vector<TrialFunction1D> factors;
  for (int d = 0; d < u.dimension(); ++d)
    factors.push_back(scale_1d_about(u.factor(d), center[d], lambda));
  return TrialFunctionND(std::move(factors));
}

double derivative_self_check(const TrialFunctionND& u, int order,
                             const std::vector<std::vector<double>>& sample_points) {
  if (order < 1 || order > u.max_order())
    throw std::invalid_argument("derivative_self_check: order out of range");
  const int n = u.dimension();
  for (const auto& pt : sample_points) {
    if (static_cast<int>(pt.size()) != n)
      throw std::invalid_argument("derivative_self_check: point dimension mismatch");
    for (int d = 0; d < n; ++d)
      if (pt[d] <= u.support(d).first || pt[d] >= u.support(d).second)
        throw std::invalid_argument("derivative_self_check: sample point outside support");
  }

  double worst = 0.0;
  for (const auto& beta : compositions(n, order)) {
    // Differentiate the analytic order-(order-1) partial once, numerically,
    // in the first active coordinate.
    int dim = 0;
    while (beta[dim] == 0) ++dim;
    auto lower = beta;
    lower[dim] -= 1;

    double scale_ref = 0.0;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& pt : sample_points) {
      // Step on the scale of the support, shrunk near the origin so the
      // stencil never crosses 0 (log profiles are singular there).
      double local = u.support(dim).second - u.support(dim).first;
      if (pt[dim] > 0 && pt[dim] < local) local = pt[dim];
      const double h = 1e-3 * local;
      auto shifted = [&](double offset) {
        auto q = pt;
        q[dim] += offset;
        return u.partial(lower, q);
      };
      const double fd = (-shifted(2 * h) + 8 * shifted(h) - 8 * shifted(-h) +
                         shifted(-2 * h)) /
                        (12 * h);
      const double analytic = u.partial(beta, pt);
      scale_ref = std::max(scale_ref, std::abs(analytic));
      pairs.emplace_back(analytic, fd);
    }
    const double denom = std::max(scale_ref, 1e-300);
    for (const auto& [analytic, fd] : pairs)
      worst = std::max(worst, std::abs(analytic - fd) / denom);
  }
  return worst;
}

}  // namespace hslab::funcspace
