#include "hslab/norms.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "hslab/multiindex.hpp"

namespace hslab::norms {

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

/// int d^w |grad^j (u / x_vert^c)|^p over the support box, as a tensor
/// integrand with per-axis derivative tables rebuilt on each refinement.
class SeminormIntegrand : public quadrature::BoxIntegrand {
 public:
  SeminormIntegrand(const funcspace::TrialFunctionND& u, int j, double p,
                    double weight_power, int quotient_power)
      : u_(u),
        j_(j),
        half_p_(p / 2),
        weight_power_(weight_power),
        quotient_power_(quotient_power),
        tables_(u.dimension()) {
    for (const auto& beta : compositions(u.dimension(), j)) {
      betas_.push_back(beta);
      mults_.push_back(multinomial_multiplicity(j, beta));
    }
  }

  void prepare_axis(int dim, const std::vector<double>& nodes) override {
    const int vertical = u_.dimension() - 1;
    const auto& f = u_.factor(dim);
    auto& table = tables_[dim];
    table.assign(j_ + 1, std::vector<double>(nodes.size()));

    if (dim == vertical && quotient_power_ > 0) {
      const int c = quotient_power_;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        // Leibniz: dn^t (f x^{-c}) = sum_i C(t,i) f^{(i)} ff(-c,t-i) x^{-c-t+i}
        std::vector<double> fd(j_ + 1);
        for (int t = 0; t <= j_; ++t) fd[t] = f.derivative(t, x);
        for (int t = 0; t <= j_; ++t) {
          double sum = 0;
          for (int s = 0; s <= t; ++s)
            sum += binom(t, s) * fd[s] * falling(-c, t - s) * std::pow(x, -c - t + s);
          table[t][i] = sum;
        }
      }
    } else {
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int t = 0; t <= j_; ++t) table[t][i] = f.derivative(t, nodes[i]);
    }

    if (dim == vertical) {
      weight_table_.resize(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        weight_table_[i] = std::pow(nodes[i], weight_power_);
    }
  }

  double evaluate(const std::vector<int>& node_index) const override {
    const int dim = u_.dimension();
    double grad_sq = 0;
    for (std::size_t b = 0; b < betas_.size(); ++b) {
      double part = 1;
      for (int d = 0; d < dim; ++d) part *= tables_[d][betas_[b][d]][node_index[d]];
      grad_sq += mults_[b] * part * part;
    }
    if (grad_sq == 0) return 0;
    return weight_table_[node_index[dim - 1]] * std::pow(grad_sq, half_p_);
  }

 private:
  const funcspace::TrialFunctionND& u_;
  int j_;
  double half_p_;
  double weight_power_;
  int quotient_power_;
  std::vector<std::vector<std::vector<double>>> tables_;  // [dim][order][node]
  std::vector<double> weight_table_;
  std::vector<std::vector<int>> betas_;
  std::vector<double> mults_;
};

/// Sum of several seminorm integrands over a common box.
class SumIntegrand : public quadrature::BoxIntegrand {
 public:
  void add(std::unique_ptr<quadrature::BoxIntegrand> part) {
    parts_.push_back(std::move(part));
  }
  void prepare_axis(int dim, const std::vector<double>& nodes) override {
    for (auto& part : parts_) part->prepare_axis(dim, nodes);
  }
  double evaluate(const std::vector<int>& node_index) const override {
    double sum = 0;
    for (const auto& part : parts_) sum += part->evaluate(node_index);
    return sum;
  }

 private:
  std::vector<std::unique_ptr<quadrature::BoxIntegrand>> parts_;
};

struct Box {
  std::vector<double> lo, hi;
  std::vector<bool> grade;
};

Box support_box(const funcspace::TrialFunctionND& u) {
  Box box;
  for (int d = 0; d < u.dimension(); ++d) {
    auto [lo, hi] = u.support(d);
    box.lo.push_back(lo);
    box.hi.push_back(hi);
    // Only the vertical axis carries the distance weight; grade toward its
    // lower end when the support reaches (or spans many scales toward) the
    // weight singularity at 0. Uniform cells suffice otherwise.
    const bool vertical = d == u.dimension() - 1;
    box.grade.push_back(vertical && (lo <= 0 || hi / lo >= 32));
  }
  return box;
}

NormPart to_norm(const quadrature::IntegralResult& integral, double p) {
  NormPart part;
  const double value = std::max(integral.value, 0.0);
  part.value = std::pow(value, 1.0 / p);
  part.error_estimate =
      std::pow(value + integral.error_estimate, 1.0 / p) - part.value;
  part.converged = integral.converged;
  return part;
}

}  // namespace

void check_support(const Domain& domain, const funcspace::TrialFunctionND& u) {
  if (u.dimension() != domain.n)
    throw std::invalid_argument("domain: trial dimension mismatch");
  const auto& vert = u.vertical();
  if (vert.support_lo() < 0)
    throw std::invalid_argument("domain: vertical support must stay nonnegative");
  const bool unit = domain.kind == DomainKind::Interval01 || domain.kind == DomainKind::Strip;
  if (unit && vert.support_hi() > 0.5 + 1e-12)
    throw std::invalid_argument(
        "domain: vertical support must stay in (0, 1/2] so that the boundary "
        "distance equals the vertical coordinate");
  const bool one_d = domain.kind == DomainKind::HalfLine || domain.kind == DomainKind::Interval01;
  if (one_d && domain.n != 1)
    throw std::invalid_argument("domain: one-dimensional kind requires n = 1");
  if (!one_d && domain.n < 2)
    throw std::invalid_argument("domain: strip/half-space require n >= 2");
}

quadrature::IntegralResult weighted_integral(const funcspace::TrialFunctionND& u,
                                             const Domain& domain, int j, double p,
                                             double weight_power, int quotient_power,
                                             double rel_tol, int max_level,
                                             int points_per_cell) {
  check_support(domain, u);
  if (j < 0 || j > u.max_order())
    throw std::invalid_argument("weighted_integral: derivative order out of range");
  if (p < 1) throw std::invalid_argument("weighted_integral: p must be >= 1");
  if (quotient_power < 0)
    throw std::invalid_argument("weighted_integral: quotient power must be >= 0");

  SeminormIntegrand integrand(u, j, p, weight_power, quotient_power);
  const Box box = support_box(u);
  return quadrature::integrate_box(integrand, box.lo, box.hi, box.grade, rel_tol,
                                   max_level, points_per_cell);
}

NormPart weighted_seminorm(const funcspace::TrialFunctionND& u, const Domain& domain,
                           int j, double p, double weight_power, int quotient_power,
                           double rel_tol, int max_level, int points_per_cell) {
  return to_norm(weighted_integral(u, domain, j, p, weight_power, quotient_power,
                                   rel_tol, max_level, points_per_cell),
                 p);
}

NormPart sobolev_norm(const funcspace::TrialFunctionND& u, const WeightedNormSpec& spec,
                      double rel_tol) {
  if (spec.orders.empty()) throw std::invalid_argument("sobolev_norm: no orders requested");
  NormPart total;
  total.converged = true;
  for (int j : spec.orders) {
    NormPart part =
        weighted_seminorm(u, spec.domain, j, spec.p, spec.weight_exponent, 0, rel_tol);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.converged = total.converged && part.converged;
  }
  return total;
}

NormPart quotient_norm(const funcspace::TrialFunctionND& u, const QuotientSpec& spec,
                       double rel_tol) {
  if (spec.divisor_power < 1)
    throw std::invalid_argument("quotient_norm: divisor power must be >= 1");
  if (spec.k < 0) throw std::invalid_argument("quotient_norm: k must be >= 0");
  NormPart total;
  total.converged = true;
  for (int j = 0; j <= spec.k; ++j) {
    NormPart part = weighted_seminorm(u, spec.domain, j, spec.q, spec.weight_exponent,
                                      spec.divisor_power, rel_tol);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.converged = total.converged && part.converged;
  }
  return total;
}

NormPart two_term_interp_bound(const funcspace::TrialFunctionND& u, const Domain& domain,
                               int k, int quotient_power, double p, double alpha,
                               double rel_tol) {
  check_support(domain, u);
  if (k < 0 || k + 1 > u.max_order())
    throw std::invalid_argument("two_term_interp_bound: order out of range");

  SumIntegrand sum;
  sum.add(std::make_unique<SeminormIntegrand>(u, k + 1, p, (alpha + 1) * p, quotient_power));
  sum.add(std::make_unique<SeminormIntegrand>(u, k, p, alpha * p, quotient_power));
  const Box box = support_box(u);
  auto integral = quadrature::integrate_box(sum, box.lo, box.hi, box.grade, rel_tol);
  return to_norm(integral, p);
}

}  // namespace hslab::norms
