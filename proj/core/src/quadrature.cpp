#include "hslab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hslab::quadrature {

const GaussRule& gauss_legendre(int points) {
  if (points < 1 || points > 64)
    throw std::invalid_argument("gauss_legendre: point count out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(points, std::move(rule)).first->second;
}

GradedMesh GradedMesh::build(double lo, double hi, int level, bool grade_to_lo) {
  if (!(hi > lo)) throw std::invalid_argument("GradedMesh: need hi > lo");
  if (level < 0) throw std::invalid_argument("GradedMesh: level must be >= 0");

  GradedMesh mesh;
  std::vector<double> coarse;
  if (grade_to_lo) {
    // Geometric layers [lo + (hi-lo) 2^{-j-1}, lo + (hi-lo) 2^{-j}].
    const int depth = 40 + 8 * level;
    coarse.push_back(lo);
    for (int j = depth; j >= 0; --j) coarse.push_back(lo + (hi - lo) * std::ldexp(1.0, -j));
  } else {
    const int cells = 8;
    for (int j = 0; j <= cells; ++j) coarse.push_back(lo + (hi - lo) * j / cells);
  }

  const int split = 1 << level;
  mesh.breakpoints.push_back(coarse.front());
  for (std::size_t c = 0; c + 1 < coarse.size(); ++c) {
    for (int s = 1; s <= split; ++s) {
      double x = coarse[c] + (coarse[c + 1] - coarse[c]) * s / split;
      if (x > mesh.breakpoints.back()) mesh.breakpoints.push_back(x);
    }
  }
  return mesh;
}

namespace {

double integrate_on_mesh(const std::function<double(double)>& f, const GradedMesh& mesh,
                         const GaussRule& rule) {
  double total = 0;
  for (std::size_t c = 0; c + 1 < mesh.breakpoints.size(); ++c) {
    const double a = mesh.breakpoints[c];
    const double b = mesh.breakpoints[c + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double cell = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      cell += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += half * cell;
  }
  return total;
}

}  // namespace

IntegralResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                            double rel_tol, bool grade_to_lo, int max_level,
                            int points_per_cell, double abs_floor) {
  if (!(hi > lo)) throw std::invalid_argument("integrate_1d: need hi > lo");
  if (!(rel_tol > 0)) throw std::invalid_argument("integrate_1d: rel_tol must be positive");

  const GaussRule& rule = gauss_legendre(points_per_cell);
  IntegralResult result;
  double previous = 0;
  for (int level = 0; level <= max_level; ++level) {
    const GradedMesh mesh = GradedMesh::build(lo, hi, level, grade_to_lo);
    const double value = integrate_on_mesh(f, mesh, rule);
    result.levels_used = level + 1;
    if (level > 0) {
      result.error_estimate = std::abs(value - previous);
      const double scale = std::max(std::abs(value), abs_floor);
      if (result.error_estimate <= rel_tol * scale) {
        result.value = value;
        result.converged = true;
        return result;
      }
    }
    previous = value;
    result.value = value;
  }
  return result;
}

IntegralResult integrate_weighted_1d(const std::function<double(double)>& g, double gamma,
                                     double lo, double hi, double rel_tol) {
  if (lo < 0) throw std::invalid_argument("integrate_weighted_1d: need lo >= 0");
  if (lo == 0 && gamma <= -1)
    throw std::invalid_argument(
        "integrate_weighted_1d: weight exponent must exceed -1 at the origin "
        "(use divergence_probe for the divergent regime)");
  auto f = [&](double r) { return std::pow(r, gamma) * g(r); };
  return integrate_1d(f, lo, hi, rel_tol, lo == 0);
}

namespace {

double integrate_box_on_level(BoxIntegrand& integrand, const std::vector<double>& lo,
                              const std::vector<double>& hi,
                              const std::vector<bool>& grade_to_lo, int level,
                              const GaussRule& rule) {
  const int dim = static_cast<int>(lo.size());
  std::vector<std::vector<double>> nodes(dim);
  std::vector<std::vector<double>> weights(dim);
  for (int d = 0; d < dim; ++d) {
    const GradedMesh mesh = GradedMesh::build(lo[d], hi[d], level, grade_to_lo[d]);
    for (std::size_t c = 0; c + 1 < mesh.breakpoints.size(); ++c) {
      const double a = mesh.breakpoints[c];
      const double b = mesh.breakpoints[c + 1];
      const double mid = 0.5 * (a + b);
      const double half = 0.5 * (b - a);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        nodes[d].push_back(mid + half * rule.nodes[i]);
        weights[d].push_back(half * rule.weights[i]);
      }
    }
    integrand.prepare_axis(d, nodes[d]);
  }

  // Odometer over the tensor grid; accumulate weight product alongside.
  std::vector<int> index(dim, 0);
  double total = 0;
  while (true) {
    double w = 1;
    for (int d = 0; d < dim; ++d) w *= weights[d][index[d]];
    total += w * integrand.evaluate(index);
    int d = dim - 1;
    while (d >= 0) {
      if (++index[d] < static_cast<int>(nodes[d].size())) break;
      index[d] = 0;
      --d;
    }
    if (d < 0) break;
  }
  return total;
}

}  // namespace

IntegralResult integrate_box(BoxIntegrand& integrand, const std::vector<double>& lo,
                             const std::vector<double>& hi,
                             const std::vector<bool>& grade_to_lo, double rel_tol,
                             int max_level, int points_per_cell, double abs_floor) {
  const std::size_t dim = lo.size();
  if (dim == 0 || dim > 3 || hi.size() != dim || grade_to_lo.size() != dim)
    throw std::invalid_argument("integrate_box: dimension mismatch or out of range");
  for (std::size_t d = 0; d < dim; ++d)
    if (!(hi[d] > lo[d])) throw std::invalid_argument("integrate_box: need hi > lo");
  if (!(rel_tol > 0)) throw std::invalid_argument("integrate_box: rel_tol must be positive");

  const GaussRule& rule = gauss_legendre(points_per_cell);
  IntegralResult result;
  double previous = 0;
  for (int level = 0; level <= max_level; ++level) {
    const double value = integrate_box_on_level(integrand, lo, hi, grade_to_lo, level, rule);
    result.levels_used = level + 1;
    if (level > 0) {
      result.error_estimate = std::abs(value - previous);
      const double scale = std::max(std::abs(value), abs_floor);
      if (result.error_estimate <= rel_tol * scale) {
        result.value = value;
        result.converged = true;
        return result;
      }
    }
    previous = value;
    result.value = value;
  }
  return result;
}

std::string to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::Bounded: return "bounded";
    case GrowthVerdict::Unbounded: return "unbounded";
    case GrowthVerdict::Slow: return "slow";
  }
  return "slow";
}

DivergenceProbe divergence_probe(const std::function<double(double)>& f, double hi,
                                 double eps_start, double eps_stop, double eps_ratio,
                                 double grow_threshold, double settle_threshold,
                                 int window) {
  if (!(eps_start > eps_stop) || !(eps_stop > 0) || !(eps_ratio > 0) || !(eps_ratio < 1))
    throw std::invalid_argument("divergence_probe: bad epsilon ladder");
  if (window < 1) throw std::invalid_argument("divergence_probe: window must be >= 1");

  DivergenceProbe probe;
  for (double eps = eps_start; eps >= eps_stop * 0.999; eps *= eps_ratio)
    probe.epsilons.push_back(eps);
  if (static_cast<int>(probe.epsilons.size()) < window + 1)
    throw std::invalid_argument("divergence_probe: ladder shorter than window");

  for (double eps : probe.epsilons) {
    // Grade toward the truncation point: the integrands of interest vary on
    // the scale of eps there.
    auto r = integrate_1d(f, eps, hi, 1e-9, true, 9, 16);
    probe.values.push_back(r.value);
  }

  bool all_grow = true;
  bool all_settle = true;
  const int n = static_cast<int>(probe.values.size());
  for (int i = n - window; i < n; ++i) {
    const double prev = probe.values[i - 1];
    const double inc = std::abs(probe.values[i] - prev);
    const double rel = inc / std::max(std::abs(prev), 1e-300);
    if (rel < grow_threshold) all_grow = false;
    if (rel >= settle_threshold) all_settle = false;
  }
  probe.verdict = all_grow   ? GrowthVerdict::Unbounded
                  : all_settle ? GrowthVerdict::Bounded
                               : GrowthVerdict::Slow;
  return probe;
}

}  // namespace hslab::quadrature
