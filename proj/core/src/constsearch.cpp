#include "hslab/constsearch.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hslab/funcspace.hpp"

namespace hslab::constsearch {

SearchResult maximize_ratio(const RatioFn& fn, const SearchSpace& space, double tol) {
  const std::size_t dim = space.lo.size();
  if (dim == 0 || space.hi.size() != dim)
    throw std::invalid_argument("maximize_ratio: empty or inconsistent box");
  for (std::size_t d = 0; d < dim; ++d)
    if (space.hi[d] < space.lo[d])
      throw std::invalid_argument("maximize_ratio: box bounds reversed");
  if (space.budget < 1) throw std::invalid_argument("maximize_ratio: budget must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("maximize_ratio: tol must be positive");

  std::vector<double> point = space.start;
  if (point.empty()) {
    std::mt19937_64 rng(space.seed);
    for (std::size_t d = 0; d < dim; ++d) {
      std::uniform_real_distribution<double> dist(space.lo[d], space.hi[d]);
      point.push_back(dist(rng));
    }
  } else if (point.size() != dim) {
    throw std::invalid_argument("maximize_ratio: start point dimension mismatch");
  }
  for (std::size_t d = 0; d < dim; ++d)
    point[d] = std::clamp(point[d], space.lo[d], space.hi[d]);

  SearchResult result;
  int evaluations = 0;
  int failures = 0;
  int stale_proposals = 0;

  auto evaluate = [&](const std::vector<double>& params) -> double {
    ++evaluations;
    double ratio = 0;
    try {
      ratio = fn(params);
      if (!std::isfinite(ratio)) ratio = 0;
    } catch (const std::exception&) {
      ++failures;
      ratio = 0;
    }
    if (ratio > result.best_ratio * (1 + tol))
      stale_proposals = 0;
    else
      ++stale_proposals;
    if (ratio > result.best_ratio || result.best_params.empty()) {
      result.best_ratio = std::max(result.best_ratio, ratio);
      result.best_params = params;
    }
    result.trace.push_back({params, ratio, result.best_ratio});
    return ratio;
  };

  evaluate(point);

  std::vector<double> step(dim);
  for (std::size_t d = 0; d < dim; ++d)
    step[d] = space.initial_step * (space.hi[d] - space.lo[d]);

  while (evaluations < space.budget && stale_proposals < 20) {
    bool moved = false;
    for (std::size_t d = 0; d < dim; ++d) {
      for (double sign : {+1.0, -1.0}) {
        if (evaluations >= space.budget || stale_proposals >= 20) break;
        if (step[d] == 0) continue;
        std::vector<double> proposal = point;
        proposal[d] = std::clamp(proposal[d] + sign * step[d], space.lo[d], space.hi[d]);
        if (proposal[d] == point[d]) continue;
        const double before = result.best_ratio;
        const double ratio = evaluate(proposal);
        if (ratio > before) {
          point = proposal;
          moved = true;
        }
      }
    }
    if (!moved)
      for (auto& s : step) s *= 0.5;
  }
  result.stagnated = stale_proposals >= 20;

  if (failures == evaluations)
    throw std::runtime_error("maximize_ratio: every evaluation failed");
  return result;
}

RatioFn oned_ratio_evaluator(const inequalities::InequalityCase& c, double quad_tol) {
  if (c.n != 1)
    throw std::invalid_argument("oned_ratio_evaluator: one-dimensional cases only");
  const int min_smoothness = c.m + 1;  // ratio needs order-m derivatives
  return [c, quad_tol, min_smoothness](const std::vector<double>& params) {
    if (params.size() != 3)
      throw std::invalid_argument("oned_ratio_evaluator: expected (a, width, M)");
    const double a = params[0];
    const double width = params[1];
    const int M = std::max(min_smoothness, static_cast<int>(std::lround(params[2])));
    if (!(a > 0) || !(width > 0))
      throw std::invalid_argument("oned_ratio_evaluator: need a > 0 and width > 0");
    const funcspace::TrialFunctionND u({funcspace::make_poly_bump(a, a + width, M)});
    auto report = inequalities::ratio_report(c, u, quad_tol);
    if (report.degenerate) return 0.0;
    return report.ratio;
  };
}

}  // namespace hslab::constsearch
