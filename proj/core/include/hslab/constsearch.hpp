#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hslab/inequalities.hpp"

namespace hslab::constsearch {

/// Box-constrained parameter space for a trial family. The evaluator maps a
/// parameter point to an inequality ratio; the search never leaves the box.
struct SearchSpace {
  std::vector<std::string> names;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> start;  // empty: seeded random point in the box
  int budget = 200;           // max evaluations
  unsigned long seed = 0;
  double initial_step = 0.25;  // fraction of each box width
};

struct TraceEntry {
  std::vector<double> params;
  double ratio = 0;
  double best_so_far = 0;
};

struct SearchResult {
  std::vector<double> best_params;
  double best_ratio = 0;
  std::vector<TraceEntry> trace;
  bool stagnated = false;  // stopped on stagnation rather than budget
};

using RatioFn = std::function<double(const std::vector<double>&)>;

/// Deterministic compass/pattern search maximizing fn over the box. The
/// recorded best never decreases; terminates on budget exhaustion or when
/// 20 consecutive proposals improve by less than tol (relative).
SearchResult maximize_ratio(const RatioFn& fn, const SearchSpace& space, double tol);

/// Evaluator for the one-dimensional quotient inequality over the bump
/// family: parameters (support start a, support width, smoothness M as a
/// real, rounded). Ratios are computed with ratio_report at quad_tol.
RatioFn oned_ratio_evaluator(const inequalities::InequalityCase& c, double quad_tol);

}  // namespace hslab::constsearch
