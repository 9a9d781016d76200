#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hslab::quadrature {

/// Nodes and weights for n-point Gauss-Legendre quadrature on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computed once per point count and cached; nodes via Newton iteration on
/// the Legendre recurrence.
const GaussRule& gauss_legendre(int points);

/// Partition of [lo, hi]. When lo == 0 the cells are geometrically graded
/// toward the origin (ratio 1/2), so endpoint singularities of the weight
/// are resolved; otherwise the mesh is uniform. Refinement level ell adds
/// grading depth and splits every cell 2^ell ways.
struct GradedMesh {
  std::vector<double> breakpoints;  // ascending, breakpoints.front() > 0 allowed only if lo > 0

  static GradedMesh build(double lo, double hi, int level, bool grade_to_lo);
};

struct IntegralResult {
  double value = 0;
  double error_estimate = 0;  // |last refinement increment|
  int levels_used = 0;
  bool converged = false;
};

/// Integrates f over [lo, hi] on successively refined graded meshes with a
/// fixed Gauss rule per cell, until two successive levels agree within
/// rel_tol (relative to the last value, absolute floor abs_floor).
IntegralResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                            double rel_tol, bool grade_to_lo, int max_level = 9,
                            int points_per_cell = 12, double abs_floor = 1e-300);

/// int_lo^hi r^gamma g(r) dr with grading toward 0 when lo == 0 (requires
/// gamma > -1 there).
IntegralResult integrate_weighted_1d(const std::function<double(double)>& g, double gamma,
                                     double lo, double hi, double rel_tol);

/// Tensor-product integrand over a box. Implementations may cache per-axis
/// tables keyed on the node vector handed to prepare_axis; evaluate is then
/// called with indices into those vectors.
class BoxIntegrand {
 public:
  virtual ~BoxIntegrand() = default;
  virtual void prepare_axis(int dim, const std::vector<double>& nodes) = 0;
  virtual double evaluate(const std::vector<int>& node_index) const = 0;
};

/// Integrates a BoxIntegrand over the product of [lo[d], hi[d]], grading the
/// axes flagged in grade_to_lo toward their lower endpoint. Refinement and
/// convergence policy match integrate_1d.
IntegralResult integrate_box(BoxIntegrand& integrand, const std::vector<double>& lo,
                             const std::vector<double>& hi,
                             const std::vector<bool>& grade_to_lo, double rel_tol,
                             int max_level = 6, int points_per_cell = 12,
                             double abs_floor = 1e-300);

enum class GrowthVerdict { Bounded, Unbounded, Slow };

std::string to_string(GrowthVerdict v);

/// Integrates f over [epsilon, hi] for a decreasing geometric ladder of
/// epsilon values and classifies the growth of the results:
/// last `window` increments all >= grow_threshold (relative)  -> Unbounded;
/// all < settle_threshold                                     -> Bounded;
/// otherwise                                                  -> Slow.
struct DivergenceProbe {
  std::vector<double> epsilons;
  std::vector<double> values;
  GrowthVerdict verdict = GrowthVerdict::Slow;
};

DivergenceProbe divergence_probe(const std::function<double(double)>& f, double hi,
                                 double eps_start = 1e-4, double eps_stop = 1e-10,
                                 double eps_ratio = 0.1, double grow_threshold = 0.05,
                                 double settle_threshold = 0.005, int window = 3);

}  // namespace hslab::quadrature
