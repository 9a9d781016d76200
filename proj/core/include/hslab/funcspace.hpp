#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hslab::funcspace {

inline constexpr int kMaxOrderCap = 6;

struct FamilyDescriptor {
  std::string family;  // poly-bump | log-family | log-quotient | custom | scaled variants
  std::map<std::string, double> params;
};

/// A smooth function on (0, oo) with closed-form derivatives up to a
/// declared order. Value and all derivatives vanish identically outside
/// [support_lo, support_hi].
class TrialFunction1D {
 public:
  TrialFunction1D() = default;
  TrialFunction1D(FamilyDescriptor descriptor, double support_lo, double support_hi,
                  int max_order, std::function<double(int, double)> eval);

  double value(double r) const { return derivative(0, r); }
  double derivative(int order, double r) const;

  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  double support_width() const { return support_hi_ - support_lo_; }
  int max_order() const { return max_order_; }
  const FamilyDescriptor& descriptor() const { return descriptor_; }

 private:
  FamilyDescriptor descriptor_;
  double support_lo_ = 0;
  double support_hi_ = 0;
  int max_order_ = 0;
  std::function<double(int, double)> eval_;
};

/// f(r) = (r-a)^M (b-r)^M on [a,b], zero elsewhere. C^{M-1} across the
/// endpoints; derivatives by exact Leibniz expansion. max_order = M-1.
TrialFunction1D make_poly_bump(double a, double b, int M);

/// r * log^{-alpha}(1/r) on (0, epsilon_cut], blended to zero over
/// [epsilon_cut, 2*epsilon_cut] by a C^3 polynomial step. max_order = 3.
TrialFunction1D make_log_family(double alpha_log, double epsilon_cut);

/// log^{-alpha}(1/r) with the same cutoff: the log family divided by r,
/// the trial profile for the first-order critical case.
TrialFunction1D make_log_quotient(double alpha_log, double epsilon_cut);

/// g(r) = f(lambda r); derivatives pick up lambda^order.
TrialFunction1D scale_1d(const TrialFunction1D& f, double lambda);

/// g(r) = f(c + lambda (r - c)): support shrinks around the fixed point c.
TrialFunction1D scale_1d_about(const TrialFunction1D& f, double center, double lambda);

/// Tensor-product trial function on R^n_+ (n <= 3). Factor n-1 is the
/// vertical coordinate x_n; factors 0..n-2 are transverse.
class TrialFunctionND {
 public:
  TrialFunctionND() = default;
  explicit TrialFunctionND(std::vector<TrialFunction1D> factors);

  int dimension() const { return static_cast<int>(factors_.size()); }
  int max_order() const { return max_order_; }
  const TrialFunction1D& factor(int dim) const { return factors_.at(dim); }
  const TrialFunction1D& vertical() const { return factors_.back(); }

  double value(const std::vector<double>& x) const;
  /// Mixed partial d^beta u, |beta| <= max_order.
  double partial(const std::vector<int>& beta, const std::vector<double>& x) const;

  std::pair<double, double> support(int dim) const;

 private:
  std::vector<TrialFunction1D> factors_;
  int max_order_ = 0;
};

/// transverse.size() must equal n-1; n = 1 returns the vertical factor alone.
TrialFunctionND tensorize(const TrialFunction1D& vertical,
                          const std::vector<TrialFunction1D>& transverse, int n);

/// u_lambda(x) = u(lambda x), lambda > 1.
TrialFunctionND scale(const TrialFunctionND& u, double lambda);

/// u(center + lambda (x - center)): shrinks the support around an interior point.
TrialFunctionND scale_about(const TrialFunctionND& u, const std::vector<double>& center,
                            double lambda);

/// Compares every analytic mixed partial of the given total order against a
/// 4th-order central difference of the next-lower analytic derivative, at
/// each sample point. Returns the worst relative discrepancy.
double derivative_self_check(const TrialFunctionND& u, int order,
                             const std::vector<std::vector<double>>& sample_points);

}  // namespace hslab::funcspace
