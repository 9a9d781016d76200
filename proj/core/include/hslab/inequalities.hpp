#pragma once

#include <string>
#include <vector>

#include "hslab/funcspace.hpp"
#include "hslab/norms.hpp"
#include "hslab/rational.hpp"

namespace hslab::inequalities {

/// The inequality catalog. Shapes of both sides:
///   FirstOrder  ||u/d||_{L^p(d^a)}            <= C ||u||_{W^{1,p}(d^a)}
///   SecondOrder     ||u/d||_{W^{1,p}(d^{p-1})}    <= C ||u||_{W^{2,p}(d^{p-1})}
///   MainQuotient     ||u/d^{m-k}||_{W^{k,q}(d^r)}  <= C ||u||_{W^{m,p}(d^{p-1})}
///   HalfSpace   (int x_n^{bq}|grad^k(u/x_n^{m-k})|^q)^{1/q}
///                 <= C (int x_n^{ap}|grad^m u|^p)^{1/p}
///   OneD        the n = 1, p = q, a = b instance of HalfSpace
///   Interp      HalfSpace-shaped left side  <= C (two-term weighted sum)^{1/p}
enum class CaseId { FirstOrder, SecondOrder, MainQuotient, HalfSpace, OneD, Interp };

std::string to_string(CaseId id);
CaseId case_id_from_string(const std::string& name);

struct InequalityCase {
  CaseId id = CaseId::OneD;
  norms::Domain domain;
  int n = 1;
  int m = 2;
  int k = 1;
  Rational p = 1;
  Rational q = 1;
  Rational alpha = 0;
  Rational beta = 0;
  Rational r = 0;
};

struct Verdict {
  bool valid = true;
  std::vector<std::string> violated;  // condition names, empty iff valid
  std::vector<std::string> boundary;  // conditions holding with equality
};

/// Exact rational check of every hypothesis of the case's inequality.
/// Condition names: m-range, k-range, p-range, pq-order, pq, r, balance,
/// alpha-upper, beta-range, critical-alpha.
Verdict validate_params(const InequalityCase& c);

struct RatioReport {
  norms::NormPart lhs;
  norms::NormPart rhs;
  double ratio = 0;
  bool degenerate = false;  // rhs == 0
  InequalityCase inequality_case;
  funcspace::FamilyDescriptor trial;
};

/// Evaluates both sides for the trial function; degenerate is flagged when
/// the right side vanishes.
RatioReport ratio_report(const InequalityCase& c, const funcspace::TrialFunctionND& u,
                         double rel_tol);

/// Max over the sample radii of |LHS - RHS| for the integral representation
///   d^k/dr^k (f/r^{m-k})
///     = (1/(m-k-1)!) int_0^r f^{(m)}(s) (1-s/r)^{m-k-1} (s/r)^{k-1} (s/r^2) ds,
/// with the left side expanded analytically and the right side by quadrature.
double taylor_representation_check(const funcspace::TrialFunction1D& f, int m, int k,
                                   const std::vector<double>& r_points, double rel_tol);

/// Explicit admissible constant for the one-dimensional case:
///   C = p / ((m-k-1)! ((k+1-alpha)p - 1)),
/// valid under alpha < k + (p-1)/p. Throws naming "alpha-upper" otherwise.
Rational hardy_upper_bound(int m, int k, const Rational& p, const Rational& alpha);

struct LadderStep {
  Rational p_i;
  Rational alpha_i;
};

/// The interpolation ladder alpha_i = ((m-k-i)beta + i alpha)/(m-k),
/// 1/p_i = (i/p + (m-k-i)/q)/(m-k), i = 0..m-k. Verifies exactly that the
/// steps are monotone with 1 <= p_{i+1} <= p_i, that each step satisfies the
/// balance relation 1/p_{i+1} - 1/p_i = (alpha_i - alpha_{i+1})/n, that the
/// weight decrement is the constant (beta-alpha)/(m-k) <= 1, and that the
/// endpoints reproduce (q, beta) and (p, alpha); throws on violation.
std::vector<LadderStep> interpolation_ladder(int n, int m, int k, const Rational& p,
                                             const Rational& q, const Rational& alpha,
                                             const Rational& beta);

}  // namespace hslab::inequalities
