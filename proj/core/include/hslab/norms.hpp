#pragma once

#include <vector>

#include "hslab/funcspace.hpp"
#include "hslab/quadrature.hpp"

namespace hslab::norms {

/// Model domains with explicit boundary distance:
///   HalfLine    (0, inf),        d(x) = x
///   Interval01  (0, 1),          d(x) = min(x, 1-x)
///   Strip       R^{n-1} x (0,1), d(x) = min(x_n, 1-x_n)
///   HalfSpace   R^n_+,           d(x) = x_n
/// Trial supports are required to keep d equal to the vertical coordinate
/// (vertical support inside (0, 1/2] on Interval01 and the strip).
enum class DomainKind { HalfLine, Interval01, Strip, HalfSpace };

struct Domain {
  DomainKind kind = DomainKind::HalfLine;
  int n = 1;

  static Domain half_line() { return {DomainKind::HalfLine, 1}; }
  static Domain interval01() { return {DomainKind::Interval01, 1}; }
  static Domain strip(int n) { return {DomainKind::Strip, n}; }
  static Domain half_space(int n) { return {DomainKind::HalfSpace, n}; }
};

/// Throws std::invalid_argument if u's support leaves the region where the
/// domain's distance function equals the vertical coordinate.
void check_support(const Domain& domain, const funcspace::TrialFunctionND& u);

struct NormPart {
  double value = 0;
  double error_estimate = 0;
  bool converged = false;
};

/// Raw weighted integral  I = int d^w |grad^j (u / x_n^c)|^p dx  over the
/// domain, with c a nonnegative integer quotient power (c = 0: plain u).
/// The mixed partials of the quotient are exact Leibniz expansions in the
/// vertical coordinate.
quadrature::IntegralResult weighted_integral(const funcspace::TrialFunctionND& u,
                                             const Domain& domain, int j, double p,
                                             double weight_power, int quotient_power,
                                             double rel_tol, int max_level = 6,
                                             int points_per_cell = 12);

/// I^{1/p} of the above.
NormPart weighted_seminorm(const funcspace::TrialFunctionND& u, const Domain& domain,
                           int j, double p, double weight_power, int quotient_power,
                           double rel_tol, int max_level = 6, int points_per_cell = 12);

struct WeightedNormSpec {
  double p = 2;
  double weight_exponent = 0;
  std::vector<int> orders;  // derivative orders included in the sum
  Domain domain;
};

/// Sum over the requested orders of (int d^w |grad^j u|^p)^{1/p}.
NormPart sobolev_norm(const funcspace::TrialFunctionND& u, const WeightedNormSpec& spec,
                      double rel_tol);

struct QuotientSpec {
  int divisor_power = 1;  // divide by d^{divisor_power}; >= 1
  int k = 0;              // derivative orders 0..k included
  double q = 2;
  double weight_exponent = 0;
  Domain domain;
};

/// Sum over j = 0..k of (int d^w |grad^j (u/d^{divisor_power})|^q)^{1/q}.
NormPart quotient_norm(const funcspace::TrialFunctionND& u, const QuotientSpec& spec,
                       double rel_tol);

/// ( int d^{(alpha+1)p} |grad^{k+1} v|^p + d^{alpha p} |grad^k v|^p )^{1/p}
/// with v = u / d^{quotient_power}: the two-term majorant of the
/// interpolation step, combined inside a single integral.
NormPart two_term_interp_bound(const funcspace::TrialFunctionND& u, const Domain& domain,
                               int k, int quotient_power, double p, double alpha,
                               double rel_tol);

}  // namespace hslab::norms
