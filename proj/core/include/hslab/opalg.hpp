#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hslab/rational.hpp"

namespace hslab::opalg {

inline constexpr int kMaxSubsetSize = 16;  // bitmask enumeration cap
inline constexpr int kMaxDimension = 8;

/// Multi-index over commuting symbols d_1..d_n, stored dense.
using MultiIndex = std::vector<int>;

/// Polynomial in the commuting partial-derivative symbols d_1..d_n with
/// exact integer coefficients. Zero coefficients are never stored.
class DiffOpPoly {
 public:
  explicit DiffOpPoly(int dimension);

  /// The symbol d_ell (1-based direction index).
  static DiffOpPoly symbol(int direction, int dimension);
  static DiffOpPoly constant(BigInt value, int dimension);

  int dimension() const { return dimension_; }
  const std::map<MultiIndex, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const MultiIndex& index, const BigInt& coeff);

  DiffOpPoly& operator+=(const DiffOpPoly& other);
  DiffOpPoly& operator-=(const DiffOpPoly& other);
  DiffOpPoly operator+(const DiffOpPoly& other) const;
  DiffOpPoly operator-(const DiffOpPoly& other) const;
  DiffOpPoly operator*(const DiffOpPoly& other) const;
  DiffOpPoly pow(unsigned exponent) const;
  bool operator==(const DiffOpPoly& other) const;

 private:
  int dimension_;
  std::map<MultiIndex, BigInt> terms_;
};

/// Residual of the subset-sum identity
///   sum_{l=0..k} (-1)^{k-l} sum_{#I=l} (a_I + s)^k  -  k! prod a_i,
/// computed exactly; zero certifies the identity for this input.
Rational combinatorial_residual(const std::vector<Rational>& a, const Rational& s);

/// The alternating subset-power sum sum_{j=0..k} (-1)^{k-j} sum_{#I=j} (a_I+s)^k.
/// Constant in s; equals k! prod a_i.
Rational phi_k(const std::vector<Rational>& a, const Rational& s);

/// Expands both sides of the operator decomposition
///   k! prod_i d_{j_i}  =  sum_l (-1)^{k-l} sum_{#I=l} (sum_{i in I} d_{j_i} + d_n)^k
/// as polynomials in the commuting symbols. Caller asserts equality.
/// Direction indices are 1-based, each in {1..n}.
std::pair<DiffOpPoly, DiffOpPoly> expand_operator_identity(
    const std::vector<int>& j_indices, int n);

/// Coefficients c_i of the j-fold iterate of the vertical reduction
///   dn^l (u / x^{m-k}) = x^{-j} sum_i c_i dn^i (u / x^{m-k+l-i-j}),
/// for i from max{0, l-j} to l. Independent of m and k.
std::map<int, Rational> vertical_recursion_coeffs(int l, int j);

/// Substitutes the monomial u = x^N into both sides of the iterated
/// reduction above (exact falling-factorial derivatives) and returns the
/// coefficient difference; zero certifies the identity.
Rational monomial_recursion_check(int N, int m, int k, int l, int j);

}  // namespace hslab::opalg
