#include "hslab/opalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hslab {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << "/" << denominator(value);
  return out.str();
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

Rational falling_factorial(const Rational& start, unsigned count) {
  Rational result = 1;
  for (unsigned i = 0; i < count; ++i) result *= start - Rational(i);
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

}  // namespace hslab

namespace hslab::opalg {

DiffOpPoly::DiffOpPoly(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw std::invalid_argument("DiffOpPoly: dimension out of range");
}

DiffOpPoly DiffOpPoly::symbol(int direction, int dimension) {
  DiffOpPoly poly(dimension);
  if (direction < 1 || direction > dimension)
    throw std::invalid_argument("DiffOpPoly: direction index out of range");
  MultiIndex idx(dimension, 0);
  idx[direction - 1] = 1;
  poly.terms_[idx] = 1;
  return poly;
}

DiffOpPoly DiffOpPoly::constant(BigInt value, int dimension) {
  DiffOpPoly poly(dimension);
  if (value != 0) poly.terms_[MultiIndex(dimension, 0)] = std::move(value);
  return poly;
}

void DiffOpPoly::add_term(const MultiIndex& index, const BigInt& coeff) {
  if (static_cast<int>(index.size()) != dimension_)
    throw std::invalid_argument("DiffOpPoly: multi-index length mismatch");
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(index, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

DiffOpPoly& DiffOpPoly::operator+=(const DiffOpPoly& other) {
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

DiffOpPoly& DiffOpPoly::operator-=(const DiffOpPoly& other) {
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

DiffOpPoly DiffOpPoly::operator+(const DiffOpPoly& other) const {
  DiffOpPoly result = *this;
  result += other;
  return result;
}

DiffOpPoly DiffOpPoly::operator-(const DiffOpPoly& other) const {
  DiffOpPoly result = *this;
  result -= other;
  return result;
}

DiffOpPoly DiffOpPoly::operator*(const DiffOpPoly& other) const {
  DiffOpPoly result(dimension_);
  MultiIndex merged(dimension_);
  for (const auto& [ia, ca] : terms_) {
    for (const auto& [ib, cb] : other.terms_) {
      for (int d = 0; d < dimension_; ++d) merged[d] = ia[d] + ib[d];
      result.add_term(merged, ca * cb);
    }
  }
  return result;
}

DiffOpPoly DiffOpPoly::pow(unsigned exponent) const {
  DiffOpPoly result = DiffOpPoly::constant(1, dimension_);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

bool DiffOpPoly::operator==(const DiffOpPoly& other) const {
  return dimension_ == other.dimension_ && terms_ == other.terms_;
}

Rational phi_k(const std::vector<Rational>& a, const Rational& s) {
  const int k = static_cast<int>(a.size());
  if (k < 1) throw std::invalid_argument("phi_k: empty input list");
  if (k > kMaxSubsetSize) throw std::invalid_argument("phi_k: k exceeds subset cap");
  Rational sum = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Rational subset_sum = s;
    int bits = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        subset_sum += a[i];
        ++bits;
      }
    }
    Rational power = rational_pow(subset_sum, static_cast<unsigned>(k));
    sum += ((k - bits) % 2 == 0) ? power : -power;
  }
  return sum;
}

Rational combinatorial_residual(const std::vector<Rational>& a, const Rational& s) {
  const int k = static_cast<int>(a.size());
  if (k < 1) throw std::invalid_argument("combinatorial_residual: empty input list");
  Rational product = 1;
  for (const auto& ai : a) product *= ai;
  return phi_k(a, s) - Rational(factorial(static_cast<unsigned>(k))) * product;
}

std::pair<DiffOpPoly, DiffOpPoly> expand_operator_identity(
    const std::vector<int>& j_indices, int n) {
  const int k = static_cast<int>(j_indices.size());
  if (k < 1) throw std::invalid_argument("expand_operator_identity: k must be >= 1");
  if (k > kMaxSubsetSize)
    throw std::invalid_argument("expand_operator_identity: k exceeds subset cap");
  for (int j : j_indices)
    if (j < 1 || j > n)
      throw std::invalid_argument("expand_operator_identity: index out of range");

  DiffOpPoly lhs = DiffOpPoly::constant(factorial(static_cast<unsigned>(k)), n);
  for (int j : j_indices) lhs = lhs * DiffOpPoly::symbol(j, n);

  DiffOpPoly rhs(n);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    // linear form sum_{i in I} d_{j_i} + d_n
    DiffOpPoly form = DiffOpPoly::symbol(n, n);
    int bits = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        form += DiffOpPoly::symbol(j_indices[i], n);
        ++bits;
      }
    }
    DiffOpPoly power = form.pow(static_cast<unsigned>(k));
    if ((k - bits) % 2 == 0)
      rhs += power;
    else
      rhs -= power;
  }
  return {lhs, rhs};
}

std::map<int, Rational> vertical_recursion_coeffs(int l, int j) {
  if (l < 1) throw std::invalid_argument("vertical_recursion_coeffs: l must be >= 1");
  if (j < 1) throw std::invalid_argument("vertical_recursion_coeffs: j must be >= 1");
  // Depth t holds coefficients of dn^i(u / x^{m-k+l-i-t}) with prefactor x^{-t}.
  // One reduction step maps term i to {i (exponent drops by one), i-1 (factor -i)}.
  std::map<int, Rational> coeffs{{l, Rational(1)}};
  for (int depth = 0; depth < j; ++depth) {
    std::map<int, Rational> next;
    for (const auto& [i, c] : coeffs) {
      next[i] += c;
      if (i >= 1) next[i - 1] -= Rational(i) * c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    coeffs = std::move(next);
  }
  return coeffs;
}

Rational monomial_recursion_check(int N, int m, int k, int l, int j) {
  if (k < 1 || k > m - 1)
    throw std::invalid_argument("monomial_recursion_check: need 1 <= k <= m-1");
  // u = x^N. Both sides reduce to coeff * x^{N-m+k-l}.
  Rational lhs = falling_factorial(Rational(N - (m - k)), static_cast<unsigned>(l));
  Rational rhs = 0;
  for (const auto& [i, c] : vertical_recursion_coeffs(l, j)) {
    const int exponent = N - (m - k + l - i - j);
    rhs += c * falling_factorial(Rational(exponent), static_cast<unsigned>(i));
  }
  return lhs - rhs;
}

}  // namespace hslab::opalg
