#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hslab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (cpp_rational maintains both invariants on construction).
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

/// Parses "num/den" or a plain integer string.
Rational parse_rational(const std::string& text);

/// Serializes as "num/den", or "num" when the denominator is 1.
std::string rational_to_string(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exp);

/// Falling factorial a(a-1)...(a-count+1); empty product for count = 0.
Rational falling_factorial(const Rational& start, unsigned count);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Seeded generator for small random rationals, numerators in [-9, 9] and
/// denominators in [1, 9]. Used by the identity suites; the seed is recorded
/// in reports so runs are reproducible.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng_), den(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hslab
