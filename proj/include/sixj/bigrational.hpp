#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sixj/halfint.hpp"

namespace sixj {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact n!; throws Domain for n < 0.
BigInt factorial(std::int64_t n);

/// num/den in lowest terms; gmpxx's two-argument constructor does not reduce.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigRational to_rational(HalfInt h);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);

/// Parses "p/q" or "p" into a canonical rational; throws Parse.
BigRational parse_rational(const std::string& text);

/// Sparse prime factorisation: (prime, exponent) pairs, ascending primes, no zero exponents.
using PrimeFactorization = std::vector<std::pair<std::uint64_t, std::int64_t>>;

/// A product of factorials and inverse factorials, kept symbolic until asked for.
class FactorialRatio {
 public:
  void multiply_factorial(std::int64_t n);
  void divide_factorial(std::int64_t n);

  /// Prime exponents via Legendre's formula, without forming the product.
  PrimeFactorization factorize() const;
  BigRational value() const;

 private:
  std::vector<std::int64_t> numerator_;
  std::vector<std::int64_t> denominator_;
};

BigRational value_of(const PrimeFactorization& f);

}  // namespace sixj
