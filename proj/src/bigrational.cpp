#include "sixj/bigrational.hpp"

#include <algorithm>

namespace sixj {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::Domain, "factorial of negative integer " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational to_rational(HalfInt h) {
  BigRational q(BigInt(static_cast<long>(h.twice())), BigInt(2));
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0 || text.empty()) {
    throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

void FactorialRatio::multiply_factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::Domain, "factorial of negative integer " + std::to_string(n));
  numerator_.push_back(n);
}

void FactorialRatio::divide_factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::Domain, "factorial of negative integer " + std::to_string(n));
  denominator_.push_back(n);
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

// Exponent of p in n! (Legendre).
std::int64_t legendre(std::uint64_t n, std::uint64_t p) {
  std::int64_t e = 0;
  while (n > 0) {
    n /= p;
    e += static_cast<std::int64_t>(n);
  }
  return e;
}

}  // namespace

PrimeFactorization FactorialRatio::factorize() const {
  std::int64_t largest = 0;
  for (auto n : numerator_) largest = std::max(largest, n);
  for (auto n : denominator_) largest = std::max(largest, n);

  PrimeFactorization out;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(largest))) {
    std::int64_t e = 0;
    for (auto n : numerator_) e += legendre(static_cast<std::uint64_t>(n), p);
    for (auto n : denominator_) e -= legendre(static_cast<std::uint64_t>(n), p);
    if (e != 0) out.emplace_back(p, e);
  }
  return out;
}

BigRational FactorialRatio::value() const {
  BigInt num = 1;
  BigInt den = 1;
  for (auto n : numerator_) num *= factorial(n);
  for (auto n : denominator_) den *= factorial(n);
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational value_of(const PrimeFactorization& f) {
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [p, e] : f) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0) num *= power; else den *= power;
  }
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace sixj
