#include "sixj/exact_symbol.hpp"

#include <ostream>

namespace sixj {

namespace {

constexpr unsigned long kTrialLimit = 1ul << 20;

// Splits m > 0 into s^2 * r with r square-free; returns s, leaves r in m.
BigInt extract_square(BigInt& m) {
  BigInt root = 1;
  BigInt kept = 1;
  bool exhausted = true;
  for (unsigned long p = 2; p < kTrialLimit; p = (p == 2 ? 3 : p + 2)) {
    if (BigInt(p) * p > m) {
      exhausted = false;
      break;
    }
    unsigned long count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++count;
    }
    for (unsigned long i = 0; i < count / 2; ++i) root *= p;
    if (count % 2 == 1) kept *= p;
  }

  if (exhausted && m > 1) {
    // No factor below L remains. Below L^3 the cofactor is p, p*q or p^2, and only
    // p^2 is not square-free.
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
      root *= s;
      m = 1;
    } else if (m >= BigInt(kTrialLimit) * kTrialLimit * kTrialLimit) {
      throw Error(ErrorKind::Domain, "radicand too large to certify square-free by trial division");
    }
  }
  m *= kept;
  return root;
}

}  // namespace

ExactSymbol ExactSymbol::canonical(const BigRational& coeff, const BigRational& radicand) {
  if (sgn(radicand) < 0) throw Error(ErrorKind::Domain, "negative radicand " + to_string(radicand));
  if (sgn(coeff) == 0 || sgn(radicand) == 0) return ExactSymbol();

  // sqrt(n/d) = sqrt(n*d)/d
  BigInt m = radicand.get_num() * radicand.get_den();
  BigRational c = coeff / BigRational(radicand.get_den());
  BigInt root = extract_square(m);
  c *= root;
  c.canonicalize();
  return ExactSymbol(c, BigRational(m));
}

ExactSymbol ExactSymbol::from_factorization(const BigRational& coeff, const PrimeFactorization& radicand) {
  if (sgn(coeff) == 0) return ExactSymbol();
  BigInt root_num = 1;
  BigInt root_den = 1;
  BigInt rest = 1;
  for (const auto& [p, e] : radicand) {
    // e = 2q + r with r in {0, 1}, floor division so negative exponents land in the root.
    std::int64_t q = e >= 0 ? e / 2 : -((-e + 1) / 2);
    std::int64_t r = e - 2 * q;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(q >= 0 ? q : -q));
    if (q >= 0) root_num *= power; else root_den *= power;
    if (r == 1) rest *= p;
  }
  BigRational c = coeff * BigRational(root_num, root_den);
  c.canonicalize();
  return ExactSymbol(c, BigRational(rest));
}

BigRational ExactSymbol::signed_square() const {
  BigRational sq = coeff_ * coeff_ * radicand_;
  return sign() < 0 ? BigRational(-sq) : sq;
}

ExactSymbol ExactSymbol::operator-() const { return ExactSymbol(-coeff_, radicand_); }

ExactSymbol ExactSymbol::scaled(const BigRational& factor) const {
  if (sgn(factor) == 0) return ExactSymbol();
  BigRational c = coeff_ * factor;
  c.canonicalize();
  return ExactSymbol(c, radicand_);
}

std::ostream& operator<<(std::ostream& os, const ExactSymbol& x) {
  os << to_string(x.coeff());
  if (x.radicand() != 1) os << "*sqrt(" << to_string(x.radicand()) << ")";
  return os;
}

}  // namespace sixj
