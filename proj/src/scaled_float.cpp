#include "sixj/scaled_float.hpp"

#include <cmath>
#include <limits>

namespace sixj {

ScaledFloat ScaledFloat::from_double(double x) {
  ScaledFloat out;
  if (x == 0.0 || !std::isfinite(x)) {
    if (!std::isfinite(x)) throw Error(ErrorKind::Domain, "non-finite value has no ScaledFloat form");
    return out;
  }
  int e = 0;
  double m = std::frexp(x, &e);  // |m| in [0.5, 1)
  out.mantissa_ = 2.0 * m;
  out.exp2_ = static_cast<std::int64_t>(e) - 1;
  return out;
}

ScaledFloat ScaledFloat::from_parts(double mantissa, std::int64_t exp2) {
  ScaledFloat out = from_double(mantissa);
  if (!out.is_zero()) out.exp2_ += exp2;
  return out;
}

double ScaledFloat::to_double() const noexcept {
  if (mantissa_ == 0.0) return 0.0;
  constexpr std::int64_t kMax = std::numeric_limits<int>::max() / 2;
  if (exp2_ > kMax) return mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                                         : -std::numeric_limits<double>::infinity();
  if (exp2_ < -kMax) return mantissa_ > 0 ? 0.0 : -0.0;
  return std::ldexp(mantissa_, static_cast<int>(exp2_));
}

double ScaledFloat::log_abs() const noexcept {
  if (mantissa_ == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mantissa_)) + static_cast<double>(exp2_) * std::log(2.0);
}

namespace {

// sqrt(x) for rational x > 0 as a ScaledFloat, truncated to within one ulp.
ScaledFloat sqrt_rational(const BigRational& x) {
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  auto bits = [](const BigInt& z) { return static_cast<std::int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2)); };

  // Scale so the quotient has ~140 bits and its integer root ~70.
  std::int64_t shift = 140 - (bits(num) - bits(den));
  if (shift % 2 != 0) ++shift;

  BigInt q;
  if (shift >= 0) {
    BigInt scaled = num;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    BigInt scaled = den;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());

  long e = 0;
  double d = mpz_get_d_2exp(&e, root.get_mpz_t());  // d in [0.5, 1)
  return ScaledFloat::from_parts(2.0 * d, static_cast<std::int64_t>(e) - 1 - shift / 2);
}

}  // namespace

ScaledFloat exact_to_scaled(const ExactSymbol& v) {
  if (v.is_zero()) return ScaledFloat();
  BigRational square = v.coeff() * v.coeff() * v.radicand();
  ScaledFloat magnitude = sqrt_rational(square);
  return v.sign() < 0 ? ScaledFloat::from_parts(-magnitude.mantissa(), magnitude.exp2()) : magnitude;
}

ScaledFloat rational_to_scaled(const BigRational& q) {
  if (sgn(q) == 0) return ScaledFloat();
  ScaledFloat magnitude = sqrt_rational(BigRational(q * q));
  return sgn(q) < 0 ? ScaledFloat::from_parts(-magnitude.mantissa(), magnitude.exp2()) : magnitude;
}

}  // namespace sixj
