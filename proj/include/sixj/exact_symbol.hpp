#pragma once

#include <iosfwd>

#include "sixj/bigrational.hpp"

namespace sixj {

/// An exact value coeff * sqrt(radicand).
///
/// Always canonical: the radicand is a square-free positive integer with every square
/// factor moved into coeff, and a zero coeff forces radicand 1. Two symbols are equal
/// iff their components are.
class ExactSymbol {
 public:
  ExactSymbol() = default;

  static ExactSymbol zero() { return ExactSymbol(); }

  /// Canonicalises an arbitrary (coeff, radicand) pair by trial division of the radicand.
  /// Throws Domain for a negative radicand or one whose square part cannot be
  /// certified by trial division.
  static ExactSymbol canonical(const BigRational& coeff, const BigRational& radicand);

  /// Builds from a radicand given by its prime factorisation; never multiplies the
  /// radicand out before extracting squares.
  static ExactSymbol from_factorization(const BigRational& coeff, const PrimeFactorization& radicand);

  const BigRational& coeff() const noexcept { return coeff_; }
  const BigRational& radicand() const noexcept { return radicand_; }

  int sign() const noexcept { return sgn(coeff_); }
  bool is_zero() const noexcept { return sgn(coeff_) == 0; }

  /// sign * value^2, exact.
  BigRational signed_square() const;

  ExactSymbol operator-() const;
  ExactSymbol scaled(const BigRational& factor) const;

  friend bool operator==(const ExactSymbol& a, const ExactSymbol& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

 private:
  ExactSymbol(BigRational coeff, BigRational radicand)
      : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {}

  BigRational coeff_ = 0;
  BigRational radicand_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactSymbol& x);

}  // namespace sixj
