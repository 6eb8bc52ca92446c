#pragma once

#include <cstdint>

#include "sixj/exact_symbol.hpp"

namespace sixj {

/// mantissa * 2^exp2 with |mantissa| in [1, 2) (or exactly 0). Covers magnitudes far
/// outside the native double range.
class ScaledFloat {
 public:
  ScaledFloat() = default;

  static ScaledFloat from_double(double x);
  /// Normalises an arbitrary finite mantissa/exponent pair.
  static ScaledFloat from_parts(double mantissa, std::int64_t exp2);

  double mantissa() const noexcept { return mantissa_; }
  std::int64_t exp2() const noexcept { return exp2_; }

  bool is_zero() const noexcept { return mantissa_ == 0.0; }
  int sign() const noexcept { return mantissa_ > 0 ? 1 : (mantissa_ < 0 ? -1 : 0); }

  /// Native double; saturates to +-inf on overflow and flushes toward 0 on underflow.
  double to_double() const noexcept;

  /// ln|x|; -inf for zero.
  double log_abs() const noexcept;

  friend bool operator==(const ScaledFloat&, const ScaledFloat&) = default;

 private:
  double mantissa_ = 0.0;
  std::int64_t exp2_ = 0;
};

ScaledFloat exact_to_scaled(const ExactSymbol& v);
ScaledFloat rational_to_scaled(const BigRational& q);

}  // namespace sixj
