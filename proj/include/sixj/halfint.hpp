#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sixj/error.hpp"

namespace sixj {

/// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) noexcept { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t n) noexcept { return HalfInt(2 * n); }
  static constexpr HalfInt half() noexcept { return HalfInt(1); }

  constexpr std::int64_t twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr bool is_negative() const noexcept { return twice_ < 0; }

  /// Largest integer not above the value.
  constexpr std::int64_t floor() const noexcept {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  /// The value as an integer; throws Domain for a strict half-integer.
  std::int64_t as_integer() const {
    if (!is_integer()) {
      throw Error(ErrorKind::Domain, "half-integer used where an integer is required");
    }
    return twice_ / 2;
  }

  double to_double() const noexcept { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInt operator-() const noexcept { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) noexcept { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) noexcept { twice_ -= o.twice_; return *this; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) noexcept { return HalfInt(k * a.twice_); }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) noexcept { return HalfInt(k * a.twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;
  friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;

 private:
  explicit constexpr HalfInt(std::int64_t twice) noexcept : twice_(twice) {}

  std::int64_t twice_ = 0;
};

/// Accepts "7", "-3", "3/2", "1.5", "2.0"; anything else is a Parse error.
HalfInt halfint_parse(std::string_view text);

/// "2" for integers, "3/2" for strict half-integers. Inverse of halfint_parse.
std::string format(HalfInt h);

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace sixj
