#include "sixj/halfint.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace sixj {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::Parse, "not a half-integer: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

HalfInt halfint_parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty half-integer");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_integer(text.substr(0, slash), text);
    std::int64_t den = parse_integer(text.substr(slash + 1), text);
    if (den == 2) return HalfInt::from_twice(num);
    if (den == 1) return HalfInt::from_int(num);
    throw Error(ErrorKind::Parse, "denominator must be 1 or 2: '" + std::string(text) + "'");
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view digits = negative ? int_part.substr(1) : int_part;
    std::int64_t whole = digits.empty() ? 0 : parse_integer(digits, text);
    if (frac.empty()) throw Error(ErrorKind::Parse, "not a half-integer: '" + std::string(text) + "'");
    for (char c : frac) {
      if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "not a half-integer: '" + std::string(text) + "'");
    }
    std::size_t last_nonzero = frac.find_last_not_of('0');
    std::int64_t twice = 2 * whole;
    if (last_nonzero == std::string_view::npos) {
      // x.000
    } else if (last_nonzero == 0 && frac[0] == '5') {
      twice += 1;
    } else {
      throw Error(ErrorKind::Parse, "fractional part must be 0 or 5: '" + std::string(text) + "'");
    }
    return HalfInt::from_twice(negative ? -twice : twice);
  }

  return HalfInt::from_int(parse_integer(text, text));
}

std::string format(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << format(h); }

}  // namespace sixj
