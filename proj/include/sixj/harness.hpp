#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sixj/asymptotics.hpp"
#include "sixj/scaled_float.hpp"
#include "sixj/symbols.hpp"

namespace sixj {

enum class ScanKind { su2, super };

struct ScanRecord {
  std::int64_t k = 0;
  std::optional<Parity> parity;  ///< empty for su2
  ScaledFloat exact;
  double asym = 0.0;
  double abs_err = 0.0;
  double amplitude = 0.0;
  double angle = 0.0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Throws ScanError carrying the first failing k. k_list must be strictly ascending.
std::vector<ScanRecord> scan(const SpinSextuple& s, ScanKind kind, const std::vector<std::int64_t>& k_list);
std::vector<ScanRecord> scan_serial(const SpinSextuple& s, ScanKind kind, const std::vector<std::int64_t>& k_list);

ScanRecord scan_point(const SpinSextuple& s, ScanKind kind, std::int64_t k, const TetGeometry& geo);

std::vector<std::int64_t> k_range(std::int64_t from, std::int64_t to, std::int64_t step);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::int64_t n_points = 0;
};

/// Indices of strict local maxima of |exact|.
std::vector<std::size_t> envelope_maxima(const std::vector<ScanRecord>& records);

/// Least squares of ln|exact| against ln k over the local maxima. Throws InsufficientExtrema
/// with fewer than three maxima.
SlopeFit envelope_slope(const std::vector<ScanRecord>& records);

inline constexpr const char* kCsvHeader = "k,parity,exact_mantissa,exact_exp2,exact_float,asym,abs_err,amplitude,angle";

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_csv(std::istream& is);

void write_json(std::ostream& os, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_json(std::istream& is);

}  // namespace sixj
