#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sixj {

enum class ErrorKind {
  Parse,
  Domain,
  TriangleViolation,
  IntegralityViolation,
  ParityViolation,
  ShiftViolation,
  NonEuclidean,
  KParity,
  DegenerateFactor,
  UndefinedShift,
  InsufficientExtrema,
  InternalConsistency,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds raised by admissibility checks on a sextuple.
bool is_admissibility_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// An error raised while evaluating one point of a k-scan; carries the offending k.
class ScanError : public Error {
 public:
  ScanError(ErrorKind kind, std::int64_t k, const std::string& message)
      : Error(kind, "at k=" + std::to_string(k) + ": " + message), k_(k) {}

  std::int64_t k() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

}  // namespace sixj
