#include "sixj/error.hpp"

namespace sixj {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ShiftViolation: return "ShiftViolation";
    case ErrorKind::NonEuclidean: return "NonEuclidean";
    case ErrorKind::KParity: return "KParity";
    case ErrorKind::DegenerateFactor: return "DegenerateFactor";
    case ErrorKind::UndefinedShift: return "UndefinedShift";
    case ErrorKind::InsufficientExtrema: return "InsufficientExtrema";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::Io: return "IoError";
  }
  return "UnknownError";
}

bool is_admissibility_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::TriangleViolation || kind == ErrorKind::IntegralityViolation ||
         kind == ErrorKind::ParityViolation || kind == ErrorKind::ShiftViolation;
}

}  // namespace sixj
