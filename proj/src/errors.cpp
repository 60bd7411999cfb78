#include "nahodge/errors.hpp"

namespace nahodge {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PrecisionError: return "PrecisionError";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NoSlopeGap: return "NoSlopeGap";
    case ErrorKind::LiftStall: return "LiftStall";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::IntegralityViolated: return "IntegralityViolated";
    case ErrorKind::NoGap: return "NoGap";
    case ErrorKind::BadProfile: return "BadProfile";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(detail.empty()
                             ? std::string(error_name(kind))
                             : std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace nahodge
