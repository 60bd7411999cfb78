#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nahodge {

// Error kinds are reported by name on the command line; the names are a
// stable, machine-readable contract.
enum class ErrorKind {
  ParseError,
  PrecisionError,
  PrecisionExhausted,
  DescriptorMismatch,
  DivisionByZero,
  NotIntegral,
  DimensionMismatch,
  IndexOutOfRange,
  BadExponent,
  RankDeficient,
  NotSaturated,
  NotSorted,
  SingularMatrix,
  LengthMismatch,
  BadIndex,
  NoSlopeGap,
  LiftStall,
  HypothesisViolated,
  IntegralityViolated,
  NoGap,
  BadProfile,
  NoConvergence,
  ZeroEigenvalue,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail = {}) {
  throw Error(kind, detail);
}

}  // namespace nahodge
