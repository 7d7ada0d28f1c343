#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpsurf {

enum class ErrorCode {
  NotDivisible,
  DegreeMismatch,
  NegativeDegree,
  ZeroInput,
  NotSquare,
  ParseError,
  DependentGenerators,
  MultipleLinearSyzygies,
  NotASyzygy,
  DegenerateLinearSyzygy,
  DegreeTooLow,
  SingularStrand,
  DegreeAnomaly,
  Basepoints,
  WorkLimit,
  Internal,
};

inline std::string_view error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotDivisible: return "not_divisible";
    case ErrorCode::DegreeMismatch: return "degree_mismatch";
    case ErrorCode::NegativeDegree: return "negative_degree";
    case ErrorCode::ZeroInput: return "zero_input";
    case ErrorCode::NotSquare: return "not_square";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::DependentGenerators: return "dependent_generators";
    case ErrorCode::MultipleLinearSyzygies: return "multiple_linear_syzygies";
    case ErrorCode::NotASyzygy: return "not_a_syzygy";
    case ErrorCode::DegenerateLinearSyzygy: return "degenerate_linear_syzygy";
    case ErrorCode::DegreeTooLow: return "degree_too_low";
    case ErrorCode::SingularStrand: return "singular_strand";
    case ErrorCode::DegreeAnomaly: return "degree_anomaly";
    case ErrorCode::Basepoints: return "basepoints";
    case ErrorCode::WorkLimit: return "work_limit";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry a 1-based location.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& reason)
      : Error(ErrorCode::ParseError, std::to_string(line) + ":" +
                                         std::to_string(column) + ": " + reason),
        line_(line), column_(column), reason_(reason) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tpsurf
