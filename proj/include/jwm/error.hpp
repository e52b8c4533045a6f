#pragma once

#include <stdexcept>
#include <string>

namespace jwm {

/// Domain error codes surfaced to callers and mapped to CLI exit status 2.
enum class ErrorCode {
  OutsideRegime,        // estimator applied outside its validity guard
  UndefinedEstimator,   // closed form undefined at this working point
  NotConverged,         // optimizer exhausted its iteration cap
  Degenerate,           // dataset carries no usable parameter information
  SingularModel,        // outcome model degenerate (zero-probability cell)
  SingularInformation,  // Fisher matrix not invertible
  UndefinedBound,       // printed bound undefined (sin(phi) = 0)
  UndefinedBudget,      // photon budget undefined (dw * tau = 0)
  ConfigInvalid,        // malformed campaign/audit configuration
  ParseError,           // malformed input file
  IoError,              // filesystem failure
};

const char* error_name(ErrorCode code);

/// Exception carrying a typed error code; `what()` is "Name: detail".
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit DomainError(ErrorCode code) : DomainError(code, "") {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutsideRegime: return "OutsideRegime";
    case ErrorCode::UndefinedEstimator: return "UndefinedEstimator";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::SingularModel: return "SingularModel";
    case ErrorCode::SingularInformation: return "SingularInformation";
    case ErrorCode::UndefinedBound: return "UndefinedBound";
    case ErrorCode::UndefinedBudget: return "UndefinedBudget";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace jwm
