#pragma once

#include <stdexcept>
#include <string>

namespace orbita {

enum class ErrorCode {
  InvalidCartan,
  InconsistentFlags,
  NotRegular,
  NotStronglyElliptic,
  NotDominant,
  NonTerminating,
  IncompatibleLattices,
  NegativeMultiplicity,
  EmptySupport,
  DegenerateCone,
  ZeroGap,
  NotAdmissiblePair,
  UncertifiedRange,
  UnexpectedKtype,
  ConfigError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidCartan: return "InvalidCartan";
    case ErrorCode::InconsistentFlags: return "InconsistentFlags";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotStronglyElliptic: return "NotStronglyElliptic";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::IncompatibleLattices: return "IncompatibleLattices";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::ZeroGap: return "ZeroGap";
    case ErrorCode::NotAdmissiblePair: return "NotAdmissiblePair";
    case ErrorCode::UncertifiedRange: return "UncertifiedRange";
    case ErrorCode::UnexpectedKtype: return "UnexpectedKtype";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbita
