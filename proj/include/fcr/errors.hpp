#pragma once

#include <stdexcept>
#include <string>

namespace fcr {

enum class ErrKind {
  Precision,      // a value or certificate is not determined at working precision
  NotAUnit,
  HenselFailure,
  NotIntegral,
  NoBreak,
  Hypothesis,     // theorem hypothesis not satisfied by the input
  RankTooLarge,
  Parse,
  Invalid,
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

inline const char* errKindName(ErrKind k) {
  switch (k) {
    case ErrKind::Precision: return "PrecisionExhausted";
    case ErrKind::NotAUnit: return "NotAUnit";
    case ErrKind::HenselFailure: return "HenselFailure";
    case ErrKind::NotIntegral: return "NotIntegral";
    case ErrKind::NoBreak: return "NoBreak";
    case ErrKind::Hypothesis: return "HypothesisFailed";
    case ErrKind::RankTooLarge: return "RankTooLarge";
    case ErrKind::Parse: return "ParseError";
    case ErrKind::Invalid: return "InvalidInput";
  }
  return "Error";
}

}  // namespace fcr
