#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilgroid {

enum class ErrorKind {
  MixedSpace,
  NonNilpotentComponent,
  PatternViolation,
  NonzeroConstant,
  DomainMismatch,
  SpaceMismatch,
  BaseIncompatible,
  WrongModel,
  Incompatible,
  NotPerceivedLimit,
  BadSlot,
  NotInKernel,
  DimensionMismatch,
  DegreeOverflow,
  Parse,
  ConfigInvalid,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedSpace: return "MixedSpace";
    case ErrorKind::NonNilpotentComponent: return "NonNilpotentComponent";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::NonzeroConstant: return "NonzeroConstant";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::BaseIncompatible: return "BaseIncompatible";
    case ErrorKind::WrongModel: return "WrongModel";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NotPerceivedLimit: return "NotPerceivedLimit";
    case ErrorKind::BadSlot: return "BadSlot";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

/// Every failure raised by the engine. `kind()` is stable and used by the CLI
/// to pick exit codes and by tests to match error paths.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the byte offset into the offending text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace weilgroid
