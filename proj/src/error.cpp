#include "sft/error.hpp"

namespace sft {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::MalformedInput:
        return "MalformedInput";
      case ErrorKind::ZeroRow:
        return "ZeroRow";
      case ErrorKind::NoPath:
        return "NoPath";
      case ErrorKind::SymbolOutOfRange:
        return "SymbolOutOfRange";
      case ErrorKind::DepthZero:
        return "DepthZero";
      case ErrorKind::ShallowerDepth:
        return "ShallowerDepth";
      case ErrorKind::MatrixMismatch:
        return "MatrixMismatch";
      case ErrorKind::TooShort:
        return "TooShort";
      case ErrorKind::SupportViolation:
        return "SupportViolation";
      case ErrorKind::NotTransfer:
        return "NotTransfer";
      case ErrorKind::NegativeWeight:
        return "NegativeWeight";
      case ErrorKind::DomainMismatch:
        return "DomainMismatch";
      case ErrorKind::GraphIsCycle:
        return "GraphIsCycle";
      case ErrorKind::NotTransitive:
        return "NotTransitive";
      case ErrorKind::BadExponents:
        return "BadExponents";
      case ErrorKind::InvalidSequence:
        return "InvalidSequence";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind) {}

}  // namespace sft
