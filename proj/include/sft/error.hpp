// Error reporting for the sft library.
//
// Every failure raised by the library is an sft::Error carrying an ErrorKind,
// so callers (the CLI in particular) can tell input problems apart from
// violated hypotheses without parsing messages.

#ifndef SFT_ERROR_HPP_
#define SFT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sft {

  enum class ErrorKind {
    MalformedInput,
    ZeroRow,
    NoPath,
    SymbolOutOfRange,
    DepthZero,
    ShallowerDepth,
    MatrixMismatch,
    TooShort,
    SupportViolation,
    NotTransfer,
    NegativeWeight,
    DomainMismatch,
    GraphIsCycle,
    NotTransitive,
    BadExponents,
    InvalidSequence,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message);

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace sft

#endif  // SFT_ERROR_HPP_
