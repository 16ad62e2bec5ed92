#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fieldclique {

enum class Errc {
  kNonPrimeP,
  kEvenP,
  kCapExceeded,
  kDivisionByZero,
  kNotADivisor,
  kDegenerateModulus,
  kEmptyJ,
  kSelfLoopQuery,
  kNotAClique,
  kExactBudgetExceeded,
  kZeroArgument,
  kZeroEncountered,
  kTrivialCharacter,
  kNoValidTheta,
  kNotASubfield,
  kOddD,
  kInvalidCase,
  kNoQualifyingR,
  kInvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the Errc codes so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace fieldclique
