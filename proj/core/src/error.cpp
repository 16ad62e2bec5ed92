#include "fieldclique/error.hpp"

namespace fieldclique {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kNonPrimeP: return "NonPrimeP";
    case Errc::kEvenP: return "EvenP";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kNotADivisor: return "NotADivisor";
    case Errc::kDegenerateModulus: return "DegenerateModulus";
    case Errc::kEmptyJ: return "EmptyJ";
    case Errc::kSelfLoopQuery: return "SelfLoopQuery";
    case Errc::kNotAClique: return "NotAClique";
    case Errc::kExactBudgetExceeded: return "ExactBudgetExceeded";
    case Errc::kZeroArgument: return "ZeroArgument";
    case Errc::kZeroEncountered: return "ZeroEncountered";
    case Errc::kTrivialCharacter: return "TrivialCharacter";
    case Errc::kNoValidTheta: return "NoValidTheta";
    case Errc::kNotASubfield: return "NotASubfield";
    case Errc::kOddD: return "OddD";
    case Errc::kInvalidCase: return "InvalidCase";
    case Errc::kNoQualifyingR: return "NoQualifyingR";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace fieldclique
