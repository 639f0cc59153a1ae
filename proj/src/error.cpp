#include "ghfp/error.hpp"

namespace ghfp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::CocycleIdentityViolated: return "CocycleIdentityViolated";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotGH: return "NotGH";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DuplicateRows: return "DuplicateRows";
    case ErrorKind::ZeroNotInCode: return "ZeroNotInCode";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotACodeword: return "NotACodeword";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SectionUndefined: return "SectionUndefined";
    case ErrorKind::InadmissibleParams: return "InadmissibleParams";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::AutomorphismCheckFailed: return "AutomorphismCheckFailed";
    case ErrorKind::SizeGateExceeded: return "SizeGateExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAGroup: return "NotAGroup";
  }
  return "Unknown";
}

}  // namespace ghfp
