#include "hstar/error.hpp"

namespace hstar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NonIntegerHeight: return "NonIntegerHeight";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::CanonicalizationBudget: return "CanonicalizationBudget";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericalConditionViolated: return "NumericalConditionViolated";
    case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::RangeViolated: return "RangeViolated";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace hstar
