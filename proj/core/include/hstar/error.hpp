#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hstar {

enum class ErrorCode {
  Degenerate,
  RankDeficient,
  NegativeCoefficient,
  NonIntegerHeight,
  GroupTooLarge,
  CanonicalizationBudget,
  NotPrime,
  DimensionMismatch,
  NumericalConditionViolated,
  DivisibilityViolated,
  NotCoprime,
  RangeViolated,
  InvalidSpec,
  BudgetExceeded,
  ParseError,
  OracleMismatch,
  UnknownKind,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration hits its candidate budget. Carries how far it
/// got so callers can report partial progress.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t examined, std::uint64_t found)
      : Error(ErrorCode::BudgetExceeded, what), examined_(examined), found_(found) {}

  std::uint64_t candidates_examined() const noexcept { return examined_; }
  std::uint64_t groups_found() const noexcept { return found_; }

 private:
  std::uint64_t examined_;
  std::uint64_t found_;
};

}  // namespace hstar
