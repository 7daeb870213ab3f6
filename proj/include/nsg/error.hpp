#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsg {

enum class ErrorCode {
  EmptyInput,
  BadInput,
  ParseError,
  GcdNotOne,
  Overflow,
  NotAMember,
  NotASemigroup,
  NotFundamentalGapSet,
  DegenerateInterval,
  NotReduced,
  OrderViolation,
  DepthTooLarge,
  CapTooSmall,
  BadLambda,
  BadMu,
  NotCoprime,
  NotPairwiseCoprime,
  NotMinimalTriple,
  NoSolution,
  WrongDimension,
  ArityMismatch,
  ZeroElement,
  AuditFailed,
  BudgetExceeded,
  FileNotFound,
  InternalInconsistency,
};

// Whether an error stems from malformed input, a mathematical obstruction, or
// a resource limit. The CLI maps these to exit codes 2, 3 and 4.
enum class ErrorClass { Input, Domain, Budget, Internal };

std::string_view to_string(ErrorCode code) noexcept;
ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::vector<std::int64_t> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }

  // Integers that certify the failure, e.g. the pair (x, y) with x + y a gap
  // for NotASemigroup. Empty when the error has no natural certificate.
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what,
                              std::vector<std::int64_t> witness = {}) {
  throw Error(code, what, std::move(witness));
}

}  // namespace nsg
