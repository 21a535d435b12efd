#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace softtop {

enum class ErrorCode {
  kInvalidContext,
  kContextMismatch,
  kEmptyFamily,
  kEmptySubset,
  kUnknownLabel,
  kBudgetExceeded,
  kFactorArityMismatch,
  kInvalidMapping,
  kChainMismatch,
  kNotBijective,
  kNotOpenMember,
  kNotOpenPayload,
  kDuplicateIndex,
  kIndexOutOfRange,
  kSizeCapExceeded,
  kTooLarge,
  kAxiomViolation,
  kLemmaViolation,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message names the offending sizes, labels or witnesses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace softtop
