#pragma once

#include <stdexcept>
#include <string>

namespace connset {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  TooLarge = 3,
  BudgetExceeded = 4,
  VerificationMismatch = 5,
  Counterexample = 6,
  Io = 7,
};

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace connset
