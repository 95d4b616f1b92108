#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathpart {

enum class ErrorCode {
  kInvalidGraph,
  kCycleFound,
  kNotADag,
  kBudgetExceeded,
  kInfeasible,
  kUnsupportedInput,
  kReconstructionFailed,
  kMalformedMatching,
  kMalformedInstance,
  kBadK,
  kNotBipartite,
  kBadOrder,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure raised by the library carries one of the codes
// above; callers branch on code(), never on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathpart
